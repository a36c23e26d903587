#include "fthresh/groebner.hpp"

#include <algorithm>
#include <map>

namespace fthresh {

namespace {

using Elem = PrimeField::Elem;

struct Lead {
  Monomial mono;
  Elem coeff;
};

Lead lead_of(const FpPoly& f, const MonomialOrder& order) {
  const auto* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (order.compare(t.first, best->first) > 0) best = &t;
  }
  return {best->first, best->second};
}

struct Descending {
  const MonomialOrder* order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
};

struct Reducer {
  const FpPoly* poly;
  Lead lead;
};

FpPoly reduce_by(const FpPoly& f, const std::vector<Reducer>& reducers, const MonomialOrder& order) {
  const auto& F = f.field();
  std::map<Monomial, Elem, Descending> work(Descending{&order});
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);
  std::vector<FpPoly::Term> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    const Reducer* hit = nullptr;
    for (const auto& r : reducers) {
      if (r.lead.mono.divides(it->first)) {
        hit = &r;
        break;
      }
    }
    if (!hit) {
      remainder.emplace_back(it->first, it->second);
      work.erase(it);
      continue;
    }
    Elem factor = F.div(it->second, hit->lead.coeff);
    Monomial shift = it->first.quotient(hit->lead.mono);
    for (const auto& [m, c] : hit->poly->terms()) {
      Monomial key = m * shift;
      Elem delta = F.mul(factor, c);
      auto [pos, inserted] = work.try_emplace(std::move(key), F.neg(delta));
      if (!inserted) {
        pos->second = F.sub(pos->second, delta);
        if (F.is_zero(pos->second)) work.erase(pos);
      }
    }
  }
  return FpPoly::from_terms(f.ring_ptr(), std::move(remainder));
}

FpPoly make_monic(const FpPoly& f, const MonomialOrder& order) {
  return f.scaled(f.field().inv(lead_of(f, order).coeff));
}

class Buchberger {
 public:
  explicit Buchberger(const MonomialOrder& order) : order_(order) {}

  void add(const FpPoly& g) {
    if (g.is_zero()) return;
    FpPoly h = reduce_by(g, active_reducers(), order_);
    if (h.is_zero()) return;
    insert(make_monic(h, order_));
  }

  void run() {
    while (!pairs_.empty()) {
      auto pick = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        int c = order_.compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return std::tie(a.i, a.j) < std::tie(b.i, b.j);
      });
      Pair pair = *pick;
      pairs_.erase(pick);
      FpPoly s = spoly(pair);
      FpPoly h = reduce_by(s, active_reducers(), order_);
      if (!h.is_zero()) insert(make_monic(h, order_));
    }
  }

  std::vector<FpPoly> reduced_basis() const {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (entries_[i].active) live.push_back(i);
    }
    std::vector<std::pair<Monomial, FpPoly>> out;
    for (auto i : live) {
      std::vector<Reducer> others;
      for (auto j : live) {
        if (j != i) others.push_back({&entries_[j].poly, entries_[j].lead});
      }
      const auto& e = entries_[i];
      auto lt = FpPoly::monomial(e.poly.ring_ptr(), e.lead.mono, e.lead.coeff);
      FpPoly tail = reduce_by(e.poly - lt, others, order_);
      out.emplace_back(e.lead.mono, lt + tail);
    }
    std::sort(out.begin(), out.end(),
              [&](const auto& a, const auto& b) { return order_.compare(a.first, b.first) > 0; });
    std::vector<FpPoly> basis;
    for (auto& [m, f] : out) basis.push_back(std::move(f));
    return basis;
  }

 private:
  struct Entry {
    FpPoly poly;
    Lead lead;
    bool active;
  };
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  std::vector<Reducer> active_reducers() const {
    std::vector<Reducer> r;
    for (const auto& e : entries_) {
      if (e.active) r.push_back({&e.poly, e.lead});
    }
    return r;
  }

  FpPoly spoly(const Pair& pr) const {
    const auto& a = entries_[pr.i];
    const auto& b = entries_[pr.j];
    const auto& F = a.poly.field();
    // Both entries are monic.
    return a.poly.times_monomial(pr.lcm.quotient(a.lead.mono), F.one()) -
           b.poly.times_monomial(pr.lcm.quotient(b.lead.mono), F.one());
  }

  // Gebauer–Möller update for a new basis element.
  void insert(FpPoly h) {
    const std::size_t k = entries_.size();
    Lead lead = lead_of(h, order_);
    entries_.push_back({std::move(h), lead, false});
    const Monomial& lk = entries_[k].lead.mono;

    std::vector<std::size_t> candidates;
    for (std::size_t g = 0; g < k; ++g) {
      if (entries_[g].active) candidates.push_back(g);
    }
    std::vector<std::size_t> kept;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
      std::size_t g1 = candidates[idx];
      const Monomial& l1 = entries_[g1].lead.mono;
      Monomial lcm1 = lk.lcm(l1);
      bool keep = lk.coprime(l1);
      if (!keep) {
        keep = true;
        auto dominated = [&](std::size_t g2) { return lk.lcm(entries_[g2].lead.mono).divides(lcm1); };
        for (std::size_t r = idx + 1; r < candidates.size() && keep; ++r) keep = !dominated(candidates[r]);
        for (std::size_t r = 0; r < kept.size() && keep; ++r) keep = !dominated(kept[r]);
      }
      if (keep) kept.push_back(g1);
    }

    std::vector<Pair> next;
    for (auto& pr : pairs_) {
      bool drop = lk.divides(pr.lcm) && entries_[pr.i].lead.mono.lcm(lk) != pr.lcm &&
                  entries_[pr.j].lead.mono.lcm(lk) != pr.lcm;
      if (!drop) next.push_back(std::move(pr));
    }
    for (auto g : kept) {
      const Monomial& lg = entries_[g].lead.mono;
      if (!lk.coprime(lg)) next.push_back({g, k, lk.lcm(lg)});
    }
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < k; ++g) {
      if (entries_[g].active && lk.divides(entries_[g].lead.mono)) entries_[g].active = false;
    }
    entries_[k].active = true;
  }

  const MonomialOrder& order_;
  std::vector<Entry> entries_;
  std::vector<Pair> pairs_;
};

}  // namespace

const Monomial& leading_monomial(const FpPoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading monomial of zero");
  const auto* best = &f.terms().front();
  for (const auto& t : f.terms()) {
    if (order.compare(t.first, best->first) > 0) best = &t;
  }
  return best->first;
}

std::vector<FpPoly> groebner(const std::vector<FpPoly>& gens, const MonomialOrder& order) {
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "Gröbner basis of an empty generator list");
  for (const auto& g : gens) g.check_same_ring(gens.front());
  // A nonzero constant generates the unit ideal, whose reduced basis is [1].
  for (const auto& g : gens) {
    if (!g.is_zero() && g.is_constant()) return {FpPoly::one(g.ring_ptr())};
  }
  Buchberger engine(order);
  for (const auto& g : gens) engine.add(g);
  engine.run();
  return engine.reduced_basis();
}

std::vector<FpPoly> groebner(const std::vector<AnyPoly>& gens, const MonomialOrder& order) {
  std::vector<FpPoly> fp;
  for (const auto& g : gens) {
    if (std::holds_alternative<QPoly>(g)) {
      throw Error(ErrorCode::WrongDomain, "Gröbner bases are only computed over prime fields");
    }
    fp.push_back(std::get<FpPoly>(g));
  }
  return groebner(fp, order);
}

FpPoly normal_form(const FpPoly& f, const std::vector<FpPoly>& basis, const MonomialOrder& order) {
  std::vector<Reducer> reducers;
  for (const auto& g : basis) {
    g.check_same_ring(f);
    if (!g.is_zero()) reducers.push_back({&g, lead_of(g, order)});
  }
  return reduce_by(f, reducers, order);
}

Ideal::Ideal(FpRing ring, std::vector<FpPoly> gens, MonomialOrder order)
    : ring_(std::move(ring)), generators_(std::move(gens)), order_(std::move(order)) {
  basis_ = groebner(generators_, order_);
}

Ideal Ideal::generated_by(std::vector<FpPoly> generators, const MonomialOrder& order) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "an ideal needs at least one generator");
  auto ring = generators.front().ring_ptr();
  return Ideal(std::move(ring), std::move(generators), order);
}

Ideal Ideal::unit(const FpRing& ring, const MonomialOrder& order) {
  return Ideal(ring, {FpPoly::one(ring)}, order);
}

bool Ideal::is_unit() const {
  return basis_.size() == 1 && basis_[0].is_constant() && !basis_[0].is_zero();
}

bool Ideal::contains(const FpPoly& f) const { return normal_form(f, basis_, order_).is_zero(); }

bool Ideal::contains(const Ideal& j) const {
  return std::all_of(j.basis_.begin(), j.basis_.end(), [&](const FpPoly& g) { return contains(g); });
}

Ideal Ideal::product(const FpPoly& f) const {
  std::vector<FpPoly> gens;
  for (const auto& g : generators_) gens.push_back(f * g);
  return Ideal(ring_, std::move(gens), order_);
}

Ideal Ideal::with_order(const MonomialOrder& order) const { return Ideal(ring_, generators_, order); }

std::vector<std::string> Ideal::basis_strings() const {
  std::vector<std::string> out;
  for (const auto& g : basis_) out.push_back(g.str());
  return out;
}

bool ideal_member(const FpPoly& f, const Ideal& ideal) { return ideal.contains(f); }

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!(*a.ring() == *b.ring())) return false;
  if (a.order() == b.order()) return a.basis() == b.basis();
  return a.basis() == b.with_order(a.order()).basis();
}

}  // namespace fthresh
