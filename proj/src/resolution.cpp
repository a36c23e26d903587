#include "fthresh/resolution.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fthresh {

namespace {

// Dense univariate polynomial over Q, coefficient i multiplies t^i.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> c) : c_(std::move(c)) { trim(); }

  static UPoly linear(const Rat& slope, const Rat& offset) { return UPoly({offset, slope}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rat& lead() const { return c_.back(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat at(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

  Rat eval(const Rat& t) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> d;
    for (const auto& x : c_) d.push_back(x / lead());
    return UPoly(std::move(d));
  }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.at(i) + b.at(i);
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }

  /// Remainder of division by nonzero d.
  UPoly mod(const UPoly& d) const { return divmod(d).second; }

  std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
    std::vector<Rat> r = c_;
    std::vector<Rat> q(c_.size() >= d.c_.size() ? c_.size() - d.c_.size() + 1 : 0);
    for (int i = static_cast<int>(r.size()) - 1; i >= d.degree(); --i) {
      if (r[i].is_zero()) continue;
      Rat factor = r[i] / d.lead();
      q[i - d.degree()] = factor;
      for (int j = 0; j <= d.degree(); ++j) r[i - d.degree() + j] -= factor * d.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rat> c_;
};

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<BigInt> positive_divisors(BigInt n) {
  if (n < 0) n = -n;
  std::vector<std::pair<BigInt, unsigned>> factors;
  for (BigInt d = 2; d * d <= n; ++d) {
    unsigned mult = 0;
    while (n % d == 0) {
      n /= d;
      ++mult;
    }
    if (mult) factors.emplace_back(d, mult);
  }
  if (n > 1) factors.emplace_back(n, 1);
  std::vector<BigInt> divs{1};
  for (const auto& [prime, mult] : factors) {
    std::size_t count = divs.size();
    BigInt power = 1;
    for (unsigned e = 1; e <= mult; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * power);
    }
  }
  return divs;
}

/// Distinct rational roots via the rational root test on the primitive integer
/// multiple of h.
std::vector<Rat> rational_roots(const UPoly& h) {
  std::vector<Rat> roots;
  if (h.degree() < 1) return roots;
  BigInt den_lcm = 1;
  for (const auto& c : h.coeffs()) {
    BigInt d = c.den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> ints;
  for (const auto& c : h.coeffs()) ints.push_back(c.num() * (den_lcm / c.den()));
  std::size_t low = 0;
  while (ints[low] == 0) ++low;
  if (low > 0) roots.emplace_back(0);
  if (static_cast<int>(low) == h.degree()) return roots;
  std::set<Rat> found;
  for (const auto& num : positive_divisors(ints[low])) {
    for (const auto& den : positive_divisors(ints.back())) {
      for (int sign : {1, -1}) {
        Rat t(BigInt(num * sign), den);
        if (h.eval(t).is_zero()) found.insert(t);
      }
    }
  }
  roots.insert(roots.end(), found.begin(), found.end());
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Strip every rational root from h; what remains has only irrational roots.
UPoly remove_rational_roots(UPoly h, const std::vector<Rat>& roots) {
  for (const auto& t : roots) {
    UPoly lin = UPoly::linear(Rat(1), -t);
    for (;;) {
      auto [q, r] = h.divmod(lin);
      if (!r.is_zero() || h.degree() < 1) break;
      h = std::move(q);
    }
  }
  return h;
}

/// g(x, y) -> g(x, x·y) (first chart) or g(x·y, y) (second chart), divided by
/// the largest power of the exceptional coordinate. Returns that power too.
std::pair<QPoly, std::uint64_t> chart_transform(const QPoly& g, bool first_chart) {
  const std::size_t ex = first_chart ? 0 : 1;
  std::vector<QPoly::Term> terms;
  for (const auto& [m, c] : g.terms()) {
    Monomial t(2);
    if (first_chart) {
      t[0] = m[0] + m[1];
      t[1] = m[1];
    } else {
      t[0] = m[0];
      t[1] = m[0] + m[1];
    }
    terms.emplace_back(std::move(t), c);
  }
  std::uint64_t power = UINT64_MAX;
  for (const auto& t : terms) power = std::min(power, t.first[ex]);
  for (auto& t : terms) t.first[ex] -= power;
  return {QPoly::from_terms(g.ring_ptr(), std::move(terms)), power};
}

/// Restriction of g to the exceptional line x = 0 as a polynomial in y.
UPoly restrict_to_axis(const QPoly& g) {
  std::vector<Rat> c(g.degree() + 1);
  for (const auto& [m, coeff] : g.terms()) {
    if (m[0] == 0) c[m[1]] += coeff;
  }
  return UPoly(std::move(c));
}

struct PointState {
  QPoly g;     // strict transform in local coordinates centered at the point
  int dx = -1;  // exceptional divisor along x = 0
  int dy = -1;  // exceptional divisor along y = 0
  std::uint64_t ax = 0;
  std::uint64_t ay = 0;
  std::string path;
};

std::string label_of(int index) { return "E" + std::to_string(index + 1); }

class Resolver {
 public:
  Resolver(const QPoly& f, std::size_t max_blowups) : max_blowups_(max_blowups) {
    queue_.push_back({f, -1, -1, 0, 0, "origin"});
  }

  ResolutionData run() {
    while (!queue_.empty()) {
      PointState s = std::move(queue_.front());
      queue_.pop_front();
      process(s);
    }
    for (std::size_t i = 0; i < exceptional_.size(); ++i) data_.divisors.push_back(exceptional_[i]);
    data_.divisors.push_back({"strict", 0, 1});
    data_.blowup_count = exceptional_.size();
    return std::move(data_);
  }

 private:
  std::vector<std::string> present(const PointState& s) const {
    std::vector<std::string> out;
    if (s.dx >= 0) out.push_back(label_of(s.dx));
    if (s.dy >= 0) out.push_back(label_of(s.dy));
    return out;
  }

  void process(const PointState& s) {
    auto components = present(s);
    if (!s.g.constant_term().is_zero()) {
      data_.snc_points.push_back({s.path, components, "only exceptional components, crossing as coordinate axes"});
      return;
    }
    if (s.g.low_degree() == 1) {
      Rat gx = s.g.coeff(Monomial{1, 0});
      Rat gy = s.g.coeff(Monomial{0, 1});
      bool transverse = (s.dx < 0 || !gy.is_zero()) && (s.dy < 0 || !gx.is_zero());
      if (components.size() <= 1 && transverse) {
        components.push_back("strict");
        data_.snc_points.push_back({s.path, components, "smooth strict transform transverse to the divisor"});
        return;
      }
    }
    blow_up(s, components);
  }

  void blow_up(const PointState& s, const std::vector<std::string>& through) {
    if (exceptional_.size() >= max_blowups_) {
      throw Error(ErrorCode::InvalidArgument,
                  "resolution did not terminate within " + std::to_string(max_blowups_) + " blowups");
    }
    const int e = static_cast<int>(exceptional_.size());
    const std::string label = label_of(e);
    std::uint64_t k = 1;
    if (s.dx >= 0) k += exceptional_[s.dx].k;
    if (s.dy >= 0) k += exceptional_[s.dy].k;

    auto [g1, ord1] = chart_transform(s.g, true);
    auto [g2, ord2] = chart_transform(s.g, false);
    if (ord1 != ord2) throw Error(ErrorCode::InvalidArgument, "inconsistent exceptional orders across charts");
    const std::uint64_t a = s.ax + s.ay + ord1;
    exceptional_.push_back({label, k, a});
    data_.log.push_back({label, s.path, through, k, a});

    std::vector<PointState> children;
    children.push_back({g1, e, s.dy, a, s.ay, s.path + " > " + label + ": (x, xy) at (0, 0)"});

    UPoly h = restrict_to_axis(g1);
    auto roots = rational_roots(h);
    UPoly repeated = upoly_gcd(h, h.derivative());
    UPoly irrational_repeated = remove_rational_roots(repeated, roots);
    if (irrational_repeated.degree() > 0) {
      throw Error(ErrorCode::IrrationalCenter,
                  "strict transform meets " + label + " non-transversally at a non-rational point");
    }
    const Rat zero(0);
    for (const auto& t : roots) {
      if (t.is_zero()) continue;
      std::vector<Rat> shift{zero, t};
      children.push_back({translate(g1, std::span<const Rat>(shift)), e, -1, a, 0,
                          s.path + " > " + label + ": (x, xy) at (0, " + t.str() + ")"});
    }
    UPoly irrational = remove_rational_roots(h, roots);
    if (irrational.degree() > 0) {
      // Simple roots only (the repeated part is rational): smooth, transverse to E.
      data_.snc_points.push_back({s.path + " > " + label + ": irrational points of (x, xy)",
                                  {label, "strict"},
                                  "simple non-rational roots of the restriction to " + label});
    }
    children.push_back({g2, s.dx, e, s.ax, a, s.path + " > " + label + ": (xy, y) at (0, 0)"});
    for (auto& c : children) queue_.push_back(std::move(c));
  }

  std::size_t max_blowups_;
  std::deque<PointState> queue_;
  std::vector<DivisorRecord> exceptional_;
  ResolutionData data_;
};

UPoly restrict_to_line(const QPoly& f, bool y_from_x, const Rat& slope, const Rat& offset) {
  UPoly line = UPoly::linear(slope, offset);
  UPoly out;
  for (const auto& [m, c] : f.terms()) {
    std::uint64_t free_power = y_from_x ? m[0] : m[1];
    std::uint64_t sub_power = y_from_x ? m[1] : m[0];
    std::vector<Rat> mono(free_power + 1);
    mono[free_power] = c;
    UPoly term(std::move(mono));
    for (std::uint64_t i = 0; i < sub_power; ++i) term = term * line;
    out = out + term;
  }
  return out;
}

}  // namespace

bool is_square_free(const QPoly& f) {
  if (f.arity() != 2) throw Error(ErrorCode::InvalidArgument, "plane curves need exactly two variables");
  if (f.is_zero()) return false;
  const int deg = static_cast<int>(f.degree());
  if (deg == 0) return true;
  for (int i = 0; i < 24; ++i) {
    Rat slope(i + 1);
    Rat offset((i * 7) % 11 - 5);
    for (bool y_from_x : {true, false}) {
      UPoly r = restrict_to_line(f, y_from_x, slope, offset);
      if (r.degree() != deg) continue;
      if (upoly_gcd(r, r.derivative()).degree() == 0) return true;
    }
  }
  return false;
}

ResolutionData resolve_plane_curve(const QPoly& f, std::size_t max_blowups) {
  if (f.arity() != 2) throw Error(ErrorCode::InvalidArgument, "plane curves need exactly two variables");
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot resolve the zero polynomial");
  if (!f.constant_term().is_zero()) {
    throw Error(ErrorCode::DoesNotVanishAtOrigin, f.str() + " does not pass through the origin");
  }
  if (!is_square_free(f)) throw Error(ErrorCode::NotSquareFree, f.str() + " has a repeated factor");
  return Resolver(f, max_blowups).run();
}

}  // namespace fthresh
