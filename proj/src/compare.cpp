#include "fthresh/compare.hpp"

#include <algorithm>
#include <future>

#include "fthresh/frobenius.hpp"

namespace fthresh {

namespace {

FpPoly reduce_nonzero(const QPoly& f, Prime p) {
  FpPoly g = reduce_mod_p(f, p);
  if (g.is_zero()) {
    throw Error(ErrorCode::BadReduction, f.str() + " vanishes mod " + std::to_string(p.value()));
  }
  return g;
}

CompareRow compare_one(const QPoly& f, Prime p, unsigned e_max, const Rat& lct) {
  auto table = fpt_bounds(reduce_nonzero(f, p), e_max);
  CompareRow row;
  row.p = p.value();
  row.e_max = e_max;
  row.lower = table.last().lower;
  row.upper = table.last().upper;
  row.guess = table.closed_form_guess;
  row.lct = lct;
  row.leq_holds = row.lower <= lct;
  row.equality_guess = row.guess.has_value() && *row.guess == lct;
  return row;
}

}  // namespace

std::vector<CompareRow> run_compare(const QPoly& f, const std::vector<Prime>& primes, unsigned e_max,
                                    const Rat& lct) {
  std::vector<std::uint64_t> sorted;
  for (auto p : primes) sorted.push_back(p.value());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<std::future<CompareRow>> jobs;
  for (auto p : sorted) {
    jobs.push_back(std::async(std::launch::async, compare_one, std::cref(f), Prime(p), e_max, std::cref(lct)));
  }
  std::vector<CompareRow> rows;
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

bool has_hard_failure(const std::vector<CompareRow>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const CompareRow& r) { return !r.leq_holds; });
}

std::string pattern_name(EllipticPattern pattern) {
  switch (pattern) {
    case EllipticPattern::OrdinaryConsistent: return "ordinary-consistent";
    case EllipticPattern::SupersingularConsistent: return "supersingular-consistent";
    case EllipticPattern::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

EllipticPattern pattern_from_name(const std::string& name) {
  if (name == "ordinary-consistent") return EllipticPattern::OrdinaryConsistent;
  if (name == "supersingular-consistent") return EllipticPattern::SupersingularConsistent;
  if (name == "inconclusive") return EllipticPattern::Inconclusive;
  throw Error(ErrorCode::InvalidArgument, "unknown elliptic pattern '" + name + "'");
}

EllipticReport elliptic_check(const QPoly& f, Prime p, unsigned e_max) {
  if (f.arity() != 3 || f.is_zero() || !f.is_homogeneous() || f.degree() != 3) {
    throw Error(ErrorCode::NotHomogeneousCubic, f.str() + " is not a homogeneous cubic in three variables");
  }
  if (e_max < 2) throw Error(ErrorCode::InvalidArgument, "the ν pattern needs e_max >= 2");
  EllipticReport report;
  report.p = p.value();
  report.nu_values = nu_sequence(reduce_nonzero(f, p), e_max);
  bool ordinary = true, supersingular = true;
  for (unsigned e = 1; e <= e_max; ++e) {
    std::uint64_t q = checked_pow(p.value(), e);
    std::uint64_t v = report.nu_values[e - 1];
    ordinary = ordinary && v == q - 1;
    supersingular = supersingular && v == q - q / p.value() - 1;
  }
  if (ordinary) {
    report.pattern = EllipticPattern::OrdinaryConsistent;
  } else if (supersingular) {
    report.pattern = EllipticPattern::SupersingularConsistent;
  }
  return report;
}

}  // namespace fthresh
