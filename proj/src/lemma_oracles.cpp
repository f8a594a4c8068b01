#include "sumfree/lemma_oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace sumfree {

const char* lemma_id_name(LemmaId id) {
  switch (id) {
    case LemmaId::kExtremalVectorBound: return "extremal-vector";
    case LemmaId::kDiffsetSizeBound: return "diffset-size";
    case LemmaId::kDiffsetInterval: return "diffset-interval";
    case LemmaId::kDiffsetSymmetricInterval: return "diffset-symmetric";
    case LemmaId::kExcludedInterval: return "excluded-interval";
    case LemmaId::kTailContainment: return "tail-containment";
  }
  return "unknown";
}

std::optional<LemmaId> lemma_id_from_name(const std::string& name) {
  for (LemmaId id : {LemmaId::kExtremalVectorBound, LemmaId::kDiffsetSizeBound,
                     LemmaId::kDiffsetInterval, LemmaId::kDiffsetSymmetricInterval,
                     LemmaId::kExcludedInterval, LemmaId::kTailContainment}) {
    if (name == lemma_id_name(id)) return id;
  }
  return std::nullopt;
}

ExtremalVectorProblem make_extremal_vector_problem(double kappa, double gamma, std::int64_t P) {
  if (!(kappa > 0.0)) throw std::invalid_argument("extremal vector: kappa must be positive");
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("extremal vector: gamma must lie in (0, 1)");
  }
  std::int64_t K = static_cast<std::int64_t>(std::floor(std::pow(gamma, -1.0 / kappa)));
  // Snap to the defining property K^(-kappa) >= gamma > (K+1)^(-kappa);
  // the floating floor can land one off at exact boundaries.
  while (K >= 1 && std::pow(static_cast<double>(K), -kappa) < gamma) --K;
  while (std::pow(static_cast<double>(K + 1), -kappa) >= gamma) ++K;
  if (K < 1) throw std::invalid_argument("extremal vector: derived K < 1");
  if (P <= K) {
    throw std::invalid_argument("extremal vector: P must exceed K = " + std::to_string(K));
  }
  return ExtremalVectorProblem{kappa, gamma, P, K};
}

namespace {

double extremal_f(const ExtremalVectorProblem& prob, double x) {
  const double kx = static_cast<double>(prob.K) * x;
  return static_cast<double>(prob.K) * std::pow(x, 1.0 + prob.kappa) +
         std::pow(1.0 - kx, 1.0 + prob.kappa);
}

}  // namespace

double solve_extremal_root(const ExtremalVectorProblem& prob) {
  const double lo0 = 1.0 / static_cast<double>(prob.K + 1);
  const double hi0 = 1.0 / static_cast<double>(prob.K);
  const double flo = extremal_f(prob, lo0);
  const double fhi = extremal_f(prob, hi0);
  // Bracket implied by K's definition; tolerate evaluation noise only.
  if (flo >= prob.gamma + 1e-9 || fhi < prob.gamma - 1e-9) {
    throw std::invalid_argument("solve_extremal_root: bracket assertion failed, inconsistent parameters");
  }
  double lo = lo0, hi = hi0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (extremal_f(prob, mid) < prob.gamma) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-17) break;
  }
  // f is increasing on the bracket, so f(hi) >= gamma with residual at the
  // double-evaluation floor, far below the 1e-12 contract.
  return hi;
}

bool extremal_max_bound(const ExtremalVectorProblem& prob, std::span<const double> v) {
  if (static_cast<std::int64_t>(v.size()) != prob.P) {
    throw std::invalid_argument("extremal_max_bound: vector length != P");
  }
  double sum = 0.0, power_sum = 0.0, max_v = 0.0;
  for (double x : v) {
    if (x < 0.0) throw std::invalid_argument("extremal_max_bound: negative coordinate");
    sum += x;
    power_sum += std::pow(x, 1.0 + prob.kappa);
    max_v = std::max(max_v, x);
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("extremal_max_bound: coordinates do not sum to 1");
  }
  if (power_sum < prob.gamma) {
    throw std::invalid_argument("extremal_max_bound: power sum below gamma");
  }
  return max_v >= solve_extremal_root(prob) - 1e-9;
}

namespace {

// Distinct differences of a sorted integer set, as offsets into [-span, span].
std::vector<bool> difference_table(const std::vector<std::int64_t>& xs) {
  const std::int64_t span = xs.empty() ? 0 : xs.back() - xs.front();
  std::vector<bool> table(static_cast<std::size_t>(2 * span + 1), false);
  for (std::int64_t a : xs) {
    for (std::int64_t b : xs) {
      table[static_cast<std::size_t>(a - b + span)] = true;
    }
  }
  return table;
}

std::int64_t count_true(const std::vector<bool>& t) {
  return static_cast<std::int64_t>(std::count(t.begin(), t.end(), true));
}

}  // namespace

LemmaReport check_diffset_size_bound(const LiftedSet& l) {
  LemmaReport report{LemmaId::kDiffsetSizeBound};
  if (l.size() < 2) throw std::invalid_argument("diffset-size: need at least two elements");
  if (l.min() != 0) throw std::invalid_argument("diffset-size: input not translated to 0");
  std::int64_t g = 0;
  for (std::size_t i = 1; i < l.integers.size(); ++i) {
    g = std::gcd(g, l.integers[i] - l.integers[i - 1]);
  }
  if (g != 1) throw std::invalid_argument("diffset-size: gap gcd is not 1, input not normalized");

  report.hypotheses_hold = true;
  const std::int64_t m = l.size();
  const std::int64_t span = l.span();
  const std::int64_t diff_count = count_true(difference_table(l.integers));
  const std::int64_t bound = std::min(span + m, 3 * m - 3);
  report.conclusion_holds = diff_count >= bound;
  if (!report.conclusion_holds) {
    report.witness = "only " + std::to_string(diff_count) + " differences, bound " +
                     std::to_string(bound);
  }
  return report;
}

namespace {

// Shared body: every integer t with lo < t < hi (rational, exclusive) is a
// difference of the set. Returns the first missing t as witness.
void check_open_interval_in_diffs(const std::vector<std::int64_t>& xs, Rational lo, Rational hi,
                                  LemmaReport& report) {
  const std::vector<bool> diffs = difference_table(xs);
  const std::int64_t span = xs.back() - xs.front();
  report.conclusion_holds = true;
  for (std::int64_t t = lo.floor(); t <= hi.ceil(); ++t) {
    if (!(Rational(t) > lo) || !(Rational(t) < hi)) continue;
    const bool inside = t >= -span && t <= span && diffs[static_cast<std::size_t>(t + span)];
    if (!inside) {
      report.conclusion_holds = false;
      report.witness = "integer " + std::to_string(t) + " not a difference";
      return;
    }
  }
}

}  // namespace

LemmaReport check_diffset_interval(const LiftedSet& l, std::int64_t k) {
  LemmaReport report{LemmaId::kDiffsetInterval};
  if (k < 1) throw std::invalid_argument("diffset-interval: k must be >= 1");
  if (l.empty()) throw std::invalid_argument("diffset-interval: empty set");
  const std::int64_t m = l.size();
  const std::int64_t span = l.span();
  report.hypotheses_hold = span <= 2 * m - 2;
  if (!report.hypotheses_hold) {
    report.witness = "span " + std::to_string(span) + " exceeds 2m-2";
    return report;
  }
  check_open_interval_in_diffs(l.integers, Rational(span - m + 1, k), Rational(m, k), report);
  return report;
}

LemmaReport check_diffset_symmetric_interval(const LiftedSet& l, std::int64_t k) {
  LemmaReport report{LemmaId::kDiffsetSymmetricInterval};
  if (k < 2) throw std::invalid_argument("diffset-symmetric: k must be >= 2");
  if (l.empty()) throw std::invalid_argument("diffset-symmetric: empty set");
  const std::int64_t m = l.size();
  const std::int64_t span = l.span();
  // span < (2k-1)m/k - 1  <=>  k(span+1) < (2k-1)m, exactly.
  report.hypotheses_hold = k * (span + 1) < (2 * k - 1) * m;
  if (!report.hypotheses_hold) {
    report.witness = "span " + std::to_string(span) + " not below (2k-1)m/k - 1";
    return report;
  }
  check_open_interval_in_diffs(l.integers, Rational(-m, k - 1), Rational(m, k - 1), report);
  return report;
}

namespace {

// Zp-side check that the reductions of all integers strictly inside
// (lo, hi) land in A - A.
void check_open_interval_in_zp_diffs(const ResidueSet& a, Rational lo, Rational hi,
                                     LemmaReport& report) {
  const ResidueSet diffs = difference_set(a);
  report.conclusion_holds = true;
  for (std::int64_t t = lo.floor(); t <= hi.ceil(); ++t) {
    if (!(Rational(t) > lo) || !(Rational(t) < hi)) continue;
    if (!diffs.contains(t)) {
      report.conclusion_holds = false;
      report.witness = "reduction of " + std::to_string(t) + " not a difference";
      return;
    }
  }
}

}  // namespace

LemmaReport check_diffset_interval_zp(const ResidueSet& a, const ModularInterval& window,
                                      std::int64_t k) {
  LemmaReport report{LemmaId::kDiffsetInterval};
  if (k < 1) throw std::invalid_argument("diffset-interval: k must be >= 1");
  if (a.empty()) throw std::invalid_argument("diffset-interval: empty set");
  const LiftedSet l = lift(a, window);
  const std::int64_t m = l.size();
  const std::int64_t span = l.span();
  report.hypotheses_hold = span <= 2 * m - 2;
  if (!report.hypotheses_hold) {
    report.witness = "span " + std::to_string(span) + " exceeds 2m-2";
    return report;
  }
  check_open_interval_in_zp_diffs(a, Rational(span - m + 1, k), Rational(m, k), report);
  return report;
}

LemmaReport check_diffset_symmetric_interval_zp(const ResidueSet& a,
                                                const ModularInterval& window, std::int64_t k) {
  LemmaReport report{LemmaId::kDiffsetSymmetricInterval};
  if (k < 2) throw std::invalid_argument("diffset-symmetric: k must be >= 2");
  if (a.empty()) throw std::invalid_argument("diffset-symmetric: empty set");
  const LiftedSet l = lift(a, window);
  const std::int64_t m = l.size();
  const std::int64_t span = l.span();
  report.hypotheses_hold = k * (span + 1) < (2 * k - 1) * m;
  if (!report.hypotheses_hold) {
    report.witness = "span " + std::to_string(span) + " not below (2k-1)m/k - 1";
    return report;
  }
  check_open_interval_in_zp_diffs(a, Rational(-m, k - 1), Rational(m, k - 1), report);
  return report;
}

LemmaReport check_diffset_size_bound_zp(const ResidueSet& a, const ModularInterval& window) {
  LemmaReport report{LemmaId::kDiffsetSizeBound};
  if (a.size() < 2) throw std::invalid_argument("diffset-size: need at least two elements");
  const LiftedSet l = lift(a, window);
  const std::int64_t m = l.size();
  const std::int64_t span = l.span();
  const std::int64_t p = a.modulus_value();

  std::int64_t g = 0;
  for (std::size_t i = 1; i < l.integers.size(); ++i) {
    g = std::gcd(g, l.integers[i] - l.integers[i - 1]);
  }
  // The escape hatch for sets sitting inside a coarser progression is read
  // as "gap gcd 1"; the wording leaves the progression measure ambiguous.
  report.note = "arithmetic-progression hypothesis read as gap gcd = 1";
  report.hypotheses_hold = (2 * span < p) && (g == 1);
  if (!report.hypotheses_hold) {
    report.witness = g != 1 ? "gap gcd " + std::to_string(g) : "window not shorter than p/2";
    return report;
  }
  const std::int64_t diff_count = difference_set(a).size();
  const std::int64_t bound = std::min(span + m, 3 * m - 3);
  report.conclusion_holds = diff_count >= bound;
  if (!report.conclusion_holds) {
    report.witness = "only " + std::to_string(diff_count) + " differences, bound " +
                     std::to_string(bound);
  }
  return report;
}

LemmaReport check_excluded_interval(const ResidueSet& a, const ModularInterval& a0_window,
                                    std::int64_t a_elem) {
  LemmaReport report{LemmaId::kExcludedInterval};
  if (a.modulus() != a0_window.modulus()) {
    throw std::invalid_argument("excluded-interval: modulus mismatch");
  }
  const std::int64_t p = a.modulus_value();
  const std::int64_t span = a0_window.length();
  const std::int64_t m = set_intersection(a, a0_window.to_set()).size();

  std::string failures;
  const auto fail = [&failures](const std::string& what) {
    if (!failures.empty()) failures += "; ";
    failures += what;
  };
  if (span < 1) fail("window length below 1");
  if (span > 2 * m - 2) fail("window length exceeds 2m-2");
  if (4 * a_elem < span) fail("a below span/4");
  if (2 * a_elem > span) fail("a above span/2");
  if (!a.contains(a_elem)) fail("reduction of a not in the set");
  if (!is_sum_free(a)) fail("set not sum-free");

  report.hypotheses_hold = failures.empty();
  if (!report.hypotheses_hold) {
    report.witness = failures;
    return report;
  }

  const std::int64_t radius = 2 * m - span - 2;  // >= 0 under the hypotheses
  report.conclusion_holds = true;
  if (2 * radius + 1 >= p) {
    report.conclusion_holds = a.empty();
    report.note = "band wraps the whole group";
    return report;
  }
  for (std::int64_t t = 2 * a_elem - radius; t <= 2 * a_elem + radius; ++t) {
    if (a.contains(t) || a.contains(-t)) {
      report.conclusion_holds = false;
      report.witness = "band element " + std::to_string(t) + " lies in A or -A";
      return report;
    }
  }
  return report;
}

LemmaReport check_tail_containment(const ResidueSet& a) {
  LemmaReport report{LemmaId::kTailContainment};
  const std::int64_t p = a.modulus_value();
  const std::int64_t n = a.size();

  const bool sum_free = is_sum_free(a);
  bool origin_gap = true;  // no element reduces into [-(p-n+1)/3, (p-n+1)/3]
  for (std::int64_t r : a.residues()) {
    const std::int64_t abs_rep = std::min(r, p - r);
    if (3 * abs_rep <= p - n + 1) {
      origin_gap = false;
      break;
    }
  }
  report.hypotheses_hold = sum_free && origin_gap;
  if (!sum_free) report.note = "set not sum-free";

  if (2 * n > p) {
    report.conclusion_holds = a.empty();
  } else {
    report.conclusion_holds = true;
    for (std::int64_t r : a.residues()) {
      if (r < n || r > p - n) {
        report.conclusion_holds = false;
        report.witness = "element " + std::to_string(r) + " outside [n, p-n]";
        break;
      }
    }
  }
  return report;
}

}  // namespace sumfree
