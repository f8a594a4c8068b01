#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "sumfree/rational.hpp"
#include "sumfree/residue_set.hpp"

namespace sumfree {

/// The checkable predicates backing the structure analysis, each paired in
/// the tests with a brute-force oracle over its small-parameter range.
enum class LemmaId {
  kExtremalVectorBound,   // max coordinate of a constrained vector
  kDiffsetSizeBound,      // |A-A| >= min{l+m, 3m-3}
  kDiffsetInterval,       // ((l-m+1)/k, m/k) inside A-A
  kDiffsetSymmetricInterval,  // (-m/(k-1), m/(k-1)) inside A-A
  kExcludedInterval,      // band around 2a misses A and -A
  kTailContainment,       // origin gap forces A inside [n, p-n]
};

const char* lemma_id_name(LemmaId id);
std::optional<LemmaId> lemma_id_from_name(const std::string& name);

/// Outcome of one predicate run. `conclusion_holds` is meaningful only when
/// the hypotheses hold; `witness` describes the failing configuration when
/// either flag is false, `note` carries non-fatal remarks.
struct LemmaReport {
  LemmaId lemma_id;
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
  std::optional<std::string> witness;
  std::string note;

  /// A violation is a state the backing statements rule out.
  bool violated() const noexcept { return hypotheses_hold && !conclusion_holds; }
};

/// Data for the constrained-maximum bound: vectors of P non-negative entries
/// with sum 1 and power-sum sum v_i^{1+kappa} >= gamma have a coordinate of
/// size at least the root X of K x^{1+kappa} + (1-Kx)^{1+kappa} = gamma,
/// where K = floor(gamma^{-1/kappa}).
struct ExtremalVectorProblem {
  double kappa = 0.0;        // > 0
  double gamma = 0.0;        // in (0, 1)
  std::int64_t P = 0;        // vector length, > K
  std::int64_t K = 0;        // floor(gamma^{-1/kappa})
};

/// Validates parameters and fills in K. Throws on kappa <= 0, gamma outside
/// (0,1), or P <= K.
ExtremalVectorProblem make_extremal_vector_problem(double kappa, double gamma, std::int64_t P);

/// Unique root of K x^{1+kappa} + (1-Kx)^{1+kappa} = gamma in
/// (1/(K+1), 1/K], by bisection to |f(X) - gamma| <= 1e-12. The bracket
/// f(1/(K+1)) < gamma <= f(1/K) is implied by the definition of K and is
/// asserted; failure signals inconsistent parameters.
double solve_extremal_root(const ExtremalVectorProblem& prob);

/// Checks max(v) >= X - 1e-9 for a feasible v. Infeasible inputs (wrong
/// length, negative entry, sum != 1 within 1e-12, power sum below gamma)
/// throw with a message naming the violated precondition. A false return
/// would contradict the bound and is surfaced to tests as a library bug.
bool extremal_max_bound(const ExtremalVectorProblem& prob, std::span<const double> v);

/// |L-L| >= min{l+m, 3m-3} for a normalized integer set: 0 = min L,
/// span l attained, gap gcd 1, m = |L| >= 2. Throws on unnormalized input.
LemmaReport check_diffset_size_bound(const LiftedSet& l);

/// Every integer strictly inside ((l-m+1)/k, m/k) lies in L-L, provided
/// l <= 2m-2. Endpoints are compared as exact rationals. k >= 1.
LemmaReport check_diffset_interval(const LiftedSet& l, std::int64_t k);

/// Every integer strictly inside (-m/(k-1), m/(k-1)) lies in L-L, provided
/// l < (2k-1)m/k - 1. k >= 2.
LemmaReport check_diffset_symmetric_interval(const LiftedSet& l, std::int64_t k);

/// Z/pZ transfer of the two interval checks: the same containments hold for
/// a residue set inside a window shorter than p, with the open intervals
/// mapped through reduction. Used to validate the transfer against the
/// integer-lift path.
LemmaReport check_diffset_interval_zp(const ResidueSet& a, const ModularInterval& window,
                                      std::int64_t k);
LemmaReport check_diffset_symmetric_interval_zp(const ResidueSet& a,
                                                const ModularInterval& window, std::int64_t k);

/// Z/pZ transfer of the size bound, under the gcd-1 reading of the
/// arithmetic-progression escape hatch (see report note).
LemmaReport check_diffset_size_bound_zp(const ResidueSet& a, const ModularInterval& window);

/// For sum-free A, window A0 = A ∩ [u, u+l] with m = |A0| and l <= 2m-2,
/// and an integer a in [l/4, l/2] with its reduction in A, the band
/// [2a - (2m-l-2), 2a + (2m-l-2)] misses both A and -A. Hypothesis failures
/// are reported individually through `witness`, not thrown.
LemmaReport check_excluded_interval(const ResidueSet& a, const ModularInterval& a0_window,
                                    std::int64_t a_elem);

/// For sum-free A with n = |A|: if no element reduces into
/// [-(p-n+1)/3, (p-n+1)/3], then A lies in [n, p-n]. Both the hypothesis and
/// the conclusion status are reported.
LemmaReport check_tail_containment(const ResidueSet& a);

}  // namespace sumfree
