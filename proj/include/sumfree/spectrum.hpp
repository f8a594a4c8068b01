#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "sumfree/residue_set.hpp"

namespace sumfree {

/// Fourier coefficients of a set indicator: coeffs[z] = sum_{a in A} e(az/p)
/// for z in [0, p), where e(t) = exp(2*pi*i*t). coeffs[0] equals |A| exactly
/// and |coeffs[p-z]| = |coeffs[z]|.
struct Spectrum {
  std::int64_t p = 0;
  std::int64_t n = 0;
  std::vector<std::complex<double>> coeffs;
};

/// Full spectrum of the indicator function. Direct O(p^2) summation with a
/// precomputed root table up to kDirectDftLimit; chirp reindexing to a
/// power-of-two convolution above that (prime length rules out plain radix
/// FFT). The two paths agree to ~1e-9 * p and tests pin that down.
Spectrum compute_spectrum(const ResidueSet& s);

constexpr std::int64_t kDirectDftLimit = 4096;

/// |sum over z of p*n - sum |coeffs|^2| / (p*n); 0 for the empty set.
double parseval_residual(const Spectrum& sp);

/// |sum_z |A^(z)|^2 A^(z)|, returned raw. Exactly p times the number of
/// ordered triples a1+a2=a3 inside the set, so ~0 (rounding only) for
/// sum-free sets; useful as a diagnostic for everything else.
double cubic_identity_residual(const ResidueSet& s);
double cubic_identity_residual(const Spectrum& sp);

struct LargeCoefficient {
  std::int64_t z0 = 0;      // argmax over z in [1, p-1], ties -> smallest z
  double magnitude = 0.0;   // |A^(z0)|
  /// Lower bound sqrt(X * alpha(1-alpha)/2) * p guaranteed by the extremal
  /// vector bound at kappa = 1/2, or 0 when that bound is not applicable
  /// (gamma outside (0,1) or too few frequency pairs).
  double guaranteed_bound = 0.0;
};

/// Largest nontrivial coefficient of a sum-free set with density above
/// alpha0. Throws if the set is not sum-free or not dense enough. At
/// alpha0 = 0.318 the returned magnitude exceeds 0.152 * p.
LargeCoefficient find_large_coefficient(const ResidueSet& s, double alpha0);

/// Half-interval rearrangement data: the exhaustive maximizer of
/// |A ∩ [u, u+p/2)| over integer u, against the arcsin lower bound driven
/// by |A^(1)|.
struct RearrangementBound {
  std::int64_t u_star = 0;  // smallest maximizing u in [0, p)
  std::int64_t count = 0;   // m = |A ∩ [u_star, u_star + p/2)|
  double bound = 0.0;       // n/2 + (p/2pi) asin(|A^(1)| sin(pi/p))
  bool clamped = false;     // asin argument exceeded 1 by rounding
};

RearrangementBound rearrangement_bound(const ResidueSet& s);

namespace detail {
// Both DFT paths exposed for the switchover cross-check.
Spectrum spectrum_direct(const ResidueSet& s);
Spectrum spectrum_chirp(const ResidueSet& s);
}  // namespace detail

}  // namespace sumfree
