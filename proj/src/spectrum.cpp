#include "sumfree/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sumfree/lemma_oracles.hpp"
#include "sumfree/parallel.hpp"

namespace sumfree {

namespace detail {

Spectrum spectrum_direct(const ResidueSet& s) {
  const std::int64_t p = s.modulus_value();
  Spectrum sp{p, s.size(), std::vector<std::complex<double>>(static_cast<std::size_t>(p))};
  const std::vector<std::int64_t> elems = s.residues();

  std::vector<std::complex<double>> roots(static_cast<std::size_t>(p));
  const double w = 2.0 * std::numbers::pi / static_cast<double>(p);
  for (std::int64_t k = 0; k < p; ++k) {
    roots[static_cast<std::size_t>(k)] = std::polar(1.0, w * static_cast<double>(k));
  }

  // Per-frequency summation order is fixed (elements ascending), so the
  // result does not depend on how frequencies are scheduled.
  parallel_for(0, p, [&](std::int64_t z) {
    std::complex<double> acc = 0.0;
    for (std::int64_t a : elems) {
      acc += roots[static_cast<std::size_t>((a * z) % p)];
    }
    sp.coeffs[static_cast<std::size_t>(z)] = acc;
  });
  sp.coeffs[0] = static_cast<double>(s.size());
  return sp;
}

namespace {

// Iterative radix-2 FFT, in place. Length must be a power of two.
void fft_pow2(std::vector<std::complex<double>>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? -2.0 : 2.0) * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wl = std::polar(1.0, ang);
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w = 1.0;
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse) {
    for (auto& x : a) x /= static_cast<double>(n);
  }
}

}  // namespace

Spectrum spectrum_chirp(const ResidueSet& s) {
  // A^(z) = c(z) * sum_a x_a c(a) conj(c(z-a)) with c(k) = exp(i pi k^2 / p):
  // a linear convolution evaluated through a zero-padded radix-2 FFT.
  const std::int64_t p = s.modulus_value();
  Spectrum sp{p, s.size(), std::vector<std::complex<double>>(static_cast<std::size_t>(p))};

  std::size_t len = 1;
  while (len < static_cast<std::size_t>(2 * p - 1)) len <<= 1;

  // Chirp angles use k^2 mod 2p: exp(i pi k^2 / p) has period 2p in k^2.
  std::vector<std::complex<double>> chirp(static_cast<std::size_t>(p));
  const double w = std::numbers::pi / static_cast<double>(p);
  for (std::int64_t k = 0; k < p; ++k) {
    const std::int64_t sq = (k * k) % (2 * p);
    chirp[static_cast<std::size_t>(k)] = std::polar(1.0, w * static_cast<double>(sq));
  }

  std::vector<std::complex<double>> u(len, 0.0), v(len, 0.0);
  for (std::int64_t a : s.residues()) {
    u[static_cast<std::size_t>(a)] = chirp[static_cast<std::size_t>(a)];
  }
  for (std::int64_t k = 0; k < p; ++k) {
    const std::complex<double> c = std::conj(chirp[static_cast<std::size_t>(k)]);
    v[static_cast<std::size_t>(k)] = c;
    if (k > 0) v[len - static_cast<std::size_t>(k)] = c;  // negative offsets wrap
  }
  fft_pow2(u, false);
  fft_pow2(v, false);
  for (std::size_t i = 0; i < len; ++i) u[i] *= v[i];
  fft_pow2(u, true);

  for (std::int64_t z = 0; z < p; ++z) {
    sp.coeffs[static_cast<std::size_t>(z)] = chirp[static_cast<std::size_t>(z)] * u[static_cast<std::size_t>(z)];
  }
  sp.coeffs[0] = static_cast<double>(s.size());
  return sp;
}

}  // namespace detail

Spectrum compute_spectrum(const ResidueSet& s) {
  return s.modulus_value() <= kDirectDftLimit ? detail::spectrum_direct(s)
                                              : detail::spectrum_chirp(s);
}

double parseval_residual(const Spectrum& sp) {
  if (sp.n == 0) return 0.0;
  double total = 0.0;
  for (const auto& c : sp.coeffs) total += std::norm(c);
  const double expected = static_cast<double>(sp.p) * static_cast<double>(sp.n);
  return std::abs(total - expected) / expected;
}

double cubic_identity_residual(const Spectrum& sp) {
  std::complex<double> acc = 0.0;
  for (const auto& c : sp.coeffs) acc += std::norm(c) * c;
  return std::abs(acc);
}

double cubic_identity_residual(const ResidueSet& s) {
  return cubic_identity_residual(compute_spectrum(s));
}

LargeCoefficient find_large_coefficient(const ResidueSet& s, double alpha0) {
  const std::int64_t p = s.modulus_value();
  const double alpha = static_cast<double>(s.size()) / static_cast<double>(p);
  if (!(alpha > alpha0)) {
    throw std::invalid_argument("find_large_coefficient: density " + std::to_string(alpha) +
                                " does not exceed alpha0 = " + std::to_string(alpha0));
  }
  if (!is_sum_free(s)) {
    throw std::invalid_argument("find_large_coefficient: set is not sum-free");
  }

  const Spectrum sp = compute_spectrum(s);
  LargeCoefficient out;
  out.z0 = 1;
  out.magnitude = std::abs(sp.coeffs[1]);
  for (std::int64_t z = 2; z < p; ++z) {
    const double m = std::abs(sp.coeffs[static_cast<std::size_t>(z)]);
    if (m > out.magnitude) {
      out.magnitude = m;
      out.z0 = z;
    }
  }

  // Guaranteed floor from the extremal vector bound: the normalized squared
  // coefficients over (p-1)/2 conjugate pairs sum to 1 and their 3/2-power
  // sum is at least gamma = sqrt(2) (alpha/(1-alpha))^{3/2}.
  const double gamma = std::sqrt(2.0) * std::pow(alpha / (1.0 - alpha), 1.5);
  if (gamma > 0.0 && gamma < 1.0) {
    ExtremalVectorProblem prob = make_extremal_vector_problem(0.5, gamma, (p - 1) / 2);
    if (prob.P > prob.K) {
      const double x = solve_extremal_root(prob);
      out.guaranteed_bound =
          std::sqrt(x * alpha * (1.0 - alpha) / 2.0) * static_cast<double>(p);
    }
  }
  return out;
}

RearrangementBound rearrangement_bound(const ResidueSet& s) {
  const std::int64_t p = s.modulus_value();
  RearrangementBound out;
  if (s.empty()) return out;

  // Exhaustive sliding-window maximum of |S ∩ [u, u+p/2)| over u in [0, p).
  // The window holds the (p+1)/2 offsets 0..(p-1)/2.
  const std::int64_t window = (p + 1) / 2;
  std::vector<std::int8_t> ind(static_cast<std::size_t>(p), 0);
  for (std::int64_t a : s.residues()) ind[static_cast<std::size_t>(a)] = 1;
  std::int64_t count = 0;
  for (std::int64_t x = 0; x < window; ++x) count += ind[static_cast<std::size_t>(x)];
  std::int64_t best = count, best_u = 0;
  for (std::int64_t u = 1; u < p; ++u) {
    count += ind[static_cast<std::size_t>((u - 1 + window) % p)] - ind[static_cast<std::size_t>(u - 1)];
    if (count > best) {
      best = count;
      best_u = u;
    }
  }
  out.u_star = best_u;
  out.count = best;

  // |A^(1)| computed directly; no need for the full spectrum.
  std::complex<double> a1 = 0.0;
  const double w = 2.0 * std::numbers::pi / static_cast<double>(p);
  for (std::int64_t a : s.residues()) a1 += std::polar(1.0, w * static_cast<double>(a));
  double arg = std::abs(a1) * std::sin(std::numbers::pi / static_cast<double>(p));
  if (arg > 1.0) {
    // Mathematically arg <= sin(n pi / p) < 1; rounding can cross 1 when
    // |A^(1)| is near its maximum.
    arg = 1.0;
    out.clamped = true;
  }
  out.bound = static_cast<double>(s.size()) / 2.0 +
              static_cast<double>(p) / (2.0 * std::numbers::pi) * std::asin(arg);
  return out;
}

}  // namespace sumfree
