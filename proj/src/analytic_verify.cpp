#include "sumfree/analytic_verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace sumfree {

const char* verdict_name(Verdict v) {
  return v == Verdict::kSignDefinite ? "sign-definite" : "indeterminate";
}

namespace detail {

double sine_diff_window_value(double x) {
  return std::sin(2.0 * std::numbers::pi * x) -
         0.954 * std::sin(std::numbers::pi / 2.0 * (x + 0.5));
}

double sine_diff_window_2d_value(double x, double y) {
  return std::sin(2.0 * std::numbers::pi * (2.0 * y - x)) -
         0.954 * std::sin(std::numbers::pi / 2.0 * (x + 2.0 * y));
}

double arccos_slope_window_value(double x) {
  const double t = 1.049 * std::sin(2.0 * std::numbers::pi * (2.0 * x - 0.318));
  return 4.0 / std::numbers::pi * std::acos(t) - 1.729 + 5.0 * x;
}

double coefficient_ratio_value(double a) {
  return std::sqrt(2.0) * std::pow(a / (1.0 - a), 1.5);
}

double coefficient_sqrt_value(double a) {
  return std::sqrt(0.2131 * a * (1.0 - a) / 2.0);
}

}  // namespace detail

namespace {

// Grid pass over [lo, hi]: feeds sign*f at every node into the running
// minimum. Nodes are affine blends so both endpoints are hit exactly.
// Returns the worst margin; a non-positive value means the target sign
// failed somewhere on the grid.
double grid_min_margin(const std::function<double(double)>& f, int sign, double lo, double hi,
                       double step, double* actual_step = nullptr) {
  const double width = hi - lo;
  const std::int64_t cells = width <= 0.0 ? 0 : static_cast<std::int64_t>(std::ceil(width / step));
  if (actual_step != nullptr) *actual_step = cells == 0 ? 0.0 : width / static_cast<double>(cells);
  double worst = sign * f(lo);
  for (std::int64_t i = 1; i <= cells; ++i) {
    const double x = (lo * static_cast<double>(cells - i) + hi * static_cast<double>(i)) /
                     static_cast<double>(cells);
    worst = std::min(worst, sign * f(x));
  }
  return worst;
}

InequalityCertificate certify_grid_1d(std::string name, const std::function<double(double)>& f,
                                      int sign, Rational lo, Rational hi, double step,
                                      double lipschitz) {
  InequalityCertificate cert;
  cert.name = std::move(name);
  cert.region = {{lo, hi}};
  cert.sign = sign;
  cert.lipschitz_bound = lipschitz;
  double actual = 0.0;
  cert.min_margin = grid_min_margin(f, sign, lo.to_double(), hi.to_double(), step, &actual);
  cert.grid_step = actual;
  cert.verdict = cert.min_margin > lipschitz * actual / 2.0 ? Verdict::kSignDefinite
                                                            : Verdict::kIndeterminate;
  return cert;
}

}  // namespace

InequalityCertificate certify_sine_diff_window(Rational lo, Rational hi, double step) {
  // |f'| <= 2 pi + 0.954 pi / 2.
  const double lipschitz = 2.0 * std::numbers::pi + 0.954 * std::numbers::pi / 2.0;
  return certify_grid_1d("sine_diff_window", detail::sine_diff_window_value, -1, lo, hi, step,
                         lipschitz);
}

InequalityCertificate certify_sine_diff_window_2d(Rational x_lo, Rational x_hi, Rational y_lo,
                                                  Rational y_hi, double step) {
  InequalityCertificate cert;
  cert.name = "sine_diff_window_2d";
  cert.region = {{x_lo, x_hi}, {y_lo, y_hi}};
  cert.sign = -1;
  const double lx = 2.0 * std::numbers::pi + 0.954 * std::numbers::pi / 2.0;
  const double ly = 4.0 * std::numbers::pi + 0.954 * std::numbers::pi;
  cert.lipschitz_bound = std::hypot(lx, ly);  // Euclidean gradient bound

  const double xa = x_lo.to_double(), xb = x_hi.to_double();
  const double ya = y_lo.to_double(), yb = y_hi.to_double();
  const std::int64_t nx = xb > xa ? static_cast<std::int64_t>(std::ceil((xb - xa) / step)) : 0;
  const std::int64_t ny = yb > ya ? static_cast<std::int64_t>(std::ceil((yb - ya) / step)) : 0;
  const double hx = nx == 0 ? 0.0 : (xb - xa) / static_cast<double>(nx);
  const double hy = ny == 0 ? 0.0 : (yb - ya) / static_cast<double>(ny);
  double worst = -detail::sine_diff_window_2d_value(xa, ya);
  for (std::int64_t i = 0; i <= nx; ++i) {
    const double x =
        nx == 0 ? xa : (xa * static_cast<double>(nx - i) + xb * static_cast<double>(i)) / static_cast<double>(nx);
    for (std::int64_t j = 0; j <= ny; ++j) {
      const double y =
          ny == 0 ? ya : (ya * static_cast<double>(ny - j) + yb * static_cast<double>(j)) / static_cast<double>(ny);
      worst = std::min(worst, -detail::sine_diff_window_2d_value(x, y));
    }
  }
  cert.min_margin = worst;
  cert.grid_step = std::max(hx, hy);
  const double cell_radius = 0.5 * std::hypot(hx, hy);
  cert.verdict = worst > cert.lipschitz_bound * cell_radius ? Verdict::kSignDefinite
                                                            : Verdict::kIndeterminate;
  return cert;
}

InequalityCertificate certify_arccos_slope_window(Rational lo, Rational hi, double step) {
  // Domain pass first: bound |1.049 sin(2 pi (2x - 0.318))| away from 1 so
  // the arccos derivative has a finite bound on the region.
  const double arg_lipschitz = 1.049 * 4.0 * std::numbers::pi;
  double actual = 0.0;
  const auto arg = [](double x) {
    return 1.049 * std::sin(2.0 * std::numbers::pi * (2.0 * x - 0.318));
  };
  const double arg_margin = grid_min_margin(
      [&arg](double x) { return 1.0 - std::abs(arg(x)); }, +1, lo.to_double(), hi.to_double(),
      step, &actual);
  const double arg_ceiling = 1.0 - (arg_margin - arg_lipschitz * actual / 2.0);
  if (!(arg_ceiling < 1.0)) {
    throw std::domain_error(
        "certify_arccos_slope_window: arccos argument not bounded inside [-1, 1] on region");
  }
  const double lipschitz =
      4.0 / std::numbers::pi * arg_lipschitz / std::sqrt(1.0 - arg_ceiling * arg_ceiling) + 5.0;
  return certify_grid_1d("arccos_slope_window", detail::arccos_slope_window_value, +1, lo, hi,
                         step, lipschitz);
}

InequalityCertificate certify_coefficient_lower_bounds(double step) {
  const Rational lo(318, 1000), hi(334, 1000);
  const double a_lo = lo.to_double(), a_hi = hi.to_double();

  // d/da sqrt(2) r^{3/2}, r = a/(1-a): increasing factors, bound at a_hi.
  const double r_hi = a_hi / (1.0 - a_hi);
  const double l_ratio = std::sqrt(2.0) * 1.5 * std::sqrt(r_hi) / ((1.0 - a_hi) * (1.0 - a_hi));
  // d/da sqrt(0.2131 a(1-a)/2): the region sits left of 1/2, so the value
  // is smallest and |1-2a| largest at a_lo.
  const double l_sqrt =
      0.2131 * std::abs(1.0 - 2.0 * a_lo) / (4.0 * detail::coefficient_sqrt_value(a_lo));

  InequalityCertificate ratio =
      certify_grid_1d("coefficient_lower_bounds",
                      [](double a) { return detail::coefficient_ratio_value(a) - 0.4502; }, +1,
                      lo, hi, step, l_ratio);
  InequalityCertificate root =
      certify_grid_1d("coefficient_lower_bounds",
                      [](double a) { return detail::coefficient_sqrt_value(a) - 0.152; }, +1, lo,
                      hi, step, l_sqrt);

  InequalityCertificate cert = ratio;
  cert.lipschitz_bound = std::max(ratio.lipschitz_bound, root.lipschitz_bound);
  cert.min_margin = std::min(ratio.min_margin, root.min_margin);
  cert.verdict = (ratio.verdict == Verdict::kSignDefinite && root.verdict == Verdict::kSignDefinite)
                     ? Verdict::kSignDefinite
                     : Verdict::kIndeterminate;
  return cert;
}

InequalityCertificate certify_halfcount_threshold() {
  InequalityCertificate cert;
  cert.name = "halfcount_threshold";
  cert.sign = +1;
  const double arg = 0.1519 * std::numbers::pi;
  if (!(arg < 1.0)) throw std::domain_error("certify_halfcount_threshold: arcsin domain");
  const double value = 0.159 + std::asin(arg) / (2.0 * std::numbers::pi);
  cert.min_margin = value - 0.238;
  cert.verdict = cert.min_margin > 0.0 ? Verdict::kSignDefinite : Verdict::kIndeterminate;
  return cert;
}

InequalityCertificate certify_linear_combinations() {
  InequalityCertificate cert;
  cert.name = "linear_combinations";
  cert.sign = +1;

  const Rational c318(318, 1000), c238(238, 1000), c244(244, 1000);
  const bool identities_hold =
      Rational(5, 2) * c318 + Rational(3) * c238 == Rational(1509, 1000) &&
      Rational(9, 2) * c318 + Rational(13, 2) * c244 == Rational(3017, 1000) &&
      c318 + Rational(3) * c238 == Rational(1032, 1000) &&
      c318 + Rational(5) * c238 == Rational(1508, 1000);

  const Rational pos1 = Rational(8) * c238 + Rational(7, 2) * c318 - Rational(3);
  const Rational pos2 = Rational(2) * c318 + Rational(3, 2) * c244 - Rational(1);
  const Rational zero(0);
  const bool positives_hold = pos1 > zero && pos2 > zero;

  cert.min_margin = std::min(pos1.to_double(), pos2.to_double());
  cert.verdict = identities_hold && positives_hold ? Verdict::kSignDefinite
                                                   : Verdict::kIndeterminate;
  return cert;
}

std::vector<InequalityCertificate> run_all_certificates(double step) {
  std::vector<InequalityCertificate> certs;
  certs.push_back(certify_sine_diff_window(Rational(318, 1000), Rational(334, 1000), step));
  certs.push_back(certify_sine_diff_window_2d(Rational(318, 1000), Rational(334, 1000),
                                              Rational(23, 100), Rational(25, 100), step));
  certs.push_back(certify_arccos_slope_window(Rational(238, 1000), Rational(244, 1000), step));
  certs.push_back(certify_coefficient_lower_bounds(step));
  certs.push_back(certify_halfcount_threshold());
  certs.push_back(certify_linear_combinations());
  return certs;
}

}  // namespace sumfree
