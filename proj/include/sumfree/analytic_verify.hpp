#pragma once

#include <string>
#include <vector>

#include "sumfree/rational.hpp"

namespace sumfree {

enum class Verdict { kSignDefinite, kIndeterminate };

const char* verdict_name(Verdict v);

/// Record that a named closed-form function keeps one sign on a region:
/// every grid value has the target sign with margin exceeding the Lipschitz
/// slack (L * step / 2 on intervals, L * cell-diagonal / 2 on rectangles).
/// Regions carry exact rational endpoints; a region may be empty for pure
/// constant checks.
struct InequalityCertificate {
  std::string name;
  std::vector<std::pair<Rational, Rational>> region;  // one pair per axis
  double grid_step = 0.0;
  double lipschitz_bound = 0.0;
  double min_margin = 0.0;  // worst grid distance from 0, in the target sign
  int sign = 0;             // +1 certifies f > 0, -1 certifies f < 0
  Verdict verdict = Verdict::kIndeterminate;
};

constexpr double kDefaultGridStep = 1e-5;

/// sin(2*pi*x) - 0.954 sin((pi/2)(x+0.5)) < 0. The backing claim covers
/// x in (0.318, 0.334); other regions are evaluated but carry no guarantee.
InequalityCertificate certify_sine_diff_window(Rational lo, Rational hi,
                                               double step = kDefaultGridStep);

/// sin(2*pi*(2y-x)) - 0.954 sin((pi/2)(x+2y)) < 0 on a rectangle inside
/// x in (0.318, 0.334), y in (0.23, 0.25).
InequalityCertificate certify_sine_diff_window_2d(Rational x_lo, Rational x_hi, Rational y_lo,
                                                  Rational y_hi, double step = kDefaultGridStep);

/// (4/pi) arccos(1.049 sin(2*pi*(2x-0.318))) - 1.729 + 5x > 0 on
/// x in (0.238, 0.244). Throws std::domain_error when the arccos argument
/// cannot be bounded inside [-1, 1] on the region (checked with its own
/// Lipschitz margin before the main pass).
InequalityCertificate certify_arccos_slope_window(Rational lo, Rational hi,
                                                  double step = kDefaultGridStep);

/// sqrt(2) (a/(1-a))^{3/2} > 0.4502 and sqrt(0.2131 a(1-a)/2) > 0.152,
/// jointly on a in [0.318, 0.334] (closed extension of the open claim).
InequalityCertificate certify_coefficient_lower_bounds(double step = kDefaultGridStep);

/// 0.159 + (1/2pi) arcsin(0.1519 pi) > 0.238; a single point evaluation.
InequalityCertificate certify_halfcount_threshold();

/// The linear constant table, in exact rational arithmetic:
///   5/2*0.318 + 3*0.238 = 1.509         9/2*0.318 + 13/2*0.244 = 3.017
///   0.318 + 3*0.238 = 1.032             0.318 + 5*0.238 = 1.508
///   8*0.238 + 7/2*0.318 - 3 > 0         2*0.318 + 3/2*0.244 - 1 > 0
InequalityCertificate certify_linear_combinations();

/// All six certificates at the given grid step, in a fixed order.
std::vector<InequalityCertificate> run_all_certificates(double step = kDefaultGridStep);

namespace detail {
// Raw integrands, exposed so tests can probe slopes and endpoints.
double sine_diff_window_value(double x);
double sine_diff_window_2d_value(double x, double y);
double arccos_slope_window_value(double x);
double coefficient_ratio_value(double a);   // sqrt(2) (a/(1-a))^{3/2}
double coefficient_sqrt_value(double a);    // sqrt(0.2131 a(1-a)/2)
}  // namespace detail

}  // namespace sumfree
