#include "cograte/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cograte {
namespace {

// Acklam's rational approximation to the inverse standard normal cdf.
// Relative error below 1.15e-9 over the full domain before refinement.
constexpr double kA[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                          -2.759285104469687e+02, 1.383577518672690e+02,
                          -3.066479806614716e+01, 2.506628277459239e+00};
constexpr double kB[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                          -1.556989798598866e+02, 6.680131188771972e+01,
                          -1.328068155288572e+01};
constexpr double kC[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                          -2.400758277161838e+00, -2.549732539343734e+00,
                          4.374664141464968e+00,  2.938163982698783e+00};
constexpr double kD[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                          2.445134137142996e+00, 3.754408661907416e+00};
constexpr double kPLow = 0.02425;

double inverse_normal_cdf(double p) {
  if (p < kPLow) {
    const double u = std::sqrt(-2.0 * std::log(p));
    return (((((kC[0] * u + kC[1]) * u + kC[2]) * u + kC[3]) * u + kC[4]) * u + kC[5]) /
           ((((kD[0] * u + kD[1]) * u + kD[2]) * u + kD[3]) * u + 1.0);
  }
  if (p <= 1.0 - kPLow) {
    const double u = p - 0.5;
    const double r = u * u;
    return (((((kA[0] * r + kA[1]) * r + kA[2]) * r + kA[3]) * r + kA[4]) * r + kA[5]) * u /
           (((((kB[0] * r + kB[1]) * r + kB[2]) * r + kB[3]) * r + kB[4]) * r + 1.0);
  }
  const double u = std::sqrt(-2.0 * std::log(1.0 - p));
  return -(((((kC[0] * u + kC[1]) * u + kC[2]) * u + kC[3]) * u + kC[4]) * u + kC[5]) /
         ((((kD[0] * u + kD[1]) * u + kD[2]) * u + kD[3]) * u + 1.0);
}

}  // namespace

double gaussian_tail(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double inverse_gaussian_tail(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw std::domain_error("inverse_gaussian_tail: p must lie in (0, 1)");
  }
  double x = -inverse_normal_cdf(p);
  // Halley refinement of Q(x) - p = 0; the derivative is -phi(x).
  for (int step = 0; step < 2; ++step) {
    const double err = gaussian_tail(x) - p;
    const double pdf =
        std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
    if (pdf <= 0.0) break;
    const double newton = err / pdf;
    x += newton / (1.0 - 0.5 * x * newton);
  }
  return x;
}

}  // namespace cograte
