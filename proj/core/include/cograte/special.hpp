#pragma once

namespace cograte {

/// Upper-tail probability of the standard normal, Q(x) = P(Z > x).
double gaussian_tail(double x);

/// Inverse of gaussian_tail on (0, 1): gaussian_tail(inverse_gaussian_tail(p))
/// round-trips to ~1e-14 relative. Rational approximation refined with a
/// Halley step against erfc, so no dependency beyond <cmath>.
double inverse_gaussian_tail(double p);

}  // namespace cograte
