#pragma once

#include <functional>

namespace cograte {

struct ScalarOptimum {
  double x = 0.0;
  double value = 0.0;
  int evaluations = 0;
};

/// Golden-section maximization of a unimodal f on [lo, hi]. Converges to
/// |x - x*| <= x_tol. Interior search only: callers that care about exact
/// endpoint optima should compare f(lo) and f(hi) against the result.
ScalarOptimum golden_section_max(const std::function<double(double)>& f,
                                 double lo, double hi, double x_tol = 1e-8,
                                 int max_iter = 200);

ScalarOptimum golden_section_min(const std::function<double(double)>& f,
                                 double lo, double hi, double x_tol = 1e-8,
                                 int max_iter = 200);

/// Bisection for f(x) = 0 on [lo, hi]. f(lo) and f(hi) must have opposite
/// signs; the root is located to |x - x*| <= x_tol. Throws NumericalError on
/// a bad bracket or if max_iter bisections cannot reach the tolerance.
double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double x_tol = 1e-10, int max_iter = 400);

}  // namespace cograte
