#include "cograte/optimize.hpp"

#include <cmath>
#include <string>

#include "cograte/channel.hpp"

namespace cograte {

ScalarOptimum golden_section_max(const std::function<double(double)>& f,
                                 double lo, double hi, double x_tol,
                                 int max_iter) {
  if (!(lo <= hi)) {
    throw std::domain_error("golden_section_max: need lo <= hi");
  }
  // Inverse golden ratio, 1/phi.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c);
  double fd = f(d);
  int evals = 2;
  for (int i = 0; i < max_iter && (b - a) > x_tol; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
    ++evals;
  }
  const double x = 0.5 * (a + b);
  return {x, f(x), evals + 1};
}

ScalarOptimum golden_section_min(const std::function<double(double)>& f,
                                 double lo, double hi, double x_tol,
                                 int max_iter) {
  auto neg = [&f](double x) { return -f(x); };
  ScalarOptimum r = golden_section_max(neg, lo, hi, x_tol, max_iter);
  r.value = -r.value;
  return r;
}

double bisect_root(const std::function<double(double)>& f, double lo,
                   double hi, double x_tol, int max_iter) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) {
    throw NumericalError("bisect_root: no sign change on [" +
                         std::to_string(lo) + ", " + std::to_string(hi) +
                         "] (f=" + std::to_string(flo) + ", " +
                         std::to_string(fhi) + ")");
  }
  for (int i = 0; i < max_iter; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= x_tol) return mid;
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo <= x_tol) return 0.5 * (lo + hi);
  throw NumericalError("bisect_root: tolerance " + std::to_string(x_tol) +
                       " not reached after " + std::to_string(max_iter) +
                       " iterations; bracket [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
}

}  // namespace cograte
