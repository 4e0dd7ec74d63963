#include <cmath>
#include <stdexcept>

#include "cograte/special.hpp"
#include "doctest.h"

using namespace cograte;

TEST_CASE("inverse Gaussian tail against tabulated quantiles") {
  // Standard normal upper-tail quantiles.
  CHECK(std::abs(inverse_gaussian_tail(1e-3) - 3.0902) < 1e-3);
  CHECK(std::abs(inverse_gaussian_tail(1e-3) - 3.090232306167814) < 1e-9);
  CHECK(std::abs(inverse_gaussian_tail(0.5)) < 1e-12);
  CHECK(std::abs(inverse_gaussian_tail(0.025) - 1.959963984540054) < 1e-9);
  CHECK(std::abs(inverse_gaussian_tail(1e-6) - 4.753424308822899) < 1e-8);
  CHECK(std::abs(inverse_gaussian_tail(0.158655253931457) - 1.0) < 1e-9);
}

TEST_CASE("inverse Gaussian tail round-trips through erfc") {
  for (double p = 1e-12; p < 1.0; p *= 3.7) {
    const double x = inverse_gaussian_tail(p);
    CHECK(gaussian_tail(x) == doctest::Approx(p).epsilon(1e-12));
  }
  for (double p = 0.9999; p > 0.5; p -= 0.037) {
    const double x = inverse_gaussian_tail(p);
    CHECK(x < 0.0);
    CHECK(gaussian_tail(x) == doctest::Approx(p).epsilon(1e-12));
  }
  // Symmetry of the tail inverse.
  CHECK(inverse_gaussian_tail(0.2) == doctest::Approx(-inverse_gaussian_tail(0.8)).epsilon(1e-12));
}

TEST_CASE("inverse Gaussian tail domain") {
  CHECK_THROWS_AS(inverse_gaussian_tail(0.0), std::domain_error);
  CHECK_THROWS_AS(inverse_gaussian_tail(1.0), std::domain_error);
  CHECK_THROWS_AS(inverse_gaussian_tail(-0.1), std::domain_error);
  CHECK_THROWS_AS(inverse_gaussian_tail(1.1), std::domain_error);
}

TEST_CASE("gaussian_tail basics") {
  CHECK(gaussian_tail(0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(gaussian_tail(3.0902323061678132) == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(gaussian_tail(-1.0) + gaussian_tail(1.0) == doctest::Approx(1.0).epsilon(1e-14));
}
