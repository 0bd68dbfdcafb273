#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ellcirc/elliptic.hpp"
#include "ellcirc/errors.hpp"
#include "oracles.hpp"

using namespace ellcirc;
using std::numbers::pi;

TEST_CASE("incomplete_e: closed-form values") {
  CHECK(incomplete_e(pi / 2, 0.0) == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(incomplete_e(pi / 3, 0.0) == doctest::Approx(pi / 3).epsilon(1e-15));
  CHECK(std::abs(incomplete_e(pi / 2, 1.0) - 1.0) <= 1e-14);
  CHECK(incomplete_e(0.0, 0.7) == 0.0);
  // E(phi, 1) = sin(phi)
  CHECK(std::abs(incomplete_e(0.9, 1.0) - std::sin(0.9)) <= 1e-15);
}

TEST_CASE("complete_e: eps = sqrt(3)/2 matches quadrature") {
  const double eps = std::sqrt(3.0) / 2.0;
  // 1.21105602756845952... from 30-digit quadrature of the defining integral.
  CHECK(std::abs(complete_e(eps) - 1.2110560275684595) <= 1e-14);
  CHECK(std::abs(complete_e(eps) - oracle::elliptic_e_quadrature(pi / 2, eps)) <= 1e-12);
  CHECK(complete_e(0.0) == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(complete_e(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(complete_e(0.4) == incomplete_e(pi / 2, 0.4));
}

TEST_CASE("incomplete_e: domain errors") {
  CHECK_THROWS_AS(incomplete_e(-0.1, 0.5), DomainError);
  CHECK_THROWS_AS(incomplete_e(2.0, 0.5), DomainError);
  CHECK_THROWS_AS(incomplete_e(1.0, -0.01), DomainError);
  CHECK_THROWS_AS(incomplete_e(1.0, 1.01), DomainError);
  CHECK_THROWS_AS(complete_e(std::nan("")), DomainError);
}

TEST_CASE("incomplete_e: grid agreement, monotonicity and bounds") {
  constexpr int n = 24;
  for (int i = 0; i <= n; ++i) {
    const double phi = pi / 2 * i / n;
    double prev_eps = INFINITY;
    for (int j = 0; j <= n; ++j) {
      const double eps = static_cast<double>(j) / n;
      const double v = incomplete_e(phi, eps);
      CHECK(std::abs(v - oracle::elliptic_e_quadrature(phi, eps)) <= 1e-12);
      CHECK(v <= phi + 1e-15);
      CHECK(v >= phi * std::sqrt(1.0 - eps * eps) - 1e-15);
      CHECK(v <= prev_eps + 1e-15);  // non-increasing in eps
      prev_eps = v;
    }
  }
  for (double eps : {0.0, 0.3, 0.99, 1.0}) {
    double prev = -1.0;
    for (int i = 1; i <= 40; ++i) {
      const double v = incomplete_e(pi / 2 * i / 40, eps);
      CHECK(v > prev);  // strictly increasing in phi
      prev = v;
    }
  }
}

TEST_CASE("incomplete_e: agrees with the standard library where available") {
#if defined(__cpp_lib_math_special_functions) || defined(__STDCPP_MATH_SPEC_FUNCS__)
  for (double eps : {0.1, 0.5, 0.9, 0.999}) {
    for (double phi : {0.2, 0.8, 1.3, pi / 2}) {
      CHECK(std::abs(incomplete_e(phi, eps) - std::ellint_2(eps, phi)) <= 1e-13);
    }
  }
#endif
}

TEST_CASE("carlson integrals: known values") {
  // R_F(1, 2, 0) = 1.3110287771461, R_D(0, 2, 1) = 1.7972103521034 (Carlson 1995 test values)
  CHECK(carlson_rf(1.0, 2.0, 0.0) == doctest::Approx(1.3110287771461).epsilon(1e-12));
  CHECK(carlson_rd(0.0, 2.0, 1.0) == doctest::Approx(1.7972103521034).epsilon(1e-12));
  CHECK(carlson_rf(2.0, 2.0, 2.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(carlson_rf(0.0, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(carlson_rd(1.0, 1.0, 0.0), DomainError);
}
