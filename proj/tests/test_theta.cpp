#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "vshift/errors.hpp"
#include "vshift/theta.hpp"

using namespace vshift;

TEST_SUITE("theta") {

TEST_CASE("classical psi at 1 and 10") {
  CHECK(std::abs(psi_classical(1.0).value.real() - 0.0432174056066540073) < 1e-16);
  CHECK(std::abs(psi_classical(10.0).value.real() - 2.27110106832409e-14) < 1e-26);
  CHECK_THROWS_AS(psi_classical(0.0), DomainError);
}

TEST_CASE("Jacobi transformation on a log grid") {
  for (int k = 0; k < 50; ++k) {
    const double x = 0.1 * std::pow(100.0, k / 49.0);
    CHECK(jacobi_residual(x) < 1e-12);
  }
}

TEST_CASE("general psi against long double sums") {
  const Complex ref1{-0.52566367049244353471, 0.078129126310560285613};
  CHECK(std::abs(psi_general(Complex{0.2, 1.0}, Complex{0.5, 0.2}).value - ref1) < 1e-14);
  const Complex ref2{0.0068053127586398020282, -0.0012994871188247629412};
  CHECK(std::abs(psi_general(Complex{1.3, -0.4}, Complex{0.7, 0.3}).value - ref2) < 1e-15);

  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> xr(0.3, 3.0), xi(-2.0, 2.0), zc(-1.5, 1.5);
  for (int k = 0; k < 50; ++k) {
    const Complex x{xr(rng), xi(rng)};
    const Complex z{zc(rng), zc(rng)};
    const ThetaEval v = psi_general(x, z);
    CHECK(std::abs(v.value - oracle::psi_direct(x, z)) < 1e-13 * (1.0 + std::abs(v.value)));
    CHECK(v.terms_used >= 1);
  }
}

TEST_CASE("psi(x, 0) is the classical psi") {
  for (double x : {0.3, 1.0, 2.5}) {
    CHECK(std::abs(psi_general(x, 0.0).value - psi_classical(x).value) < 1e-16);
  }
}

TEST_CASE("generalized theta transformation at random parameters") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int tested = 0;
  while (tested < 50) {
    const Complex a = std::polar(0.6 + 1.1 * unit(rng), -0.7 + 1.4 * unit(rng));
    if ((a * a).real() <= 0.05) continue;
    const Complex z = std::polar(1.5 * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
    CHECK(general_theta_residual(a, z) < 1e-9);
    ++tested;
  }
}

TEST_CASE("both sides of the theta transformation at fixed points") {
  CHECK(std::abs(theta_side_a(1.0, 0.0) - 0.456782594393345993) < 1e-15);
  CHECK(std::abs(theta_side_a(1.0, Complex{0.4, 0.1}) -
                 Complex{0.456690214741677900, -0.000137690121033039}) < 1e-15);
  CHECK(std::abs(theta_side_a(1.2, Complex{0.5, -0.2}) -
                 Complex{0.437885587957420608, 0.00660391646743479}) < 1e-15);
  CHECK(std::abs(theta_side_a(std::polar(1.0, 0.2), 0.0) - 0.473544015591239539) < 1e-15);
  CHECK_THROWS_AS(theta_side_a(Complex{0.1, 1.0}, 0.0), DomainError);
}

TEST_CASE("psi(x, z) transformation and its z = 0 reduction") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> xr(0.4, 2.5), xi(-1.0, 1.0), zc(-1.0, 1.0);
  for (int k = 0; k < 30; ++k) {
    const Complex x{xr(rng), xi(rng)};
    const Complex z{zc(rng), zc(rng)};
    CHECK(psi_xz_transform_residual(x, z) < 1e-12);
  }
  for (double x : {0.2, 0.9, 4.0}) {
    // At z = 0 the residual is the Jacobi residual scaled by 1/(2 sqrt(x)).
    const double expected = jacobi_residual(x) / (2.0 * std::sqrt(x));
    CHECK(std::abs(psi_xz_transform_residual(x, 0.0) - expected) < 1e-13);
  }
}

TEST_CASE("psi1 against direct summation") {
  const Complex z{0.4, 0.1};
  CHECK(std::abs(psi1(0.3, z, 0.3) - Complex{0.42567803377266999656, 0.002695708705786070008}) < 1e-14);
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> alpha(-0.5, 0.5), lam(-1.0, 1.0), zc(-0.5, 0.5);
  for (int k = 0; k < 30; ++k) {
    const double a = alpha(rng);
    const double l = lam(rng);
    const Complex zz{zc(rng), zc(rng)};
    CHECK(std::abs(psi1(a, zz, l) - oracle::psi1_direct(a, zz, l)) < 1e-13);
  }
}

TEST_CASE("psi1 derivatives") {
  const Complex z{0.4, 0.1};
  CHECK(std::abs(psi1_alpha_derivative(0.3, z, 0.3, 0) - psi1(0.3, z, 0.3)) < 1e-15);
  CHECK(std::abs(psi1_alpha_derivative(0.3, z, 0.3, 2) -
                 Complex{-1.7994576476115243699, 0.30898114931491762376}) < 1e-12);
  CHECK(std::abs(psi1_alpha_derivative(0.5, z, 0.3, 4) -
                 Complex{147.64826059204022572, -236.78265502244108503}) < 1e-9);

  auto f = [](double a) { return psi1(a, 0.0, 0.0); };
  CHECK(std::abs(psi1_alpha_derivative(0.0, 0.0, 0.0, 1) - oracle::derivative(f, 0.0, 1, 1e-3)) < 1e-8);

  const Complex zz{0.3, -0.2};
  auto g = [&](double a) { return psi1(a, zz, 0.7); };
  for (double a : {-0.4, 0.1, 0.6}) {
    CHECK(std::abs(psi1_alpha_derivative(a, zz, 0.7, 1) - oracle::derivative(g, a, 1, 1e-3)) < 1e-6);
    CHECK(std::abs(psi1_alpha_derivative(a, zz, 0.7, 2) - oracle::derivative(g, a, 2, 1e-3)) < 1e-6);
  }
}

TEST_CASE("psi1 domain and order checks") {
  CHECK_THROWS_AS(psi1(kPi / 4.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(psi1(-1.0, 0.0, 0.0), DomainError);
  CHECK_THROWS_AS(psi1_alpha_derivative(0.1, 0.0, 0.0, 5), UnsupportedOrderError);
  CHECK_THROWS_AS(psi1_alpha_derivative(0.1, 0.0, 0.0, -1), UnsupportedOrderError);
}

TEST_CASE("psi1 tends to its boundary value near alpha = pi/4") {
  for (int m : {0, 1}) {
    for (double lambda : {0.0, 0.2, 0.3}) {
      const Complex z = lambda == 0.2 ? Complex{0.4, 0.0} : Complex{0.4, 0.1};
      const Complex target = -std::pow(Complex{-lambda, 0.5}, 2 * m) *
                             std::exp(0.25 * kPi * Complex{-lambda, 0.5}) * std::sinh(z * z / 8.0);
      double previous = 1e300;
      for (int k = 1; k <= 3; ++k) {
        const double alpha = kPi / 4.0 - std::pow(10.0, -k);
        const double r = std::abs(psi1_alpha_derivative(alpha, z, lambda, 2 * m) - target);
        CHECK(r < previous);
        previous = r;
      }
      CHECK(previous < (m == 0 ? 1e-3 : 2e-3));
    }
  }
}

TEST_CASE("split expressions decay") {
  const std::vector<double> deltas = {0.2, 0.1, 0.05, 0.02, 0.01};
  for (Complex z : {Complex{0.0}, Complex{0.5, 0.2}, Complex{1.0, 0.5}}) {
    for (SplitForm form : {SplitForm::quarter, SplitForm::unit}) {
      const std::vector<double> v = split_decay(z, deltas, form);
      REQUIRE(v.size() == deltas.size());
      for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] < v[i - 1]);
      CHECK(v.back() < 1e-8);
    }
  }
  // Pure Gaussian tail at z = 0.
  const std::vector<double> zero = split_decay(0.0, deltas);
  CHECK(zero[4] < 1e-12);
  CHECK(std::abs(zero[0] - std::sqrt(5.0) * psi_classical(1.25).value.real()) < 1e-15);
}

TEST_CASE("split expressions decay along a diagonal ray") {
  std::vector<Complex> deltas;
  for (double r : {0.2, 0.1, 0.05, 0.02, 0.01}) deltas.push_back(std::polar(r, kPi / 4.0));
  const std::vector<double> v = split_decay(Complex{0.5, 0.2}, deltas);
  for (std::size_t i = 1; i < v.size(); ++i) CHECK(v[i] < v[i - 1]);
  CHECK(v.back() < 1e-4);
}

TEST_CASE("split decay input checks") {
  const std::vector<double> deltas = {0.2, 0.1};
  CHECK_THROWS_AS(split_decay(Complex{2.0, 2.0}, deltas), RegionError);
  const std::vector<double> unordered = {0.1, 0.2};
  CHECK_THROWS_AS(split_decay(0.0, unordered), ParameterError);
}

TEST_CASE("psi near i") {
  CHECK(std::abs(psi_near_i(0.0, 0.01)) < 1e-6);
  const Complex z{0.6, 0.3};
  CHECK(std::abs(psi_near_i(z, 0.005) + std::sinh(z * z / 8.0)) < 1e-4);

  // Split form against plain summation at a safe distance from the axis.
  for (Complex w : {Complex{0.5, 0.2}, Complex{0.3, -0.4}, Complex{1.0, 0.5}}) {
    const Complex q = w * w / 8.0;
    const Complex direct = 0.5 * std::exp(-q) + std::exp(q) * oracle::psi_direct(Complex{0.2, 1.0}, w);
    CHECK(std::abs(psi_near_i(w, 0.2) - direct) < 1e-9);
  }
  CHECK_THROWS_AS(psi_near_i(Complex{2.0, 2.0}, 0.1), RegionError);
}

}  // TEST_SUITE
