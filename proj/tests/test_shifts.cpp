#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "vshift/errors.hpp"
#include "vshift/shifts.hpp"
#include "vshift/specfun.hpp"

using namespace vshift;

namespace {

ShiftConfig make(std::vector<double> c, std::vector<double> l, Complex z, double tail = 0.0) {
  ShiftConfig cfg;
  cfg.coefficients = std::move(c);
  cfg.shifts = std::move(l);
  cfg.z = z;
  cfg.tail_bound = tail;
  return validate_config(cfg);
}

ShiftConfig raw(std::vector<double> c, std::vector<double> l, Complex z) {
  ShiftConfig cfg;
  cfg.coefficients = std::move(c);
  cfg.shifts = std::move(l);
  cfg.z = z;
  return cfg;
}

}  // namespace

TEST_SUITE("shifts") {

TEST_CASE("configuration validation") {
  const ShiftConfig hardy = make({1.0}, {0.0}, 0.0);
  CHECK(hardy.dominant_index == 0);
  CHECK(make({1.0, 0.5, 0.25}, {0.0, 1.0, -2.0}, Complex{0.5, 0.25}).dominant_index == 2);
  CHECK_THROWS_AS(validate_config(raw({1.0, 0.5}, {0.3, 0.3}, 0.0)), ConfigError);
  CHECK_THROWS_AS(validate_config(raw({1.0, 0.5}, {0.3, -0.3}, 0.0)), ConfigError);
  CHECK_THROWS_AS(validate_config(raw({1.0, 0.0}, {0.0, 1.0}, 0.0)), ConfigError);
  CHECK_THROWS_AS(validate_config(raw({}, {}, 0.0)), ConfigError);
  CHECK_THROWS_AS(validate_config(raw({1.0}, {0.0, 1.0}, 0.0)), ConfigError);
  CHECK_THROWS_AS(validate_config(raw({1.0}, {0.0}, Complex{2.0, 2.0})), ConfigError);
  CHECK_THROWS_AS(f_z(0.5, raw({1.0}, {0.0}, 0.0)), ConfigError);
}

TEST_CASE("z = 0 gives twice the completed zeta") {
  const ShiftConfig hardy = make({1.0}, {0.0}, 0.0);
  for (Complex s : {Complex{0.5, 3.0}, Complex{0.2, -7.0}, Complex{2.0, 1.0}}) {
    const Complex expected = 2.0 * eta_completed(s).value;
    CHECK(std::abs(f_z(s, hardy).value - expected) <= 1e-11 * std::abs(expected));
  }
  const ShiftConfig two = make({1.0, -0.3}, {0.0, 0.8}, 0.0);
  const Complex s{0.7, 2.0};
  const Complex expected =
      2.0 * (eta_completed(s).value - 0.3 * eta_completed(s + Complex{0.0, 0.8}).value);
  CHECK(std::abs(f_z(s, two).value - expected) <= 1e-11 * std::abs(expected));
}

TEST_CASE("the two hypergeometric factors are conjugate on the critical line") {
  const Complex s{0.5, 3.0};
  const Complex z{0.4, 0.2};
  const double lambda = 0.7;
  const Complex shifted = s + Complex{0.0, lambda};
  const Complex first = onef1(0.5 * (1.0 - shifted), 0.5, z * z / 4.0).value;
  const Complex second =
      onef1(0.5 * (1.0 - (std::conj(s) - Complex{0.0, lambda})), 0.5, std::conj(z * z) / 4.0).value;
  CHECK(std::abs(second - std::conj(first)) < 1e-12);
  const ShiftConfig cfg = make({1.0}, {lambda}, z);
  const Complex v = f_z(s, cfg).value;
  CHECK(std::abs(v.imag()) < 1e-12 * (1.0 + std::abs(v)));
}

TEST_CASE("F_z against independently computed values") {
  const ShiftConfig two = make({1.0, 0.5}, {0.0, 1.0}, Complex{0.3, 0.1});
  CHECK(std::abs(f_z(Complex{0.5, 5.0}, two).value - (-0.060193158664898106613)) < 1e-12);

  // Factor-wise assembly from the test oracles.
  Complex assembled{};
  for (int j = 0; j < 2; ++j) {
    const Complex sh = Complex{0.5, 5.0} + Complex{0.0, two.shifts[j]};
    const Complex w = two.z * two.z / 4.0;
    const Complex bracket = oracle::onef1_plain(0.5 * (1.0 - sh), 0.5, w) +
                            oracle::onef1_plain(0.5 * (1.0 - std::conj(sh)), 0.5, std::conj(w));
    assembled += two.coefficients[j] * oracle::eta_oracle(sh) * bracket;
  }
  CHECK(std::abs(f_z(Complex{0.5, 5.0}, two).value - assembled) < 1e-11);

  const ShiftConfig other = make({1.0, -0.5}, {0.2, 0.9}, Complex{0.5, 0.25});
  CHECK(std::abs(f_z(Complex{0.8, 3.0}, other).value -
                 Complex{-0.12074206275753740692, -0.029208677004817767076}) < 1e-12);
}

TEST_CASE("critical-line real form") {
  const ShiftConfig hardy = make({1.0}, {0.0}, 0.0);
  CHECK(std::abs(f_z_critical(14.134725, hardy)) < 1e-5);

  const ShiftConfig other = make({1.0, -0.5}, {0.2, 0.9}, Complex{0.5, 0.25});
  CHECK(std::abs(f_z_critical(2.0, other) - (-0.29329361090353774019)) < 1e-12);

  const ShiftConfig real_z = make({1.0, 0.5}, {0.0, 1.0}, 0.6);
  for (double t : {0.0, 3.3, 17.0, 29.5}) {
    CHECK(std::abs(f_z_critical(t, real_z) - f_z(Complex{0.5, t}, real_z).value.real()) < 1e-12);
  }
  const double t = 12.0;
  CHECK(std::abs(f_z_critical_scaled(t, other) - std::exp(0.25 * kPi * t) * f_z_critical(t, other)) <
        1e-12 * std::abs(f_z_critical_scaled(t, other)));
}

TEST_CASE("F_z is real on the critical line") {
  const ShiftConfig cfg = make({1.0, 0.5, 0.25}, {0.0, 1.0, 2.0}, Complex{0.5, 0.25});
  for (double t = -10.0; t <= 40.0; t += 0.7) {
    const Complex v = f_z(Complex{0.5, t}, cfg).value;
    CHECK(std::abs(v.imag()) < 1e-9 * (1.0 + std::abs(v)));
  }
}

TEST_CASE("pole of a shifted argument") {
  const ShiftConfig cfg = make({1.0, 2.0}, {0.0, 0.5}, 0.1);
  CHECK_THROWS_AS(f_z(Complex{1.0, -0.5}, cfg), PoleError);
}

TEST_CASE("tail bound enters the error estimate") {
  const Complex s{0.5, 4.0};
  const double base = f_z(s, make({1.0}, {0.0}, 0.2)).abs_err_est;
  const double with_tail = f_z(s, make({1.0}, {0.0}, 0.2, 0.1)).abs_err_est;
  CHECK(with_tail > base + 0.05 * std::abs(f_z(s, make({1.0}, {0.0}, 0.2)).value));
}

TEST_CASE("polar form of i/2 - lambda") {
  CHECK(std::abs(polar_shift(0.0).r - 0.5) < 1e-16);
  CHECK(std::abs(polar_shift(0.0).theta - kPi / 2.0) < 1e-16);
  CHECK(std::abs(polar_shift(0.5).r - std::sqrt(2.0) / 2.0) < 1e-16);
  CHECK(std::abs(polar_shift(0.5).theta - 3.0 * kPi / 4.0) < 1e-15);
  CHECK(std::abs(polar_shift(-0.5).theta - kPi / 4.0) < 1e-15);
  for (double lambda : {-3.0, -0.2, 0.0, 0.7, 5.0}) {
    const PolarShift p = polar_shift(lambda);
    CHECK(p.theta > 0.0);
    CHECK(p.theta < kPi);
    CHECK(std::abs(std::polar(p.r, p.theta) - Complex{-lambda, 0.5}) < 1e-15 * (1.0 + std::abs(lambda)));
  }
}

TEST_CASE("moment parameters") {
  const MomentParams zero = moment_params(0.0);
  CHECK(zero.u == 1.0);
  CHECK(zero.v == 0.0);
  CHECK(zero.w == 1.0);
  CHECK(zero.beta == 0.0);

  const MomentParams one = moment_params(1.0);
  CHECK(one.v == 0.0);
  CHECK(std::abs(one.u - (1.0 + std::exp(0.125) * std::sinh(0.125))) < 1e-15);
  CHECK(one.beta == 0.0);

  for (Complex z : {Complex{0.5, 0.25}, Complex{0.3, -0.9}, Complex{-0.7, 0.4}}) {
    const MomentParams p = moment_params(z);
    const Complex e = std::exp(z * z / 8.0) * std::sinh(z * z / 8.0);
    CHECK(std::abs(p.u - (1.0 + e.real())) < 1e-15);
    CHECK(std::abs(p.v - e.imag()) < 1e-15);
    CHECK(std::abs(p.w - std::hypot(p.u, p.v)) < 1e-15);
    CHECK(std::abs(p.w * std::cos(p.beta) - p.u) < 1e-14);
    CHECK(std::abs(p.w * std::sin(p.beta) - p.v) < 1e-14);
    CHECK(p.beta >= 0.0);
    CHECK(p.beta < 2.0 * kPi);
  }
}

TEST_CASE("closed-form moment limit") {
  CHECK(std::abs(moment_closed_form(0, make({1.0}, {0.0}, 0.0)) - (-11.6098126085577241)) < 1e-13);

  const ShiftConfig two0 = make({1.0, 0.5}, {0.0, 1.0}, 0.0);
  for (int m : {0, 1, 2}) {
    double sum = 0.0;
    for (int j = 0; j < 2; ++j) {
      const PolarShift p = polar_shift(two0.shifts[j]);
      sum += two0.coefficients[j] * std::exp(-kPi * two0.shifts[j] / 4.0) * std::pow(p.r, 2 * m) *
             std::cos(kPi / 8.0 + 2.0 * m * p.theta);
    }
    CHECK(std::abs(moment_closed_form(m, two0) - (-4.0 * kPi * sum)) < 1e-13);
  }

  const ShiftConfig two = make({1.0, 0.5}, {0.0, 1.0}, Complex{0.3, 0.1});
  CHECK(std::abs(moment_closed_form(1, two) - (-0.20379952379399943923)) < 1e-14);
  CHECK_THROWS_AS(moment_closed_form(-1, two), DomainError);
}

TEST_CASE("closed form is the alpha -> pi/4 limit of the assembled moments") {
  struct Case {
    int m;
    ShiftConfig cfg;
  };
  const Case cases[] = {{0, make({1.0}, {0.0}, 0.0)},
                        {0, make({1.0, 0.5}, {0.0, 1.0}, 0.3)},
                        {1, make({1.0}, {0.3}, Complex{0.4, 0.2})}};
  for (const Case& c : cases) {
    const double f2 = moment_assembled(c.m, kPi / 4.0 - 1e-2, c.cfg);
    const double f3 = moment_assembled(c.m, kPi / 4.0 - 1e-3, c.cfg);
    const double extrapolated = f3 - (f2 - f3) * 1e-3 / (1e-2 - 1e-3);
    const double closed = moment_closed_form(c.m, c.cfg);
    CHECK(std::abs(extrapolated - closed) / (1.0 + std::abs(closed)) < 1e-4);
  }
}

TEST_CASE("numeric moments against the assembled form") {
  const ShiftConfig two = make({1.0, 0.5}, {0.0, 1.0}, Complex{0.3, -0.2});
  CHECK(std::abs(moment_numeric(0, 0.2, two) - moment_assembled(0, 0.2, two)) < 1e-5);
  CHECK(std::abs(moment_numeric(1, 0.2, two) - moment_assembled(1, 0.2, two)) < 1e-4);

  const ShiftConfig doubled = make({2.0, 1.0}, {0.0, 1.0}, Complex{0.3, -0.2});
  CHECK(std::abs(moment_numeric(0, 0.2, doubled) - 2.0 * moment_numeric(0, 0.2, two)) < 1e-12);

  // -2 pi (1 - 2 psi(1))
  CHECK(std::abs(moment_numeric(0, 0.0, make({1.0}, {0.0}, 0.0)) - (-5.74009937133528819)) < 1e-6);
}

TEST_CASE("limit check argument validation") {
  CHECK_THROWS_AS(moment_limit_check(2, make({1.0}, {0.0}, 0.0)), DomainError);
}

}  // TEST_SUITE
