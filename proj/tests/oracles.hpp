#pragma once

// Reference implementations used only by the tests. Each one takes a route
// independent of the library: alternating-series acceleration for zeta,
// Stirling's series for log Gamma, plain long double summation for the
// hypergeometric and theta series, and finite differences for derivatives.

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracle {

using CL = std::complex<long double>;
using Complex = std::complex<double>;

inline constexpr long double kPiL = 3.141592653589793238462643383279502884L;

/// zeta(s) from the alternating eta series accelerated with Borwein's
/// coefficients. Reliable for Re(s) > 0 and |Im(s)| <= 10.
inline Complex zeta_borwein(Complex s_in, int n = 60) {
  const CL s(s_in.real(), s_in.imag());
  std::vector<long double> d(n + 1);
  long double term = 1.0L / n;  // (n + i - 1)! 4^i / ((n - i)! (2i)!) at i = 0, times 1/n
  long double sum = term;
  d[0] = n * sum;
  for (int i = 1; i <= n; ++i) {
    term *= static_cast<long double>(n + i - 1) * (n - i + 1) * 4.0L /
            (static_cast<long double>(2 * i - 1) * (2 * i));
    sum += term;
    d[i] = n * sum;
  }
  CL acc{};
  for (int k = 0; k < n; ++k) {
    const CL power = std::exp(-s * std::log(static_cast<long double>(k + 1)));
    const long double sign = (k % 2 == 0) ? 1.0L : -1.0L;
    acc += sign * (d[k] - d[n]) * power;
  }
  const CL denom = d[n] * (1.0L - std::exp((1.0L - s) * std::log(2.0L)));
  const CL z = -acc / denom;
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

/// log Gamma(s) from Stirling's series after shifting Re(s) above 20.
/// Requires Re(s) > 0. Only exp() of the result is branch independent.
inline CL log_gamma_stirling(CL s) {
  CL shift{};
  while (s.real() < 20.0L) {
    shift -= std::log(s);
    s += 1.0L;
  }
  const CL inv = 1.0L / s;
  const CL inv2 = inv * inv;
  const CL series =
      inv * (1.0L / 12.0L +
             inv2 * (-1.0L / 360.0L +
                     inv2 * (1.0L / 1260.0L +
                             inv2 * (-1.0L / 1680.0L +
                                     inv2 * (1.0L / 1188.0L + inv2 * (-691.0L / 360360.0L))))));
  return shift + (s - 0.5L) * std::log(s) - s + 0.5L * std::log(2.0L * kPiL) + series;
}

inline Complex gamma_stirling(Complex s) {
  const CL v = std::exp(log_gamma_stirling(CL(s.real(), s.imag())));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

/// pi^{-s/2} Gamma(s/2) zeta(s) from the two oracles above; Re(s) > 0.
inline Complex eta_oracle(Complex s) {
  const CL ls(s.real(), s.imag());
  const CL factor = std::exp(-0.5L * ls * std::log(kPiL) + log_gamma_stirling(0.5L * ls));
  const Complex f{static_cast<double>(factor.real()), static_cast<double>(factor.imag())};
  return f * zeta_borwein(s);
}

/// Plain Maclaurin series of 1F1(a; b; w) in long double.
inline Complex onef1_plain(Complex a_in, Complex b_in, Complex w_in) {
  const CL a(a_in.real(), a_in.imag());
  const CL b(b_in.real(), b_in.imag());
  const CL w(w_in.real(), w_in.imag());
  CL term(1.0L);
  CL sum(1.0L);
  for (int n = 0; n < 2000; ++n) {
    term *= (a + static_cast<long double>(n)) * w / ((b + static_cast<long double>(n)) * (n + 1.0L));
    sum += term;
    if (std::abs(term) < 1e-22L * std::abs(sum) && n > 5) break;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

/// sum_{n >= 1} e^{-pi n^2 x} cos(sqrt(pi x) n z), term by term, Re(x) > 0.
inline Complex psi_direct(Complex x_in, Complex z_in, int terms = 400) {
  const CL x(x_in.real(), x_in.imag());
  const CL z(z_in.real(), z_in.imag());
  const CL root = std::sqrt(kPiL * x);
  CL sum{};
  for (int n = 1; n <= terms; ++n) {
    const CL ln = static_cast<long double>(n);
    const CL t = std::exp(-kPiL * ln * ln * x) * std::cos(root * ln * z);
    sum += t;
    if (std::abs(t) < 1e-24L && n > 3) break;
  }
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

/// e^{(i/2 - lambda) alpha} (e^{-z^2/8}/2 + e^{z^2/8} psi(e^{2 i alpha}, z)) by direct summation.
inline Complex psi1_direct(double alpha, Complex z, double lambda) {
  const Complex x = std::exp(Complex{0.0, 2.0 * alpha});
  const Complex q = z * z / 8.0;
  return std::exp(Complex{-lambda, 0.5} * alpha) *
         (0.5 * std::exp(-q) + std::exp(q) * psi_direct(x, z, 2000));
}

/// Five-point central differences of order 1 or 2.
inline Complex derivative(const std::function<Complex(double)>& f, double x, int order, double h) {
  if (order == 1) {
    return (-f(x + 2 * h) + 8.0 * f(x + h) - 8.0 * f(x - h) + f(x - 2 * h)) / (12.0 * h);
  }
  return (-f(x + 2 * h) + 16.0 * f(x + h) - 30.0 * f(x) + 16.0 * f(x - h) - f(x - 2 * h)) /
         (12.0 * h * h);
}

}  // namespace oracle
