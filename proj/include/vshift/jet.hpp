#pragma once

// Truncated Taylor series in one complex variable. A Jet<N> carries the
// coefficients f(x0), f'(x0), f''(x0)/2!, ... up to order N-1, so composing
// elementary operations on jets differentiates a formula exactly (up to
// rounding) without finite differences.

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>

namespace vshift {

template <std::size_t N>
class Jet {
 public:
  using value_type = std::complex<double>;

  Jet() = default;
  explicit Jet(value_type constant) { c_[0] = constant; }

  static Jet variable(value_type at) {
    Jet j(at);
    if constexpr (N > 1) j.c_[1] = 1.0;
    return j;
  }

  const value_type& operator[](std::size_t k) const { return c_[k]; }
  value_type& operator[](std::size_t k) { return c_[k]; }
  value_type value() const { return c_[0]; }

  /// k-th derivative at the expansion point.
  value_type derivative(std::size_t k) const {
    double fact = 1.0;
    for (std::size_t i = 2; i <= k; ++i) fact *= static_cast<double>(i);
    return c_[k] * fact;
  }

  /// Largest coefficient magnitude.
  double max_abs() const {
    double m = 0.0;
    for (const auto& v : c_) m = std::max(m, std::abs(v));
    return m;
  }

  Jet& operator+=(const Jet& o) {
    for (std::size_t k = 0; k < N; ++k) c_[k] += o.c_[k];
    return *this;
  }
  Jet& operator-=(const Jet& o) {
    for (std::size_t k = 0; k < N; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  Jet& operator*=(value_type s) {
    for (auto& v : c_) v *= s;
    return *this;
  }
  Jet& operator+=(value_type s) {
    c_[0] += s;
    return *this;
  }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator+(Jet a, value_type s) { return a += s; }
  friend Jet operator-(Jet a, value_type s) { return a += -s; }
  friend Jet operator*(Jet a, value_type s) { return a *= s; }
  friend Jet operator*(value_type s, Jet a) { return a *= s; }
  friend Jet operator-(Jet a) { return a *= -1.0; }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (std::size_t k = 0; k < N; ++k) {
      value_type s{};
      for (std::size_t j = 0; j <= k; ++j) s += a.c_[j] * b.c_[k - j];
      r.c_[k] = s;
    }
    return r;
  }

  friend Jet reciprocal(const Jet& a) {
    Jet r;
    const value_type inv = 1.0 / a.c_[0];
    r.c_[0] = inv;
    for (std::size_t k = 1; k < N; ++k) {
      value_type s{};
      for (std::size_t j = 1; j <= k; ++j) s += a.c_[j] * r.c_[k - j];
      r.c_[k] = -inv * s;
    }
    return r;
  }

  friend Jet exp(const Jet& a) {
    Jet r;
    r.c_[0] = std::exp(a.c_[0]);
    for (std::size_t k = 1; k < N; ++k) {
      value_type s{};
      for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a.c_[j] * r.c_[k - j];
      r.c_[k] = s / static_cast<double>(k);
    }
    return r;
  }

  /// Principal branch at the expansion point.
  friend Jet sqrt(const Jet& a) {
    Jet r;
    r.c_[0] = std::sqrt(a.c_[0]);
    for (std::size_t k = 1; k < N; ++k) {
      value_type s = a.c_[k];
      for (std::size_t j = 1; j < k; ++j) s -= r.c_[j] * r.c_[k - j];
      r.c_[k] = s / (2.0 * r.c_[0]);
    }
    return r;
  }

 private:
  std::array<value_type, N> c_{};
};

}  // namespace vshift
