#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <type_traits>

namespace wgm {

namespace detail {

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

inline double max_component(double v) { return std::abs(v); }
inline double max_component(const std::complex<double>& v) {
  return std::max(std::abs(v.real()), std::abs(v.imag()));
}

inline double ldexp_value(double v, long e) { return std::ldexp(v, static_cast<int>(e)); }
inline std::complex<double> ldexp_value(const std::complex<double>& v, long e) {
  const int k = static_cast<int>(e);
  return {std::ldexp(v.real(), k), std::ldexp(v.imag(), k)};
}

}  // namespace detail

/// A real or complex number stored as mantissa * 2^exponent with an
/// unbounded (64-bit) binary exponent. Spherical Bessel functions of order
/// ~2500 routinely leave the double range even when the physical
/// combinations built from them do not; every sequence in the library is
/// carried in this form and only converted at the end.
///
/// The mantissa is kept normalized so that its largest component lies in
/// [0.5, 1). A complex value shares one exponent between its components.
template <class T>
class Scaled {
 public:
  using value_type = T;

  Scaled() = default;
  Scaled(T mantissa, std::int64_t exponent = 0) : m_(mantissa), e_(exponent) { normalize(); }

  T mantissa() const { return m_; }
  std::int64_t exponent() const { return e_; }

  bool is_zero() const { return m_ == T{}; }
  bool is_finite() const { return std::isfinite(detail::max_component(m_)); }

  /// The plain value; underflows to zero or overflows to infinity when the
  /// exponent leaves the double range.
  T value() const {
    if (is_zero()) return T{};
    if (e_ > 2100) return detail::ldexp_value(m_, 2100);
    if (e_ < -2200) return T{};
    return detail::ldexp_value(m_, e_);
  }

  /// log2 of the modulus.
  double log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log2(std::abs(m_)) + static_cast<double>(e_);
  }

  Scaled operator-() const { return Scaled(-m_, e_, raw_tag{}); }

  friend Scaled operator*(const Scaled& a, const Scaled& b) { return Scaled(a.m_ * b.m_, a.e_ + b.e_); }
  friend Scaled operator/(const Scaled& a, const Scaled& b) { return Scaled(a.m_ / b.m_, a.e_ - b.e_); }
  friend Scaled operator*(const Scaled& a, const T& b) { return Scaled(a.m_ * b, a.e_); }
  friend Scaled operator*(const T& b, const Scaled& a) { return Scaled(a.m_ * b, a.e_); }
  friend Scaled operator/(const Scaled& a, const T& b) { return Scaled(a.m_ / b, a.e_); }

  friend Scaled operator+(const Scaled& a, const Scaled& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.e_ >= b.e_) return Scaled(a.m_ + shifted(b.m_, b.e_ - a.e_), a.e_);
    return Scaled(b.m_ + shifted(a.m_, a.e_ - b.e_), b.e_);
  }
  friend Scaled operator-(const Scaled& a, const Scaled& b) { return a + (-b); }

  Scaled& operator*=(const Scaled& o) { return *this = *this * o; }
  Scaled& operator+=(const Scaled& o) { return *this = *this + o; }

  /// Ratio a/b converted to a plain value.
  friend T ratio(const Scaled& a, const Scaled& b) { return (a / b).value(); }

 private:
  struct raw_tag {};
  Scaled(T mantissa, std::int64_t exponent, raw_tag) : m_(mantissa), e_(exponent) {}

  static T shifted(const T& m, std::int64_t delta) {
    // delta <= 0; anything beyond the double mantissa range vanishes.
    if (delta < -1100) return T{};
    return detail::ldexp_value(m, static_cast<long>(delta));
  }

  void normalize() {
    const double mag = detail::max_component(m_);
    if (mag == 0.0 || !std::isfinite(mag)) {
      if (mag == 0.0) e_ = 0;
      return;
    }
    int k = 0;
    std::frexp(mag, &k);
    m_ = detail::ldexp_value(m_, -k);
    e_ += k;
  }

  T m_{};
  std::int64_t e_ = 0;
};

using ScaledReal = Scaled<double>;
using ScaledComplex = Scaled<std::complex<double>>;

inline ScaledComplex to_complex(const ScaledReal& r) {
  return ScaledComplex(std::complex<double>(r.mantissa(), 0.0), r.exponent());
}

}  // namespace wgm
