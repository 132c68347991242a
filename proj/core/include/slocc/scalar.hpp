#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace slocc {

using Rational = mpq_class;

/// Parses "p" or "p/q". With `require_lowest`, rejects non-canonical
/// fractions such as "2/4" or "3/-1".
Rational parse_rational(std::string_view text, bool require_lowest = true);
std::string format_rational(const Rational& q);

/// Gaussian rational re + im*i with both parts canonical.
class ExactScalar {
 public:
  ExactScalar() = default;
  template <typename I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
  ExactScalar(I value) : re_(static_cast<long>(value)) {}
  ExactScalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
  ExactScalar(Rational re, Rational im);

  static ExactScalar imag_unit() { return ExactScalar(Rational(0), Rational(1)); }
  static ExactScalar parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactScalar conj() const;
  Rational norm() const;  // re^2 + im^2
  ExactScalar inverse() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);
  ExactScalar operator-() const;

  /// this += a * b, avoiding a temporary for the product when possible.
  void add_product(const ExactScalar& a, const ExactScalar& b);
  void sub_product(const ExactScalar& a, const ExactScalar& b);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  std::complex<double> to_complex() const;
  std::string str() const;

  /// Total order used only for deterministic sorting (re first, then im).
  friend bool lex_less(const ExactScalar& a, const ExactScalar& b);

 private:
  Rational re_{0};
  Rational im_{0};
};

bool lex_less(const ExactScalar& a, const ExactScalar& b);
std::ostream& operator<<(std::ostream& os, const ExactScalar& s);

}  // namespace slocc
