#include "slocc/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "slocc/error.hpp"

namespace slocc {

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text, bool require_lowest) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!is_integer_literal(num) || (slash != std::string_view::npos && !is_integer_literal(den)))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(1);
  if (slash != std::string_view::npos) {
    if (den[0] == '-' || den[0] == '+')
      throw ParseError("denominator must be an unsigned integer in '" + std::string(text) + "'");
    zd = mpz_class(std::string(den), 10);
    if (zd == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(zn, zd);
  if (require_lowest) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), zn.get_mpz_t(), zd.get_mpz_t());
    bool canonical = (zn == 0) ? (zd == 1) : (g == 1);
    if (!canonical) throw ParseError("rational '" + std::string(text) + "' is not in lowest terms");
  }
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

ExactScalar::ExactScalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

ExactScalar ExactScalar::conj() const { return ExactScalar(re_, -im_); }

Rational ExactScalar::norm() const { return re_ * re_ + im_ * im_; }

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw MathError("inverse of zero");
  if (is_real()) return ExactScalar(Rational(1) / re_);
  Rational n = norm();
  return ExactScalar(re_ / n, -im_ / n);
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
  } else if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
  } else if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
  } else {
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
  }
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw MathError("division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

ExactScalar ExactScalar::operator-() const { return ExactScalar(-re_, -im_); }

void ExactScalar::add_product(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_real() && b.is_real()) {
    re_ += a.re_ * b.re_;
    return;
  }
  *this += a * b;
}

void ExactScalar::sub_product(const ExactScalar& a, const ExactScalar& b) {
  if (a.is_real() && b.is_real()) {
    re_ -= a.re_ * b.re_;
    return;
  }
  *this -= a * b;
}

std::complex<double> ExactScalar::to_complex() const { return {re_.get_d(), im_.get_d()}; }

std::string ExactScalar::str() const {
  if (is_real()) return format_rational(re_);
  std::string imag = format_rational(abs(im_)) + "i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return format_rational(re_) + (sgn(im_) < 0 ? "-" : "+") + imag;
}

ExactScalar ExactScalar::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty scalar");
  if (text.back() != 'i') return ExactScalar(parse_rational(text));
  std::string_view body = text.substr(0, text.size() - 1);
  // Split at the last sign that is not the leading one.
  size_t split = std::string_view::npos;
  for (size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](std::string_view s) {
    if (s.empty() || s == "+") return Rational(1);
    if (s == "-") return Rational(-1);
    return parse_rational(s);
  };
  if (split == std::string_view::npos) return ExactScalar(Rational(0), imag_part(body));
  return ExactScalar(parse_rational(body.substr(0, split)), imag_part(body.substr(split)));
}

bool lex_less(const ExactScalar& a, const ExactScalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c != 0) return c < 0;
  return cmp(a.im_, b.im_) < 0;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& s) { return os << s.str(); }

}  // namespace slocc
