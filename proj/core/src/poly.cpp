#include "slocc/poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>

#include "slocc/error.hpp"

namespace slocc {

UniPoly::UniPoly(std::vector<ExactScalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const ExactScalar& c) { return UniPoly(std::vector<ExactScalar>{c}); }

UniPoly UniPoly::monomial(const ExactScalar& c, int degree) {
  std::vector<ExactScalar> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const ExactScalar& root) {
  return UniPoly(std::vector<ExactScalar>{-root, ExactScalar(1)});
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const ExactScalar& UniPoly::leading() const {
  if (is_zero()) throw MathError("leading coefficient of zero polynomial");
  return coeffs_.back();
}

ExactScalar UniPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return ExactScalar(0);
  return coeffs_[static_cast<size_t>(k)];
}

ExactScalar UniPoly::eval(const ExactScalar& t) const {
  ExactScalar acc;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    acc *= t;
    acc += coeffs_[k];
  }
  return acc;
}

std::complex<double> UniPoly::eval(std::complex<double> t) const {
  std::complex<double> acc = 0;
  for (size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k].to_complex();
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<ExactScalar> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * ExactScalar(static_cast<long>(k));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  ExactScalar inv = leading().inverse();
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c *= inv;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<ExactScalar> r(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
  }
  return UniPoly(std::move(r));
}

std::string UniPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = coeffs_.size(); k-- > 0;) {
    const ExactScalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool compound = !c.is_real() && sgn(c.re()) != 0;
    if (compound) cs = "(" + cs + ")";
    bool negative = !compound && cs[0] == '-';
    if (!first)
      os << (negative ? " - " : " + ");
    else if (negative)
      os << "-";
    if (negative) cs.erase(0, 1);
    if (k == 0) {
      os << cs;
    } else {
      if (cs != "1") os << cs;
      os << var;
      if (k > 1) os << '^' << k;
    }
    first = false;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw MathError("polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly(), a};
  std::vector<ExactScalar> rem = a.coeffs();
  std::vector<ExactScalar> quo(static_cast<size_t>(a.degree() - b.degree()) + 1);
  ExactScalar inv = b.leading().inverse();
  const auto& bc = b.coeffs();
  size_t db = bc.size() - 1;
  for (size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    ExactScalar q = rem[k] * inv;
    size_t shift = k - db;
    for (size_t j = 0; j <= db; ++j) rem[shift + j].sub_product(q, bc[j]);
    quo[shift] = std::move(q);
  }
  rem.resize(db);
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw MathError("polynomial does not divide exactly");
  return q;
}

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw InvalidArgument("gcd of two zero polynomials");
  UniPoly a = p.monic();
  UniPoly b = q.monic();
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw InvalidArgument("square-free part of zero polynomial");
  if (p.degree() <= 0) return UniPoly::constant(1);
  return exact_div(p, poly_gcd(p, p.derivative())).monic();
}

namespace {

std::vector<std::complex<double>> companion_eigenvalues(const UniPoly& p) {
  int n = p.degree();
  if (n <= 0) return {};
  if (n == 1) {
    auto c = p.coeffs();
    return {-c[0].to_complex() / c[1].to_complex()};
  }
  UniPoly m = p.monic();
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -m.coeff(i).to_complex();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);
  std::vector<std::complex<double>> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
  // A few Newton steps in long double tighten roots of the square-free input.
  using LC = std::complex<long double>;
  std::vector<LC> coeffs;
  for (const auto& c : m.coeffs())
    coeffs.emplace_back(static_cast<long double>(c.re().get_d()), static_cast<long double>(c.im().get_d()));
  for (auto& z : out) {
    LC x(z.real(), z.imag());
    for (int it = 0; it < 8; ++it) {
      LC f = 0, df = 0;
      for (size_t k = coeffs.size(); k-- > 0;) {
        df = df * x + f;
        f = f * x + coeffs[k];
      }
      if (std::abs(df) == 0) break;
      LC step = f / df;
      x -= step;
      if (std::abs(step) <= 1e-18L * (1 + std::abs(x))) break;
    }
    z = {static_cast<double>(x.real()), static_cast<double>(x.imag())};
  }
  return out;
}

}  // namespace

namespace {
std::atomic<double> g_tolerance{1e-9};
}  // namespace

double numeric_tolerance() { return g_tolerance.load(); }

void set_numeric_tolerance(double tol) {
  if (!(tol > 0) || tol >= 1) throw InvalidArgument("tolerance must lie in (0, 1)");
  g_tolerance.store(tol);
}

std::vector<NumericRoot> numeric_roots(const UniPoly& p, double tolerance) {
  if (p.is_zero()) throw InvalidArgument("roots of zero polynomial");
  std::vector<NumericRoot> out;
  // Yun: p = prod f_i^i with f_i square-free and coprime.
  UniPoly a = p.monic();
  UniPoly b = a.derivative();
  UniPoly c = poly_gcd(a, b);
  UniPoly w = exact_div(a, c);
  int mult = 1;
  while (w.degree() > 0) {
    UniPoly y = poly_gcd(w, c);
    UniPoly z = exact_div(w, y);
    for (auto r : companion_eigenvalues(z)) {
      auto it = std::find_if(out.begin(), out.end(), [&](const NumericRoot& nr) {
        return std::abs(nr.value - r) <= tolerance * (1 + std::abs(r));
      });
      if (it != out.end())
        it->multiplicity += mult;
      else
        out.push_back({r, mult});
    }
    w = y;
    c = exact_div(c, y);
    ++mult;
  }
  std::sort(out.begin(), out.end(), [](const NumericRoot& x, const NumericRoot& y) {
    if (x.value.real() != y.value.real()) return x.value.real() < y.value.real();
    return x.value.imag() < y.value.imag();
  });
  return out;
}

RootSummary distinct_roots(const UniPoly& p, bool with_numeric, double tolerance) {
  if (p.is_zero()) throw InvalidArgument("distinct_roots of zero polynomial");
  RootSummary s;
  if (p.degree() > 0) s.distinct_root_count = p.degree() - poly_gcd(p, p.derivative()).degree();
  if (with_numeric) s.numeric_roots = numeric_roots(p, tolerance);
  return s;
}

RootSummary common_root_summary(const std::vector<UniPoly>& ps, bool with_numeric, double tolerance) {
  if (ps.empty()) throw InvalidArgument("common_root_summary of empty list");
  UniPoly g;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.monic() : poly_gcd(g, p);
    if (g.degree() == 0) break;
  }
  if (g.is_zero()) {
    RootSummary s;
    s.all_zero = true;
    return s;
  }
  return distinct_roots(g, with_numeric, tolerance);
}

Rational rationalize(double x, long max_den) {
  // Continued fraction convergents.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int it = 0; it < 64; ++it) {
    double a = std::floor(r);
    if (!std::isfinite(a) || std::abs(a) > 1e15) break;
    mpz_class ai(static_cast<long>(a));
    mpz_class p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double frac = r - a;
    if (std::abs(frac) < 1e-15) break;
    r = 1.0 / frac;
  }
  if (q1 == 0) return Rational(0);
  Rational out(p1, q1);
  out.canonicalize();
  return out;
}

RootSplit split_gaussian_rational_roots(const UniPoly& p) {
  RootSplit out;
  if (p.is_zero()) throw InvalidArgument("root split of zero polynomial");
  UniPoly h = squarefree_part(p);
  static const long kDens[] = {1, 12, 1000, 1000000, 100000000};
  bool progress = true;
  while (h.degree() > 0 && progress) {
    progress = false;
    for (auto z : companion_eigenvalues(h)) {
      for (long den : kDens) {
        ExactScalar c(rationalize(z.real(), den), rationalize(z.imag(), den));
        if (h.eval(c).is_zero()) {
          out.exact.push_back(c);
          h = exact_div(h, UniPoly::linear_root(c));
          progress = true;
          break;
        }
      }
      if (progress) break;
    }
  }
  std::sort(out.exact.begin(), out.exact.end(), lex_less);
  out.remainder = h.monic();
  return out;
}

}  // namespace slocc
