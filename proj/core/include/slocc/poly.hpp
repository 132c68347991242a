#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slocc/scalar.hpp"

namespace slocc {

/// Univariate polynomial over the Gaussian rationals, coefficients low to high.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<ExactScalar> coeffs);
  static UniPoly constant(const ExactScalar& c);
  static UniPoly monomial(const ExactScalar& c, int degree);
  /// t - root
  static UniPoly linear_root(const ExactScalar& root);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<ExactScalar>& coeffs() const { return coeffs_; }
  const ExactScalar& leading() const;
  ExactScalar coeff(int k) const;

  ExactScalar eval(const ExactScalar& t) const;
  std::complex<double> eval(std::complex<double> t) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const ExactScalar& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const ExactScalar& c) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string str(char var = 't') const;

 private:
  void trim();
  std::vector<ExactScalar> coeffs_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Exact quotient; throws if b does not divide a.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);

/// Monic gcd. Rejects two zero inputs.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);
/// p / gcd(p, p'), monic.
UniPoly squarefree_part(const UniPoly& p);

/// Clustering tolerance for floating root paths (irrational roots only).
double numeric_tolerance();
void set_numeric_tolerance(double tol);

struct NumericRoot {
  std::complex<double> value;
  int multiplicity = 1;
};

struct RootSummary {
  int distinct_root_count = 0;
  bool includes_infinity = false;
  bool all_zero = false;
  std::optional<std::vector<NumericRoot>> numeric_roots;
};

RootSummary distinct_roots(const UniPoly& p, bool with_numeric = false, double tolerance = numeric_tolerance());
RootSummary common_root_summary(const std::vector<UniPoly>& ps, bool with_numeric = false,
                                double tolerance = numeric_tolerance());

/// Companion-matrix eigenvalues of the square-free factors (Yun), clustered.
std::vector<NumericRoot> numeric_roots(const UniPoly& p, double tolerance = numeric_tolerance());

/// Splits the distinct roots of p into Gaussian-rational ones (found exactly)
/// and a monic square-free cofactor holding the rest.
struct RootSplit {
  std::vector<ExactScalar> exact;
  UniPoly remainder;
};
RootSplit split_gaussian_rational_roots(const UniPoly& p);

/// Best rational approximation with denominator at most max_den.
Rational rationalize(double x, long max_den);

}  // namespace slocc
