#pragma once

#include <random>

#include "slocc/matrix.hpp"
#include "slocc/scalar.hpp"

namespace slocc::test {

inline ExactScalar S(const char* text) { return ExactScalar::parse(text); }

/// Gaussian integer with parts in -3..3.
inline ExactScalar small_scalar(std::mt19937_64& rng, bool complex = true) {
  std::uniform_int_distribution<long> v(-3, 3);
  return complex ? ExactScalar(Rational(v(rng)), Rational(v(rng))) : ExactScalar(Rational(v(rng)));
}

inline ExactMatrix random_matrix(size_t r, size_t c, std::mt19937_64& rng, bool complex = true) {
  ExactMatrix m(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j) m(i, j) = small_scalar(rng, complex);
  return m;
}

/// Determinant by cofactor expansion; independent of the elimination code.
inline ExactScalar cofactor_det(const ExactMatrix& m) {
  const size_t n = m.rows();
  if (n == 1) return m(0, 0);
  ExactScalar out;
  for (size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    ExactMatrix minor(n - 1, n - 1);
    for (size_t i = 1; i < n; ++i)
      for (size_t k = 0, kk = 0; k < n; ++k)
        if (k != j) minor(i - 1, kk++) = m(i, k);
    ExactScalar term = m(0, j) * cofactor_det(minor);
    if (j % 2) out -= term;
    else out += term;
  }
  return out;
}

}  // namespace slocc::test
