#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "slocc/scalar.hpp"

namespace slocc {

using ExactVector = std::vector<ExactScalar>;

/// Dense row-major matrix over the Gaussian rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(size_t rows, size_t cols);
  ExactMatrix(std::initializer_list<std::initializer_list<ExactScalar>> rows);
  static ExactMatrix identity(size_t n);
  static ExactMatrix from_rows(const std::vector<ExactVector>& rows);
  static ExactMatrix from_cols(const std::vector<ExactVector>& cols, size_t rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  ExactScalar& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const ExactScalar& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  ExactVector row(size_t i) const;
  ExactVector col(size_t j) const;
  ExactMatrix transpose() const;
  ExactMatrix conj_transpose() const;
  ExactMatrix block(size_t r0, size_t c0, size_t nr, size_t nc) const;
  /// Row-major flattening.
  const ExactVector& data() const { return data_; }

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const ExactScalar& c);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const ExactScalar& c) { return a *= c; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactVector operator*(const ExactMatrix& a, const ExactVector& v);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  std::string str() const;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  ExactVector data_;
};

/// Stacks blocks vertically; all blocks need equal column counts.
ExactMatrix vstack(const std::vector<ExactMatrix>& blocks);
/// u v^T
ExactMatrix outer(const ExactVector& u, const ExactVector& v);

struct RowEchelon {
  ExactMatrix reduced;                   // reduced row echelon form
  std::vector<size_t> pivots;            // pivot column of each nonzero row
  std::optional<ExactMatrix> transform;  // T with T * input = reduced, when requested
  size_t rank() const { return pivots.size(); }
};

RowEchelon row_reduce(const ExactMatrix& m, bool track_transform = false);
size_t rank(const ExactMatrix& m);
/// Basis of the right nullspace, one vector per free column.
std::vector<ExactVector> nullspace(const ExactMatrix& m);
ExactScalar determinant(const ExactMatrix& m);
/// Throws MathError when singular.
ExactMatrix inverse(const ExactMatrix& m);
/// Some x with m x = b, or nullopt when inconsistent.
std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b);

bool is_zero_vector(const ExactVector& v);
/// True if u = c v for a nonzero scalar c (both nonzero).
bool projectively_equal(const ExactVector& u, const ExactVector& v);
/// Scales so the first nonzero entry is 1.
ExactVector normalize_projective(ExactVector v);

}  // namespace slocc
