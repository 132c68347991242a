#include "slocc/matrix.hpp"

#include <sstream>

#include "slocc/error.hpp"

namespace slocc {

ExactMatrix::ExactMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<ExactScalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw InvalidArgument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ExactMatrix ExactMatrix::identity(size_t n) {
  ExactMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<ExactVector>& rows) {
  if (rows.empty()) return ExactMatrix();
  ExactMatrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) throw InvalidArgument("ragged rows");
    for (size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::from_cols(const std::vector<ExactVector>& cols, size_t rows) {
  ExactMatrix m(rows, cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InvalidArgument("ragged columns");
    for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

ExactVector ExactMatrix::row(size_t i) const {
  return ExactVector(data_.begin() + static_cast<long>(i * cols_), data_.begin() + static_cast<long>((i + 1) * cols_));
}

ExactVector ExactMatrix::col(size_t j) const {
  ExactVector v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ExactMatrix ExactMatrix::conj_transpose() const {
  ExactMatrix t(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j).conj();
  return t;
}

ExactMatrix ExactMatrix::block(size_t r0, size_t c0, size_t nr, size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw InvalidArgument("block out of range");
  ExactMatrix b(nr, nc);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("shape mismatch in +");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("shape mismatch in -");
  for (size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const ExactScalar& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("shape mismatch in *");
  ExactMatrix r(a.rows_, b.cols_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k) {
      const ExactScalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) r(i, j).add_product(x, b(k, j));
    }
  return r;
}

ExactVector operator*(const ExactMatrix& a, const ExactVector& v) {
  if (a.cols_ != v.size()) throw InvalidArgument("shape mismatch in matrix*vector");
  ExactVector r(a.rows_);
  for (size_t i = 0; i < a.rows_; ++i)
    for (size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) r[i].add_product(a(i, k), v[k]);
  return r;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
  }
  os << "]";
  return os.str();
}

ExactMatrix vstack(const std::vector<ExactMatrix>& blocks) {
  size_t rows = 0, cols = blocks.empty() ? 0 : blocks[0].cols();
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw InvalidArgument("vstack column mismatch");
    rows += b.rows();
  }
  ExactMatrix m(rows, cols);
  size_t r = 0;
  for (const auto& b : blocks)
    for (size_t i = 0; i < b.rows(); ++i, ++r)
      for (size_t j = 0; j < cols; ++j) m(r, j) = b(i, j);
  return m;
}

ExactMatrix outer(const ExactVector& u, const ExactVector& v) {
  ExactMatrix m(u.size(), v.size());
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
  return m;
}

RowEchelon row_reduce(const ExactMatrix& input, bool track_transform) {
  ExactMatrix m = input;
  const size_t R = m.rows(), C = m.cols();
  ExactMatrix t;
  if (track_transform) t = ExactMatrix::identity(R);
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t p = r;
    while (p < R && m(p, c).is_zero()) ++p;
    if (p == R) continue;
    if (p != r) {
      for (size_t j = 0; j < C; ++j) std::swap(m(p, j), m(r, j));
      if (track_transform)
        for (size_t j = 0; j < R; ++j) std::swap(t(p, j), t(r, j));
    }
    ExactScalar inv = m(r, c).inverse();
    for (size_t j = c; j < C; ++j) m(r, j) *= inv;
    if (track_transform)
      for (size_t j = 0; j < R; ++j) t(r, j) *= inv;
    for (size_t i = 0; i < R; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      ExactScalar f = m(i, c);
      for (size_t j = c; j < C; ++j)
        if (!m(r, j).is_zero()) m(i, j).sub_product(f, m(r, j));
      if (track_transform)
        for (size_t j = 0; j < R; ++j)
          if (!t(r, j).is_zero()) t(i, j).sub_product(f, t(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  RowEchelon out{std::move(m), std::move(pivots), std::nullopt};
  if (track_transform) out.transform = std::move(t);
  return out;
}

size_t rank(const ExactMatrix& input) {
  // Forward elimination only.
  ExactMatrix m = input;
  const size_t R = m.rows(), C = m.cols();
  size_t r = 0;
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t p = r;
    while (p < R && m(p, c).is_zero()) ++p;
    if (p == R) continue;
    if (p != r)
      for (size_t j = c; j < C; ++j) std::swap(m(p, j), m(r, j));
    ExactScalar inv = m(r, c).inverse();
    for (size_t i = r + 1; i < R; ++i) {
      if (m(i, c).is_zero()) continue;
      ExactScalar f = m(i, c) * inv;
      for (size_t j = c + 1; j < C; ++j)
        if (!m(r, j).is_zero()) m(i, j).sub_product(f, m(r, j));
      m(i, c) = 0;
    }
    ++r;
  }
  return r;
}

std::vector<ExactVector> nullspace(const ExactMatrix& m) {
  RowEchelon e = row_reduce(m);
  const size_t C = m.cols();
  std::vector<bool> is_pivot(C, false);
  for (size_t c : e.pivots) is_pivot[c] = true;
  std::vector<ExactVector> basis;
  for (size_t f = 0; f < C; ++f) {
    if (is_pivot[f]) continue;
    ExactVector v(C);
    v[f] = 1;
    for (size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactScalar determinant(const ExactMatrix& input) {
  if (!input.is_square()) throw InvalidArgument("determinant of non-square matrix");
  ExactMatrix m = input;
  const size_t n = m.rows();
  ExactScalar det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return ExactScalar(0);
    if (p != c) {
      for (size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    ExactScalar inv = m(c, c).inverse();
    for (size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      ExactScalar f = m(i, c) * inv;
      for (size_t j = c + 1; j < n; ++j)
        if (!m(c, j).is_zero()) m(i, j).sub_product(f, m(c, j));
    }
  }
  return det;
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("inverse of non-square matrix");
  RowEchelon e = row_reduce(m, true);
  if (e.rank() != m.rows()) throw MathError("matrix is singular");
  return *e.transform;
}

std::optional<ExactVector> solve(const ExactMatrix& m, const ExactVector& b) {
  if (b.size() != m.rows()) throw InvalidArgument("solve: size mismatch");
  ExactMatrix aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  RowEchelon e = row_reduce(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  ExactVector x(m.cols());
  for (size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

bool is_zero_vector(const ExactVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

ExactVector normalize_projective(ExactVector v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    if (v[i].is_one()) return v;
    ExactScalar inv = v[i].inverse();
    for (size_t j = i; j < v.size(); ++j) v[j] *= inv;
    return v;
  }
  return v;
}

bool projectively_equal(const ExactVector& u, const ExactVector& v) {
  if (u.size() != v.size() || is_zero_vector(u) || is_zero_vector(v)) return false;
  return normalize_projective(u) == normalize_projective(v);
}

}  // namespace slocc
