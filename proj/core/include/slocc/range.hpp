#pragma once

#include <array>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "slocc/matrix.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// Span of linearly independent matrices of a common shape.
class MatrixSubspace {
 public:
  MatrixSubspace(size_t rows, size_t cols, std::vector<ExactMatrix> basis);
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<ExactMatrix>& basis() const { return basis_; }
  ExactMatrix combination(const ExactVector& c) const;
  /// Coordinates of m in the basis, or nullopt when m is outside the span.
  std::optional<ExactVector> coordinates(const ExactMatrix& m) const;
  MatrixSubspace transpose() const;

 private:
  size_t rows_, cols_;
  std::vector<ExactMatrix> basis_;
};

enum class Exactness { Exact, Numeric };

/// Rank-one element u v^T = sum_i c_i basis_i.
struct ProductWitness {
  Exactness exactness = Exactness::Exact;
  ExactVector coefficients, left, right;  // exact witnesses only
  std::vector<std::complex<double>> numeric_coefficients, numeric_left, numeric_right;
  ExactMatrix matrix() const { return outer(left, right); }
};

struct ProductCount {
  enum class Kind { Finite, Infinite };
  Kind kind = Kind::Finite;
  size_t n = 0;
  /// For Infinite counts these are sample members of the family.
  std::vector<ProductWitness> witnesses;
  Exactness exactness = Exactness::Exact;
  std::string family;

  bool is_finite() const { return kind == Kind::Finite; }
  std::string str() const { return is_finite() ? std::to_string(n) : "inf"; }
  friend bool same_count(const ProductCount& x, const ProductCount& y) {
    return x.kind == y.kind && (x.kind == Kind::Infinite || x.n == y.n);
  }
};

struct SloccSignature {
  LocalRankProfile ranks;
  std::array<ProductCount, 3> counts;  // a_A (BC-range), a_B (AC-range), a_C (AB-range)
  std::string str() const;
  friend bool operator==(const SloccSignature& x, const SloccSignature& y);
};

/// Adjoint states of the absent party as matrices over the remaining two.
MatrixSubspace range_subspace(const PureState& s, Party absent);
ProductCount count_product_states(const MatrixSubspace& sub);
SloccSignature slocc_signature(const PureState& s);

/// Minimal rank of sum_k f_k S_k over covectors f with f(v) = 1, where S_k
/// are the slices of s along party q. Needs linearly independent slices.
size_t partner_rank(const PureState& s, Party q, const ExactVector& v);

struct WitnessPartner {
  ProductWitness witness;
  std::pair<size_t, size_t> partner;  // (left factor, right factor)
};
std::vector<WitnessPartner> product_witness_adjoint_profile(const PureState& s, Party absent);

/// Sorted partner pairs of an already compact state; empty for infinite ranges.
std::vector<std::pair<size_t, size_t>> partner_multiset(const PureState& compact, Party absent);

namespace detail {
ProductCount count_by_pencil(const MatrixSubspace& sub);
ProductCount count_by_two_rows(const MatrixSubspace& sub);
}  // namespace detail

}  // namespace slocc
