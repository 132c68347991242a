#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "slocc/matrix.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// One scale, add or swap generator acting on a single party.
struct ElementaryOp {
  enum class Kind { Scale, Add, Swap };
  Party party = Party::A;
  Kind kind = Kind::Scale;
  size_t target = 0;
  size_t source = 0;  // Add: |target> -> |target> + alpha|source>; Swap: the other index
  ExactScalar alpha{1};

  ExactMatrix matrix(size_t dim) const;
  std::string str() const;
};

using IloWord = std::vector<ElementaryOp>;

/// Three invertible matrices, one per party.
class LocalOperatorTriple {
 public:
  LocalOperatorTriple(ExactMatrix va, ExactMatrix vb, ExactMatrix vc);
  static LocalOperatorTriple identity(const Dims& dims);

  const ExactMatrix& op(Party p) const { return ops_[idx(p)]; }
  Dims dims() const { return {ops_[0].rows(), ops_[1].rows(), ops_[2].rows()}; }
  PureState apply(const PureState& s) const;
  LocalOperatorTriple inverse() const;
  bool is_identity() const;
  friend bool operator==(const LocalOperatorTriple& x, const LocalOperatorTriple& y) { return x.ops_ == y.ops_; }

 private:
  std::array<ExactMatrix, 3> ops_;
};

/// compose(g, h) acts as g after h.
LocalOperatorTriple compose(const LocalOperatorTriple& g, const LocalOperatorTriple& h);

LocalOperatorTriple elementary_scale(const Dims& dims, Party party, size_t index, const ExactScalar& alpha);
LocalOperatorTriple elementary_add(const Dims& dims, Party party, size_t target, size_t source,
                                   const ExactScalar& alpha);
LocalOperatorTriple basis_swap(const Dims& dims, Party party, size_t i, size_t j);
LocalOperatorTriple random_ilo(const Dims& dims, uint64_t seed);
/// Random invertible matrix from the same grid.
ExactMatrix random_invertible(size_t n, uint64_t seed);

LocalOperatorTriple word_to_triple(const Dims& dims, const IloWord& word);
PureState apply_word(const PureState& s, const IloWord& word);
/// Elementary factors whose product (first applied first) equals v on `party`.
IloWord elementary_factors(const ExactMatrix& v, Party party);
/// Factors of all three parties, A first.
IloWord elementary_factors(const LocalOperatorTriple& g);

}  // namespace slocc
