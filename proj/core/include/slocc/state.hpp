#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "slocc/matrix.hpp"

namespace slocc {

enum class Party { A = 0, B = 1, C = 2 };

inline size_t idx(Party p) { return static_cast<size_t>(p); }
char party_name(Party p);
Party parse_party(char c);
/// The two other parties in A<B<C order.
std::pair<Party, Party> complement(Party p);

using Dims = std::array<size_t, 3>;
using Index3 = std::array<size_t, 3>;

/// Sparse tripartite pure state. Equality is up to a global nonzero scalar.
class PureState {
 public:
  using Amplitudes = std::map<Index3, ExactScalar>;

  PureState(Dims dims, Amplitudes amps);
  static PureState from_terms(Dims dims, const std::vector<std::pair<Index3, ExactScalar>>& terms);
  /// Builds sum_i |i>_party (x) slices[i], each slice a matrix over the other two parties.
  static PureState from_slices(Dims dims, Party party, const std::vector<ExactMatrix>& slices);

  const Dims& dims() const { return dims_; }
  size_t dim(Party p) const { return dims_[idx(p)]; }
  const Amplitudes& amplitudes() const { return amps_; }
  ExactScalar amplitude(const Index3& i) const;

  /// First nonzero amplitude (lexicographic) scaled to 1.
  PureState normalized() const;
  bool exactly_equal(const PureState& o) const { return dims_ == o.dims_ && amps_ == o.amps_; }
  friend bool operator==(const PureState& a, const PureState& b);
  friend bool operator!=(const PureState& a, const PureState& b) { return !(a == b); }

  /// d_X x (d_P d_Q) matrix, column index p * d_Q + q.
  ExactMatrix unfolding(Party x) const;
  /// Matrix over the other two parties at fixed index of x.
  ExactMatrix slice(Party x, size_t index) const;
  std::vector<ExactMatrix> slices(Party x) const;

  std::string str() const;

 private:
  Dims dims_;
  Amplitudes amps_;
};

struct LocalRankProfile {
  size_t r_a = 0, r_b = 0, r_c = 0;
  size_t operator[](Party p) const { return p == Party::A ? r_a : p == Party::B ? r_b : r_c; }
  Dims as_array() const { return {r_a, r_b, r_c}; }
  std::string str() const;
  friend bool operator==(const LocalRankProfile&, const LocalRankProfile&) = default;
};

struct AdjointForm {
  Party party;
  ExactMatrix basis_change;                 // applied on `party`
  std::vector<ExactMatrix> adjoint_states;  // one per local-rank index, over the other two parties
  /// Rebuilds the state by undoing basis_change.
  PureState reassemble(const Dims& dims) const;
};

ExactMatrix reduced_density(const PureState& s, const std::vector<Party>& parties);
LocalRankProfile local_ranks(const PureState& s);
AdjointForm adjoint_form(const PureState& s, Party party);
PureState apply_local(const PureState& s, Party which, const ExactMatrix& m);
/// perm[k] = old party moved to position k.
PureState permute_parties(const PureState& s, const std::array<Party, 3>& perm);

/// Basis changes E_X with E_X applied on each party leaving the state supported
/// on the leading local-rank indices, and the state restricted to those.
struct Compression {
  PureState state;
  std::array<ExactMatrix, 3> basis_change;
};
Compression compress(const PureState& s);

/// Zero-pads each party to the given dims.
PureState pad(const PureState& s, const Dims& dims);

}  // namespace slocc
