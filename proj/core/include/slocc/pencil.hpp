#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slocc/matrix.hpp"
#include "slocc/poly.hpp"

namespace slocc {

/// The one-parameter family A + t B. The point t = infinity is B alone.
class Pencil {
 public:
  Pencil(ExactMatrix a, ExactMatrix b);
  const ExactMatrix& a() const { return a_; }
  const ExactMatrix& b() const { return b_; }
  size_t rows() const { return a_.rows(); }
  size_t cols() const { return a_.cols(); }
  ExactMatrix at(const ExactScalar& t) const;
  Pencil transpose() const { return Pencil(a_.transpose(), b_.transpose()); }

 private:
  ExactMatrix a_;
  ExactMatrix b_;
};

/// Every k x k minor of A + tB, rows/cols in lexicographic subset order.
std::vector<UniPoly> minor_polynomials(const Pencil& p, size_t k);

using PolyMatrix = std::vector<std::vector<UniPoly>>;

/// Monic nonzero invariant factors s_1 | s_2 | ... | s_r of a polynomial matrix.
std::vector<UniPoly> smith_invariant_factors(PolyMatrix m);
std::vector<UniPoly> invariant_factors(const Pencil& p);

struct ExceptionalPoint {
  enum class Kind { Finite, Infinity, Algebraic };
  Kind kind = Kind::Finite;
  std::optional<ExactScalar> location;  // Finite only
  std::complex<double> approx;          // Algebraic only
  size_t rank = 0;
};

struct PencilRankProfile {
  size_t generic_rank = 0;
  std::vector<size_t> exceptional_ranks;  // sorted multiset
  std::vector<ExceptionalPoint> points;   // filled when located
  bool has_algebraic_points = false;
  std::string str() const;
  friend bool operator==(const PencilRankProfile& x, const PencilRankProfile& y) {
    return x.generic_rank == y.generic_rank && x.exceptional_ranks == y.exceptional_ranks;
  }
};

/// Generic rank from random rational evaluations, confirmed against the
/// invariant factors; exceptional ranks exactly from the invariant factors.
/// With `locate`, Gaussian-rational exceptional points carry exact locations.
PencilRankProfile pencil_rank_profile(const Pencil& p, bool locate = false, uint64_t seed = 0);

/// Minimal indices: degrees of a minimal polynomial basis of the right
/// (column) and left (row) kernels.
struct KernelDegrees {
  std::vector<size_t> column;
  std::vector<size_t> row;
  std::string str() const;
  friend bool operator==(const KernelDegrees& x, const KernelDegrees& y) {
    return x.column == y.column && x.row == y.row;
  }
};

KernelDegrees pencil_kernel_degrees(const Pencil& p);

/// Number of distinct roots of each invariant factor, with the generic rank.
struct FactorRootCounts {
  size_t generic_rank = 0;
  std::vector<int> distinct;  // distinct[i] = #roots of s_{i+1}
};
FactorRootCounts factor_root_counts(const std::vector<UniPoly>& factors);

}  // namespace slocc
