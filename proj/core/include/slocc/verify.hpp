#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slocc/canonical.hpp"
#include "slocc/matrix.hpp"

namespace slocc {

/// Outcome of the Theta4 -> Theta5 constraint analysis for one V_A.
struct AppendixDraw {
  ExactMatrix v_a;
  /// Literal (A2)-(A3) style system on rows M-1, M, M+1 of V_B.
  bool literal_forced = false;
  /// Entries (row, col) of V_B that every literal solution sets to zero.
  std::vector<std::pair<size_t, size_t>> literal_zeros;
  /// Range inclusion system derived from the states themselves, all of V_B.
  bool direct_forced = false;
  /// True if a nonsingular V_B solving the direct system was found.
  bool counterexample = false;
  std::string certificate;
};

struct AppendixCase {
  std::string split;
  size_t trials = 0;
  size_t forced = 0;
  std::vector<std::string> failures;
};

struct AppendixReport {
  size_t m = 0;
  uint64_t seed = 0;
  std::vector<AppendixCase> cases;
  bool all_forced() const;
};

AppendixDraw appendix_draw(size_t m, const ExactMatrix& v_a);
AppendixReport verify_appendix_theta45(size_t m, size_t trials, uint64_t seed);

struct TheoremCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string which;
  std::optional<size_t> m;
  size_t trials = 0;
  uint64_t seed = 0;
  std::vector<TheoremCheck> checks;
  bool passed() const;
};

/// which: "2", "3", "4", "upsilon0", "two_by_two_by_three" or "appendix".
VerifyReport verify_theorem(const std::string& which, std::optional<size_t> m, size_t trials, uint64_t seed);

/// Every invariant that differs between two states, in decision order.
std::vector<std::string> separating_invariants(const PureState& s1, const PureState& s2);

/// Random state with maximal local ranks, entries from {-1,0,1}.
PureState random_full_rank_grid(const Dims& dims, uint64_t seed);
/// Random state with maximal local ranks, Gaussian-rational entries.
PureState random_full_rank(const Dims& dims, uint64_t seed);

}  // namespace slocc
