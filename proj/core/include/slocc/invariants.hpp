#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slocc/ilo.hpp"
#include "slocc/pencil.hpp"
#include "slocc/range.hpp"
#include "slocc/state.hpp"

namespace slocc {

/// A state moved to compact form with local ranks ascending along A, B, C.
struct NormalFrame {
  PureState state;
  std::array<Party, 3> perm;               // perm[k] = original party now at position k
  std::array<ExactMatrix, 3> compression;  // per original party, d_X x d_X
  LocalRankProfile original_ranks;
};

NormalFrame normal_frame(const PureState& s);
/// Lifts an ILO between frame states to the original parties; the result maps
/// the original state onto `unframe(frame target)`.
LocalOperatorTriple lift_from_frame(const NormalFrame& f, const std::array<ExactMatrix, 3>& frame_ops);
/// Places a frame-shaped state back into the original party order and dims.
PureState unframe(const NormalFrame& f, const PureState& frame_state);

using PartnerPairs = std::vector<std::pair<size_t, size_t>>;

/// SLOCC invariants of a normal-frame state.
struct InvariantVector {
  Dims dims{};
  std::array<std::string, 3> counts;
  std::optional<PencilRankProfile> bc_profile;
  std::array<std::optional<PartnerPairs>, 3> partners;  // nullopt: infinite or numeric witnesses
  std::optional<KernelDegrees> kernel;
  std::vector<std::string> notes;

  std::string signature() const { return "[" + counts[0] + "," + counts[1] + "," + counts[2] + "]"; }
  std::string str() const;
  /// Name of the first invariant that differs, or empty if all shared components agree.
  std::string first_difference(const InvariantVector& o) const;
  /// Every differing invariant, in the same order.
  std::vector<std::string> differences(const InvariantVector& o) const;
};

InvariantVector compute_invariants(const PureState& frame_state, bool with_kernel);

std::string partner_str(const PartnerPairs& p);

}  // namespace slocc
