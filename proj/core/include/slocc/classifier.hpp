#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slocc/canonical.hpp"
#include "slocc/ilo.hpp"
#include "slocc/invariants.hpp"
#include "slocc/range.hpp"

namespace slocc {

/// One extraction: word(input) = |0,M-1,N-1> + residual (residual padded to input dims).
struct ReductionStep {
  PureState input;
  ProductWitness extracted_witness;  // in the AB-range of `input`
  IloWord ilo_word;
  PureState residual;  // C index N-1 unused; B index M-1 unused when its B-rank is M-1
  LocalRankProfile residual_ranks;
};

/// Input must be compact (dims = local ranks) with dims (2, M, N), 2 <= M <= N <= 2M.
ReductionStep extract_and_reduce(const PureState& s);
/// Replays the word and checks the step's defining identity exactly.
bool verify_step(const ReductionStep& step);

struct ClassifyOptions {
  bool proof = true;
};

struct ClassificationResult {
  ClassLabel label;
  std::vector<ReductionStep> proof;
  std::optional<InvariantVector> invariants;
  std::array<Party, 3> permutation{Party::A, Party::B, Party::C};
  std::string note;
};

ClassificationResult classify(const PureState& s, const ClassifyOptions& opts = {});

/// Exact ILO (V_A, V_B, V_C) with V from = to up to scalar, for compact
/// 2 x M x N states of equal dims; nullopt when none is found (irrational
/// exceptional points or no solution).
std::optional<LocalOperatorTriple> find_equivalence(const PureState& from, const PureState& to, uint64_t seed = 0);

/// ILO mapping s onto the label's canonical state placed in s's party order and dims.
struct CanonicalWitness {
  LocalOperatorTriple ilo;
  PureState target;
};
std::optional<CanonicalWitness> canonical_witness(const PureState& s, const ClassLabel& label);

struct EquivalenceVerdict {
  enum class Kind { Equivalent, Inequivalent, Undecided };
  Kind kind = Kind::Undecided;
  std::optional<LocalOperatorTriple> witness;  // maps state1 to state2 (padded to common dims)
  std::string separating_invariant;
  std::string detail;
  std::string kind_str() const;
};

EquivalenceVerdict decide_equivalence(const PureState& s1, const PureState& s2);

}  // namespace slocc
