#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slocc/state.hpp"

namespace slocc {

enum class Family {
  GHZ,
  W,
  Psi1,
  Psi2,
  Psi3,
  Psi4,
  Psi5,
  Psi6,
  Upsilon0,
  Upsilon1,
  Upsilon2,
  Theta0,
  Theta1,
  Theta2,
  Theta3,
  Theta4,
  Theta5,
  Phi0Example,
  Phi1Example,
  NotTrueTripartite,
  Unknown
};

struct ClassLabel {
  Family family = Family::Unknown;
  std::optional<size_t> m;

  ClassLabel() = default;
  ClassLabel(Family f, std::optional<size_t> m_param = std::nullopt);

  bool has_m() const;
  /// True for the named classes (not NotTrueTripartite / Unknown).
  bool is_named() const { return family != Family::NotTrueTripartite && family != Family::Unknown; }
  std::string str() const;
  /// Accepts "Psi4", "Theta0(M=2)", or a family name plus separate m.
  static ClassLabel parse(const std::string& text, std::optional<size_t> m = std::nullopt);
  friend bool operator==(const ClassLabel&, const ClassLabel&) = default;
  friend bool operator<(const ClassLabel& x, const ClassLabel& y) {
    return x.family != y.family ? x.family < y.family : x.m < y.m;
  }
};

std::string family_name(Family f);
bool is_upsilon(Family f);
bool is_theta(Family f);
const std::vector<Family>& all_families();

/// Ambient dims of a label's canonical state.
Dims canonical_dims(const ClassLabel& label);
PureState make_canonical(const ClassLabel& label);

struct FamilyParams {
  ExactScalar a{1}, b{0}, c{1}, d{0}, f{1}, g{0};
  std::vector<ExactScalar> chi;
};

enum class Expression { I = 1, II, III, IV, V };
std::string expression_name(Expression e);
Expression parse_expression(const std::string& text);
PureState make_expression(Expression which, const FamilyParams& params);
/// Coefficients from the small grid with each one zero with probability
/// about 1/3, resampled until the bracket conditions hold.
FamilyParams random_family_params(Expression which, uint64_t seed);

/// Corollary-style generation from a lower state. kind 0, 2, 3 take a
/// 2 x (M-1) x (N-1) lower state, kind 1 a 2 x (M-1) x (N-2) one; params.chi
/// has N-1 entries for kinds 2 and 3.
PureState make_omega(int kind, const PureState& lower, const FamilyParams& params);

/// Named classes expected in a covered 2 x M x N shape; empty if uncovered.
std::vector<ClassLabel> canonical_library(const Dims& dims);

/// The paper's product-count bracket for a named class, e.g. "[0,1,inf]".
std::string expected_bracket(const ClassLabel& label);

}  // namespace slocc
