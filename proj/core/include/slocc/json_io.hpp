#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "slocc/classifier.hpp"
#include "slocc/verify.hpp"

namespace slocc {

using json = nlohmann::ordered_json;

/// {"dims": [..], "amplitudes": [{"index": [i,j,k], "re": "p/q", "im": "p/q"}]}
json state_json(const PureState& s);
PureState state_from_json(const json& j);
/// Parses a state file; errors carry `source` and line/column or the field path.
PureState parse_state(const std::string& text, const std::string& source = "<input>");
std::string dump_state(const PureState& s);

json matrix_json(const ExactMatrix& m);
ExactMatrix matrix_from_json(const json& j);
json vector_json(const ExactVector& v);
json triple_json(const LocalOperatorTriple& t);
LocalOperatorTriple triple_from_json(const json& j);
json word_json(const IloWord& w);

json ranks_json(const LocalRankProfile& r);
json count_json(const ProductCount& c);
json signature_json(const SloccSignature& s);
json profile_json(const PencilRankProfile& p);
json kernel_json(const KernelDegrees& k);
json invariants_json(const InvariantVector& v);
json step_json(const ReductionStep& s);
json classification_json(const ClassificationResult& r);
json verdict_json(const EquivalenceVerdict& v);
json appendix_json(const AppendixReport& r);
json verify_json(const VerifyReport& r);

}  // namespace slocc
