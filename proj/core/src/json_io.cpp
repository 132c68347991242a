#include "slocc/json_io.hpp"

#include <algorithm>
#include <set>

#include "slocc/error.hpp"

namespace slocc {

namespace {

std::string line_col(const std::string& text, size_t byte) {
  size_t line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n')
      ++line, col = 1;
    else
      ++col;
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

size_t as_size(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw ParseError(path + ": expected a non-negative integer");
  return j.get<size_t>();
}

Rational as_rational(const json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path + ": expected a rational string like \"-3/4\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace

json state_json(const PureState& s) {
  json amps = json::array();
  for (const auto& [i, a] : s.amplitudes())
    amps.push_back({{"index", {i[0], i[1], i[2]}}, {"re", format_rational(a.re())}, {"im", format_rational(a.im())}});
  return {{"dims", {s.dims()[0], s.dims()[1], s.dims()[2]}}, {"amplitudes", amps}};
}

PureState state_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("state: expected an object with dims and amplitudes");
  for (const auto& [k, v] : j.items())
    if (k != "dims" && k != "amplitudes") throw ParseError("state: unknown field '" + k + "'");
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].size() != 3)
    throw ParseError("dims: expected an array of three dimensions");
  Dims d;
  for (size_t k = 0; k < 3; ++k) {
    d[k] = as_size(j["dims"][k], "dims[" + std::to_string(k) + "]");
    if (d[k] == 0) throw ParseError("dims[" + std::to_string(k) + "]: must be positive");
  }
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) throw ParseError("amplitudes: expected an array");
  PureState::Amplitudes amps;
  std::set<Index3> seen;
  const json& list = j["amplitudes"];
  for (size_t n = 0; n < list.size(); ++n) {
    std::string path = "amplitudes[" + std::to_string(n) + "]";
    const json& e = list[n];
    if (!e.is_object()) throw ParseError(path + ": expected an object");
    for (const auto& [k, v] : e.items())
      if (k != "index" && k != "re" && k != "im") throw ParseError(path + ": unknown field '" + k + "'");
    if (!e.contains("index") || !e["index"].is_array() || e["index"].size() != 3)
      throw ParseError(path + ".index: expected [i, j, k]");
    Index3 idx3;
    for (size_t k = 0; k < 3; ++k) {
      idx3[k] = as_size(e["index"][k], path + ".index[" + std::to_string(k) + "]");
      if (idx3[k] >= d[k])
        throw ParseError(path + ".index[" + std::to_string(k) + "]: " + std::to_string(idx3[k]) +
                         " out of range for dimension " + std::to_string(d[k]));
    }
    if (!seen.insert(idx3).second) throw ParseError(path + ".index: duplicate index");
    if (!e.contains("re") || !e.contains("im")) throw ParseError(path + ": needs both re and im");
    ExactScalar a(as_rational(e["re"], path + ".re"), as_rational(e["im"], path + ".im"));
    if (!a.is_zero()) amps.emplace(idx3, a);
  }
  if (amps.empty()) throw ParseError("amplitudes: at least one amplitude must be nonzero");
  return PureState(d, std::move(amps));
}

PureState parse_state(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + line_col(text, e.byte ? e.byte - 1 : 0) + ": malformed JSON");
  }
  try {
    return state_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(source + ": " + e.what());
  }
}

std::string dump_state(const PureState& s) {
  json j = state_json(s);
  std::string out = "{\n  \"dims\": " + j["dims"].dump() + ",\n  \"amplitudes\": [";
  const json& amps = j["amplitudes"];
  for (size_t n = 0; n < amps.size(); ++n) out += (n ? ",\n    " : "\n    ") + amps[n].dump();
  return out + "\n  ]\n}\n";
}

json matrix_json(const ExactMatrix& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (size_t k = 0; k < m.cols(); ++k) r.push_back(m(i, k).str());
    rows.push_back(r);
  }
  return rows;
}

ExactMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw ParseError("matrix: expected an array of rows");
  ExactMatrix m(j.size(), j[0].size());
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != m.cols()) throw ParseError("matrix: ragged rows");
    for (size_t k = 0; k < m.cols(); ++k) {
      if (!j[i][k].is_string()) throw ParseError("matrix: entries must be strings");
      m(i, k) = ExactScalar::parse(j[i][k].get<std::string>());
    }
  }
  return m;
}

json vector_json(const ExactVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json triple_json(const LocalOperatorTriple& t) {
  return {{"A", matrix_json(t.op(Party::A))}, {"B", matrix_json(t.op(Party::B))}, {"C", matrix_json(t.op(Party::C))}};
}

LocalOperatorTriple triple_from_json(const json& j) {
  return LocalOperatorTriple(matrix_from_json(j.at("A")), matrix_from_json(j.at("B")), matrix_from_json(j.at("C")));
}

json word_json(const IloWord& w) {
  json out = json::array();
  for (const auto& op : w) {
    json e = {{"party", std::string(1, party_name(op.party))}};
    switch (op.kind) {
      case ElementaryOp::Kind::Scale:
        e["kind"] = "scale";
        e["index"] = op.target;
        e["alpha"] = op.alpha.str();
        break;
      case ElementaryOp::Kind::Add:
        e["kind"] = "add";
        e["target"] = op.target;
        e["source"] = op.source;
        e["alpha"] = op.alpha.str();
        break;
      case ElementaryOp::Kind::Swap:
        e["kind"] = "swap";
        e["i"] = op.target;
        e["j"] = op.source;
        break;
    }
    out.push_back(e);
  }
  return out;
}

json ranks_json(const LocalRankProfile& r) { return {r.r_a, r.r_b, r.r_c}; }

json count_json(const ProductCount& c) {
  json out = {{"count", c.str()}, {"exact", c.exactness == Exactness::Exact}};
  if (!c.family.empty()) out["family"] = c.family;
  json ws = json::array();
  for (const auto& w : c.witnesses) {
    if (w.exactness != Exactness::Exact) continue;
    ws.push_back({{"coefficients", vector_json(w.coefficients)},
                  {"left", vector_json(w.left)},
                  {"right", vector_json(w.right)}});
  }
  out[c.is_finite() ? "witnesses" : "samples"] = ws;
  return out;
}

json signature_json(const SloccSignature& s) {
  return {
      {"ranks", ranks_json(s.ranks)},
      {"bracket", s.str()},
      {"ranges", {{"BC", count_json(s.counts[0])}, {"AC", count_json(s.counts[1])}, {"AB", count_json(s.counts[2])}}}};
}

json profile_json(const PencilRankProfile& p) {
  json out = {{"generic_rank", p.generic_rank}, {"exceptional_ranks", p.exceptional_ranks}, {"text", p.str()}};
  if (!p.points.empty()) {
    json pts = json::array();
    for (const auto& pt : p.points) {
      json e = {{"rank", pt.rank}};
      switch (pt.kind) {
        case ExceptionalPoint::Kind::Finite: e["at"] = pt.location->str(); break;
        case ExceptionalPoint::Kind::Infinity: e["at"] = "inf"; break;
        case ExceptionalPoint::Kind::Algebraic:
          e["at"] = "numeric";
          e["approx"] = {pt.approx.real(), pt.approx.imag()};
          break;
      }
      pts.push_back(e);
    }
    out["points"] = pts;
  }
  return out;
}

json kernel_json(const KernelDegrees& k) { return {{"column", k.column}, {"row", k.row}}; }

json invariants_json(const InvariantVector& v) {
  json out = {{"ranks", {v.dims[0], v.dims[1], v.dims[2]}}, {"signature", v.signature()}};
  if (v.bc_profile) out["bc_profile"] = profile_json(*v.bc_profile);
  json parts = json::object();
  const char* names[] = {"BC", "AC", "AB"};
  for (size_t x = 0; x < 3; ++x) {
    if (!v.partners[x]) continue;
    json pp = json::array();
    for (const auto& [l, r] : *v.partners[x]) pp.push_back({l, r});
    parts[names[x]] = pp;
  }
  out["partner_ranks"] = parts;
  if (v.kernel) out["kernel_degrees"] = kernel_json(*v.kernel);
  if (!v.notes.empty()) out["notes"] = v.notes;
  return out;
}

json step_json(const ReductionStep& s) {
  const ProductWitness& w = s.extracted_witness;
  return {
      {"input", state_json(s.input)},
      {"extracted",
       {{"coefficients", vector_json(w.coefficients)}, {"left", vector_json(w.left)}, {"right", vector_json(w.right)}}},
      {"ilo_word", word_json(s.ilo_word)},
      {"residual", state_json(s.residual)},
      {"residual_ranks", ranks_json(s.residual_ranks)}};
}

json classification_json(const ClassificationResult& r) {
  json out = {{"label", r.label.str()}, {"family", family_name(r.label.family)}};
  if (r.label.m) out["M"] = *r.label.m;
  out["frame_permutation"] = {std::string(1, party_name(r.permutation[0])),
                              std::string(1, party_name(r.permutation[1])),
                              std::string(1, party_name(r.permutation[2]))};
  if (r.invariants) out["invariants"] = invariants_json(*r.invariants);
  json proof = json::array();
  for (const auto& s : r.proof) proof.push_back(step_json(s));
  out["proof"] = proof;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

json verdict_json(const EquivalenceVerdict& v) {
  json out = {{"verdict", v.kind_str()}};
  if (!v.separating_invariant.empty()) out["separating_invariant"] = v.separating_invariant;
  if (v.witness) out["witness"] = triple_json(*v.witness);
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

json appendix_json(const AppendixReport& r) {
  json cases = json::array();
  for (const auto& c : r.cases)
    cases.push_back(
        {{"split", c.split}, {"trials", c.trials}, {"forced_singular", c.forced}, {"failures", c.failures}});
  return {{"M", r.m}, {"seed", r.seed}, {"all_forced", r.all_forced()}, {"cases", cases}};
}

json verify_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  json out = {{"which", r.which}};
  out["M"] = r.m ? json(*r.m) : json(nullptr);
  out["trials"] = r.trials;
  out["seed"] = r.seed;
  out["passed"] = r.passed();
  out["checks"] = checks;
  return out;
}

}  // namespace slocc
