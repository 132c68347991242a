// Command-line front end for the slocc library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "slocc/classifier.hpp"
#include "slocc/error.hpp"
#include "slocc/ilo.hpp"
#include "slocc/json_io.hpp"
#include "slocc/verify.hpp"

using namespace slocc;

namespace {

enum Exit { kOk = 0, kAssertion = 1, kUsage = 2 };

struct Globals {
  std::string format = "text";
  uint64_t seed = 0;
  size_t trials = 100;
  double tolerance = 1e-9;
  std::optional<size_t> m;
  bool timing = false;
  std::string output;
};

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

PureState load(const std::string& path) { return parse_state(read_source(path), path == "-" ? "<stdin>" : path); }

void write_out(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.output);
  if (!out) throw ParseError(g.output + ": cannot write file");
  out << text;
}

json report(const std::string& command, const Globals& g) {
  json r = {{"command", command}, {"seed", g.seed}};
  return r;
}

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Globals& g, json r, const std::string& text, const Timer& t) {
  if (g.timing) r["timing_ms"] = t.ms();
  if (g.format == "json")
    write_out(g, r.dump(2) + "\n");
  else
    write_out(g, text + (g.timing ? "time: " + std::to_string(t.ms()) + " ms\n" : ""));
}

std::string ranks_text(const LocalRankProfile& r) {
  return std::to_string(r.r_a) + "," + std::to_string(r.r_b) + "," + std::to_string(r.r_c);
}

std::string vec_text(const ExactVector& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].str();
  return out + ")";
}

std::string invariants_text(const InvariantVector& v) {
  std::ostringstream os;
  os << "signature: " << v.signature() << "\n";
  if (v.bc_profile) os << "pencil rank profile: " << v.bc_profile->str() << "\n";
  const char* names[] = {"BC", "AC", "AB"};
  for (size_t x = 0; x < 3; ++x)
    if (v.partners[x] && !v.partners[x]->empty())
      os << "partner ranks " << names[x] << ": " << partner_str(*v.partners[x]) << "\n";
  if (v.kernel) os << "kernel degrees: " << v.kernel->str() << "\n";
  for (const auto& n : v.notes) os << "note: " << n << "\n";
  return os.str();
}

int cmd_signature(const Globals& g, const std::string& file) {
  Timer t;
  PureState s = load(file);
  json r = report("signature", g);
  r["input"] = file;
  LocalRankProfile ranks = local_ranks(s);
  r["ranks"] = ranks_json(ranks);
  std::ostringstream text;
  text << "local ranks: " << ranks.str() << "\n";
  if (ranks.r_a == 1 || ranks.r_b == 1 || ranks.r_c == 1) {
    std::string label = "NotTrueTripartite(ranks " + ranks_text(ranks) + ")";
    r["label"] = label;
    text << label << "\n";
    emit(g, r, text.str(), t);
    return kOk;
  }
  SloccSignature sig = slocc_signature(s);
  r["signature"] = signature_json(sig);
  text << "signature: " << sig.str() << "\n";
  NormalFrame f = normal_frame(s);
  if (f.state.dims()[0] == 2) {
    Pencil p(f.state.slice(Party::A, 0), f.state.slice(Party::A, 1));
    PencilRankProfile prof = pencil_rank_profile(p, true);
    r["pencil_rank_profile"] = profile_json(prof);
    text << "pencil rank profile: " << prof.str() << "\n";
  }
  emit(g, r, text.str(), t);
  return kOk;
}

int cmd_classify(const Globals& g, const std::string& file, bool proof) {
  Timer t;
  PureState s = load(file);
  ClassificationResult c = classify(s, {proof});
  json r = report("classify", g);
  r["input"] = file;
  r["result"] = classification_json(c);
  std::ostringstream text;
  text << "label: " << c.label.str() << "\n";
  if (!c.note.empty()) text << "note: " << c.note << "\n";
  if (c.invariants) text << invariants_text(*c.invariants);
  for (size_t i = 0; i < c.proof.size(); ++i) {
    const auto& st = c.proof[i];
    const Dims& d = st.input.dims();
    text << "step " << i + 1 << ": " << d[0] << "x" << d[1] << "x" << d[2] << " extract "
         << vec_text(st.extracted_witness.left) << " x " << vec_text(st.extracted_witness.right) << ", "
         << st.ilo_word.size() << " elementary ops, residual ranks " << st.residual_ranks.str()
         << (verify_step(st) ? ", verified" : ", NOT verified") << "\n";
  }
  emit(g, r, text.str(), t);
  return kOk;
}

int cmd_equiv(const Globals& g, const std::string& f1, const std::string& f2) {
  Timer t;
  PureState s1 = load(f1), s2 = load(f2);
  EquivalenceVerdict v = decide_equivalence(s1, s2);
  json r = report("equiv", g);
  r["inputs"] = {f1, f2};
  r["result"] = verdict_json(v);
  std::ostringstream text;
  text << "verdict: " << v.kind_str();
  if (!v.separating_invariant.empty()) text << " (" << v.separating_invariant << ")";
  text << "\n";
  if (!v.detail.empty()) text << "detail: " << v.detail << "\n";
  if (v.witness)
    for (Party p : {Party::A, Party::B, Party::C})
      text << "V_" << party_name(p) << " = " << v.witness->op(p).str() << "\n";
  emit(g, r, text.str(), t);
  return kOk;
}

FamilyParams parse_params(const std::string& text, FamilyParams p) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("params: expected name=value, got '" + item + "'");
    std::string k = item.substr(0, eq);
    ExactScalar v = ExactScalar::parse(item.substr(eq + 1));
    if (k == "a")
      p.a = v;
    else if (k == "b")
      p.b = v;
    else if (k == "c")
      p.c = v;
    else if (k == "d")
      p.d = v;
    else if (k == "f")
      p.f = v;
    else if (k == "g")
      p.g = v;
    else
      throw InvalidArgument("params: unknown coefficient '" + k + "'");
  }
  return p;
}

int cmd_gen(const Globals& g, const std::string& family, const std::string& params) {
  PureState s = [&] {
    static const std::vector<std::string> exprs{"I", "II", "III", "IV", "V"};
    if (std::find(exprs.begin(), exprs.end(), family) != exprs.end()) {
      Expression e = parse_expression(family);
      FamilyParams p = random_family_params(e, g.seed);
      if (!params.empty()) p = parse_params(params, FamilyParams{});
      return make_expression(e, p);
    }
    if (!params.empty()) throw InvalidArgument("--params applies to expressions I..V only");
    return make_canonical(ClassLabel::parse(family, g.m));
  }();
  write_out(g, dump_state(s));
  return kOk;
}

int cmd_perturb(const Globals& g, const std::string& file) {
  PureState s = load(file);
  write_out(g, dump_state(random_ilo(s.dims(), g.seed).apply(s)));
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& which) {
  Timer t;
  VerifyReport v = verify_theorem(which, g.m, g.trials, g.seed);
  json r = report("verify", g);
  r["result"] = verify_json(v);
  std::ostringstream text;
  for (const auto& c : v.checks) text << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
  size_t passed = std::count_if(v.checks.begin(), v.checks.end(), [](const TheoremCheck& c) { return c.pass; });
  text << (v.passed() ? "PASSED" : "FAILED") << " " << passed << "/" << v.checks.size() << " checks\n";
  emit(g, r, text.str(), t);
  return v.passed() ? kOk : kAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SLOCC classification of 2 x M x N tripartite pure states"};
  app.require_subcommand(1);
  Globals g;
  auto fmt = app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  auto seed = app.add_option("--seed", g.seed, "Seed for random draws");
  auto trials = app.add_option("--trials", g.trials, "Random trials for verify");
  auto tol = app.add_option("--tolerance", g.tolerance, "Root clustering tolerance (numeric paths only)");
  auto mopt = app.add_option("--m", g.m, "Family parameter M");
  auto timing = app.add_flag("--timing", g.timing, "Include wall time in reports");
  auto out = app.add_option("-o,--output", g.output, "Write to a file instead of stdout");
  for (auto* o : {fmt, seed, trials, tol, mopt, timing, out}) o->group("Global");
  app.fallthrough();

  std::string file, file2, family, params, which;
  bool no_proof = false;
  auto* sig = app.add_subcommand("signature", "Local ranks, product-state counts and pencil rank profile");
  sig->add_option("file", file, "State file or - for stdin")->required();
  auto* cls = app.add_subcommand("classify", "Class label with invariants and reduction trace");
  cls->add_option("file", file, "State file or - for stdin")->required();
  cls->add_flag("--no-proof", no_proof, "Skip the reduction trace");
  auto* eq = app.add_subcommand("equiv", "Decide SLOCC equivalence of two states");
  eq->add_option("file1", file, "First state file")->required();
  eq->add_option("file2", file2, "Second state file")->required();
  auto* gen = app.add_subcommand("gen", "Write a canonical state or expression (I..V) as a state file");
  gen->add_option("family", family, "Family name such as ghz, psi4, theta0, or an expression I..V")->required();
  gen->add_option("--params", params, "Expression coefficients, e.g. a=1,b=1/2");
  auto* per = app.add_subcommand("perturb", "Apply a seeded random local operator");
  per->add_option("file", file, "State file or - for stdin")->required();
  auto* ver = app.add_subcommand("verify", "Run a theorem or appendix verifier");
  ver->add_option("--theorem", which, "2, 3, 4, upsilon0, two_by_two_by_three or appendix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (tol->count() > 0) set_numeric_tolerance(g.tolerance);
    if (*sig) return cmd_signature(g, file);
    if (*cls) return cmd_classify(g, file, !no_proof);
    if (*eq) return cmd_equiv(g, file, file2);
    if (*gen) return cmd_gen(g, family, params);
    if (*per) return cmd_perturb(g, file);
    if (*ver) return cmd_verify(g, which);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedShape& e) {
    std::cerr << "unsupported shape: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kAssertion;
  }
  return kUsage;
}
