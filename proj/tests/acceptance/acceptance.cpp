// Acceptance criteria 1-10: one PASS/FAIL line each, with wall time against its budget.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "slocc/classifier.hpp"
#include "slocc/ilo.hpp"
#include "slocc/invariants.hpp"
#include "slocc/verify.hpp"

using namespace slocc;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail.str("");
    pass = false;
    detail << (detail.tellp() > 0 ? "; " : "") << why;
  }
  void note(const std::string& what) {
    if (pass) detail << (detail.tellp() > 0 ? "; " : "") << what;
  }
};

std::string sig(const PureState& s) { return slocc_signature(s).str(); }
std::string sig(const ClassLabel& l) { return sig(make_canonical(l)); }

std::optional<PencilRankProfile> frame_profile(const PureState& s) {
  PureState f = normal_frame(s).state;
  if (f.dims()[0] != 2) return std::nullopt;
  return pencil_rank_profile(Pencil(f.slice(Party::A, 0), f.slice(Party::A, 1)));
}

std::string partners(const ClassLabel& l) {
  InvariantVector v = compute_invariants(normal_frame(make_canonical(l)).state, false);
  std::string out;
  for (const auto& p : v.partners) out += p ? partner_str(*p) : "-";
  return out;
}

void expect_bracket(Outcome& o, const ClassLabel& l, const std::string& want) {
  std::string got = sig(l);
  if (got != want) o.fail(l.str() + " " + got + " expected " + want);
}

void criterion1(Outcome& o) {
  expect_bracket(o, {Family::GHZ}, "[2,2,2]");
  expect_bracket(o, {Family::W}, "[1,1,1]");
  o.note("GHZ [2,2,2], W [1,1,1]");
}

void criterion2(Outcome& o) {
  const std::vector<std::pair<Family, std::string>> table = {
      {Family::Psi1, "[0,3,3]"}, {Family::Psi2, "[0,inf,inf]"}, {Family::Psi3, "[1,inf,inf]"},
      {Family::Psi4, "[0,1,1]"}, {Family::Psi5, "[1,inf,inf]"}, {Family::Psi6, "[0,2,2]"}};
  for (const auto& [f, b] : table) expect_bracket(o, {f}, b);
  size_t by_signature = 0, by_partner = 0;
  for (size_t i = 0; i < table.size(); ++i)
    for (size_t j = i + 1; j < table.size(); ++j) {
      ClassLabel a(table[i].first), b(table[j].first);
      PureState sa = make_canonical(a), sb = make_canonical(b);
      if (!(local_ranks(sa) == local_ranks(sb)) || sig(sa) != sig(sb)) {
        ++by_signature;
      } else if (partners(a) != partners(b)) {
        ++by_partner;
        if (!(a.family == Family::Psi3 && b.family == Family::Psi5))
          o.fail(a.str() + "/" + b.str() + " needed partner ranks");
      } else {
        o.fail(a.str() + "/" + b.str() + " not separated");
      }
    }
  if (by_signature + by_partner != 15)
    o.fail("only " + std::to_string(by_signature + by_partner) + "/15 pairs separated");
  if (by_partner != 1) o.fail("expected exactly (Psi3,Psi5) to need partner ranks");
  o.note("15/15 pairs separated: " + std::to_string(by_signature) +
         " by (ranks, signature), (Psi3,Psi5) by partner ranks " + partners({Family::Psi3}) + " vs " +
         partners({Family::Psi5}));
}

void criterion3(Outcome& o) {
  PureState p0 = make_canonical({Family::Phi0Example}), p1 = make_canonical({Family::Phi1Example});
  if (sig(p0) != "[1,inf,inf]" || sig(p1) != "[1,inf,inf]") o.fail("signatures " + sig(p0) + " " + sig(p1));
  std::string r0 = frame_profile(p0)->str(), r1 = frame_profile(p1)->str();
  if (r0 != "generic 4; exceptional {1,3}") o.fail("phi0 profile " + r0);
  if (r1 != "generic 4; exceptional {1}") o.fail("phi1 profile " + r1);
  EquivalenceVerdict v = decide_equivalence(p0, p1);
  if (v.kind != EquivalenceVerdict::Kind::Inequivalent) o.fail("verdict " + v.kind_str());
  o.note("[1,inf,inf] both; {" + r0 + "} vs {" + r1 + "}; " + v.kind_str() + " by " + v.separating_invariant);
}

void criterion4(Outcome& o) {
  for (size_t m = 1; m <= 4; ++m) {
    expect_bracket(o, {Family::Upsilon1, m}, "[0,1,inf]");
    expect_bracket(o, {Family::Upsilon2, m}, "[0,0,inf]");
    if (sig(ClassLabel(Family::Upsilon1, m)) == sig(ClassLabel(Family::Upsilon2, m)))
      o.fail("M=" + std::to_string(m) + " not separated by signature");
  }
  o.note("M=1..4 brackets match and separate");
}

void criterion5(Outcome& o) {
  const std::vector<std::string> want = {"[0,2,inf]", "[0,inf,inf]", "[0,1,inf]",
                                         "[0,1,inf]", "[0,0,inf]",   "[0,0,inf]"};
  for (size_t m : {2, 3}) {
    for (int f = 0; f < 6; ++f) expect_bracket(o, {Family(static_cast<int>(Family::Theta0) + f), m}, want[f]);
    std::string p2 = partners({Family::Theta2, m}), p3 = partners({Family::Theta3, m});
    if (p2 == p3) o.fail("Theta2/Theta3 partner ranks agree at M=" + std::to_string(m));
    AppendixReport a = verify_appendix_theta45(m, 20, 5);
    if (!a.all_forced()) o.fail("appendix verifier did not force singularity at M=" + std::to_string(m));
    o.note("M=" + std::to_string(m) + ": partner " + p2 + " vs " + p3 + ", Theta4/Theta5 appendix forced");
  }
}

void criterion6(Outcome& o) {
  for (size_t m : {2, 3}) {
    AppendixReport a = verify_appendix_theta45(m, 100, 6);
    std::string line = "M=" + std::to_string(m);
    for (const auto& c : a.cases) {
      line += " " + c.split + " " + std::to_string(c.forced) + "/" + std::to_string(c.trials);
      if (c.forced != c.trials) o.fail(line + " " + c.failures.front());
    }
    o.note(line);
  }
}

void criterion7(Outcome& o) {
  std::vector<ClassLabel> labels{{Family::GHZ}, {Family::W}, {Family::Phi0Example}, {Family::Phi1Example}};
  for (Family f : {Family::Psi1, Family::Psi2, Family::Psi3, Family::Psi4, Family::Psi5, Family::Psi6})
    labels.emplace_back(f);
  for (size_t m = 1; m <= 3; ++m) {
    for (Family f : {Family::Upsilon0, Family::Upsilon1, Family::Upsilon2}) labels.emplace_back(f, m);
    for (int f = 0; f < 6; ++f) labels.emplace_back(Family(static_cast<int>(Family::Theta0) + f), m);
  }
  size_t checks = 0;
  for (const auto& l : labels) {
    PureState s = make_canonical(l);
    LocalRankProfile r = local_ranks(s);
    std::string sg = sig(s);
    auto prof = frame_profile(s);
    ClassLabel lab = classify(s, {false}).label;
    for (uint64_t seed = 0; seed < 100; ++seed) {
      PureState t = random_ilo(s.dims(), 1000 + seed).apply(s);
      ++checks;
      std::string where = l.str() + " seed " + std::to_string(1000 + seed);
      if (!(local_ranks(t) == r)) o.fail(where + " local ranks");
      if (sig(t) != sg) o.fail(where + " signature");
      auto pt = frame_profile(t);
      if (prof.has_value() != pt.has_value() || (prof && !(*prof == *pt))) o.fail(where + " pencil profile");
      if (!(classify(t, {false}).label == lab)) o.fail(where + " label");
    }
  }
  o.note(std::to_string(labels.size()) + " canonical states x 100 ILOs = " + std::to_string(checks) + " checks");
}

void criterion8(Outcome& o) {
  for (Expression e : {Expression::I, Expression::II, Expression::III, Expression::IV, Expression::V}) {
    std::map<std::string, size_t> census;
    for (uint64_t t = 0; t < 200; ++t) {
      FamilyParams p = random_family_params(e, 8000 + 1000 * static_cast<uint64_t>(e) + t);
      ClassLabel got = classify(make_expression(e, p), {false}).label;
      ++census[got.str()];
      if (got.family < Family::Psi1 || got.family > Family::Psi6) o.fail(expression_name(e) + " gave " + got.str());
      std::optional<Family> want;
      if (e == Expression::I) want = (p.a * p.b).is_zero() ? Family::Psi3 : Family::Psi1;
      if (e == Expression::II) want = p.b.is_zero() ? Family::Psi5 : Family::Psi6;
      if (e == Expression::V) want = Family::Psi2;
      if (want && got.family != *want)
        o.fail(expression_name(e) + " a=" + p.a.str() + " b=" + p.b.str() + " gave " + got.str());
    }
    std::string line = "(" + expression_name(e) + ")";
    for (const auto& [k, v] : census) line += " " + k + ":" + std::to_string(v);
    o.note(line);
  }
}

void criterion9(Outcome& o) {
  std::map<std::string, size_t> census;
  for (uint64_t t = 0; t < 500; ++t) {
    ClassLabel l = classify(random_full_rank_grid({2, 2, 3}, 9000 + t), {false}).label;
    if (!l.is_named()) o.fail("2x2x3 state labelled " + l.str());
    ++census[l.str()];
  }
  if (census.size() != 2) o.fail(std::to_string(census.size()) + " labels in the 2x2x3 census");
  std::string line = "2x2x3:";
  for (const auto& [k, v] : census) line += " " + k + ":" + std::to_string(v);
  o.note(line);
  for (size_t m : {2, 3}) {
    size_t hits = 0;
    for (uint64_t t = 0; t < 200; ++t) {
      ClassLabel l = classify(random_full_rank({2, m, 2 * m}, 9900 + t), {false}).label;
      if (l == ClassLabel(Family::Upsilon0, m))
        ++hits;
      else
        o.fail("2x" + std::to_string(m) + "x" + std::to_string(2 * m) + " state labelled " + l.str());
    }
    o.note("2x" + std::to_string(m) + "x" + std::to_string(2 * m) + ": Upsilon0 " + std::to_string(hits) + "/200");
  }
}

void criterion10(Outcome& o) {
  std::vector<ExactMatrix> grid;
  for (int code = 0; code < 81; ++code) {
    ExactMatrix m(2, 2);
    int c = code;
    for (size_t i = 0; i < 4; ++i, c /= 3) m(i / 2, i % 2) = c % 3 - 1;
    grid.push_back(m);
  }
  size_t compared = 0;
  for (const auto& x : grid)
    for (const auto& y : grid) {
      if (rank(ExactMatrix::from_rows({x.data(), y.data()})) < 2) continue;
      long a = 0, b = 0, c = 0;  // det(sX + tY) = a s^2 + b st + c t^2, entries are small integers
      auto v = [](const ExactMatrix& m, size_t i, size_t j) { return m(i, j).re().get_num().get_si(); };
      a = v(x, 0, 0) * v(x, 1, 1) - v(x, 0, 1) * v(x, 1, 0);
      c = v(y, 0, 0) * v(y, 1, 1) - v(y, 0, 1) * v(y, 1, 0);
      b = v(x, 0, 0) * v(y, 1, 1) + v(x, 1, 1) * v(y, 0, 0) - v(x, 0, 1) * v(y, 1, 0) - v(x, 1, 0) * v(y, 0, 1);
      std::string oracle = (a == 0 && b == 0 && c == 0) ? "inf" : (b * b - 4 * a * c == 0 ? "1" : "2");
      std::string got = count_product_states(MatrixSubspace(2, 2, {x, y})).str();
      ++compared;
      if (got != oracle) o.fail("X=" + x.str() + " Y=" + y.str() + " got " + got + " oracle " + oracle);
    }
  o.note(std::to_string(compared) + " subspaces agree with the discriminant oracle");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "GHZ/W signatures", 1, criterion1},
      {2, "Psi table and 15 pair separations", 10, criterion2},
      {3, "phi0/phi1 pencil rank profiles", 2, criterion3},
      {4, "Upsilon1/Upsilon2 brackets for M=1..4", 10, criterion4},
      {5, "Theta0..Theta5 for M=2,3", 60, criterion5},
      {6, "Theta4/Theta5 constraint verifier", 30, criterion6},
      {7, "ILO invariance suite", 300, criterion7},
      {8, "expression sweep", 120, criterion8},
      {9, "census checks", 120, criterion9},
      {10, "discriminant oracle on the {-1,0,1} grid", 60, criterion10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(c.budget_s) + " s");
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << std::fixed
              << std::setprecision(2) << secs << " s / " << std::setprecision(0) << c.budget_s << " s) "
              << o.detail.str() << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed ? 1 : 0;
}
