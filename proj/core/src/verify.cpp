#include "slocc/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "slocc/classifier.hpp"
#include "slocc/error.hpp"
#include "slocc/invariants.hpp"
#include "slocc/range.hpp"

namespace slocc {

namespace {

ExactScalar random_gaussian(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
  while (true) {
    Rational re(num(rng), den(rng)), im(num(rng), den(rng));
    re.canonicalize();
    im.canonicalize();
    ExactScalar s(re, im);
    if (!nonzero || !s.is_zero()) return s;
  }
}

/// Zero-pattern certificate: some k rows of `rows` whose possible support spans fewer than k columns.
std::optional<std::string> dependent_rows(const std::vector<std::vector<bool>>& possible,
                                          const std::vector<size_t>& row_names) {
  const size_t r = possible.size(), c = possible.empty() ? 0 : possible[0].size();
  for (size_t mask = 1; mask < (size_t{1} << r); ++mask) {
    std::vector<size_t> cols;
    size_t k = 0;
    for (size_t j = 0; j < c; ++j) {
      bool any = false;
      for (size_t i = 0; i < r; ++i)
        if ((mask >> i & 1) && possible[i][j]) any = true;
      if (any) cols.push_back(j);
    }
    for (size_t i = 0; i < r; ++i) k += mask >> i & 1;
    if (cols.size() < k) {
      std::ostringstream os;
      os << "rows {";
      bool first = true;
      for (size_t i = 0; i < r; ++i)
        if (mask >> i & 1) {
          os << (first ? "" : ",") << row_names[i];
          first = false;
        }
      os << "} of V_B supported on columns {";
      for (size_t j = 0; j < cols.size(); ++j) os << (j ? "," : "") << cols[j];
      os << "}";
      return os.str();
    }
  }
  return std::nullopt;
}

/// Per-unknown flag: some solution has this unknown nonzero.
std::vector<bool> possibly_nonzero(const std::vector<ExactVector>& basis, size_t unknowns) {
  std::vector<bool> out(unknowns, false);
  for (const auto& b : basis)
    for (size_t u = 0; u < unknowns; ++u)
      if (!b[u].is_zero()) out[u] = true;
  return out;
}

/// Maximum bipartite matching size on the allowed pattern.
size_t structural_rank(const std::vector<std::vector<bool>>& allowed) {
  const size_t n = allowed.size(), c = n ? allowed[0].size() : 0;
  std::vector<long> match(c, -1);
  size_t size = 0;
  for (size_t r = 0; r < n; ++r) {
    std::vector<bool> seen(c, false);
    std::function<bool(size_t)> augment = [&](size_t row) {
      for (size_t j = 0; j < c; ++j) {
        if (!allowed[row][j] || seen[j]) continue;
        seen[j] = true;
        if (match[j] < 0 || augment(static_cast<size_t>(match[j]))) {
          match[j] = static_cast<long>(row);
          return true;
        }
      }
      return false;
    };
    if (augment(r)) ++size;
  }
  return size;
}

void literal_system(size_t m, const ExactMatrix& va, AppendixDraw& out) {
  const ExactScalar &w = va(0, 0), &x = va(0, 1), &y = va(1, 0), &z = va(1, 1);
  const size_t cols = m + 2, unknowns = 3 * cols;
  auto at = [&](size_t row, size_t col) { return (row - (m - 1)) * cols + col; };
  std::vector<ExactVector> eqs;
  auto eq = [&](std::initializer_list<std::pair<ExactScalar, size_t>> terms) {
    ExactVector e(unknowns);
    for (const auto& [c, u] : terms) e[u] += c;
    eqs.push_back(std::move(e));
  };
  std::vector<size_t> s1;
  for (size_t i = 1; i + 2 <= m; ++i) s1.push_back(i);
  s1.push_back(m);
  s1.push_back(m + 1);
  for (size_t i : s1) {
    eq({{y, at(m + 1, i)}, {-w, at(m, i)}});
    eq({{y, at(m, i)}, {-w, at(m - 1, i)}});
  }
  for (size_t i = 0; i < m; ++i) {
    eq({{z, at(m + 1, i)}, {-x, at(m, i)}});
    eq({{z, at(m, i)}, {-x, at(m - 1, i)}});
  }
  eq({{z, at(m + 1, m)}, {y, at(m + 1, m - 1)}, {-x, at(m, m)}, {-w, at(m, m - 1)}});
  eq({{z, at(m, m)}, {y, at(m, m - 1)}, {-x, at(m - 1, m)}, {-w, at(m - 1, m - 1)}});

  ExactMatrix sys = ExactMatrix::from_rows(eqs);
  std::vector<bool> nz = possibly_nonzero(nullspace(sys), unknowns);
  std::vector<std::vector<bool>> possible(3, std::vector<bool>(cols));
  for (size_t r = 0; r < 3; ++r)
    for (size_t c = 0; c < cols; ++c) {
      possible[r][c] = nz[r * cols + c];
      if (!possible[r][c]) out.literal_zeros.emplace_back(r + m - 1, c);
    }
  auto cert = dependent_rows(possible, {m - 1, m, m + 1});
  out.literal_forced = cert.has_value();
  if (cert) out.certificate = "literal: " + *cert;
}

void direct_system(size_t m, const ExactMatrix& va, AppendixDraw& out, std::mt19937_64& rng) {
  PureState s4 = make_canonical({Family::Theta4, m}), s5 = make_canonical({Family::Theta5, m});
  const size_t db = m + 2;
  std::vector<ExactMatrix> r4 = adjoint_form(s4, Party::C).adjoint_states;
  std::vector<ExactMatrix> r5 = adjoint_form(s5, Party::C).adjoint_states;
  // Annihilators of span(r5) in the 2*db space.
  ExactMatrix basis5(r5.size(), 2 * db);
  for (size_t k = 0; k < r5.size(); ++k)
    for (size_t a = 0; a < 2; ++a)
      for (size_t b = 0; b < db; ++b) basis5(k, a * db + b) = r5[k](a, b);
  std::vector<ExactVector> ann = nullspace(basis5);
  const size_t unknowns = db * db;
  std::vector<ExactVector> eqs;
  for (const auto& xm : r4) {
    ExactMatrix vx = va * xm;
    for (const auto& yv : ann) {
      ExactVector e(unknowns);
      for (size_t b = 0; b < db; ++b)
        for (size_t bp = 0; bp < db; ++bp)
          for (size_t a = 0; a < 2; ++a)
            if (!yv[a * db + b].is_zero() && !vx(a, bp).is_zero())
              e[b * db + bp].add_product(yv[a * db + b], vx(a, bp));
      eqs.push_back(std::move(e));
    }
  }
  std::vector<ExactVector> sol = nullspace(ExactMatrix::from_rows(eqs));
  std::vector<bool> nz = possibly_nonzero(sol, unknowns);
  std::vector<std::vector<bool>> allowed(db, std::vector<bool>(db));
  for (size_t i = 0; i < db; ++i)
    for (size_t j = 0; j < db; ++j) allowed[i][j] = nz[i * db + j];
  size_t sr = structural_rank(allowed);
  std::string cert;
  if (sr < db) {
    out.direct_forced = true;
    cert = "direct: structural rank " + std::to_string(sr) + " < " + std::to_string(db);
  } else {
    std::uniform_int_distribution<long> coef(-9, 9);
    for (int attempt = 0; attempt < 4 && !out.counterexample; ++attempt) {
      ExactMatrix vb(db, db);
      for (const auto& b : sol) {
        ExactScalar c(coef(rng));
        for (size_t u = 0; u < unknowns; ++u)
          if (!b[u].is_zero()) vb(u / db, u % db).add_product(c, b[u]);
      }
      if (!determinant(vb).is_zero()) out.counterexample = true;
    }
    cert = out.counterexample ? "direct: nonsingular V_B found"
                              : "direct: singular at samples, no zero-pattern certificate";
  }
  out.certificate += (out.certificate.empty() ? "" : "; ") + cert;
}

}  // namespace

AppendixDraw appendix_draw(size_t m, const ExactMatrix& v_a) {
  if (m < 2) throw InvalidArgument("appendix verifier needs M >= 2");
  if (v_a.rows() != 2 || v_a.cols() != 2 || determinant(v_a).is_zero())
    throw InvalidArgument("V_A must be an invertible 2x2 matrix");
  AppendixDraw out;
  out.v_a = v_a;
  literal_system(m, v_a, out);
  std::mt19937_64 rng(m);
  direct_system(m, v_a, out, rng);
  return out;
}

bool AppendixReport::all_forced() const {
  for (const auto& c : cases)
    if (c.forced != c.trials) return false;
  return !cases.empty();
}

AppendixReport verify_appendix_theta45(size_t m, size_t trials, uint64_t seed) {
  if (m < 2) throw InvalidArgument("appendix verifier needs M >= 2, got " + std::to_string(m));
  AppendixReport rep;
  rep.m = m;
  rep.seed = seed;
  const char* splits[] = {"wxyz!=0", "x=0", "y=0"};
  for (size_t sidx = 0; sidx < 3; ++sidx) {
    AppendixCase c;
    c.split = splits[sidx];
    c.trials = trials;
    for (size_t t = 0; t < trials; ++t) {
      std::mt19937_64 rng(seed * 1000003ULL + sidx * 7919ULL + t);
      ExactMatrix va(2, 2);
      do {
        ExactScalar w = random_gaussian(rng, true), x = random_gaussian(rng, true);
        ExactScalar y = random_gaussian(rng, true), z = random_gaussian(rng, true);
        if (sidx == 1) x = 0, y = random_gaussian(rng, false);
        if (sidx == 2) y = 0, x = random_gaussian(rng, false);
        va = ExactMatrix{{w, x}, {y, z}};
      } while (determinant(va).is_zero());
      AppendixDraw d;
      d.v_a = va;
      literal_system(m, va, d);
      direct_system(m, va, d, rng);
      if (d.literal_forced && d.direct_forced)
        ++c.forced;
      else
        c.failures.push_back("trial " + std::to_string(t) + " V_A=" + va.str() + ": " + d.certificate);
    }
    rep.cases.push_back(std::move(c));
  }
  return rep;
}

bool VerifyReport::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

std::vector<std::string> separating_invariants(const PureState& s1_in, const PureState& s2_in) {
  Dims d;
  for (size_t k = 0; k < 3; ++k) d[k] = std::max(s1_in.dims()[k], s2_in.dims()[k]);
  PureState s1 = pad(s1_in, d), s2 = pad(s2_in, d);
  if (!(local_ranks(s1) == local_ranks(s2))) return {"local ranks"};
  NormalFrame f1 = normal_frame(s1), f2 = normal_frame(s2);
  bool kernel = f1.state.dims()[0] == 2;
  return compute_invariants(f1.state, kernel).differences(compute_invariants(f2.state, kernel));
}

PureState random_full_rank_grid(const Dims& dims, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> v(-1, 1);
  while (true) {
    PureState::Amplitudes amps;
    for (size_t i = 0; i < dims[0]; ++i)
      for (size_t j = 0; j < dims[1]; ++j)
        for (size_t k = 0; k < dims[2]; ++k)
          if (int x = v(rng); x != 0) amps.emplace(Index3{i, j, k}, ExactScalar(x));
    if (amps.empty()) continue;
    PureState s(dims, std::move(amps));
    if (local_ranks(s).as_array() == dims) return s;
  }
}

PureState random_full_rank(const Dims& dims, uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    PureState::Amplitudes amps;
    for (size_t i = 0; i < dims[0]; ++i)
      for (size_t j = 0; j < dims[1]; ++j)
        for (size_t k = 0; k < dims[2]; ++k)
          if (ExactScalar x = random_gaussian(rng, false); !x.is_zero()) amps.emplace(Index3{i, j, k}, x);
    if (amps.empty()) continue;
    PureState s(dims, std::move(amps));
    if (local_ranks(s).as_array() == dims) return s;
  }
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out.empty() ? "none" : out;
}

void bracket_checks(VerifyReport& rep, const std::vector<ClassLabel>& labels) {
  for (const auto& l : labels) {
    std::string got = slocc_signature(make_canonical(l)).str(), want = expected_bracket(l);
    rep.checks.push_back({"bracket " + l.str(), got == want, got + (got == want ? "" : " expected " + want)});
  }
}

/// Pairwise separation; `expect` names the invariant that must differ for a pair.
void pair_checks(VerifyReport& rep, const std::vector<ClassLabel>& labels,
                 const std::function<std::string(const ClassLabel&, const ClassLabel&)>& expect) {
  for (size_t i = 0; i < labels.size(); ++i)
    for (size_t j = i + 1; j < labels.size(); ++j) {
      std::vector<std::string> diffs = separating_invariants(make_canonical(labels[i]), make_canonical(labels[j]));
      std::string want = expect(labels[i], labels[j]);
      bool ok = std::find(diffs.begin(), diffs.end(), want) != diffs.end() ||
                (want == "signature" && std::find(diffs.begin(), diffs.end(), "local ranks") != diffs.end());
      rep.checks.push_back(
          {"separate " + labels[i].str() + " " + labels[j].str(), ok, "by " + want + "; differing: " + join(diffs)});
    }
}

std::string census_str(const std::map<std::string, size_t>& census) {
  std::string out;
  for (const auto& [k, v] : census) out += (out.empty() ? "" : ", ") + k + ": " + std::to_string(v);
  return out;
}

void expression_sweep(VerifyReport& rep, size_t trials, uint64_t seed) {
  for (Expression e : {Expression::I, Expression::II, Expression::III, Expression::IV, Expression::V}) {
    std::map<std::string, size_t> census;
    std::vector<std::string> bad;
    for (size_t t = 0; t < trials; ++t) {
      FamilyParams p = random_family_params(e, seed * 1000003ULL + static_cast<uint64_t>(e) * 104729ULL + t);
      ClassLabel got = classify(make_expression(e, p), {false}).label;
      census[got.str()]++;
      std::optional<Family> want;
      if (e == Expression::I) want = (p.a * p.b).is_zero() ? Family::Psi3 : Family::Psi1;
      if (e == Expression::II) want = p.b.is_zero() ? Family::Psi5 : Family::Psi6;
      if (e == Expression::V) want = Family::Psi2;
      bool in_psi = got.family >= Family::Psi1 && got.family <= Family::Psi6;
      if (!in_psi || (want && got.family != *want))
        bad.push_back("a=" + p.a.str() + " b=" + p.b.str() + " -> " + got.str());
    }
    rep.checks.push_back({"expression (" + expression_name(e) + ") sweep", bad.empty(),
                          census_str(census) + (bad.empty() ? "" : "; mismatches: " + join(bad))});
  }
}

std::vector<size_t> m_range(std::optional<size_t> m, size_t lo, size_t hi, std::vector<size_t> dflt,
                            const std::string& what) {
  if (!m) return dflt;
  if (*m < lo || *m > hi)
    throw InvalidArgument(what + " supports M in " + std::to_string(lo) + ".." + std::to_string(hi) + ", got " +
                          std::to_string(*m));
  return {*m};
}

void appendix_checks(VerifyReport& rep, size_t m, size_t trials, uint64_t seed) {
  AppendixReport a = verify_appendix_theta45(m, trials, seed);
  for (const auto& c : a.cases) {
    std::string detail = "forced singular: " + std::to_string(c.forced) + "/" + std::to_string(c.trials);
    if (!c.failures.empty()) detail += "; first failure " + c.failures.front();
    rep.checks.push_back({"appendix M=" + std::to_string(m) + " " + c.split, c.forced == c.trials, detail});
  }
}

}  // namespace

VerifyReport verify_theorem(const std::string& which, std::optional<size_t> m, size_t trials, uint64_t seed) {
  VerifyReport rep;
  rep.which = which;
  rep.m = m;
  rep.trials = trials;
  rep.seed = seed;
  if (which == "2") {
    std::vector<ClassLabel> psi;
    for (Family f : {Family::Psi1, Family::Psi2, Family::Psi3, Family::Psi4, Family::Psi5, Family::Psi6})
      psi.emplace_back(f);
    bracket_checks(rep, psi);
    pair_checks(rep, psi, [](const ClassLabel& x, const ClassLabel& y) {
      return x.family == Family::Psi3 && y.family == Family::Psi5 ? "partner-rank multiset" : "signature";
    });
    expression_sweep(rep, trials, seed);
  } else if (which == "3") {
    for (size_t mm : m_range(m, 1, 4, {1, 2, 3, 4}, "theorem 3")) {
      std::vector<ClassLabel> ls{{Family::Upsilon1, mm}, {Family::Upsilon2, mm}};
      bracket_checks(rep, ls);
      pair_checks(rep, ls, [](const ClassLabel&, const ClassLabel&) { return "signature"; });
    }
  } else if (which == "4") {
    for (size_t mm : m_range(m, 2, 3, {2, 3}, "theorem 4")) {
      std::vector<ClassLabel> ls;
      for (int f = 0; f < 6; ++f) ls.emplace_back(Family(static_cast<int>(Family::Theta0) + f), mm);
      bracket_checks(rep, ls);
      pair_checks(rep, ls, [](const ClassLabel& x, const ClassLabel& y) -> std::string {
        if (x.family == Family::Theta2 && y.family == Family::Theta3) return "partner-rank multiset";
        if (x.family == Family::Theta4 && y.family == Family::Theta5) return "pencil kernel degrees";
        return "signature";
      });
      appendix_checks(rep, mm, trials, seed);
    }
  } else if (which == "appendix") {
    for (size_t mm : m_range(m, 2, 6, {2, 3}, "appendix verifier")) appendix_checks(rep, mm, trials, seed);
  } else if (which == "upsilon0") {
    for (size_t mm : m_range(m, 2, 4, {2, 3}, "upsilon0 census")) {
      ClassLabel want(Family::Upsilon0, mm);
      bracket_checks(rep, {want});
      std::map<std::string, size_t> census;
      for (size_t t = 0; t < trials; ++t)
        census[classify(random_full_rank({2, mm, 2 * mm}, seed * 1000003ULL + t), {false}).label.str()]++;
      bool ok = census.size() == 1 && census.begin()->first == want.str();
      rep.checks.push_back({"census 2x" + std::to_string(mm) + "x" + std::to_string(2 * mm), ok, census_str(census)});
    }
  } else if (which == "two_by_two_by_three") {
    if (m) throw InvalidArgument("two_by_two_by_three takes no M");
    std::map<std::string, size_t> census;
    bool named = true;
    for (size_t t = 0; t < trials; ++t) {
      ClassLabel l = classify(random_full_rank_grid({2, 2, 3}, seed * 1000003ULL + t), {false}).label;
      named = named && l.is_named();
      census[l.str()]++;
    }
    rep.checks.push_back({"census 2x2x3", named && census.size() == 2, census_str(census)});
  } else {
    throw InvalidArgument("unknown theorem '" + which +
                          "' (expected 2, 3, 4, upsilon0, two_by_two_by_three, appendix)");
  }
  return rep;
}

}  // namespace slocc
