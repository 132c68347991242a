#include "slocc/classifier.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

#include "slocc/error.hpp"

namespace slocc {

namespace {

/// Invertible V with V u = e_target.
ExactMatrix map_to_basis_vector(const ExactVector& u, size_t target) {
  size_t n = u.size();
  size_t p = 0;
  while (p < n && u[p].is_zero()) ++p;
  if (p == n) throw MathError("cannot map the zero vector");
  ExactMatrix w = ExactMatrix::identity(n);
  for (size_t i = 0; i < n; ++i) w(i, p) = u[i];
  if (p != target)
    for (size_t i = 0; i < n; ++i) std::swap(w(i, p), w(i, target));
  return inverse(w);
}

void append(IloWord& word, const ExactMatrix& m, Party p) {
  if (m == ExactMatrix::identity(m.rows())) return;
  IloWord w = elementary_factors(m, p);
  word.insert(word.end(), w.begin(), w.end());
}

PureState drop_term(const PureState& s, const Index3& term, const Dims& dims) {
  PureState::Amplitudes amps;
  for (const auto& [i, a] : s.amplitudes()) {
    if (i == term) continue;
    for (size_t k = 0; k < 3; ++k)
      if (i[k] >= dims[k]) throw MathError("residual leaves the reduced system");
    amps.emplace(i, a);
  }
  return PureState(dims, std::move(amps));
}

struct Candidate {
  ReductionStep step;
  int score;
};

int residual_score(const LocalRankProfile& r, size_t m, size_t n) {
  if (r.r_a == 2 && r.r_b == m - 1 && r.r_c == n - 1 && n - 1 <= 2 * (m - 1)) return 0;
  if (r.r_a == 2 && r.r_b == m) return 1;
  if (r.r_a == 2) return 2;
  return 3;
}

Candidate build_step(const PureState& s, const AdjointForm& af, const PureState& s1, const ProductWitness& w) {
  const size_t m = s.dims()[1], n = s.dims()[2];
  const ExactVector& c = w.coefficients;
  size_t k = c.size();
  while (k-- > 0 && c[k].is_zero()) {
  }
  ExactMatrix vc1 = ExactMatrix::identity(n);
  for (size_t i = 0; i < n; ++i) vc1(k, i) = c[i];
  ExactMatrix sw = ExactMatrix::identity(n);
  if (k != n - 1) sw = ElementaryOp{Party::C, ElementaryOp::Kind::Swap, k, n - 1, ExactScalar(1)}.matrix(n);
  ExactMatrix va1 = map_to_basis_vector(w.left, 0);
  ExactMatrix vb1 = map_to_basis_vector(w.right, m - 1);

  PureState s2 = apply_local(s1, Party::C, sw * vc1);
  s2 = apply_local(apply_local(s2, Party::A, va1), Party::B, vb1);
  const Index3 term{0, m - 1, n - 1};
  if (s2.amplitude(term) != ExactScalar(1)) throw MathError("extraction did not produce |0,M-1,N-1>");

  PureState res = drop_term(s2, term, {2, m, n - 1});
  ExactMatrix vb2 = ExactMatrix::identity(m), va2 = ExactMatrix::identity(2);
  // Residual B-support into e_0..e_{M-2}, fixing e_{M-1}.
  ExactMatrix ub = res.unfolding(Party::B);
  RowEchelon eb = row_reduce(ub.transpose());
  if (eb.rank() == m - 1) {
    ExactMatrix wm(m, m);
    for (size_t j = 0; j < m - 1; ++j)
      for (size_t i = 0; i < m; ++i) wm(i, j) = eb.reduced(j, i);
    wm(m - 1, m - 1) = 1;
    vb2 = inverse(wm);
  }
  ExactMatrix ua = res.unfolding(Party::A);
  if (rank(ua) == 1) {
    ExactVector a;
    for (size_t j = 0; j < ua.cols() && a.empty(); ++j)
      if (!ua(0, j).is_zero() || !ua(1, j).is_zero()) a = ua.col(j);
    ExactMatrix wm{{1, a[0]}, {0, a[1]}};
    va2 = inverse(wm);
  }
  PureState s3 = apply_local(apply_local(s2, Party::B, vb2), Party::A, va2);
  size_t mres = eb.rank() == m - 1 ? m - 1 : m;
  PureState residual = drop_term(s3, term, {2, mres, n - 1});

  ReductionStep step{s, w, {}, residual, local_ranks(residual)};
  append(step.ilo_word, af.basis_change, Party::C);
  append(step.ilo_word, vc1, Party::C);
  append(step.ilo_word, sw, Party::C);
  append(step.ilo_word, va1, Party::A);
  append(step.ilo_word, vb1, Party::B);
  append(step.ilo_word, vb2, Party::B);
  append(step.ilo_word, va2, Party::A);
  return {std::move(step), residual_score(local_ranks(residual), m, n)};
}

bool proof_applicable(const Dims& d) { return d[0] == 2 && d[1] >= 2 && d[1] <= d[2] && d[2] <= 2 * d[1]; }

/// True if the residual is terminal or its own AB-range has an exact witness.
bool reducible_further(const PureState& residual) {
  LocalRankProfile r = local_ranks(residual);
  if (r.r_a <= 1 || r.r_b <= 1 || r.r_c <= 1) return true;
  PureState f = normal_frame(residual).state;
  if (!proof_applicable(f.dims())) return true;
  ProductCount count = count_product_states(MatrixSubspace(2, f.dims()[1], adjoint_form(f, Party::C).adjoint_states));
  for (const auto& w : count.witnesses)
    if (w.exactness == Exactness::Exact) return true;
  return false;
}

}  // namespace

ReductionStep extract_and_reduce(const PureState& s) {
  const Dims& d = s.dims();
  if (local_ranks(s).as_array() != d)
    throw InvalidArgument("extract_and_reduce needs a compact state (dims = local ranks)");
  if (d[0] != 2) throw InvalidArgument("extract_and_reduce needs d_A = 2");
  const size_t m = d[1], n = d[2];
  if (m < 2 || m > n || n > 2 * m)
    throw InvalidArgument("extract_and_reduce needs 2 <= M <= N <= 2M, got 2x" + std::to_string(m) + "x" +
                          std::to_string(n));
  AdjointForm af = adjoint_form(s, Party::C);
  PureState s1 = apply_local(s, Party::C, af.basis_change);
  MatrixSubspace sub(2, m, af.adjoint_states);
  ProductCount count = count_product_states(sub);
  std::vector<const ProductWitness*> exact;
  for (const auto& w : count.witnesses)
    if (w.exactness == Exactness::Exact) exact.push_back(&w);
  if (exact.empty()) throw NumericOnly("no exact product witness in the AB-range");
  std::vector<Candidate> cands;
  for (const ProductWitness* w : exact) cands.push_back(build_step(s, af, s1, *w));
  std::stable_sort(cands.begin(), cands.end(),
                   [](const Candidate& x, const Candidate& y) { return x.score < y.score; });
  for (auto& c : cands)
    if (reducible_further(c.step.residual)) return std::move(c.step);
  return std::move(cands.front().step);
}

bool verify_step(const ReductionStep& step) {
  const Dims& d = step.input.dims();
  PureState lhs = apply_word(step.input, step.ilo_word);
  PureState::Amplitudes amps = step.residual.amplitudes();
  amps[{0, d[1] - 1, d[2] - 1}] += ExactScalar(1);
  PureState rhs(d, std::move(amps));
  return lhs.exactly_equal(rhs) && step.residual_ranks.r_b + 1 >= d[1];
}

namespace {

struct LibEntry {
  ClassLabel label;
  InvariantVector inv;
};

struct ShapeLibrary {
  std::vector<LibEntry> entries;
  bool needs_kernel = false;
};

const ShapeLibrary& shape_library(const Dims& dims) {
  static std::mutex mu;
  static std::map<Dims, ShapeLibrary> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(dims);
  if (it != cache.end()) return it->second;
  ShapeLibrary lib;
  for (const auto& label : canonical_library(dims)) {
    NormalFrame f = normal_frame(make_canonical(label));
    lib.entries.push_back({label, compute_invariants(f.state, true)});
  }
  for (size_t i = 0; i < lib.entries.size(); ++i)
    for (size_t j = i + 1; j < lib.entries.size(); ++j) {
      std::string diff = lib.entries[i].inv.first_difference(lib.entries[j].inv);
      if (diff.empty())
        throw MathError("library classes " + lib.entries[i].label.str() + " and " + lib.entries[j].label.str() +
                        " share every invariant");
      if (diff == "pencil kernel degrees") lib.needs_kernel = true;
    }
  return cache.emplace(dims, std::move(lib)).first->second;
}

}  // namespace

ClassificationResult classify(const PureState& s, const ClassifyOptions& opts) {
  ClassificationResult out;
  LocalRankProfile r = local_ranks(s);
  if (r.r_a == 1 || r.r_b == 1 || r.r_c == 1) {
    out.label = ClassLabel(Family::NotTrueTripartite);
    out.note = "local ranks " + r.str();
    return out;
  }
  NormalFrame f = normal_frame(s);
  out.permutation = f.perm;
  const Dims& fd = f.state.dims();
  std::vector<ClassLabel> labels = canonical_library(fd);
  if (labels.empty()) {
    out.label = ClassLabel(Family::Unknown);
    out.invariants = compute_invariants(f.state, fd[0] == 2);
    out.note = "shape " + std::to_string(fd[0]) + "x" + std::to_string(fd[1]) + "x" + std::to_string(fd[2]) +
               " is not covered by the canonical library";
    return out;
  }
  const ShapeLibrary& lib = shape_library(fd);
  out.invariants = compute_invariants(f.state, lib.needs_kernel);
  std::vector<const LibEntry*> matches;
  for (const auto& e : lib.entries)
    if (out.invariants->first_difference(e.inv).empty()) matches.push_back(&e);
  if (matches.size() == 1) {
    out.label = matches[0]->label;
  } else {
    out.label = ClassLabel(Family::Unknown);
    out.note = matches.empty() ? "no library class matches the invariant vector"
                               : "invariant vector matches several library classes";
  }
  if (opts.proof) {
    PureState cur = f.state;
    try {
      while (proof_applicable(cur.dims())) {
        ReductionStep step = extract_and_reduce(cur);
        const LocalRankProfile& rr = step.residual_ranks;
        bool more = rr.r_a > 1 && rr.r_b > 1 && rr.r_c > 1;
        PureState next = step.residual;
        out.proof.push_back(std::move(step));
        if (!more) break;
        cur = normal_frame(next).state;
      }
    } catch (const Error& e) {
      out.note += (out.note.empty() ? "" : "; ") + std::string("reduction stopped: ") + e.what();
    }
  }
  return out;
}

namespace {

using Vec2 = std::array<ExactScalar, 2>;

struct Point {
  Vec2 v;
  size_t rank;
};

std::optional<std::vector<Point>> exact_points(const PureState& s) {
  Pencil p(s.slice(Party::A, 0), s.slice(Party::A, 1));
  PencilRankProfile prof = pencil_rank_profile(p, true);
  if (prof.has_algebraic_points) return std::nullopt;
  std::vector<Point> out;
  for (const auto& pt : prof.points) {
    if (pt.kind == ExceptionalPoint::Kind::Infinity)
      out.push_back({{ExactScalar(0), ExactScalar(1)}, pt.rank});
    else
      out.push_back({{ExactScalar(1), *pt.location}, pt.rank});
  }
  return out;
}

ExactMatrix cols2(const Vec2& a, const Vec2& b) { return ExactMatrix{{a[0], b[0]}, {a[1], b[1]}}; }

bool parallel(const Vec2& a, const Vec2& b) { return (a[0] * b[1] - a[1] * b[0]).is_zero(); }

ExactScalar random_nonzero(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-7, 7), den(1, 5);
  while (true) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    if (sgn(q) != 0) return ExactScalar(q);
  }
}

/// Solves V_B S'_r = T_r Y for (V_B, Y) with S'_r = sum_a G_ra S_a.
std::optional<LocalOperatorTriple> solve_bc(const PureState& from, const PureState& to, const ExactMatrix& g,
                                            std::mt19937_64& rng) {
  const size_t m = from.dims()[1], n = from.dims()[2];
  std::array<ExactMatrix, 2> s{from.slice(Party::A, 0), from.slice(Party::A, 1)};
  std::array<ExactMatrix, 2> t{to.slice(Party::A, 0), to.slice(Party::A, 1)};
  std::array<ExactMatrix, 2> sp{s[0] * g(0, 0) + s[1] * g(0, 1), s[0] * g(1, 0) + s[1] * g(1, 1)};
  const size_t unknowns = m * m + n * n;
  ExactMatrix sys(2 * m * n, unknowns);
  for (size_t r = 0; r < 2; ++r)
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) {
        size_t row = r * m * n + i * n + j;
        for (size_t k = 0; k < m; ++k) sys(row, i * m + k) = sp[r](k, j);
        for (size_t l = 0; l < n; ++l) sys(row, m * m + l * n + j) = -t[r](i, l);
      }
  std::vector<ExactVector> ns = nullspace(sys);
  if (ns.empty()) return std::nullopt;
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int attempt = 0; attempt < 4; ++attempt) {
    ExactVector x(unknowns);
    for (const auto& b : ns) {
      ExactScalar c(coef(rng));
      if (ns.size() == 1) c = 1;
      for (size_t u = 0; u < unknowns; ++u)
        if (!b[u].is_zero()) x[u].add_product(c, b[u]);
    }
    ExactMatrix vb(m, m), y(n, n);
    for (size_t i = 0; i < m; ++i)
      for (size_t k = 0; k < m; ++k) vb(i, k) = x[i * m + k];
    for (size_t l = 0; l < n; ++l)
      for (size_t j = 0; j < n; ++j) y(l, j) = x[m * m + l * n + j];
    if (determinant(vb).is_zero() || determinant(y).is_zero()) continue;
    LocalOperatorTriple cand(g, vb, inverse(y).transpose());
    if (cand.apply(from) == to) return cand;
  }
  return std::nullopt;
}

}  // namespace

std::optional<LocalOperatorTriple> find_equivalence(const PureState& from, const PureState& to, uint64_t seed) {
  if (from.dims() != to.dims() || from.dims()[0] != 2) return std::nullopt;
  if (from == to) return LocalOperatorTriple::identity(from.dims());
  auto pf = exact_points(from), pt = exact_points(to);
  if (!pf || !pt || pf->size() != pt->size()) return std::nullopt;
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  const size_t n = pf->size();
  if (n > 6) return std::nullopt;
  std::vector<size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ranks_ok = true;
    for (size_t i = 0; i < n && ranks_ok; ++i) ranks_ok = (*pt)[i].rank == (*pf)[sigma[i]].rank;
    if (!ranks_ok) continue;
    // H maps target points q_i to source points p_sigma(i); V_A = H^T.
    std::vector<ExactMatrix> hs;
    if (n >= 3) {
      const Vec2 &q1 = (*pt)[0].v, &q2 = (*pt)[1].v, &q3 = (*pt)[2].v;
      const Vec2 &p1 = (*pf)[sigma[0]].v, &p2 = (*pf)[sigma[1]].v, &p3 = (*pf)[sigma[2]].v;
      ExactMatrix qi = inverse(cols2(q1, q2)), pi = inverse(cols2(p1, p2));
      ExactVector xy = qi * ExactVector{q3[0], q3[1]}, xy2 = pi * ExactVector{p3[0], p3[1]};
      if (xy[0].is_zero() || xy[1].is_zero() || xy2[0].is_zero() || xy2[1].is_zero()) continue;
      ExactMatrix h = cols2(p1, p2) * ExactMatrix{{xy2[0] / xy[0], 0}, {0, xy2[1] / xy[1]}} * qi;
      bool ok = true;
      for (size_t i = 3; i < n && ok; ++i) {
        ExactVector img = h * ExactVector{(*pt)[i].v[0], (*pt)[i].v[1]};
        ok = parallel({img[0], img[1]}, (*pf)[sigma[i]].v);
      }
      if (ok) hs.push_back(h);
    } else {
      for (int attempt = 0; attempt < 3; ++attempt) {
        ExactMatrix h;
        if (n == 2) {
          const Vec2 &q1 = (*pt)[0].v, &q2 = (*pt)[1].v;
          const Vec2 &p1 = (*pf)[sigma[0]].v, &p2 = (*pf)[sigma[1]].v;
          ExactScalar mu = random_nonzero(rng);
          h = cols2(p1, {p2[0] * mu, p2[1] * mu}) * inverse(cols2(q1, q2));
        } else if (n == 1) {
          const Vec2& q1 = (*pt)[0].v;
          const Vec2& p1 = (*pf)[sigma[0]].v;
          Vec2 q2{random_nonzero(rng), random_nonzero(rng)}, p2{random_nonzero(rng), random_nonzero(rng)};
          if (parallel(q1, q2) || parallel(p1, p2)) continue;
          h = cols2(p1, p2) * inverse(cols2(q1, q2));
        } else {
          h = ExactMatrix{{random_nonzero(rng), random_nonzero(rng)}, {random_nonzero(rng), random_nonzero(rng)}};
          if (determinant(h).is_zero()) continue;
        }
        hs.push_back(h);
      }
    }
    for (const auto& h : hs)
      if (auto sol = solve_bc(from, to, h.transpose(), rng)) return sol;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return std::nullopt;
}

std::optional<CanonicalWitness> canonical_witness(const PureState& s, const ClassLabel& label) {
  if (!label.is_named()) return std::nullopt;
  NormalFrame f = normal_frame(s);
  PureState canon = make_canonical(label);
  if (f.state.dims() != canon.dims()) return std::nullopt;
  auto w = find_equivalence(f.state, canon);
  if (!w) return std::nullopt;
  CanonicalWitness out{lift_from_frame(f, {w->op(Party::A), w->op(Party::B), w->op(Party::C)}), unframe(f, canon)};
  if (!(out.ilo.apply(s) == out.target)) throw MathError("lifted canonical witness failed verification");
  return out;
}

std::string EquivalenceVerdict::kind_str() const {
  switch (kind) {
    case Kind::Equivalent: return "Equivalent";
    case Kind::Inequivalent: return "Inequivalent";
    default: return "Undecided";
  }
}

EquivalenceVerdict decide_equivalence(const PureState& s1_in, const PureState& s2_in) {
  Dims d;
  for (size_t k = 0; k < 3; ++k) d[k] = std::max(s1_in.dims()[k], s2_in.dims()[k]);
  PureState s1 = pad(s1_in, d), s2 = pad(s2_in, d);
  EquivalenceVerdict v;
  auto inequivalent = [&](std::string what, std::string detail) {
    v.kind = EquivalenceVerdict::Kind::Inequivalent;
    v.separating_invariant = std::move(what);
    v.detail = std::move(detail);
    return v;
  };
  if (s1 == s2) {
    v.kind = EquivalenceVerdict::Kind::Equivalent;
    v.witness = LocalOperatorTriple::identity(d);
    v.detail = "states are equal up to a global scalar";
    return v;
  }
  LocalRankProfile r1 = local_ranks(s1), r2 = local_ranks(s2);
  if (!(r1 == r2)) return inequivalent("local ranks", r1.str() + " vs " + r2.str());
  SloccSignature g1 = slocc_signature(s1), g2 = slocc_signature(s2);
  if (!(g1 == g2)) return inequivalent("signature", g1.str() + " vs " + g2.str());

  NormalFrame f1 = normal_frame(s1), f2 = normal_frame(s2);
  if (f1.state.dims()[0] == 2) {
    InvariantVector i1 = compute_invariants(f1.state, true), i2 = compute_invariants(f2.state, true);
    std::string diff = i1.first_difference(i2);
    if (!diff.empty()) {
      std::string detail = i1.str() + " vs " + i2.str();
      return inequivalent(diff, detail);
    }
  }
  ClassificationResult c1 = classify(s1, {false}), c2 = classify(s2, {false});
  if (c1.label.is_named() && c2.label.is_named()) {
    if (!(c1.label == c2.label)) return inequivalent("class label", c1.label.str() + " vs " + c2.label.str());
    auto w1 = canonical_witness(s1, c1.label);
    auto w2 = canonical_witness(s2, c2.label);
    if (w1 && w2) {
      LocalOperatorTriple w = compose(w2->ilo.inverse(), w1->ilo);
      if (w.apply(s1) == s2) {
        v.kind = EquivalenceVerdict::Kind::Equivalent;
        v.witness = w;
        v.detail = "both states are in class " + c1.label.str();
        return v;
      }
    }
  }
  if (f1.state.dims() == f2.state.dims() && f1.state.dims()[0] == 2) {
    if (auto w = find_equivalence(f1.state, f2.state)) {
      // frame1 -> frame2, lifted: s1 -> unframe(f1, frame2); then undo f2.
      LocalOperatorTriple g = lift_from_frame(f1, {w->op(Party::A), w->op(Party::B), w->op(Party::C)});
      LocalOperatorTriple back =
          lift_from_frame(f2, {ExactMatrix::identity(f2.state.dims()[0]), ExactMatrix::identity(f2.state.dims()[1]),
                               ExactMatrix::identity(f2.state.dims()[2])});
      LocalOperatorTriple total = compose(back.inverse(), g);
      if (total.apply(s1) == s2) {
        v.kind = EquivalenceVerdict::Kind::Equivalent;
        v.witness = total;
        v.detail = "direct witness search";
        return v;
      }
    }
  }
  v.kind = EquivalenceVerdict::Kind::Undecided;
  v.detail = "all computed invariants agree but no exact witness was found";
  return v;
}

}  // namespace slocc
