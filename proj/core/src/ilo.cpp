#include "slocc/ilo.hpp"

#include <random>
#include <sstream>

#include "slocc/error.hpp"

namespace slocc {

ExactMatrix ElementaryOp::matrix(size_t dim) const {
  if (target >= dim || (kind != Kind::Scale && source >= dim)) throw InvalidArgument("elementary index out of range");
  ExactMatrix m = ExactMatrix::identity(dim);
  switch (kind) {
    case Kind::Scale: m(target, target) = alpha; break;
    case Kind::Add: m(source, target) = alpha; break;
    case Kind::Swap:
      m(target, target) = 0;
      m(source, source) = 0;
      m(target, source) = 1;
      m(source, target) = 1;
      break;
  }
  return m;
}

std::string ElementaryOp::str() const {
  std::ostringstream os;
  char p = party_name(party);
  switch (kind) {
    case Kind::Scale: os << "scale_" << p << "(|" << target << ">, " << alpha << ")"; break;
    case Kind::Add: os << "add_" << p << "(|" << target << "> += (" << alpha << ")|" << source << ">)"; break;
    case Kind::Swap: os << "swap_" << p << "(|" << target << "> <-> |" << source << ">)"; break;
  }
  return os.str();
}

LocalOperatorTriple::LocalOperatorTriple(ExactMatrix va, ExactMatrix vb, ExactMatrix vc)
    : ops_{std::move(va), std::move(vb), std::move(vc)} {
  for (const auto& m : ops_) {
    if (!m.is_square()) throw InvalidArgument("local operator must be square");
    if (determinant(m).is_zero()) throw InvalidArgument("local operator must be invertible");
  }
}

LocalOperatorTriple LocalOperatorTriple::identity(const Dims& d) {
  return LocalOperatorTriple(ExactMatrix::identity(d[0]), ExactMatrix::identity(d[1]), ExactMatrix::identity(d[2]));
}

PureState LocalOperatorTriple::apply(const PureState& s) const {
  if (s.dims() != dims()) throw InvalidArgument("operator dims do not match state dims");
  PureState out = s;
  for (Party p : {Party::A, Party::B, Party::C}) {
    const ExactMatrix& m = ops_[idx(p)];
    if (m != ExactMatrix::identity(m.rows())) out = apply_local(out, p, m);
  }
  return out;
}

LocalOperatorTriple LocalOperatorTriple::inverse() const {
  return LocalOperatorTriple(slocc::inverse(ops_[0]), slocc::inverse(ops_[1]), slocc::inverse(ops_[2]));
}

bool LocalOperatorTriple::is_identity() const {
  for (const auto& m : ops_)
    if (m != ExactMatrix::identity(m.rows())) return false;
  return true;
}

LocalOperatorTriple compose(const LocalOperatorTriple& g, const LocalOperatorTriple& h) {
  if (g.dims() != h.dims()) throw InvalidArgument("compose: dims mismatch");
  return LocalOperatorTriple(g.op(Party::A) * h.op(Party::A), g.op(Party::B) * h.op(Party::B),
                             g.op(Party::C) * h.op(Party::C));
}

namespace {

LocalOperatorTriple single(const Dims& dims, Party party, ExactMatrix m) {
  std::array<ExactMatrix, 3> ops{ExactMatrix::identity(dims[0]), ExactMatrix::identity(dims[1]),
                                 ExactMatrix::identity(dims[2])};
  ops[idx(party)] = std::move(m);
  return LocalOperatorTriple(ops[0], ops[1], ops[2]);
}

}  // namespace

LocalOperatorTriple elementary_scale(const Dims& dims, Party party, size_t index, const ExactScalar& alpha) {
  if (alpha.is_zero()) throw InvalidArgument("scale factor must be nonzero");
  ElementaryOp op{party, ElementaryOp::Kind::Scale, index, index, alpha};
  return single(dims, party, op.matrix(dims[idx(party)]));
}

LocalOperatorTriple elementary_add(const Dims& dims, Party party, size_t target, size_t source,
                                   const ExactScalar& alpha) {
  if (target == source) throw InvalidArgument("add needs distinct target and source");
  ElementaryOp op{party, ElementaryOp::Kind::Add, target, source, alpha};
  return single(dims, party, op.matrix(dims[idx(party)]));
}

LocalOperatorTriple basis_swap(const Dims& dims, Party party, size_t i, size_t j) {
  if (i == j) throw InvalidArgument("swap needs distinct indices");
  ElementaryOp op{party, ElementaryOp::Kind::Swap, i, j, ExactScalar(1)};
  return single(dims, party, op.matrix(dims[idx(party)]));
}

namespace {

ExactScalar grid_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
  Rational re(num(rng), den(rng)), im(num(rng), den(rng));
  re.canonicalize();
  im.canonicalize();
  return ExactScalar(re, im);
}

ExactMatrix sample_invertible(size_t n, std::mt19937_64& rng) {
  while (true) {
    ExactMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m(i, j) = grid_scalar(rng);
    if (!determinant(m).is_zero()) return m;
  }
}

}  // namespace

ExactMatrix random_invertible(size_t n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_invertible(n, rng);
}

LocalOperatorTriple random_ilo(const Dims& dims, uint64_t seed) {
  std::mt19937_64 rng(seed);
  ExactMatrix a = sample_invertible(dims[0], rng);
  ExactMatrix b = sample_invertible(dims[1], rng);
  ExactMatrix c = sample_invertible(dims[2], rng);
  return LocalOperatorTriple(a, b, c);
}

LocalOperatorTriple word_to_triple(const Dims& dims, const IloWord& word) {
  std::array<ExactMatrix, 3> ops{ExactMatrix::identity(dims[0]), ExactMatrix::identity(dims[1]),
                                 ExactMatrix::identity(dims[2])};
  for (const auto& op : word) {
    size_t p = idx(op.party);
    ops[p] = op.matrix(dims[p]) * ops[p];
  }
  return LocalOperatorTriple(ops[0], ops[1], ops[2]);
}

PureState apply_word(const PureState& s, const IloWord& word) {
  PureState out = s;
  for (const auto& op : word) out = apply_local(out, op.party, op.matrix(s.dim(op.party)));
  return out;
}

IloWord elementary_factors(const ExactMatrix& v, Party party) {
  // Gauss-Jordan: E_k ... E_1 V = I, so V = E_1^{-1} ... E_k^{-1}, i.e.
  // E_k^{-1} is applied first.
  if (!v.is_square()) throw InvalidArgument("elementary_factors needs a square matrix");
  const size_t n = v.rows();
  ExactMatrix m = v;
  std::vector<ElementaryOp> ops;  // E_1, E_2, ...
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) throw MathError("elementary_factors of a singular matrix");
    if (p != c) {
      ElementaryOp sw{party, ElementaryOp::Kind::Swap, c, p, ExactScalar(1)};
      m = sw.matrix(n) * m;
      ops.push_back(sw);
    }
    if (!m(c, c).is_one()) {
      ElementaryOp sc{party, ElementaryOp::Kind::Scale, c, c, m(c, c).inverse()};
      m = sc.matrix(n) * m;
      ops.push_back(sc);
    }
    for (size_t i = 0; i < n; ++i) {
      if (i == c || m(i, c).is_zero()) continue;
      // Row i -= f row c is the add op with matrix entry (i, c) = -f.
      ElementaryOp ad{party, ElementaryOp::Kind::Add, c, i, -m(i, c)};
      m = ad.matrix(n) * m;
      ops.push_back(ad);
    }
  }
  IloWord word;
  for (size_t k = ops.size(); k-- > 0;) {
    ElementaryOp inv = ops[k];
    if (inv.kind == ElementaryOp::Kind::Scale) inv.alpha = inv.alpha.inverse();
    if (inv.kind == ElementaryOp::Kind::Add) inv.alpha = -inv.alpha;
    word.push_back(inv);
  }
  return word;
}

IloWord elementary_factors(const LocalOperatorTriple& g) {
  IloWord out;
  for (Party p : {Party::A, Party::B, Party::C}) {
    if (g.op(p) == ExactMatrix::identity(g.op(p).rows())) continue;
    IloWord w = elementary_factors(g.op(p), p);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

}  // namespace slocc
