#include "slocc/range.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <sstream>

#include "slocc/error.hpp"
#include "slocc/pencil.hpp"
#include "slocc/poly.hpp"

namespace slocc {

namespace {

ExactMatrix vectorized(const std::vector<ExactMatrix>& basis, size_t rows, size_t cols) {
  ExactMatrix m(rows * cols, basis.size());
  for (size_t k = 0; k < basis.size(); ++k)
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m(i * cols + j, k) = basis[k](i, j);
  return m;
}

Eigen::MatrixXcd numeric(const ExactMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).to_complex();
  return out;
}

std::vector<std::complex<double>> to_std(const Eigen::VectorXcd& v) {
  return std::vector<std::complex<double>>(v.data(), v.data() + v.size());
}

std::vector<std::complex<double>> to_std(const ExactVector& v) {
  std::vector<std::complex<double>> out;
  for (const auto& x : v) out.push_back(x.to_complex());
  return out;
}

Eigen::VectorXcd numeric_nullvector(const Eigen::MatrixXcd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().col(m.cols() - 1);
}

/// Splits an exact rank-one matrix into u v^T.
std::pair<ExactVector, ExactVector> rank_one_factors(const ExactMatrix& x) {
  for (size_t i = 0; i < x.rows(); ++i)
    for (size_t j = 0; j < x.cols(); ++j) {
      if (x(i, j).is_zero()) continue;
      ExactVector u = x.col(j), v = x.row(i);
      ExactScalar inv = x(i, j).inverse();
      for (auto& e : v) e *= inv;
      return {u, v};
    }
  throw MathError("rank_one_factors of zero matrix");
}

ProductWitness exact_witness(ExactVector coeffs, const ExactMatrix& element) {
  ProductWitness w;
  w.left = normalize_projective(rank_one_factors(element).first);
  size_t lead = 0;
  while (w.left[lead].is_zero()) ++lead;
  w.right = element.row(lead);
  w.coefficients = std::move(coeffs);
  w.numeric_coefficients = to_std(w.coefficients);
  w.numeric_left = to_std(w.left);
  w.numeric_right = to_std(w.right);
  return w;
}

ProductWitness numeric_witness(std::vector<std::complex<double>> coeffs, const Eigen::MatrixXcd& element) {
  Eigen::Index bi = 0, bj = 0;
  element.cwiseAbs().maxCoeff(&bi, &bj);
  Eigen::VectorXcd u = element.col(bj);
  Eigen::VectorXcd v = element.row(bi).transpose() / element(bi, bj);
  ProductWitness w;
  w.exactness = Exactness::Numeric;
  w.numeric_coefficients = std::move(coeffs);
  w.numeric_left = to_std(u);
  w.numeric_right = to_std(v);
  return w;
}

void add_distinct(std::vector<ProductWitness>& ws, ProductWitness w) {
  if (w.exactness == Exactness::Exact)
    for (const auto& x : ws)
      if (x.exactness == Exactness::Exact && projectively_equal(x.left, w.left) && projectively_equal(x.right, w.right))
        return;
  ws.push_back(std::move(w));
}

void finalize(ProductCount& c) {
  for (const auto& w : c.witnesses)
    if (w.exactness == Exactness::Numeric) c.exactness = Exactness::Numeric;
}

ProductCount infinite(std::string family) {
  ProductCount c;
  c.kind = ProductCount::Kind::Infinite;
  c.family = std::move(family);
  return c;
}

}  // namespace

MatrixSubspace::MatrixSubspace(size_t rows, size_t cols, std::vector<ExactMatrix> basis)
    : rows_(rows), cols_(cols), basis_(std::move(basis)) {
  for (const auto& b : basis_)
    if (b.rows() != rows_ || b.cols() != cols_) throw InvalidArgument("subspace basis shape mismatch");
  if (rank(vectorized(basis_, rows_, cols_)) != basis_.size())
    throw InvalidArgument("subspace basis is linearly dependent");
}

ExactMatrix MatrixSubspace::combination(const ExactVector& c) const {
  if (c.size() != basis_.size()) throw InvalidArgument("coefficient count mismatch");
  ExactMatrix m(rows_, cols_);
  for (size_t k = 0; k < c.size(); ++k)
    if (!c[k].is_zero()) m += basis_[k] * c[k];
  return m;
}

std::optional<ExactVector> MatrixSubspace::coordinates(const ExactMatrix& m) const {
  ExactVector flat = m.data();
  return solve(vectorized(basis_, rows_, cols_), flat);
}

MatrixSubspace MatrixSubspace::transpose() const {
  std::vector<ExactMatrix> t;
  for (const auto& b : basis_) t.push_back(b.transpose());
  return MatrixSubspace(cols_, rows_, std::move(t));
}

namespace detail {

ProductCount count_by_pencil(const MatrixSubspace& sub) {
  if (sub.dim() != 2) throw InvalidArgument("pencil counting needs a 2-dimensional subspace");
  const ExactMatrix& m0 = sub.basis()[0];
  const ExactMatrix& m1 = sub.basis()[1];
  auto samples = [&](ProductCount& c) {
    for (const ExactVector& coeff : {ExactVector{1, 0}, ExactVector{0, 1}, ExactVector{1, 1}})
      add_distinct(c.witnesses, exact_witness(coeff, sub.combination(coeff)));
  };
  if (std::min(sub.rows(), sub.cols()) == 1) {
    ProductCount c = infinite("every element of the span");
    samples(c);
    return c;
  }
  Pencil p(m0, m1);
  std::vector<UniPoly> minors = minor_polynomials(p, 2);
  UniPoly g;
  for (const auto& mp : minors)
    if (!mp.is_zero()) g = g.is_zero() ? mp.monic() : poly_gcd(g, mp);
  if (g.is_zero()) {
    ProductCount c = infinite("every element of the span");
    samples(c);
    return c;
  }
  ProductCount c;
  RootSplit split = split_gaussian_rational_roots(g);
  for (const auto& t : split.exact) add_distinct(c.witnesses, exact_witness({1, t}, p.at(t)));
  if (split.remainder.degree() > 0) {
    Eigen::MatrixXcd a = numeric(m0), b = numeric(m1);
    for (const auto& nr : numeric_roots(split.remainder))
      c.witnesses.push_back(numeric_witness({1.0, nr.value}, a + nr.value * b));
  }
  if (rank(m1) <= 1) add_distinct(c.witnesses, exact_witness({0, 1}, m1));
  c.n = static_cast<size_t>(distinct_roots(g).distinct_root_count) + (rank(m1) <= 1 ? 1 : 0);
  finalize(c);
  return c;
}

ProductCount count_by_two_rows(const MatrixSubspace& sub) {
  if (sub.rows() != 2) throw InvalidArgument("two-row counting needs 2-row matrices");
  const size_t k = sub.dim(), K = sub.cols();
  if (k == 0) return ProductCount{};
  ExactMatrix a(K, k), b(K, k);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < K; ++j) {
      a(j, i) = sub.basis()[i](0, j);
      b(j, i) = sub.basis()[i](1, j);
    }
  Pencil q(b, a * ExactScalar(-1));  // B - t A
  std::vector<UniPoly> s = invariant_factors(q);
  size_t ra = rank(a);

  auto witness_at = [&](const ExactScalar& t, const ExactVector& c) {
    ExactVector u{1, t};
    return exact_witness(c, outer(u, a * c));
  };
  auto witness_at_infinity = [&](const ExactVector& c) { return exact_witness(c, outer(ExactVector{0, 1}, b * c)); };

  bool inf = s.size() < k || (k >= 2 && s[k - 2].degree() > 0) || ra + 2 <= k;
  if (inf) {
    ProductCount c = infinite(s.size() < k ? "nullspace of B - tA for every t"
                                           : "positive-dimensional nullspace at an exceptional point");
    std::vector<ExactScalar> pts{0, 1, -1, 2, Rational(1, 2)};
    if (!s.empty() && s.back().degree() > 0) {
      RootSplit split = split_gaussian_rational_roots(s.back());
      pts.insert(pts.end(), split.exact.begin(), split.exact.end());
    }
    for (const auto& t : pts)
      for (const auto& cv : nullspace(q.at(t))) add_distinct(c.witnesses, witness_at(t, cv));
    for (const auto& cv : nullspace(a)) add_distinct(c.witnesses, witness_at_infinity(cv));
    return c;
  }
  ProductCount c;
  const UniPoly& last = s[k - 1];
  if (last.degree() > 0) {
    RootSplit split = split_gaussian_rational_roots(last);
    for (const auto& t : split.exact) {
      auto ns = nullspace(q.at(t));
      if (ns.size() != 1) throw MathError("unexpected nullity at a simple exceptional point");
      add_distinct(c.witnesses, witness_at(t, ns[0]));
    }
    if (split.remainder.degree() > 0) {
      Eigen::MatrixXcd na = numeric(a), nb = numeric(b);
      for (const auto& nr : numeric_roots(split.remainder)) {
        Eigen::VectorXcd cv = numeric_nullvector(nb - nr.value * na);
        Eigen::VectorXcd u(2);
        u << 1.0, nr.value;
        Eigen::MatrixXcd element = u * (na * cv).transpose();
        c.witnesses.push_back(numeric_witness(to_std(cv), element));
      }
    }
    c.n += static_cast<size_t>(distinct_roots(last).distinct_root_count);
  }
  if (ra + 1 == k) {
    auto ns = nullspace(a);
    add_distinct(c.witnesses, witness_at_infinity(ns.at(0)));
    c.n += 1;
  }
  finalize(c);
  return c;
}

}  // namespace detail

namespace {

ProductWitness transpose_witness(ProductWitness w) {
  std::swap(w.left, w.right);
  std::swap(w.numeric_left, w.numeric_right);
  return w;
}

}  // namespace

ProductCount count_product_states(const MatrixSubspace& sub) {
  const size_t k = sub.dim(), rows = sub.rows(), cols = sub.cols();
  if (k == 0) return ProductCount{};
  if (k == 1) {
    ProductCount c;
    const ExactMatrix& m = sub.basis()[0];
    if (rank(m) == 1) {
      c.n = 1;
      c.witnesses.push_back(exact_witness({1}, m));
    }
    return c;
  }
  if (k == 2) return detail::count_by_pencil(sub);
  if (rows == 2) return detail::count_by_two_rows(sub);
  if (cols == 2) {
    ProductCount c = detail::count_by_two_rows(sub.transpose());
    for (auto& w : c.witnesses) w = transpose_witness(std::move(w));
    return c;
  }
  if (k > (rows - 1) * cols || k > rows * (cols - 1)) return infinite("saturated: a rank-one element for every factor");
  throw UnsupportedShape("product counting unsupported for a " + std::to_string(k) + "-dimensional subspace of " +
                         std::to_string(rows) + "x" + std::to_string(cols) + " matrices");
}

MatrixSubspace range_subspace(const PureState& s, Party absent) {
  auto [p, q] = complement(absent);
  return MatrixSubspace(s.dim(p), s.dim(q), adjoint_form(s, absent).adjoint_states);
}

namespace {

struct Frame {
  PureState compact;
  std::array<ExactMatrix, 3> back;  // E_X^{-1}
  bool identity = true;
};

Frame compact_frame(const PureState& s) {
  LocalRankProfile r = local_ranks(s);
  if (r.as_array() == s.dims()) return {s, {}, true};
  Compression c = compress(s);
  Frame f{c.state, {}, false};
  for (size_t x = 0; x < 3; ++x) f.back[x] = inverse(c.basis_change[x]);
  return f;
}

ExactVector lift(const ExactMatrix& back, const ExactVector& v) {
  ExactVector padded(back.cols());
  std::copy(v.begin(), v.end(), padded.begin());
  return back * padded;
}

std::vector<std::complex<double>> lift(const ExactMatrix& back, const std::vector<std::complex<double>>& v) {
  Eigen::VectorXcd padded = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(back.cols()));
  for (size_t i = 0; i < v.size(); ++i) padded(static_cast<Eigen::Index>(i)) = v[i];
  return to_std(Eigen::VectorXcd(numeric(back) * padded));
}

ProductWitness to_original(const ProductWitness& w, const Frame& f, Party absent, const MatrixSubspace& range) {
  if (f.identity) return w;
  auto [p, q] = complement(absent);
  ProductWitness out = w;
  out.numeric_left = lift(f.back[idx(p)], w.numeric_left);
  out.numeric_right = lift(f.back[idx(q)], w.numeric_right);
  if (w.exactness == Exactness::Exact) {
    out.left = lift(f.back[idx(p)], w.left);
    out.right = lift(f.back[idx(q)], w.right);
    auto coords = range.coordinates(outer(out.left, out.right));
    if (!coords) throw MathError("lifted witness left the range");
    out.coefficients = *coords;
    out.numeric_coefficients = to_std(out.coefficients);
  }
  return out;
}

}  // namespace

std::string SloccSignature::str() const {
  return "[" + counts[0].str() + "," + counts[1].str() + "," + counts[2].str() + "]";
}

bool operator==(const SloccSignature& x, const SloccSignature& y) {
  if (!(x.ranks == y.ranks)) return false;
  for (size_t k = 0; k < 3; ++k)
    if (!same_count(x.counts[k], y.counts[k])) return false;
  return true;
}

SloccSignature slocc_signature(const PureState& s) {
  SloccSignature sig;
  Frame f = compact_frame(s);
  sig.ranks = {f.compact.dims()[0], f.compact.dims()[1], f.compact.dims()[2]};
  for (Party x : {Party::A, Party::B, Party::C}) {
    try {
      ProductCount c = count_product_states(range_subspace(f.compact, x));
      if (!f.identity) {
        MatrixSubspace original = range_subspace(s, x);
        for (auto& w : c.witnesses) w = to_original(w, f, x, original);
      }
      sig.counts[idx(x)] = std::move(c);
    } catch (const UnsupportedShape& e) {
      throw UnsupportedShape(std::string("signature entry a_") + party_name(x) + ": " + e.what());
    }
  }
  return sig;
}

namespace {

/// Is there c with (B - tA) c = 0 or A c = 0 (t = infinity), c nonzero, and v.c != 0?
bool rank_one_with_nonzero_pairing(const ExactMatrix& a, const ExactMatrix& b, const ExactVector& v) {
  const size_t K = a.rows(), k = a.cols();
  // Point at infinity: [A; v^T] has larger rank than A.
  ExactMatrix av(K + 1, k);
  for (size_t i = 0; i < K; ++i)
    for (size_t j = 0; j < k; ++j) av(i, j) = a(i, j);
  for (size_t j = 0; j < k; ++j) av(K, j) = v[j];
  if (rank(av) > rank(a)) return true;

  Pencil q(b, a * ExactScalar(-1));
  ExactMatrix bv(K + 1, k), an(K + 1, k);
  for (size_t i = 0; i < K; ++i)
    for (size_t j = 0; j < k; ++j) {
      bv(i, j) = b(i, j);
      an(i, j) = -a(i, j);
    }
  for (size_t j = 0; j < k; ++j) bv(K, j) = v[j];
  Pencil aug(bv, an);
  FactorRootCounts cq = factor_root_counts(invariant_factors(q));
  FactorRootCounts ca = factor_root_counts(invariant_factors(aug));
  if (ca.generic_rank > cq.generic_rank) return true;
  for (size_t j = 0; j < cq.generic_rank; ++j)
    if (cq.distinct[j] != ca.distinct[j]) return true;
  return false;
}

}  // namespace

size_t partner_rank(const PureState& s, Party q, const ExactVector& v) {
  const size_t d = s.dim(q);
  if (v.size() != d || is_zero_vector(v)) throw InvalidArgument("partner_rank: bad factor vector");
  std::vector<ExactMatrix> sl = s.slices(q);
  if (d == 1) return rank(sl[0]);
  if (d == 2) {
    ExactVector f0(2), fp{v[1], -v[0]};
    if (!v[0].is_zero())
      f0[0] = v[0].inverse();
    else
      f0[1] = v[1].inverse();
    ExactMatrix p0 = sl[0] * f0[0] + sl[1] * f0[1];
    ExactMatrix p1 = sl[0] * fp[0] + sl[1] * fp[1];
    std::vector<UniPoly> inv = invariant_factors(Pencil(p0, p1));
    size_t nonconstant = 0;
    for (const auto& f : inv)
      if (f.degree() > 0) ++nonconstant;
    return inv.size() - nonconstant;
  }
  size_t rows = sl[0].rows(), cols = sl[0].cols();
  if (rows != 2 && cols == 2) {
    for (auto& m : sl) m = m.transpose();
    std::swap(rows, cols);
  }
  if (rows != 2) throw UnsupportedShape("partner rank needs a 2-dimensional party among the slices' parties");
  ExactMatrix a(cols, d), b(cols, d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < cols; ++j) {
      a(j, i) = sl[i](0, j);
      b(j, i) = sl[i](1, j);
    }
  return rank_one_with_nonzero_pairing(a, b, v) ? 1 : 2;
}

std::vector<std::pair<size_t, size_t>> partner_multiset(const PureState& compact, Party absent) {
  ProductCount c = count_product_states(range_subspace(compact, absent));
  std::vector<std::pair<size_t, size_t>> out;
  if (!c.is_finite()) return out;
  auto [p, q] = complement(absent);
  for (const auto& w : c.witnesses) {
    if (w.exactness != Exactness::Exact) throw NumericOnly("partner ranks need exact witnesses");
    out.emplace_back(partner_rank(compact, p, w.left), partner_rank(compact, q, w.right));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<WitnessPartner> product_witness_adjoint_profile(const PureState& s, Party absent) {
  Frame f = compact_frame(s);
  ProductCount c = count_product_states(range_subspace(f.compact, absent));
  if (!c.is_finite()) throw InvalidArgument("partner profile needs a finite product count");
  auto [p, q] = complement(absent);
  std::optional<MatrixSubspace> original;
  if (!f.identity) original = range_subspace(s, absent);
  std::vector<WitnessPartner> out;
  for (const auto& w : c.witnesses) {
    if (w.exactness != Exactness::Exact) throw NumericOnly("partner ranks need exact witnesses");
    WitnessPartner wp;
    wp.partner = {partner_rank(f.compact, p, w.left), partner_rank(f.compact, q, w.right)};
    wp.witness = f.identity ? w : to_original(w, f, absent, *original);
    out.push_back(std::move(wp));
  }
  return out;
}

}  // namespace slocc
