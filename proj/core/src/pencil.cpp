#include "slocc/pencil.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "slocc/error.hpp"

namespace slocc {

Pencil::Pencil(ExactMatrix a, ExactMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.rows() != b_.rows() || a_.cols() != b_.cols()) throw InvalidArgument("pencil matrices must have equal shapes");
}

ExactMatrix Pencil::at(const ExactScalar& t) const { return a_ + b_ * t; }

namespace {

void subsets(size_t n, size_t k, std::vector<std::vector<size_t>>& out) {
  std::vector<size_t> cur(k);
  for (size_t i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return;
  while (true) {
    out.push_back(cur);
    size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++cur[i - 1];
    for (size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
}

UniPoly interpolate(const std::vector<ExactScalar>& xs, const std::vector<ExactScalar>& ys) {
  // Newton divided differences.
  size_t n = xs.size();
  std::vector<ExactScalar> dd = ys;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  UniPoly acc = UniPoly::constant(dd[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    acc = acc * UniPoly::linear_root(xs[i]);
    acc += UniPoly::constant(dd[i]);
  }
  return acc;
}

UniPoly entry(const Pencil& p, size_t i, size_t j) {
  return UniPoly(std::vector<ExactScalar>{p.a()(i, j), p.b()(i, j)});
}

}  // namespace

std::vector<UniPoly> minor_polynomials(const Pencil& p, size_t k) {
  if (k == 0) throw InvalidArgument("minor order must be positive");
  if (k > std::min(p.rows(), p.cols())) throw InvalidArgument("minor order exceeds matrix size");
  if (std::min(p.rows(), p.cols()) > 8) throw InvalidArgument("minor enumeration capped at min(rows, cols) <= 8");
  std::vector<std::vector<size_t>> rs, cs;
  subsets(p.rows(), k, rs);
  subsets(p.cols(), k, cs);
  std::vector<UniPoly> out;
  out.reserve(rs.size() * cs.size());
  if (k == 1) {
    for (const auto& r : rs)
      for (const auto& c : cs) out.push_back(entry(p, r[0], c[0]));
    return out;
  }
  if (k == 2) {
    for (const auto& r : rs)
      for (const auto& c : cs)
        out.push_back(entry(p, r[0], c[0]) * entry(p, r[1], c[1]) - entry(p, r[0], c[1]) * entry(p, r[1], c[0]));
    return out;
  }
  std::vector<ExactScalar> xs;
  std::vector<ExactMatrix> evals;
  for (size_t s = 0; s <= k; ++s) {
    xs.emplace_back(static_cast<long>(s));
    evals.push_back(p.at(xs.back()));
  }
  for (const auto& r : rs)
    for (const auto& c : cs) {
      std::vector<ExactScalar> ys;
      for (const auto& e : evals) {
        ExactMatrix sub(k, k);
        for (size_t i = 0; i < k; ++i)
          for (size_t j = 0; j < k; ++j) sub(i, j) = e(r[i], c[j]);
        ys.push_back(determinant(sub));
      }
      out.push_back(interpolate(xs, ys));
    }
  return out;
}

std::vector<UniPoly> smith_invariant_factors(PolyMatrix m) {
  const size_t R = m.size();
  const size_t C = R ? m[0].size() : 0;
  std::vector<UniPoly> factors;
  auto row_axpy = [&](size_t dst, size_t src, const UniPoly& q, size_t from) {
    for (size_t j = from; j < C; ++j)
      if (!m[src][j].is_zero()) m[dst][j] -= q * m[src][j];
  };
  auto col_axpy = [&](size_t dst, size_t src, const UniPoly& q, size_t from) {
    for (size_t i = from; i < R; ++i)
      if (!m[i][src].is_zero()) m[i][dst] -= q * m[i][src];
  };
  for (size_t k = 0; k < std::min(R, C); ++k) {
    while (true) {
      // Pivot: nonzero entry of least degree.
      size_t pi = R, pj = C;
      int best = -1;
      for (size_t i = k; i < R; ++i)
        for (size_t j = k; j < C; ++j) {
          const UniPoly& e = m[i][j];
          if (!e.is_zero() && (best < 0 || e.degree() < best)) {
            best = e.degree();
            pi = i;
            pj = j;
          }
        }
      if (best < 0) return factors;
      std::swap(m[k], m[pi]);
      for (size_t i = 0; i < R; ++i) std::swap(m[i][k], m[i][pj]);
      bool clean = true;
      for (size_t i = k + 1; i < R; ++i) {
        if (m[i][k].is_zero()) continue;
        auto [q, r] = divmod(m[i][k], m[k][k]);
        row_axpy(i, k, q, k);
        if (!r.is_zero()) clean = false;
      }
      for (size_t j = k + 1; j < C; ++j) {
        if (m[k][j].is_zero()) continue;
        auto [q, r] = divmod(m[k][j], m[k][k]);
        col_axpy(j, k, q, k);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;
      if (best > 0) {
        // The pivot must divide the whole trailing block.
        bool divides = true;
        for (size_t i = k + 1; i < R && divides; ++i)
          for (size_t j = k + 1; j < C; ++j)
            if (!m[i][j].is_zero() && !divmod(m[i][j], m[k][k]).second.is_zero()) {
              for (size_t jj = k; jj < C; ++jj) m[k][jj] += m[i][jj];
              divides = false;
              break;
            }
        if (!divides) continue;
      }
      break;
    }
    factors.push_back(m[k][k].monic());
  }
  return factors;
}

std::vector<UniPoly> invariant_factors(const Pencil& p) {
  PolyMatrix m(p.rows(), std::vector<UniPoly>(p.cols()));
  for (size_t i = 0; i < p.rows(); ++i)
    for (size_t j = 0; j < p.cols(); ++j) m[i][j] = entry(p, i, j);
  return smith_invariant_factors(std::move(m));
}

FactorRootCounts factor_root_counts(const std::vector<UniPoly>& factors) {
  FactorRootCounts out;
  out.generic_rank = factors.size();
  for (const auto& s : factors) out.distinct.push_back(distinct_roots(s).distinct_root_count);
  return out;
}

std::string PencilRankProfile::str() const {
  std::ostringstream os;
  os << "generic " << generic_rank << "; exceptional {";
  for (size_t i = 0; i < exceptional_ranks.size(); ++i) os << (i ? "," : "") << exceptional_ranks[i];
  os << "}";
  return os.str();
}

PencilRankProfile pencil_rank_profile(const Pencil& p, bool locate, uint64_t seed) {
  if (p.a().is_zero() && p.b().is_zero()) throw InvalidArgument("zero pencil");
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<long> num(-1000, 1000), den(1, 97);
  auto random_rank = [&] {
    Rational t(num(rng), den(rng));
    t.canonicalize();
    return rank(p.at(ExactScalar(t)));
  };
  size_t r1 = random_rank(), r2 = random_rank();
  size_t generic = std::max(r1, r2);
  if (r1 != r2) generic = std::max(generic, random_rank());

  std::vector<UniPoly> s = invariant_factors(p);
  if (s.size() != generic) {
    // A random point landed on a root; the invariant factors are authoritative.
    for (int attempt = 0; attempt < 8 && generic < s.size(); ++attempt) generic = std::max(generic, random_rank());
    if (generic != s.size()) throw MathError("generic rank disagrees with invariant factors");
  }

  PencilRankProfile out;
  out.generic_rank = generic;
  FactorRootCounts counts = factor_root_counts(s);
  int prev = 0;
  for (size_t j = 0; j < s.size(); ++j) {
    int here = counts.distinct[j] - prev;
    for (int c = 0; c < here; ++c) out.exceptional_ranks.push_back(j);
    prev = counts.distinct[j];
  }
  size_t rb = rank(p.b());
  if (rb < generic) out.exceptional_ranks.push_back(rb);
  std::sort(out.exceptional_ranks.begin(), out.exceptional_ranks.end());

  if (locate && !s.empty()) {
    RootSplit split = split_gaussian_rational_roots(s.back());
    for (const auto& t : split.exact) {
      ExceptionalPoint pt;
      pt.kind = ExceptionalPoint::Kind::Finite;
      pt.location = t;
      size_t r = 0;
      for (const auto& f : s)
        if (!f.eval(t).is_zero()) ++r;
      pt.rank = r;
      out.points.push_back(pt);
    }
    // Irrational points grouped exactly by rank: h_j = gcd(h, s_j).
    const UniPoly& h = split.remainder;
    if (h.degree() > 0) {
      out.has_algebraic_points = true;
      UniPoly prev_h = UniPoly::constant(1);
      for (size_t j = 0; j < s.size(); ++j) {
        UniPoly hj = poly_gcd(h, s[j]);
        UniPoly group = exact_div(hj, prev_h);
        if (group.degree() > 0)
          for (const auto& nr : numeric_roots(group)) {
            ExceptionalPoint pt;
            pt.kind = ExceptionalPoint::Kind::Algebraic;
            pt.approx = nr.value;
            pt.rank = j;
            out.points.push_back(pt);
          }
        prev_h = hj;
      }
    }
    if (rb < generic) {
      ExceptionalPoint pt;
      pt.kind = ExceptionalPoint::Kind::Infinity;
      pt.rank = rb;
      out.points.push_back(pt);
    }
  }
  return out;
}

namespace {

/// Sorted minimal indices of the right kernel of P0 + t P1.
std::vector<size_t> column_minimal_indices(const ExactMatrix& p0, const ExactMatrix& p1, size_t generic) {
  const size_t m = p0.rows(), n = p0.cols();
  const size_t total = n - generic;
  std::vector<size_t> out;
  size_t prev_nullity = 0, prev_count = 0;
  for (size_t d = 0; out.size() < total; ++d) {
    if (d > n * m + 1) throw MathError("minimal index search did not terminate");
    ExactMatrix k((d + 2) * m, (d + 1) * n);
    for (size_t j = 0; j <= d; ++j)
      for (size_t i = 0; i < m; ++i)
        for (size_t c = 0; c < n; ++c) {
          k(j * m + i, j * n + c) = p0(i, c);
          k((j + 1) * m + i, j * n + c) = p1(i, c);
        }
    size_t nullity = (d + 1) * n - rank(k);
    size_t count = nullity - prev_nullity;  // #indices <= d
    for (size_t c = prev_count; c < count; ++c) out.push_back(d);
    prev_nullity = nullity;
    prev_count = count;
  }
  return out;
}

}  // namespace

std::string KernelDegrees::str() const {
  std::ostringstream os;
  os << "column {";
  for (size_t i = 0; i < column.size(); ++i) os << (i ? "," : "") << column[i];
  os << "}; row {";
  for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
  os << "}";
  return os.str();
}

KernelDegrees pencil_kernel_degrees(const Pencil& p) {
  size_t generic = invariant_factors(p).size();
  KernelDegrees out;
  out.column = column_minimal_indices(p.a(), p.b(), generic);
  out.row = column_minimal_indices(p.a().transpose(), p.b().transpose(), generic);
  return out;
}

}  // namespace slocc
