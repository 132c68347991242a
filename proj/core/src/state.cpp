#include "slocc/state.hpp"

#include <sstream>

#include "slocc/error.hpp"

namespace slocc {

char party_name(Party p) { return "ABC"[idx(p)]; }

Party parse_party(char c) {
  switch (c) {
    case 'A':
    case 'a': return Party::A;
    case 'B':
    case 'b': return Party::B;
    case 'C':
    case 'c': return Party::C;
    default: throw InvalidArgument(std::string("unknown party '") + c + "'");
  }
}

std::pair<Party, Party> complement(Party p) {
  switch (p) {
    case Party::A: return {Party::B, Party::C};
    case Party::B: return {Party::A, Party::C};
    default: return {Party::A, Party::B};
  }
}

PureState::PureState(Dims dims, Amplitudes amps) : dims_(dims) {
  for (size_t d : dims_)
    if (d == 0) throw InvalidArgument("party dimensions must be positive");
  for (auto& [i, a] : amps) {
    for (size_t k = 0; k < 3; ++k)
      if (i[k] >= dims_[k]) throw InvalidArgument("amplitude index out of range");
    if (!a.is_zero()) amps_.emplace(i, std::move(a));
  }
  if (amps_.empty()) throw InvalidArgument("state has no nonzero amplitude");
}

PureState PureState::from_terms(Dims dims, const std::vector<std::pair<Index3, ExactScalar>>& terms) {
  Amplitudes amps;
  for (const auto& [i, a] : terms) amps[i] += a;
  return PureState(dims, std::move(amps));
}

PureState PureState::from_slices(Dims dims, Party party, const std::vector<ExactMatrix>& slices) {
  auto [p, q] = complement(party);
  Amplitudes amps;
  for (size_t i = 0; i < slices.size(); ++i) {
    const ExactMatrix& m = slices[i];
    if (m.rows() != dims[idx(p)] || m.cols() != dims[idx(q)]) throw InvalidArgument("slice shape mismatch");
    for (size_t r = 0; r < m.rows(); ++r)
      for (size_t c = 0; c < m.cols(); ++c) {
        if (m(r, c).is_zero()) continue;
        Index3 k{};
        k[idx(party)] = i;
        k[idx(p)] = r;
        k[idx(q)] = c;
        amps[k] = m(r, c);
      }
  }
  return PureState(dims, std::move(amps));
}

ExactScalar PureState::amplitude(const Index3& i) const {
  auto it = amps_.find(i);
  return it == amps_.end() ? ExactScalar(0) : it->second;
}

PureState PureState::normalized() const {
  const ExactScalar& first = amps_.begin()->second;
  if (first.is_one()) return *this;
  ExactScalar inv = first.inverse();
  Amplitudes out;
  for (const auto& [i, a] : amps_) out.emplace(i, a * inv);
  return PureState(dims_, std::move(out));
}

bool operator==(const PureState& a, const PureState& b) {
  if (a.dims_ != b.dims_ || a.amps_.size() != b.amps_.size()) return false;
  auto ia = a.amps_.begin(), ib = b.amps_.begin();
  for (; ia != a.amps_.end(); ++ia, ++ib)
    if (ia->first != ib->first) return false;
  // a = c b with c = a_first / b_first.
  ExactScalar c = a.amps_.begin()->second / b.amps_.begin()->second;
  for (ia = a.amps_.begin(), ib = b.amps_.begin(); ia != a.amps_.end(); ++ia, ++ib)
    if (ia->second != c * ib->second) return false;
  return true;
}

ExactMatrix PureState::unfolding(Party x) const {
  auto [p, q] = complement(x);
  ExactMatrix m(dim(x), dim(p) * dim(q));
  for (const auto& [i, a] : amps_) m(i[idx(x)], i[idx(p)] * dim(q) + i[idx(q)]) = a;
  return m;
}

ExactMatrix PureState::slice(Party x, size_t index) const {
  if (index >= dim(x)) throw InvalidArgument("slice index out of range");
  auto [p, q] = complement(x);
  ExactMatrix m(dim(p), dim(q));
  for (const auto& [i, a] : amps_)
    if (i[idx(x)] == index) m(i[idx(p)], i[idx(q)]) = a;
  return m;
}

std::vector<ExactMatrix> PureState::slices(Party x) const {
  std::vector<ExactMatrix> out;
  for (size_t k = 0; k < dim(x); ++k) out.push_back(slice(x, k));
  return out;
}

std::string PureState::str() const {
  std::ostringstream os;
  bool first = true;
  bool wide = dims_[0] > 10 || dims_[1] > 10 || dims_[2] > 10;
  for (const auto& [i, a] : amps_) {
    std::string ket = "|";
    if (wide)
      ket += std::to_string(i[0]) + "," + std::to_string(i[1]) + "," + std::to_string(i[2]);
    else
      ket += std::to_string(i[0]) + std::to_string(i[1]) + std::to_string(i[2]);
    ket += ">";
    if (a.is_one()) {
      os << (first ? "" : " + ") << ket;
    } else if (a == ExactScalar(-1)) {
      os << (first ? "-" : " - ") << ket;
    } else {
      os << (first ? "" : " + ") << "(" << a << ")" << ket;
    }
    first = false;
  }
  return os.str();
}

std::string LocalRankProfile::str() const {
  return "(" + std::to_string(r_a) + "," + std::to_string(r_b) + "," + std::to_string(r_c) + ")";
}

ExactMatrix reduced_density(const PureState& s, const std::vector<Party>& parties) {
  bool in[3] = {false, false, false};
  for (Party p : parties) in[idx(p)] = true;
  int count = in[0] + in[1] + in[2];
  if (count == 0 || count == 3) throw InvalidArgument("reduced_density needs a proper nonempty subset");
  const Dims& d = s.dims();
  size_t rows = 1, cols = 1;
  for (size_t k = 0; k < 3; ++k) (in[k] ? rows : cols) *= d[k];
  ExactMatrix u(rows, cols);
  for (const auto& [i, a] : s.amplitudes()) {
    size_t r = 0, c = 0;
    for (size_t k = 0; k < 3; ++k) {
      if (in[k])
        r = r * d[k] + i[k];
      else
        c = c * d[k] + i[k];
    }
    u(r, c) = a;
  }
  return u * u.conj_transpose();
}

LocalRankProfile local_ranks(const PureState& s) {
  return {rank(s.unfolding(Party::A)), rank(s.unfolding(Party::B)), rank(s.unfolding(Party::C))};
}

AdjointForm adjoint_form(const PureState& s, Party party) {
  RowEchelon e = row_reduce(s.unfolding(party), true);
  auto [p, q] = complement(party);
  AdjointForm out{party, *e.transform, {}};
  for (size_t i = 0; i < e.rank(); ++i) {
    ExactMatrix m(s.dim(p), s.dim(q));
    for (size_t a = 0; a < s.dim(p); ++a)
      for (size_t b = 0; b < s.dim(q); ++b) m(a, b) = e.reduced(i, a * s.dim(q) + b);
    out.adjoint_states.push_back(std::move(m));
  }
  return out;
}

PureState AdjointForm::reassemble(const Dims& dims) const {
  PureState reduced = PureState::from_slices(dims, party, adjoint_states);
  return apply_local(reduced, party, inverse(basis_change));
}

PureState apply_local(const PureState& s, Party which, const ExactMatrix& m) {
  size_t d = s.dim(which);
  if (m.rows() != d || m.cols() != d) throw InvalidArgument("local operator shape mismatch");
  size_t w = idx(which);
  PureState::Amplitudes out;
  for (const auto& [i, a] : s.amplitudes()) {
    Index3 k = i;
    for (size_t r = 0; r < d; ++r) {
      const ExactScalar& f = m(r, i[w]);
      if (f.is_zero()) continue;
      k[w] = r;
      out[k].add_product(f, a);
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  if (out.empty()) throw MathError("local operator annihilates the state");
  return PureState(s.dims(), std::move(out));
}

PureState permute_parties(const PureState& s, const std::array<Party, 3>& perm) {
  Dims d{};
  for (size_t k = 0; k < 3; ++k) d[k] = s.dim(perm[k]);
  PureState::Amplitudes out;
  for (const auto& [i, a] : s.amplitudes()) {
    Index3 k{};
    for (size_t j = 0; j < 3; ++j) k[j] = i[idx(perm[j])];
    out.emplace(k, a);
  }
  return PureState(d, std::move(out));
}

Compression compress(const PureState& s) {
  PureState cur = s;
  std::array<ExactMatrix, 3> changes;
  Dims r{};
  for (Party x : {Party::A, Party::B, Party::C}) {
    RowEchelon e = row_reduce(cur.unfolding(x), true);
    changes[idx(x)] = *e.transform;
    r[idx(x)] = e.rank();
    cur = apply_local(cur, x, changes[idx(x)]);
  }
  PureState::Amplitudes amps;
  for (const auto& [i, a] : cur.amplitudes()) {
    for (size_t k = 0; k < 3; ++k)
      if (i[k] >= r[k]) throw MathError("compression left support outside the local-rank block");
    amps.emplace(i, a);
  }
  return {PureState(r, std::move(amps)), changes};
}

PureState pad(const PureState& s, const Dims& dims) {
  for (size_t k = 0; k < 3; ++k)
    if (dims[k] < s.dims()[k]) throw InvalidArgument("pad cannot shrink a party");
  return PureState(dims, s.amplitudes());
}

}  // namespace slocc
