#include "slocc/invariants.hpp"

#include <algorithm>
#include <sstream>

#include "slocc/error.hpp"

namespace slocc {

NormalFrame normal_frame(const PureState& s) {
  LocalRankProfile r = local_ranks(s);
  std::array<ExactMatrix, 3> comp{ExactMatrix::identity(s.dims()[0]), ExactMatrix::identity(s.dims()[1]),
                                  ExactMatrix::identity(s.dims()[2])};
  PureState compact = s;
  if (r.as_array() != s.dims()) {
    Compression c = compress(s);
    compact = c.state;
    comp = c.basis_change;
  }
  std::array<Party, 3> perm{Party::A, Party::B, Party::C};
  std::stable_sort(perm.begin(), perm.end(), [&](Party x, Party y) { return r[x] < r[y]; });
  return {permute_parties(compact, perm), perm, comp, r};
}

PureState unframe(const NormalFrame& f, const PureState& frame_state) {
  // Inverse permutation: original party perm[k] takes frame position k.
  std::array<Party, 3> inv{};
  for (size_t k = 0; k < 3; ++k) inv[idx(f.perm[k])] = static_cast<Party>(k);
  PureState back = permute_parties(frame_state, inv);
  Dims d{f.compression[0].rows(), f.compression[1].rows(), f.compression[2].rows()};
  return pad(back, d);
}

LocalOperatorTriple lift_from_frame(const NormalFrame& f, const std::array<ExactMatrix, 3>& frame_ops) {
  std::array<ExactMatrix, 3> out;
  for (size_t k = 0; k < 3; ++k) {
    size_t x = idx(f.perm[k]);
    size_t d = f.compression[x].rows();
    const ExactMatrix& w = frame_ops[k];
    ExactMatrix block = ExactMatrix::identity(d);
    for (size_t i = 0; i < w.rows(); ++i)
      for (size_t j = 0; j < w.cols(); ++j) block(i, j) = w(i, j);
    out[x] = block * f.compression[x];
  }
  return LocalOperatorTriple(out[0], out[1], out[2]);
}

std::string partner_str(const PartnerPairs& p) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << "(" << p[i].first << "," << p[i].second << ")";
  os << "}";
  return os.str();
}

std::string InvariantVector::str() const {
  std::ostringstream os;
  os << "ranks (" << dims[0] << "," << dims[1] << "," << dims[2] << "); signature " << signature();
  if (bc_profile) os << "; BC pencil " << bc_profile->str();
  for (size_t x = 0; x < 3; ++x)
    if (partners[x])
      os << "; partners "
         << "ABC"[x] << " " << partner_str(*partners[x]);
  if (kernel) os << "; minimal indices " << kernel->str();
  return os.str();
}

std::vector<std::string> InvariantVector::differences(const InvariantVector& o) const {
  std::vector<std::string> out;
  if (dims != o.dims) return {"local ranks"};
  if (counts != o.counts) out.push_back("signature");
  if (bc_profile && o.bc_profile && !(*bc_profile == *o.bc_profile)) out.push_back("pencil rank profile");
  for (size_t x = 0; x < 3; ++x)
    if (partners[x] && o.partners[x] && *partners[x] != *o.partners[x]) {
      out.push_back("partner-rank multiset");
      break;
    }
  if (kernel && o.kernel && !(*kernel == *o.kernel)) out.push_back("pencil kernel degrees");
  return out;
}

std::string InvariantVector::first_difference(const InvariantVector& o) const {
  auto d = differences(o);
  return d.empty() ? "" : d.front();
}

InvariantVector compute_invariants(const PureState& s, bool with_kernel) {
  InvariantVector v;
  v.dims = s.dims();
  for (Party x : {Party::A, Party::B, Party::C}) {
    size_t k = idx(x);
    try {
      ProductCount c = count_product_states(range_subspace(s, x));
      v.counts[k] = c.str();
      if (!c.is_finite()) continue;
      if (c.exactness != Exactness::Exact) {
        v.notes.push_back(std::string("partner ranks of range ") + party_name(x) + " skipped: irrational witnesses");
        continue;
      }
      auto [p, q] = complement(x);
      PartnerPairs pp;
      for (const auto& w : c.witnesses) pp.emplace_back(partner_rank(s, p, w.left), partner_rank(s, q, w.right));
      std::sort(pp.begin(), pp.end());
      v.partners[k] = std::move(pp);
    } catch (const UnsupportedShape& e) {
      if (v.counts[k].empty()) v.counts[k] = "?";
      v.notes.push_back(std::string("range ") + party_name(x) + ": " + e.what());
    }
  }
  if (s.dims()[0] == 2) {
    Pencil p(s.slice(Party::A, 0), s.slice(Party::A, 1));
    v.bc_profile = pencil_rank_profile(p);
    if (with_kernel) v.kernel = pencil_kernel_degrees(p);
  }
  return v;
}

}  // namespace slocc
