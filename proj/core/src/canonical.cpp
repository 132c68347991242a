#include "slocc/canonical.hpp"

#include <algorithm>
#include <cctype>
#include <random>

#include "slocc/error.hpp"

namespace slocc {

namespace {

struct FamilyInfo {
  Family family;
  const char* name;
};

const FamilyInfo kFamilies[] = {
    {Family::GHZ, "GHZ"},
    {Family::W, "W"},
    {Family::Psi1, "Psi1"},
    {Family::Psi2, "Psi2"},
    {Family::Psi3, "Psi3"},
    {Family::Psi4, "Psi4"},
    {Family::Psi5, "Psi5"},
    {Family::Psi6, "Psi6"},
    {Family::Upsilon0, "Upsilon0"},
    {Family::Upsilon1, "Upsilon1"},
    {Family::Upsilon2, "Upsilon2"},
    {Family::Theta0, "Theta0"},
    {Family::Theta1, "Theta1"},
    {Family::Theta2, "Theta2"},
    {Family::Theta3, "Theta3"},
    {Family::Theta4, "Theta4"},
    {Family::Theta5, "Theta5"},
    {Family::Phi0Example, "Phi0Example"},
    {Family::Phi1Example, "Phi1Example"},
    {Family::NotTrueTripartite, "NotTrueTripartite"},
    {Family::Unknown, "Unknown"},
};

std::string lower(std::string s) {
  for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return s;
}

using Terms = std::vector<std::pair<Index3, ExactScalar>>;

void upsilon0_terms(Terms& t, size_t m) {
  for (size_t i = 0; i < m; ++i) {
    t.push_back({{0, i, i}, 1});
    t.push_back({{1, i, i + m}, 1});
  }
}

void upsilon_terms(Terms& t, size_t m, bool second) {
  t.push_back({{0, m, 2 * m}, 1});
  if (second) t.push_back({{1, m, m - 1}, 1});
  upsilon0_terms(t, m);
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& fi : kFamilies)
    if (fi.family == f) return fi.name;
  return "Unknown";
}

bool is_upsilon(Family f) { return f == Family::Upsilon0 || f == Family::Upsilon1 || f == Family::Upsilon2; }

bool is_theta(Family f) { return f >= Family::Theta0 && f <= Family::Theta5; }

const std::vector<Family>& all_families() {
  static const std::vector<Family> v = [] {
    std::vector<Family> out;
    for (const auto& fi : kFamilies) out.push_back(fi.family);
    return out;
  }();
  return v;
}

ClassLabel::ClassLabel(Family f, std::optional<size_t> m_param) : family(f), m(m_param) {
  bool needs = is_upsilon(f) || is_theta(f);
  if (needs && !m) throw InvalidArgument(family_name(f) + " needs an M parameter");
  if (!needs && m) throw InvalidArgument(family_name(f) + " takes no M parameter");
  if (needs && *m < 1) throw InvalidArgument("M must be at least 1");
}

bool ClassLabel::has_m() const { return m.has_value(); }

std::string ClassLabel::str() const {
  std::string s = family_name(family);
  if (m) s += "(M=" + std::to_string(*m) + ")";
  return s;
}

ClassLabel ClassLabel::parse(const std::string& text, std::optional<size_t> m) {
  std::string name = text;
  auto open = text.find('(');
  if (open != std::string::npos) {
    auto close = text.find(')', open);
    std::string inner = text.substr(open + 1, close == std::string::npos ? std::string::npos : close - open - 1);
    if (inner.rfind("M=", 0) == 0 || inner.rfind("m=", 0) == 0) inner = inner.substr(2);
    try {
      m = std::stoul(inner);
    } catch (const std::exception&) {
      throw InvalidArgument("bad M parameter in '" + text + "'");
    }
    name = text.substr(0, open);
  }
  std::string key = lower(name);
  if (key == "phi0") key = "phi0example";
  if (key == "phi1") key = "phi1example";
  for (const auto& fi : kFamilies)
    if (lower(fi.name) == key)
      return ClassLabel(fi.family, (is_upsilon(fi.family) || is_theta(fi.family)) ? m : std::nullopt);
  throw InvalidArgument("unknown class label '" + text + "'");
}

Dims canonical_dims(const ClassLabel& label) {
  switch (label.family) {
    case Family::GHZ:
    case Family::W: return {2, 2, 2};
    case Family::Psi1:
    case Family::Psi2:
    case Family::Psi3:
    case Family::Psi4:
    case Family::Psi5:
    case Family::Psi6: return {2, 3, 3};
    case Family::Phi0Example:
    case Family::Phi1Example: return {2, 4, 4};
    case Family::Upsilon0: return {2, *label.m, 2 * *label.m};
    case Family::Upsilon1:
    case Family::Upsilon2: return {2, *label.m + 1, 2 * *label.m + 1};
    default:
      if (is_theta(label.family)) return {2, *label.m + 2, 2 * *label.m + 2};
      throw InvalidArgument("no canonical state for " + label.str());
  }
}

PureState make_canonical(const ClassLabel& label) {
  Dims d = canonical_dims(label);
  Terms t;
  auto add = [&](size_t a, size_t b, size_t c) { t.push_back({{a, b, c}, 1}); };
  switch (label.family) {
    case Family::GHZ:
      add(0, 0, 0);
      add(1, 1, 1);
      break;
    case Family::W:
      add(0, 0, 1);
      add(0, 1, 0);
      add(1, 0, 0);
      break;
    case Family::Psi1:
      add(0, 0, 0);
      add(1, 1, 1);
      add(0, 2, 2);
      add(1, 2, 2);
      break;
    case Family::Psi2:
      add(0, 1, 0);
      add(0, 0, 1);
      add(1, 1, 2);
      add(1, 2, 1);
      break;
    case Family::Psi3:
      add(0, 0, 0);
      add(1, 1, 1);
      add(0, 2, 2);
      break;
    case Family::Psi4:
      add(1, 0, 0);
      add(0, 1, 0);
      add(0, 0, 1);
      add(1, 1, 2);
      add(1, 2, 1);
      break;
    case Family::Psi5:
      add(1, 0, 0);
      add(0, 1, 0);
      add(0, 0, 1);
      add(0, 2, 2);
      break;
    case Family::Psi6:
      add(1, 0, 0);
      add(0, 1, 0);
      add(0, 0, 1);
      add(1, 2, 2);
      break;
    case Family::Phi0Example:
      add(0, 0, 0);
      add(1, 1, 1);
      add(0, 2, 2);
      add(0, 3, 3);
      break;
    case Family::Phi1Example:
      add(0, 0, 1);
      add(0, 1, 0);
      add(1, 0, 0);
      add(0, 2, 2);
      add(0, 3, 3);
      break;
    case Family::Upsilon0: upsilon0_terms(t, *label.m); break;
    case Family::Upsilon1: upsilon_terms(t, *label.m, false); break;
    case Family::Upsilon2: upsilon_terms(t, *label.m, true); break;
    default: {
      if (!is_theta(label.family)) throw InvalidArgument("no canonical state for " + label.str());
      size_t m = *label.m;
      switch (label.family) {
        case Family::Theta0:
          add(1, m + 1, 2 * m + 1);
          upsilon_terms(t, m, false);
          break;
        case Family::Theta1:
          add(0, m + 1, 2 * m + 1);
          upsilon_terms(t, m, false);
          break;
        case Family::Theta2:
          add(1, m + 1, 2 * m + 1);
          upsilon_terms(t, m, true);
          break;
        case Family::Theta3:
          add(0, m + 1, 2 * m + 1);
          add(1, m + 1, 2 * m);
          upsilon_terms(t, m, false);
          break;
        case Family::Theta4:
          add(0, m + 1, 2 * m + 1);
          add(1, m + 1, 0);
          upsilon_terms(t, m, true);
          break;
        default:
          add(0, m + 1, 2 * m + 1);
          add(1, m + 1, 2 * m);
          upsilon_terms(t, m, true);
          break;
      }
    }
  }
  return PureState::from_terms(d, t);
}

std::string expression_name(Expression e) {
  static const char* names[] = {"I", "II", "III", "IV", "V"};
  return names[static_cast<int>(e) - 1];
}

Expression parse_expression(const std::string& text) {
  for (int k = 1; k <= 5; ++k)
    if (expression_name(static_cast<Expression>(k)) == text) return static_cast<Expression>(k);
  throw InvalidArgument("unknown expression '" + text + "'");
}

namespace {

void require_pair(const ExactScalar& x, const ExactScalar& y, const char* what) {
  if (x.is_zero() && y.is_zero()) throw InvalidArgument(std::string("coefficients ") + what + " are both zero");
}

}  // namespace

PureState make_expression(Expression which, const FamilyParams& p) {
  Terms t;
  auto add = [&](size_t a, size_t b, size_t c, ExactScalar v = 1) {
    if (!v.is_zero()) t.push_back({{a, b, c}, v});
  };
  if (which != Expression::V) {
    require_pair(p.a, p.b, "(a,b)");
    add(0, 2, 2, p.a);
    add(1, 2, 2, p.b);
  }
  if (which == Expression::III || which == Expression::IV) {
    require_pair(p.c, p.d, "(c,d)");
    require_pair(p.f, p.g, "(f,g)");
    // (c|0> + d|1>)|2>(f|0> + g|1>)
    add(0, 2, 0, p.c * p.f);
    add(0, 2, 1, p.c * p.g);
    add(1, 2, 0, p.d * p.f);
    add(1, 2, 1, p.d * p.g);
  }
  switch (which) {
    case Expression::I:
    case Expression::III:
      add(0, 0, 0);
      add(1, 1, 1);
      break;
    case Expression::II:
    case Expression::IV:
      add(0, 0, 1);
      add(0, 1, 0);
      add(1, 0, 0);
      break;
    case Expression::V:
      add(0, 2, 2);
      add(1, 2, 1);
      add(0, 0, 0);
      add(1, 1, 0);
      break;
  }
  return PureState::from_terms({2, 3, 3}, t);
}

FamilyParams random_family_params(Expression which, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> zero(0, 2);
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
  auto coeff = [&]() -> ExactScalar {
    if (zero(rng) == 0) return 0;
    while (true) {
      Rational re(num(rng), den(rng)), im(num(rng), den(rng));
      re.canonicalize();
      im.canonicalize();
      ExactScalar s(re, im);
      if (!s.is_zero()) return s;
    }
  };
  auto pair = [&](ExactScalar& x, ExactScalar& y) {
    do {
      x = coeff();
      y = coeff();
    } while (x.is_zero() && y.is_zero());
  };
  FamilyParams p;
  if (which != Expression::V) pair(p.a, p.b);
  if (which == Expression::III || which == Expression::IV) {
    pair(p.c, p.d);
    pair(p.f, p.g);
  }
  return p;
}

PureState make_omega(int kind, const PureState& lower, const FamilyParams& p) {
  const Dims& ld = lower.dims();
  if (ld[0] != 2) throw InvalidArgument("omega generation needs a 2 x m x n lower state");
  Dims d = ld;
  d[1] += 1;
  d[2] += (kind == 1) ? 2 : 1;
  size_t mm = d[1] - 1, nn = d[2] - 1;
  PureState::Amplitudes amps = lower.amplitudes();
  auto add = [&](size_t a, size_t b, size_t c, const ExactScalar& v) {
    if (!v.is_zero()) amps[{a, b, c}] += v;
  };
  switch (kind) {
    case 1:
      add(0, mm, nn, 1);
      add(1, mm, nn - 1, 1);
      break;
    case 0:
    case 2:
    case 3: {
      require_pair(p.a, p.b, "(a,b)");
      add(0, mm, nn, p.a);
      add(1, mm, nn, p.b);
      if (kind == 0) break;
      if (kind == 2 && p.b.is_zero()) throw InvalidArgument("omega kind 2 needs b != 0");
      if (kind == 3 && p.a.is_zero()) throw InvalidArgument("omega kind 3 needs a != 0");
      if (p.chi.size() != nn) throw InvalidArgument("chi needs N-1 coefficients");
      bool nonzero = false;
      for (size_t i = 0; i < nn; ++i) {
        add(kind == 2 ? 0 : 1, mm, i, p.chi[i]);
        nonzero = nonzero || !p.chi[i].is_zero();
      }
      if (!nonzero) throw InvalidArgument("chi must not vanish identically");
      break;
    }
    default: throw InvalidArgument("omega kind must be 0..3");
  }
  return PureState(d, std::move(amps));
}

std::vector<ClassLabel> canonical_library(const Dims& d) {
  std::vector<ClassLabel> out;
  if (d[0] != 2) return out;
  size_t m = d[1], n = d[2];
  if (m == 2 && n == 2) return {ClassLabel(Family::GHZ), ClassLabel(Family::W)};
  if (m == 3 && n == 3) {
    for (Family f : {Family::Psi1, Family::Psi2, Family::Psi3, Family::Psi4, Family::Psi5, Family::Psi6})
      out.emplace_back(f);
    return out;
  }
  if (m >= 2 && n == 2 * m) return {ClassLabel(Family::Upsilon0, m)};
  if (m >= 2 && n == 2 * m - 1) return {ClassLabel(Family::Upsilon1, m - 1), ClassLabel(Family::Upsilon2, m - 1)};
  if (m >= 3 && n == 2 * m - 2) {
    size_t mt = m - 2;
    for (Family f : {Family::Theta0, Family::Theta1, Family::Theta2, Family::Theta3, Family::Theta4, Family::Theta5}) {
      if (mt == 1 && f == Family::Theta4) continue;  // coincides with Theta2 at M = 1
      out.emplace_back(f, mt);
    }
  }
  return out;
}

std::string expected_bracket(const ClassLabel& label) {
  switch (label.family) {
    case Family::GHZ: return "[2,2,2]";
    case Family::W: return "[1,1,1]";
    case Family::Psi1: return "[0,3,3]";
    case Family::Psi2: return "[0,inf,inf]";
    case Family::Psi3: return "[1,inf,inf]";
    case Family::Psi4: return "[0,1,1]";
    case Family::Psi5: return "[1,inf,inf]";
    case Family::Psi6: return "[0,2,2]";
    case Family::Upsilon0: return "[0,0,inf]";
    case Family::Upsilon1: return "[0,1,inf]";
    case Family::Upsilon2: return "[0,0,inf]";
    case Family::Theta0: return "[0,2,inf]";
    case Family::Theta1: return "[0,inf,inf]";
    case Family::Theta2: return "[0,1,inf]";
    case Family::Theta3: return "[0,1,inf]";
    case Family::Theta4: return "[0,0,inf]";
    case Family::Theta5: return "[0,0,inf]";
    case Family::Phi0Example:
    case Family::Phi1Example: return "[1,inf,inf]";
    default: throw InvalidArgument("no bracket for " + label.str());
  }
}

}  // namespace slocc
