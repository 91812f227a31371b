#include "sqck/ckalgebra.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "sqck/quaternion.hpp"

namespace sqck {

namespace {

std::string idx_error(const std::string& what) { return "ckalgebra: " + what; }

using GenTerm = std::pair<GeneratorId, Rational>;
using GenTerms = std::vector<GenTerm>;

GeneratorId J(int a, int b) { return {GenKind::J, a, b, 0}; }
GeneratorId M(int alpha, int a, int b) { return {GenKind::M, a, b, alpha}; }
GeneratorId E(int alpha, int a) { return {GenKind::E, a, 0, alpha}; }

GenTerms negate(GenTerms t) {
  for (auto& [g, c] : t) c = -c;
  return t;
}

// Index-pair relation for two ordered pairs (a<b), (c<d):
// same pair, disjoint, or sharing exactly one index.
struct PairPattern {
  enum Kind { Same, Disjoint, Shared } kind;
  // For Shared: sorted distinct indices p<q<r and which of the three pairs
  // {(p,q),(p,r),(q,r)} each argument is (0,1,2 respectively).
  int p = 0, q = 0, r = 0;
  int first = 0, second = 0;
};

PairPattern classify(int a, int b, int c, int d) {
  PairPattern out{};
  if (a == c && b == d) {
    out.kind = PairPattern::Same;
    return out;
  }
  if (a != c && a != d && b != c && b != d) {
    out.kind = PairPattern::Disjoint;
    return out;
  }
  out.kind = PairPattern::Shared;
  std::vector<int> idx{a, b, c, d};
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  out.p = idx[0];
  out.q = idx[1];
  out.r = idx[2];
  auto which = [&](int x, int y) {
    if (x == out.p && y == out.q) return 0;
    if (x == out.p && y == out.r) return 1;
    return 2;
  };
  out.first = which(a, b);
  out.second = which(c, d);
  return out;
}

// [J,J] and [M^a,M^a] share the index structure of the first two rows of the
// bracket table; only the sign of the middle entry and the output kind differ.
GenTerms jj_like(const OmegaPattern& p, const PairPattern& pp, bool m_kind) {
  // canonical order (first < second); caller negates on swap
  GenTerms out;
  if (pp.first == 0 && pp.second == 1)
    out = {{J(pp.q, pp.r), p.omega_ab(pp.p, pp.q)}};
  else if (pp.first == 0 && pp.second == 2)
    out = {{J(pp.p, pp.r), Rational(m_kind ? 1 : -1)}};
  else
    out = {{J(pp.p, pp.q), p.omega_ab(pp.q, pp.r)}};
  return out;
}

GenTerms bracket_jj(const OmegaPattern& p, const GeneratorId& x, const GeneratorId& y) {
  auto pp = classify(x.a, x.b, y.a, y.b);
  if (pp.kind != PairPattern::Shared) return {};
  if (pp.first < pp.second) return jj_like(p, pp, false);
  std::swap(pp.first, pp.second);
  return negate(jj_like(p, pp, false));
}

GenTerms bracket_mm_same(const OmegaPattern& p, const GeneratorId& x, const GeneratorId& y) {
  auto pp = classify(x.a, x.b, y.a, y.b);
  if (pp.kind != PairPattern::Shared) return {};
  if (pp.first < pp.second) return jj_like(p, pp, true);
  std::swap(pp.first, pp.second);
  return negate(jj_like(p, pp, true));
}

// [J_x, M^alpha_y]; all six shared-index orders are distinct table lines.
GenTerms bracket_jm(const OmegaPattern& p, const GeneratorId& j, const GeneratorId& m) {
  const int alpha = m.alpha;
  auto pp = classify(j.a, j.b, m.a, m.b);
  if (pp.kind == PairPattern::Disjoint) return {};
  if (pp.kind == PairPattern::Same) {
    Rational w = p.omega_ab(j.a, j.b);
    if (is_zero(w)) return {};
    return {{E(alpha, j.b), 2 * w}, {E(alpha, j.a), -2 * w}};
  }
  const int P = pp.p, Q = pp.q, R = pp.r;
  switch (pp.first * 3 + pp.second) {
    case 0 * 3 + 1: return {{M(alpha, Q, R), p.omega_ab(P, Q)}};   // [J_pq, M_pr]
    case 0 * 3 + 2: return {{M(alpha, P, R), Rational(-1)}};       // [J_pq, M_qr]
    case 1 * 3 + 2: return {{M(alpha, P, Q), -p.omega_ab(Q, R)}};  // [J_pr, M_qr]
    case 1 * 3 + 0: return {{M(alpha, Q, R), p.omega_ab(P, Q)}};   // [J_pr, M_pq]
    case 2 * 3 + 0: return {{M(alpha, P, R), Rational(1)}};        // [J_qr, M_pq]
    case 2 * 3 + 1: return {{M(alpha, P, Q), -p.omega_ab(Q, R)}};  // [J_qr, M_pr]
  }
  return {};
}

// [M^alpha_x, M^beta_y] with alpha != beta; order-independent formulas.
GenTerms bracket_mm_mixed(const OmegaPattern& p, const GeneratorId& x, const GeneratorId& y) {
  int gamma = 6 - x.alpha - y.alpha;
  int e = epsilon(x.alpha, y.alpha, gamma);
  auto pp = classify(x.a, x.b, y.a, y.b);
  if (pp.kind == PairPattern::Disjoint) return {};
  if (pp.kind == PairPattern::Same) {
    Rational c = 2 * e * p.omega_ab(x.a, x.b);
    if (is_zero(c)) return {};
    return {{E(gamma, x.a), c}, {E(gamma, x.b), c}};
  }
  int lo = std::min(pp.first, pp.second), hi = std::max(pp.first, pp.second);
  if (lo == 0 && hi == 1) return {{M(gamma, pp.q, pp.r), e * p.omega_ab(pp.p, pp.q)}};
  if (lo == 0 && hi == 2) return {{M(gamma, pp.p, pp.r), Rational(e)}};
  return {{M(gamma, pp.p, pp.q), e * p.omega_ab(pp.q, pp.r)}};
}

// [J_ab, E^alpha_d] = (delta_ad - delta_bd) M^alpha_ab
GenTerms bracket_je(const GeneratorId& j, const GeneratorId& eg) {
  int s = (eg.a == j.a) - (eg.a == j.b);
  if (s == 0) return {};
  return {{M(eg.alpha, j.a, j.b), Rational(s)}};
}

// [M^alpha_ab, E^beta_d]
GenTerms bracket_me(const GeneratorId& m, const GeneratorId& eg) {
  if (m.alpha == eg.alpha) {
    int s = (eg.a == m.a) - (eg.a == m.b);
    if (s == 0) return {};
    return {{J(m.a, m.b), Rational(-s)}};
  }
  int d = (eg.a == m.a) + (eg.a == m.b);
  if (d == 0) return {};
  int gamma = 6 - m.alpha - eg.alpha;
  return {{M(gamma, m.a, m.b), Rational(d * epsilon(m.alpha, eg.alpha, gamma))}};
}

GenTerms bracket_ee(const GeneratorId& x, const GeneratorId& y) {
  if (x.alpha == y.alpha || x.a != y.a) return {};
  int gamma = 6 - x.alpha - y.alpha;
  return {{E(gamma, x.a), Rational(2 * epsilon(x.alpha, y.alpha, gamma))}};
}

// sq table builder valid for n >= 0 (n = 0 gives the three-dimensional sq(1)).
StructureConstants build_sq_any(const OmegaPattern& p);

}  // namespace

std::string GeneratorId::name() const {
  switch (kind) {
    case GenKind::J: return "J_" + std::to_string(a) + "_" + std::to_string(b);
    case GenKind::M:
      return "M" + std::to_string(alpha) + "_" + std::to_string(a) + "_" + std::to_string(b);
    case GenKind::E: return "E" + std::to_string(alpha) + "_" + std::to_string(a);
  }
  return "?";
}

OmegaPattern::OmegaPattern(int n_, std::vector<Rational> values_)
    : n(n_), values(std::move(values_)) {
  if (n < 0 || static_cast<int>(values.size()) != n)
    throw std::invalid_argument(idx_error("omega pattern needs exactly N entries"));
}

Rational OmegaPattern::omega(int a) const {
  if (a < 1 || a > n) throw std::out_of_range(idx_error("omega index out of range"));
  return values[a - 1];
}

Rational OmegaPattern::omega_ab(int a, int b) const {
  if (a < 0 || b > n || a > b) throw std::out_of_range(idx_error("omega_ab needs 0 <= a <= b <= N"));
  Rational w(1);
  for (int s = a + 1; s <= b; ++s) w *= values[s - 1];
  return w;
}

OmegaPattern OmegaPattern::reversed() const {
  std::vector<Rational> v(values.rbegin(), values.rend());
  return OmegaPattern(n, std::move(v));
}

std::string OmegaPattern::label() const {
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += ",";
    out += to_string(values[i]);
  }
  return out;
}

std::vector<GeneratorId> sq_basis(int n) {
  std::vector<GeneratorId> basis;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) basis.push_back(J(a, b));
  for (int alpha = 1; alpha <= 3; ++alpha)
    for (int a = 0; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) basis.push_back(M(alpha, a, b));
  for (int alpha = 1; alpha <= 3; ++alpha)
    for (int a = 0; a <= n; ++a) basis.push_back(E(alpha, a));
  return basis;
}

std::vector<std::pair<GeneratorId, Rational>> bracket_of(const OmegaPattern& p,
                                                         const GeneratorId& x,
                                                         const GeneratorId& y) {
  GenTerms out;
  if (x.kind == GenKind::J && y.kind == GenKind::J) out = bracket_jj(p, x, y);
  else if (x.kind == GenKind::M && y.kind == GenKind::M)
    out = x.alpha == y.alpha ? bracket_mm_same(p, x, y) : bracket_mm_mixed(p, x, y);
  else if (x.kind == GenKind::J && y.kind == GenKind::M) out = bracket_jm(p, x, y);
  else if (x.kind == GenKind::M && y.kind == GenKind::J) out = negate(bracket_jm(p, y, x));
  else if (x.kind == GenKind::J && y.kind == GenKind::E) out = bracket_je(x, y);
  else if (x.kind == GenKind::E && y.kind == GenKind::J) out = negate(bracket_je(y, x));
  else if (x.kind == GenKind::M && y.kind == GenKind::E) out = bracket_me(x, y);
  else if (x.kind == GenKind::E && y.kind == GenKind::M) out = negate(bracket_me(y, x));
  else out = bracket_ee(x, y);
  GenTerms nz;
  for (auto& t : out)
    if (!is_zero(t.second)) nz.push_back(std::move(t));
  return nz;
}

int StructureConstants::index_of(const GeneratorId& g) const {
  for (int i = 0; i < dim; ++i)
    if (basis[i] == g) return i;
  return -1;
}

std::vector<Term> StructureConstants::bracket(int i, int j) const {
  if (i == j) return {};
  if (i < j) {
    auto it = table.find({i, j});
    return it == table.end() ? std::vector<Term>{} : it->second;
  }
  auto it = table.find({j, i});
  if (it == table.end()) return {};
  std::vector<Term> out = it->second;
  for (auto& t : out) t.coeff = -t.coeff;
  return out;
}

void StructureConstants::set_bracket(int i, int j, std::vector<Term> terms) {
  if (i >= j) throw std::logic_error(idx_error("set_bracket requires i < j"));
  std::erase_if(terms, [](const Term& t) { return is_zero(t.coeff); });
  if (terms.empty()) {
    table.erase({i, j});
    return;
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& u, const Term& v) { return u.index < v.index; });
  table[{i, j}] = std::move(terms);
}

namespace {

StructureConstants build_sq_any(const OmegaPattern& p) {
  StructureConstants g;
  g.basis = sq_basis(p.n);
  g.dim = static_cast<int>(g.basis.size());
  g.family = "sq";
  g.n = p.n;
  g.omega = p.values;
  std::map<std::string, int> index;
  for (int i = 0; i < g.dim; ++i) index[g.basis[i].name()] = i;
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      auto terms = bracket_of(p, g.basis[i], g.basis[j]);
      std::vector<Term> t;
      for (auto& [gen, c] : terms) t.push_back({index.at(gen.name()), c});
      g.set_bracket(i, j, std::move(t));
    }
  return g;
}

}  // namespace

StructureConstants build_sq(const OmegaPattern& p) {
  if (p.n < 1) throw std::invalid_argument(idx_error("the family is defined for N >= 1"));
  return build_sq_any(p);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::So: return "so";
    case Family::U1: return "u1";
    case Family::U2: return "u2";
    case Family::U3: return "u3";
    case Family::Sq: return "sq";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  if (s == "so") return Family::So;
  if (s == "u1") return Family::U1;
  if (s == "u2") return Family::U2;
  if (s == "u3") return Family::U3;
  if (s == "sq") return Family::Sq;
  throw std::invalid_argument(idx_error("unknown family '" + s + "'"));
}

SubalgebraSelector select_family(const StructureConstants& parent, Family f) {
  SubalgebraSelector sel;
  sel.family = f;
  int alpha = 0;
  if (f == Family::U1) alpha = 1;
  if (f == Family::U2) alpha = 2;
  if (f == Family::U3) alpha = 3;
  for (int i = 0; i < parent.dim; ++i) {
    const GeneratorId& g = parent.basis[i];
    bool keep = false;
    switch (f) {
      case Family::Sq: keep = true; break;
      case Family::So: keep = g.kind == GenKind::J; break;
      default: keep = g.kind == GenKind::J || g.alpha == alpha; break;
    }
    if (keep) sel.embedding.push_back(i);
  }
  return sel;
}

StructureConstants build_subalgebra(const StructureConstants& parent,
                                    const SubalgebraSelector& sel) {
  StructureConstants sub;
  sub.dim = static_cast<int>(sel.embedding.size());
  sub.family = family_name(sel.family);
  sub.n = parent.n;
  sub.omega = parent.omega;
  std::vector<int> back(parent.dim, -1);
  for (int i = 0; i < sub.dim; ++i) {
    sub.basis.push_back(parent.basis[sel.embedding[i]]);
    back[sel.embedding[i]] = i;
  }
  for (int i = 0; i < sub.dim; ++i)
    for (int j = i + 1; j < sub.dim; ++j) {
      auto terms = parent.bracket(sel.embedding[i], sel.embedding[j]);
      std::vector<Term> t;
      for (auto& term : terms) {
        if (back[term.index] < 0)
          throw std::logic_error(idx_error("subalgebra selection not closed: [" +
                                           sub.basis[i].name() + "," + sub.basis[j].name() +
                                           "] leaves the span"));
        t.push_back({back[term.index], term.coeff});
      }
      sub.set_bracket(i, j, std::move(t));
    }
  return sub;
}

StructureConstants build_family(const OmegaPattern& p, Family f) {
  StructureConstants full = build_sq(p);
  if (f == Family::Sq) return full;
  return build_subalgebra(full, select_family(full, f));
}

std::vector<JacobiViolation> verify_jacobi(const StructureConstants& g) {
  std::vector<JacobiViolation> violations;
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j)
      for (int l = j + 1; l < g.dim; ++l) {
        std::map<int, Rational> residual;
        auto accumulate = [&](int x, int y, int z) {
          for (const Term& t1 : g.bracket(x, y))
            for (const Term& t2 : g.bracket(t1.index, z))
              residual[t2.index] += t1.coeff * t2.coeff;
        };
        accumulate(i, j, l);
        accumulate(j, l, i);
        accumulate(l, i, j);
        std::vector<Term> nz;
        for (auto& [m, c] : residual)
          if (!is_zero(c)) nz.push_back({m, c});
        if (!nz.empty()) violations.push_back({i, j, l, std::move(nz)});
      }
  return violations;
}

GradingAutomorphism grading_automorphism(const StructureConstants& g,
                                         const std::vector<int>& subset) {
  auto chi = [&subset](int a) {
    return std::find(subset.begin(), subset.end(), a) != subset.end() ? 1 : 0;
  };
  GradingAutomorphism s;
  s.signs.resize(g.dim, 1);
  for (int i = 0; i < g.dim; ++i) {
    const GeneratorId& gen = g.basis[i];
    if (gen.kind == GenKind::J || gen.kind == GenKind::M)
      s.signs[i] = ((chi(gen.a) + chi(gen.b)) % 2 == 0) ? 1 : -1;
  }
  // bracket preservation: S([X_i,X_j]) = [S X_i, S X_j]
  for (const auto& [pair, terms] : g.table) {
    int sij = s.signs[pair.first] * s.signs[pair.second];
    for (const Term& t : terms)
      if (sij != s.signs[t.index])
        throw std::logic_error(idx_error("grading map is not an automorphism at [" +
                                         g.basis[pair.first].name() + "," +
                                         g.basis[pair.second].name() + "]"));
  }
  return s;
}

ReversalIsomorphism reversal_isomorphism(const OmegaPattern& p) {
  ReversalIsomorphism iso;
  iso.source = build_sq(p);
  iso.target = build_sq(p.reversed());
  const int n = p.n;
  std::map<std::string, int> target_index;
  for (int i = 0; i < iso.target.dim; ++i) target_index[iso.target.basis[i].name()] = i;
  // J_ab -> -J', M^1 <-> -M'^2, M^3 -> -M'^3, E^1 <-> -E'^2, E^3 -> -E'^3,
  // with index reflection a -> N-a.
  auto swap_alpha = [](int alpha) { return alpha == 3 ? 3 : 3 - alpha; };
  for (int i = 0; i < iso.source.dim; ++i) {
    const GeneratorId& g = iso.source.basis[i];
    GeneratorId image;
    switch (g.kind) {
      case GenKind::J: image = J(n - g.b, n - g.a); break;
      case GenKind::M: image = M(swap_alpha(g.alpha), n - g.b, n - g.a); break;
      case GenKind::E: image = E(swap_alpha(g.alpha), n - g.a); break;
    }
    iso.image_index.push_back(target_index.at(image.name()));
    iso.image_sign.push_back(-1);
  }
  for (int i = 0; i < iso.source.dim; ++i)
    for (int j = i + 1; j < iso.source.dim; ++j) {
      std::map<int, Rational> lhs, rhs;
      int s = iso.image_sign[i] * iso.image_sign[j];
      for (const Term& t : iso.target.bracket(iso.image_index[i], iso.image_index[j]))
        lhs[t.index] += s * t.coeff;
      for (const Term& t : iso.source.bracket(i, j))
        rhs[iso.image_index[t.index]] += iso.image_sign[t.index] * t.coeff;
      for (auto& [k, c] : rhs) lhs[k] -= c;
      for (auto& [k, c] : lhs)
        if (!is_zero(c))
          throw std::logic_error(idx_error("reversal map fails to intertwine [" +
                                           iso.source.basis[i].name() + "," +
                                           iso.source.basis[j].name() + "]"));
    }
  return iso;
}

SemidirectReport semidirect_analysis(const OmegaPattern& p, int a) {
  if (a < 1 || a > p.n) throw std::out_of_range(idx_error("contraction index out of range"));
  if (!is_zero(p.omega(a)))
    throw std::invalid_argument(idx_error("semidirect_analysis requires omega_a = 0"));
  StructureConstants g = build_sq(p);
  SemidirectReport rep;
  rep.a = a;
  for (int i = 0; i < g.dim; ++i) {
    const GeneratorId& gen = g.basis[i];
    bool pair_kind = gen.kind != GenKind::E;
    int lo = gen.a;
    int hi = pair_kind ? gen.b : gen.a;
    if (pair_kind && lo < a && hi >= a)
      rep.rectangle.push_back(i);
    else if (hi <= a - 1)
      rep.left.push_back(i);
    else if (lo >= a)
      rep.bottom.push_back(i);
  }
  rep.dim_t = static_cast<int>(rep.rectangle.size());
  if (rep.dim_t != 4 * a * (p.n + 1 - a))
    throw std::logic_error(idx_error("rectangle has unexpected dimension"));
  std::vector<char> in_t(g.dim, 0);
  for (int i : rep.rectangle) in_t[i] = 1;
  // abelian: [t, t] = 0
  for (int i : rep.rectangle)
    for (int j : rep.rectangle)
      if (i < j && !g.bracket(i, j).empty())
        throw std::logic_error(idx_error("rectangle span is not abelian"));
  // ideal: [g, t] inside t
  for (int i = 0; i < g.dim; ++i)
    for (int j : rep.rectangle)
      for (const Term& t : g.bracket(i, j))
        if (!in_t[t.index])
          throw std::logic_error(idx_error("rectangle span is not an ideal"));
  // each triangle closes and reproduces the smaller CK table
  auto check_triangle = [&](const std::vector<int>& tri, int offset, int sub_n,
                            std::vector<Rational> sub_vals) {
    OmegaPattern sub_p(sub_n, std::move(sub_vals));
    StructureConstants sub = build_sq_any(sub_p);
    if (sub.dim != static_cast<int>(tri.size()))
      throw std::logic_error(idx_error("triangle has unexpected dimension"));
    std::map<std::string, int> parent_index;
    for (int i = 0; i < g.dim; ++i) parent_index[g.basis[i].name()] = i;
    std::vector<int> up(sub.dim);  // sub index -> parent index, shifting by offset
    for (int i = 0; i < sub.dim; ++i) {
      GeneratorId shifted = sub.basis[i];
      shifted.a += offset;
      if (shifted.kind != GenKind::E) shifted.b += offset;
      up[i] = parent_index.at(shifted.name());
    }
    for (int i = 0; i < sub.dim; ++i)
      for (int j = i + 1; j < sub.dim; ++j) {
        std::map<int, Rational> diff;
        for (const Term& t : g.bracket(up[i], up[j])) diff[t.index] += t.coeff;
        for (const Term& t : sub.bracket(i, j)) diff[up[t.index]] -= t.coeff;
        for (auto& [k, c] : diff)
          if (!is_zero(c))
            throw std::logic_error(idx_error("triangle does not match the smaller CK table"));
      }
  };
  std::vector<Rational> left_vals(p.values.begin(), p.values.begin() + (a - 1));
  std::vector<Rational> bottom_vals(p.values.begin() + a, p.values.end());
  check_triangle(rep.left, 0, a - 1, std::move(left_vals));
  check_triangle(rep.bottom, a, p.n - a, std::move(bottom_vals));
  return rep;
}

nlohmann::json to_json(const StructureConstants& g) {
  nlohmann::json j;
  j["family"] = g.family;
  j["n"] = g.n;
  j["omega"] = nlohmann::json::array();
  for (const auto& w : g.omega) j["omega"].push_back(to_string(w));
  j["basis"] = nlohmann::json::array();
  for (const auto& b : g.basis) j["basis"].push_back(b.name());
  j["brackets"] = nlohmann::json::array();
  for (const auto& [pair, terms] : g.table) {
    nlohmann::json t = nlohmann::json::array();
    for (const Term& term : terms)
      t.push_back(nlohmann::json::array({term.index, to_string(term.coeff)}));
    j["brackets"].push_back(nlohmann::json::array({pair.first, pair.second, t}));
  }
  return j;
}

StructureConstants structure_constants_from_json(const nlohmann::json& j) {
  StructureConstants g;
  g.family = j.value("family", "sq");
  g.n = j.at("n").get<int>();
  for (const auto& w : j.at("omega")) {
    auto q = parse_rational(w.get<std::string>());
    if (!q) throw std::invalid_argument(idx_error("bad rational in omega"));
    g.omega.push_back(*q);
  }
  for (const auto& name : j.at("basis")) {
    std::string s = name.get<std::string>();
    GeneratorId gen{};
    auto parse_tail = [&s](std::size_t from, int& a, int* b) {
      auto us = s.find('_', from + 1);
      if (b == nullptr) {
        a = std::stoi(s.substr(from + 1));
        return;
      }
      a = std::stoi(s.substr(from + 1, us - from - 1));
      *b = std::stoi(s.substr(us + 1));
    };
    if (s[0] == 'J') {
      gen.kind = GenKind::J;
      parse_tail(s.find('_'), gen.a, &gen.b);
    } else if (s[0] == 'M') {
      gen.kind = GenKind::M;
      gen.alpha = s[1] - '0';
      parse_tail(s.find('_'), gen.a, &gen.b);
    } else if (s[0] == 'E') {
      gen.kind = GenKind::E;
      gen.alpha = s[1] - '0';
      gen.a = std::stoi(s.substr(s.find('_') + 1));
    } else {
      throw std::invalid_argument(idx_error("bad generator name '" + s + "'"));
    }
    g.basis.push_back(gen);
  }
  g.dim = static_cast<int>(g.basis.size());
  for (const auto& entry : j.at("brackets")) {
    int i = entry.at(0).get<int>();
    int jj = entry.at(1).get<int>();
    std::vector<Term> terms;
    for (const auto& t : entry.at(2)) {
      auto q = parse_rational(t.at(1).get<std::string>());
      if (!q) throw std::invalid_argument(idx_error("bad rational in bracket"));
      terms.push_back({t.at(0).get<int>(), *q});
    }
    g.set_bracket(i, jj, std::move(terms));
  }
  return g;
}

}  // namespace sqck
