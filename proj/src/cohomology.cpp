#include "sqck/cohomology.hpp"

#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sqck {

int pair_index(int dim, int i, int j) {
  if (i < 0 || j <= i || j >= dim) throw std::out_of_range("cohomology: bad pair (i,j)");
  return i * dim - i * (i + 1) / 2 + (j - i - 1);
}

int pair_count(int dim) { return dim * (dim - 1) / 2; }

Rational TwoCochain::at(int i, int j) const {
  if (i == j) return Rational(0);
  if (i > j) return -at(j, i);
  auto it = values.find({i, j});
  return it == values.end() ? Rational(0) : it->second;
}

void TwoCochain::set(int i, int j, Rational v) {
  if (i == j) throw std::invalid_argument("cohomology: diagonal cochain entry");
  if (i > j) {
    set(j, i, -std::move(v));
    return;
  }
  if (is_zero(v))
    values.erase({i, j});
  else
    values[{i, j}] = std::move(v);
}

std::vector<Rational> TwoCochain::flatten() const {
  std::vector<Rational> flat(pair_count(dim), Rational(0));
  for (const auto& [ij, v] : values) flat[pair_index(dim, ij.first, ij.second)] = v;
  return flat;
}

TwoCochain TwoCochain::from_flat(int dim, const std::vector<Rational>& flat) {
  if (static_cast<int>(flat.size()) != pair_count(dim))
    throw std::invalid_argument("cohomology: flat cochain length mismatch");
  TwoCochain xi;
  xi.dim = dim;
  int pos = 0;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j, ++pos)
      if (!is_zero(flat[pos])) xi.values[{i, j}] = flat[pos];
  return xi;
}

SparseRationalMatrix cocycle_matrix(const StructureConstants& g) {
  const int r = g.dim;
  const int cols = pair_count(r);
  long long triples = static_cast<long long>(r) * (r - 1) * (r - 2) / 6;
  SparseRationalMatrix m(static_cast<int>(triples), cols);
  int row = 0;
  auto add_term = [&](int row_idx, int k, int l, const Rational& c) {
    if (k == l) return;
    if (k < l)
      m.add(row_idx, pair_index(r, k, l), c);
    else
      m.add(row_idx, pair_index(r, l, k), -c);
  };
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int l = j + 1; l < r; ++l, ++row) {
        for (const Term& t : g.bracket(i, j)) add_term(row, t.index, l, t.coeff);
        for (const Term& t : g.bracket(j, l)) add_term(row, t.index, i, t.coeff);
        for (const Term& t : g.bracket(l, i)) add_term(row, t.index, j, t.coeff);
      }
  return m;
}

NullspaceBasis cocycle_space(const StructureConstants& g) {
  if (!verify_jacobi(g).empty())
    throw std::invalid_argument("cohomology: input table violates the Jacobi identity");
  return nullspace(cocycle_matrix(g));
}

std::vector<std::vector<Rational>> coboundary_space(const StructureConstants& g) {
  std::vector<std::vector<Rational>> cols(g.dim,
                                          std::vector<Rational>(pair_count(g.dim), Rational(0)));
  for (const auto& [ij, terms] : g.table) {
    int pos = pair_index(g.dim, ij.first, ij.second);
    for (const Term& t : terms) cols[t.index][pos] = t.coeff;
  }
  return cols;
}

int derived_algebra_dimension(const StructureConstants& g) {
  SparseRationalMatrix span(static_cast<int>(g.table.size()), g.dim);
  int row = 0;
  for (const auto& [ij, terms] : g.table) {
    for (const Term& t : terms) span.add(row, t.index, t.coeff);
    ++row;
  }
  return rank(span);
}

CohomologyReport h2(const StructureConstants& g) {
  CohomologyReport rep;
  rep.family = g.family;
  rep.n = g.n;
  rep.omega = g.omega;
  NullspaceBasis z = cocycle_space(g);
  std::vector<std::vector<Rational>> b = coboundary_space(g);
  rep.dim_z2 = static_cast<int>(z.vectors.size());
  // delta^2 = 0: every coboundary must lie in Z^2 (checked inside)
  rep.dim_h2 = quotient_dimension(z, b);
  EchelonSet span(z.dim_domain);
  for (const auto& v : b) span.insert(v);
  rep.dim_b2 = span.rank();
  // deterministic representatives: complete the coboundary basis inside Z^2
  for (const auto& v : z.vectors)
    if (span.insert(v)) rep.representatives.push_back(TwoCochain::from_flat(g.dim, v));
  if (rep.dim_h2 != rep.dim_z2 - rep.dim_b2 ||
      static_cast<int>(rep.representatives.size()) != rep.dim_h2)
    throw std::logic_error("cohomology: inconsistent H^2 bookkeeping");
  return rep;
}

ExtensionClass classify_extension(const StructureConstants& g, const TwoCochain& xi) {
  if (xi.dim != g.dim) throw std::invalid_argument("cohomology: cochain dimension mismatch");
  std::vector<Rational> flat = xi.flatten();
  for (const auto& c : cocycle_matrix(g).apply(flat))
    if (!is_zero(c)) throw std::invalid_argument("cohomology: cochain is not a cocycle");
  // xi trivial iff xi = delta(mu) for some mu
  SparseRationalMatrix delta(pair_count(g.dim), g.dim);
  for (const auto& [ij, terms] : g.table) {
    int pos = pair_index(g.dim, ij.first, ij.second);
    for (const Term& t : terms) delta.add(pos, t.index, t.coeff);
  }
  ExtensionClass out;
  if (auto mu = solve(delta, flat)) {
    out.trivial = true;
    out.witness = std::move(*mu);
  }
  return out;
}

TwoCochain unitary_type2_cochain(const OmegaPattern& p, int alpha, int a) {
  if (a < 1 || a > p.n) throw std::out_of_range("cohomology: contraction index out of range");
  if (alpha < 1 || alpha > 3) throw std::out_of_range("cohomology: quaternionic index out of range");
  Family fam = alpha == 1 ? Family::U1 : alpha == 2 ? Family::U2 : Family::U3;
  StructureConstants u = build_family(p, fam);
  TwoCochain xi;
  xi.dim = u.dim;
  for (int b = 0; b <= p.n; ++b)
    for (int c = b + 1; c <= p.n; ++c) {
      // f_bc from the chain rule with f_{s-1,s} = delta_{s,a}
      Rational f(0);
      for (int s = b + 1; s <= c; ++s)
        if (s == a) f += p.omega_ab(b, s - 1) * p.omega_ab(s, c);
      if (is_zero(f)) continue;
      int ij = u.index_of({GenKind::J, b, c, 0});
      int im = u.index_of({GenKind::M, b, c, alpha});
      xi.set(ij, im, f);
    }
  return xi;
}

TwoCochain unitary_type2_representative(const OmegaPattern& p, int alpha, int a) {
  if (!is_zero(p.omega(a)))
    throw std::invalid_argument("cohomology: type II representative needs omega_a = 0");
  TwoCochain xi = unitary_type2_cochain(p, alpha, a);
  Family fam = alpha == 1 ? Family::U1 : alpha == 2 ? Family::U2 : Family::U3;
  StructureConstants u = build_family(p, fam);
  if (classify_extension(u, xi).trivial)
    throw std::logic_error("cohomology: type II representative is unexpectedly a coboundary");
  return xi;
}

int unitary_type3_count(const OmegaPattern& p) {
  const int n1 = p.n + 1;
  auto unknown = [&](int a, int b) { return pair_index(n1, a, b); };
  // constraints on the e_{a,b}: omega_ab e_ab = 0 and the two difference
  // relations per ordered triple
  int pairs = pair_count(n1);
  int rows = pairs + 2 * n1 * (n1 - 1) * (n1 - 2) / 6;
  SparseRationalMatrix m(rows, pairs);
  int row = 0;
  for (int a = 0; a <= p.n; ++a)
    for (int b = a + 1; b <= p.n; ++b, ++row) m.add(row, unknown(a, b), p.omega_ab(a, b));
  for (int a = 0; a <= p.n; ++a)
    for (int b = a + 1; b <= p.n; ++b)
      for (int c = b + 1; c <= p.n; ++c) {
        Rational wab = p.omega_ab(a, b), wbc = p.omega_ab(b, c);
        m.add(row, unknown(a, c), wab);
        m.add(row, unknown(b, c), -wab);
        ++row;
        m.add(row, unknown(a, b), wbc);
        m.add(row, unknown(a, c), -wbc);
        ++row;
      }
  int dim = pairs - rank(m);
  int zeros = 0;
  for (const auto& w : p.values)
    if (is_zero(w)) ++zeros;
  if (dim != zeros * (zeros + 1) / 2)
    throw std::logic_error("cohomology: type III count disagrees with the zero pattern");
  return dim;
}

nlohmann::json to_json(const CohomologyReport& rep) {
  nlohmann::json j;
  j["family"] = rep.family;
  j["n"] = rep.n;
  j["omega"] = nlohmann::json::array();
  for (const auto& w : rep.omega) j["omega"].push_back(to_string(w));
  j["dim_z2"] = rep.dim_z2;
  j["dim_b2"] = rep.dim_b2;
  j["dim_h2"] = rep.dim_h2;
  j["representatives"] = nlohmann::json::array();
  for (const auto& xi : rep.representatives) {
    nlohmann::json entry = nlohmann::json::array();
    for (const auto& [ij, v] : xi.values)
      entry.push_back(nlohmann::json::array({ij.first, ij.second, to_string(v)}));
    j["representatives"].push_back(entry);
  }
  return j;
}

}  // namespace sqck
