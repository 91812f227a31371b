#pragma once

#include <map>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sqck/ckalgebra.hpp"
#include "sqck/linalg.hpp"

namespace sqck {

// Flat position of the pair (i,j), i < j, in lexicographic order.
int pair_index(int dim, int i, int j);
int pair_count(int dim);

// Antisymmetric two-cochain xi_ij on an r-dimensional algebra, stored for
// i < j only.
struct TwoCochain {
  int dim = 0;
  std::map<std::pair<int, int>, Rational> values;

  Rational at(int i, int j) const;  // signed; zero on the diagonal
  void set(int i, int j, Rational v);
  std::vector<Rational> flatten() const;
  static TwoCochain from_flat(int dim, const std::vector<Rational>& flat);
};

// Linear system on the xi unknowns cut out by the Jacobi identities of the
// centrally extended algebra: one row per triple i<j<l.
SparseRationalMatrix cocycle_matrix(const StructureConstants& g);

// Z^2 as the exact nullspace of the cocycle constraints; requires g to pass
// verify_jacobi.
NullspaceBasis cocycle_space(const StructureConstants& g);

// Images of the unit vectors under mu -> (sum_k C_ij^k mu_k)_{i<j}; their
// span is B^2 and has the dimension of the derived algebra [g,g].
std::vector<std::vector<Rational>> coboundary_space(const StructureConstants& g);

// dim [g,g], computed directly as the rank of the bracket span.
int derived_algebra_dimension(const StructureConstants& g);

struct CohomologyReport {
  std::string family;
  int n = 0;
  std::vector<Rational> omega;
  int dim_z2 = 0;
  int dim_b2 = 0;
  int dim_h2 = 0;
  std::vector<TwoCochain> representatives;
};

CohomologyReport h2(const StructureConstants& g);

struct ExtensionClass {
  bool trivial = false;
  // When trivial: mu with delta(mu) = xi, realizing the generator shift.
  std::vector<Rational> witness;
};

// Throws std::invalid_argument if xi is not a cocycle.
ExtensionClass classify_extension(const StructureConstants& g, const TwoCochain& xi);

// The Type II cochain of u^alpha_omega(N+1) generated from the single free
// parameter f_{a-1,a} = 1: xi(J_bc, M^alpha_bc) = omega_{b,a-1} omega_{a,c}
// for b < a <= c, zero elsewhere. Valid for any omega pattern.
TwoCochain unitary_type2_cochain(const OmegaPattern& p, int alpha, int a);

// Same cochain, requiring omega_a = 0; asserted to be a non-trivial cocycle.
TwoCochain unitary_type2_representative(const OmegaPattern& p, int alpha, int a);

// Dimension of the solution space of the Type III constraints on the
// e_{a,b} unknowns; equals n(n+1)/2 for n vanishing omega entries.
int unitary_type3_count(const OmegaPattern& p);

nlohmann::json to_json(const CohomologyReport& rep);

}  // namespace sqck
