#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sqck/rational.hpp"

namespace sqck {

enum class GenKind { J, M, E };

// Basis element of sq_omega(N+1): J_ab (a<b), M^alpha_ab (a<b), E^alpha_a.
struct GeneratorId {
  GenKind kind;
  int a = 0;
  int b = 0;      // unused for E
  int alpha = 0;  // 1..3, unused for J

  std::string name() const;  // "J_0_1", "M1_0_1", "E3_0"
  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
};

// The N contraction parameters omega_1..omega_N and the derived products
// omega_ab = omega_{a+1} ... omega_b.
struct OmegaPattern {
  int n = 0;
  std::vector<Rational> values;

  OmegaPattern(int n_, std::vector<Rational> values_);
  Rational omega(int a) const;           // omega_a, a in 1..N
  Rational omega_ab(int a, int b) const; // 0 <= a <= b <= N
  OmegaPattern reversed() const;
  std::string label() const;             // "1,0,-1"
};

struct Term {
  int index;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse bracket table [X_i, X_j] = sum_k C_ij^k X_k, stored for i < j only.
struct StructureConstants {
  int dim = 0;
  std::vector<GeneratorId> basis;
  std::map<std::pair<int, int>, std::vector<Term>> table;

  // descriptor of where the table came from
  std::string family = "sq";
  int n = 0;
  std::vector<Rational> omega;

  int index_of(const GeneratorId& g) const;  // -1 when absent
  // Signed lookup for arbitrary order; empty for i == j.
  std::vector<Term> bracket(int i, int j) const;
  void set_bracket(int i, int j, std::vector<Term> terms);
};

// Full basis of sq_omega(n+1) in the documented order: J block (lex), then
// M^1, M^2, M^3 blocks (each lex), then E^1, E^2, E^3 blocks.
std::vector<GeneratorId> sq_basis(int n);

// Bracket of two abstract generators as a combination of basis generators.
std::vector<std::pair<GeneratorId, Rational>> bracket_of(const OmegaPattern& p,
                                                         const GeneratorId& x,
                                                         const GeneratorId& y);

// Structure constants of sq_omega(N+1); rejects N = 0.
StructureConstants build_sq(const OmegaPattern& p);

enum class Family { So, U1, U2, U3, Sq };

std::string family_name(Family f);
Family parse_family(const std::string& s);  // throws std::invalid_argument

struct SubalgebraSelector {
  Family family;
  std::vector<int> embedding;  // subalgebra basis index -> parent basis index
};

SubalgebraSelector select_family(const StructureConstants& parent, Family f);

// Restriction of the parent table to the selected generators. Throws
// std::logic_error if the selection is not closed under the bracket.
StructureConstants build_subalgebra(const StructureConstants& parent,
                                    const SubalgebraSelector& sel);

StructureConstants build_family(const OmegaPattern& p, Family f);

struct JacobiViolation {
  int i, j, l;
  std::vector<Term> residual;
};

std::vector<JacobiViolation> verify_jacobi(const StructureConstants& g);

// Diagonal involution S_S; signs[i] is +1 or -1 per basis element.
struct GradingAutomorphism {
  std::vector<int> signs;
};

// subset is a set of indices in {0..N}. Throws std::logic_error if the
// resulting map fails the automorphism check.
GradingAutomorphism grading_automorphism(const StructureConstants& g,
                                         const std::vector<int>& subset);

// Signed basis permutation sq_omega(N+1) -> sq_reverse(omega)(N+1).
struct ReversalIsomorphism {
  StructureConstants source;
  StructureConstants target;
  std::vector<int> image_index;
  std::vector<int> image_sign;
};

// Throws std::logic_error if the map fails to intertwine the two tables.
ReversalIsomorphism reversal_isomorphism(const OmegaPattern& p);

// Decomposition t (.) (sq(a) + sq(N+1-a)) at a contraction omega_a = 0.
struct SemidirectReport {
  int a = 0;
  std::vector<int> rectangle;  // basis indices spanning the abelian ideal t
  std::vector<int> left;       // triangle on indices {0..a-1}
  std::vector<int> bottom;     // triangle on indices {a..N}
  int dim_t = 0;
};

// Requires p.omega(a) == 0; verifies that t is an abelian ideal of dimension
// 4a(N+1-a) and that both triangles close and match the smaller CK tables.
SemidirectReport semidirect_analysis(const OmegaPattern& p, int a);

nlohmann::json to_json(const StructureConstants& g);
StructureConstants structure_constants_from_json(const nlohmann::json& j);

}  // namespace sqck
