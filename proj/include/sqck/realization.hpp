#pragma once

#include <string>
#include <vector>

#include "sqck/ckalgebra.hpp"
#include "sqck/quaternion.hpp"

namespace sqck {

// Dense square matrix over the quaternions; factor order is preserved
// everywhere since the entries do not commute.
class QuaternionMatrix {
 public:
  explicit QuaternionMatrix(int size);

  int size() const { return size_; }
  Quaternion& at(int r, int c) { return entries_[r * size_ + c]; }
  const Quaternion& at(int r, int c) const { return entries_[r * size_ + c]; }

  bool is_zero() const;
  QuaternionMatrix conj_transpose() const;
  Quaternion trace() const;

  friend QuaternionMatrix operator+(const QuaternionMatrix& a, const QuaternionMatrix& b);
  friend QuaternionMatrix operator-(const QuaternionMatrix& a, const QuaternionMatrix& b);
  friend QuaternionMatrix operator*(const QuaternionMatrix& a, const QuaternionMatrix& b);
  friend QuaternionMatrix operator*(const Quaternion& s, const QuaternionMatrix& a);
  friend bool operator==(const QuaternionMatrix& a, const QuaternionMatrix& b);

 private:
  int size_;
  std::vector<Quaternion> entries_;
};

std::string to_string(const QuaternionMatrix& m);

// e_ab of the given size with rational coefficient one.
QuaternionMatrix unit_matrix(int size, int a, int b);

// diag(1, omega_01, ..., omega_0N)
std::vector<Rational> metric_matrix(const OmegaPattern& p);

// J_ab = -omega_ab e_ab + e_ba, M^alpha_ab = i_alpha(omega_ab e_ab + e_ba),
// E^alpha_a = i_alpha e_aa.
QuaternionMatrix realize_generator(const OmegaPattern& p, const GeneratorId& g);

// X^dagger I_k + I_k X = 0 exactly.
bool antihermiticity_check(const OmegaPattern& p, const QuaternionMatrix& x);

// XY - YX, exact.
QuaternionMatrix matrix_bracket(const QuaternionMatrix& x, const QuaternionMatrix& y);

// -delta_ab [X,Y] + sum_g eps_abg i_g {X,Y} for real X, Y; asserted equal to
// the direct commutator of i_alpha X and i_beta Y.
QuaternionMatrix pure_bracket_identity(int alpha, const QuaternionMatrix& x, int beta,
                                       const QuaternionMatrix& y);

struct RealizationViolation {
  GeneratorId left, right;
  std::string detail;
};

// Expands every commutator of realized generators in the realized basis and
// compares against the abstract table; empty iff the realization is a
// homomorphism.
std::vector<RealizationViolation> realization_consistency(const OmegaPattern& p);

// The three matrices I^alpha = i_alpha Id spanning sq(1).
std::vector<QuaternionMatrix> sq1_generators(int size);

}  // namespace sqck
