#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sqck/rational.hpp"

namespace sqck {

// Sparse matrix over the rationals, assembled from triplets; colliding
// entries are summed exactly and zeros dropped.
class SparseRationalMatrix {
 public:
  SparseRationalMatrix(int rows, int cols);

  void add(int row, int col, const Rational& value);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<int, Rational>& row(int r) const { return data_[r]; }
  long long nonzeros() const;

  // M v with a dense vector, exact.
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

 private:
  int rows_, cols_;
  std::vector<std::map<int, Rational>> data_;
};

struct NullspaceBasis {
  int dim_domain = 0;
  std::vector<std::vector<Rational>> vectors;
};

// Exact rank via fraction-free (Bareiss) elimination on integer-scaled rows,
// pivoting on the smallest-magnitude entry in each column.
int rank(const SparseRationalMatrix& m);

// Basis of ker M from the reduced row echelon form; every vector is checked
// by multiplication and the count against rank-nullity.
NullspaceBasis nullspace(const SparseRationalMatrix& m);

// Particular solution of M x = rhs, or nullopt when inconsistent.
std::optional<std::vector<Rational>> solve(const SparseRationalMatrix& m,
                                           const std::vector<Rational>& rhs);

// Incremental row-echelon set for rank bookkeeping over dense vectors.
class EchelonSet {
 public:
  explicit EchelonSet(int dim) : dim_(dim) {}

  // Reduces v against the current rows; returns true (and absorbs the
  // residual) when v enlarges the span.
  bool insert(std::vector<Rational> v);
  // Residual of v after reduction; zero vector iff v lies in the span.
  std::vector<Rational> reduce(std::vector<Rational> v) const;
  bool contains(const std::vector<Rational>& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }
  int dim() const { return dim_; }

 private:
  int dim_;
  std::vector<std::vector<Rational>> rows_;  // each with leading 1
  std::vector<int> pivots_;
};

// dim span(Z) - dim span(B); throws std::invalid_argument if some vector of
// B falls outside span(Z).
int quotient_dimension(const NullspaceBasis& z, const std::vector<std::vector<Rational>>& b);

}  // namespace sqck
