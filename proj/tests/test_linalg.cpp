#include <doctest.h>

#include <random>

#include "oracle.hpp"
#include "sqck/linalg.hpp"

using namespace sqck;

namespace {

SparseRationalMatrix random_sparse(std::mt19937& rng, int rows, int cols, double density) {
  SparseRationalMatrix m(rows, cols);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      if (u(rng) < density) m.add(r, c, make_rational(num(rng), den(rng)));
  return m;
}

SparseRationalMatrix transpose(const SparseRationalMatrix& m) {
  SparseRationalMatrix t(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) t.add(c, r, v);
  return t;
}

}  // namespace

TEST_CASE("rank basics") {
  SparseRationalMatrix zero(4, 5);
  CHECK(rank(zero) == 0);
  SparseRationalMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.add(i, i, Rational(1));
  CHECK(rank(id) == 3);
  SparseRationalMatrix prop(2, 2);
  prop.add(0, 0, Rational(1));
  prop.add(0, 1, Rational(2));
  prop.add(1, 0, Rational(2));
  prop.add(1, 1, Rational(4));
  CHECK(rank(prop) == 1);
}

TEST_CASE("triplet assembly deduplicates with exact sums") {
  SparseRationalMatrix m(1, 2);
  m.add(0, 0, Rational(1, 3));
  m.add(0, 0, Rational(2, 3));
  m.add(0, 1, Rational(1, 2));
  m.add(0, 1, Rational(-1, 2));
  CHECK(m.row(0).size() == 1);
  CHECK(m.row(0).at(0) == 1);
}

TEST_CASE("nullspace basics") {
  SparseRationalMatrix id(3, 3);
  for (int i = 0; i < 3; ++i) id.add(i, i, Rational(1));
  CHECK(nullspace(id).vectors.empty());

  SparseRationalMatrix zero(2, 4);
  auto z = nullspace(zero);
  CHECK(z.vectors.size() == 4);

  SparseRationalMatrix row(1, 3);
  row.add(0, 0, Rational(1));
  row.add(0, 1, Rational(1));
  auto k = nullspace(row);
  CHECK(k.vectors.size() == 2);
  for (const auto& v : k.vectors)
    for (const auto& e : row.apply(v)) CHECK(is_zero(e));
}

TEST_CASE("rank equals transpose rank and matches the dense oracle") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 12);
    int cols = 1 + static_cast<int>(rng() % 12);
    auto m = random_sparse(rng, rows, cols, 0.35);
    int rk = rank(m);
    CHECK(rk == rank(transpose(m)));
    CHECK(rk == oracle::dense_rank(oracle::to_dense(m)));
    auto ns = nullspace(m);
    CHECK(static_cast<int>(ns.vectors.size()) == cols - rk);  // rank-nullity
  }
}

TEST_CASE("solve finds witnesses and detects inconsistency") {
  SparseRationalMatrix m(2, 2);
  m.add(0, 0, Rational(1));
  m.add(0, 1, Rational(2));
  m.add(1, 0, Rational(2));
  m.add(1, 1, Rational(4));
  auto sol = solve(m, {Rational(3), Rational(6)});
  REQUIRE(sol.has_value());
  auto check = m.apply(*sol);
  CHECK(check[0] == 3);
  CHECK(check[1] == 6);
  CHECK(!solve(m, {Rational(3), Rational(7)}).has_value());
}

TEST_CASE("quotient dimension") {
  NullspaceBasis z;
  z.dim_domain = 4;
  z.vectors = {{Rational(1), Rational(0), Rational(0), Rational(0)},
               {Rational(0), Rational(1), Rational(0), Rational(0)},
               {Rational(0), Rational(0), Rational(1), Rational(0)}};
  CHECK(quotient_dimension(z, {}) == 3);
  CHECK(quotient_dimension(z, z.vectors) == 0);
  CHECK(quotient_dimension(z, {z.vectors[1]}) == 2);
  std::vector<Rational> outside = {Rational(0), Rational(0), Rational(0), Rational(1)};
  CHECK_THROWS_AS(quotient_dimension(z, {outside}), std::invalid_argument);
}
