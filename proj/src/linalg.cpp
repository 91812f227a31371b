#include "sqck/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqck {

SparseRationalMatrix::SparseRationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(rows) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("linalg: negative matrix shape");
}

void SparseRationalMatrix::add(int row, int col, const Rational& value) {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_)
    throw std::out_of_range("linalg: triplet outside matrix shape");
  if (is_zero(value)) return;
  auto& r = data_[row];
  auto it = r.find(col);
  if (it == r.end()) {
    r.emplace(col, value);
    return;
  }
  it->second += value;
  if (is_zero(it->second)) r.erase(it);
}

long long SparseRationalMatrix::nonzeros() const {
  long long n = 0;
  for (const auto& r : data_) n += static_cast<long long>(r.size());
  return n;
}

std::vector<Rational> SparseRationalMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("linalg: vector length mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, val] : data_[r]) out[r] += val * v[c];
  return out;
}

int rank(const SparseRationalMatrix& m) {
  // integer-scaled copy: each row multiplied by the lcm of its denominators
  std::vector<std::map<int, Integer>> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    const auto& src = m.row(r);
    if (src.empty()) continue;
    Integer lcm(1);
    for (const auto& [c, v] : src) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
      lcm = lcm / g * v.get_den();
    }
    std::map<int, Integer> row;
    for (const auto& [c, v] : src) row[c] = v.get_num() * (lcm / v.get_den());
    rows.push_back(std::move(row));
  }
  int rk = 0;
  Integer prev(1);
  std::vector<std::size_t> active(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) active[i] = i;
  for (int col = 0; col < m.cols() && !active.empty(); ++col) {
    // pivot: smallest |entry| in this column among active rows
    int pick = -1;
    for (std::size_t k = 0; k < active.size(); ++k) {
      auto it = rows[active[k]].find(col);
      if (it == rows[active[k]].end()) continue;
      if (pick < 0 ||
          mpz_cmpabs(it->second.get_mpz_t(), rows[active[pick]].at(col).get_mpz_t()) < 0)
        pick = static_cast<int>(k);
    }
    if (pick < 0) continue;
    std::size_t pr = active[pick];
    active.erase(active.begin() + pick);
    ++rk;
    const Integer pv = rows[pr].at(col);
    std::vector<std::size_t> still;
    still.reserve(active.size());
    // one-step fraction-free update; every active row is rescaled so the
    // exact division by the previous pivot stays valid
    for (std::size_t s : active) {
      auto it = rows[s].find(col);
      const Integer sc = it != rows[s].end() ? it->second : Integer(0);
      std::map<int, Integer> updated;
      auto touch = [&](int c) {
        if (updated.count(c)) return;
        auto is = rows[s].find(c);
        Integer t = is != rows[s].end() ? pv * is->second : Integer(0);
        if (sc != 0) {
          auto ip = rows[pr].find(c);
          if (ip != rows[pr].end()) t -= sc * ip->second;
        }
        if (t == 0) return;
        Integer q;
        mpz_divexact(q.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        updated[c] = std::move(q);
      };
      for (const auto& [c, v] : rows[s])
        if (c > col) touch(c);
      if (sc != 0)
        for (const auto& [c, v] : rows[pr])
          if (c > col) touch(c);
      rows[s] = std::move(updated);
      if (!rows[s].empty()) still.push_back(s);
    }
    active = std::move(still);
    prev = pv;
  }
  return rk;
}

namespace {

// reduced row echelon form over the rationals; returns pivot columns
std::vector<int> rref(std::vector<std::map<int, Rational>>& rows, int cols) {
  std::vector<int> pivot_cols;
  std::vector<std::size_t> done;    // rows already holding a pivot
  std::vector<std::size_t> active;  // candidate rows
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i].empty()) active.push_back(i);
  for (int col = 0; col < cols && !active.empty(); ++col) {
    int pick = -1;
    for (std::size_t k = 0; k < active.size(); ++k) {
      const auto& r = rows[active[k]];
      if (r.begin()->first != col) continue;
      if (pick < 0 || r.size() < rows[active[pick]].size()) pick = static_cast<int>(k);
    }
    if (pick < 0) continue;
    std::size_t pr = active[pick];
    active.erase(active.begin() + pick);
    Rational inv = 1 / rows[pr].begin()->second;
    for (auto& [c, v] : rows[pr]) v *= inv;
    auto eliminate = [&](std::size_t s) {
      auto it = rows[s].find(col);
      if (it == rows[s].end()) return;
      Rational f = it->second;
      for (const auto& [c, v] : rows[pr]) {
        auto& cell = rows[s][c];
        cell -= f * v;
        if (is_zero(cell)) rows[s].erase(c);
      }
    };
    for (std::size_t s : done) eliminate(s);
    std::vector<std::size_t> still;
    for (std::size_t s : active) {
      eliminate(s);
      if (!rows[s].empty()) still.push_back(s);
    }
    active = std::move(still);
    done.push_back(pr);
    pivot_cols.push_back(col);
  }
  // keep only pivot rows, in pivot-column order
  std::vector<std::map<int, Rational>> out;
  out.reserve(done.size());
  for (std::size_t s : done) out.push_back(std::move(rows[s]));
  rows = std::move(out);
  return pivot_cols;
}

}  // namespace

NullspaceBasis nullspace(const SparseRationalMatrix& m) {
  std::vector<std::map<int, Rational>> rows;
  rows.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) rows.push_back(m.row(r));
  std::vector<int> pivots = rref(rows, m.cols());
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;
  NullspaceBasis basis;
  basis.dim_domain = m.cols();
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      auto it = rows[i].find(free);
      if (it != rows[i].end()) v[pivots[i]] = -it->second;
    }
    basis.vectors.push_back(std::move(v));
  }
  if (static_cast<int>(pivots.size() + basis.vectors.size()) != m.cols())
    throw std::logic_error("linalg: rank-nullity violated");
  for (const auto& v : basis.vectors)
    for (const auto& entry : m.apply(v))
      if (!is_zero(entry)) throw std::logic_error("linalg: nullspace vector fails M v = 0");
  return basis;
}

std::optional<std::vector<Rational>> solve(const SparseRationalMatrix& m,
                                           const std::vector<Rational>& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows())
    throw std::invalid_argument("linalg: rhs length mismatch");
  // augmented system [M | rhs]
  std::vector<std::map<int, Rational>> rows;
  for (int r = 0; r < m.rows(); ++r) {
    std::map<int, Rational> row = m.row(r);
    if (!is_zero(rhs[r])) row[m.cols()] = rhs[r];
    if (!row.empty()) rows.push_back(std::move(row));
  }
  std::vector<int> pivots = rref(rows, m.cols() + 1);
  std::vector<Rational> x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == m.cols()) return std::nullopt;  // 0 = 1 row
    auto it = rows[i].find(m.cols());
    if (it != rows[i].end()) x[pivots[i]] = it->second;  // free variables at 0
  }
  return x;
}

std::vector<Rational> EchelonSet::reduce(std::vector<Rational> v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational& c = v[pivots_[i]];
    if (is_zero(c)) continue;
    Rational f = c;
    for (int k = 0; k < dim_; ++k)
      if (!is_zero(rows_[i][k])) v[k] -= f * rows_[i][k];
  }
  return v;
}

bool EchelonSet::contains(const std::vector<Rational>& v) const {
  for (const auto& c : reduce(v))
    if (!is_zero(c)) return false;
  return true;
}

bool EchelonSet::insert(std::vector<Rational> v) {
  if (static_cast<int>(v.size()) != dim_)
    throw std::invalid_argument("linalg: echelon vector length mismatch");
  v = reduce(std::move(v));
  int lead = -1;
  for (int k = 0; k < dim_; ++k)
    if (!is_zero(v[k])) {
      lead = k;
      break;
    }
  if (lead < 0) return false;
  Rational inv = 1 / v[lead];
  for (auto& c : v) c *= inv;
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  return true;
}

int quotient_dimension(const NullspaceBasis& z, const std::vector<std::vector<Rational>>& b) {
  EchelonSet zspan(z.dim_domain);
  for (const auto& v : z.vectors) zspan.insert(v);
  EchelonSet bspan(z.dim_domain);
  for (const auto& v : b) {
    if (!zspan.contains(v))
      throw std::invalid_argument("linalg: quotient vector outside span(Z)");
    bspan.insert(v);
  }
  return zspan.rank() - bspan.rank();
}

}  // namespace sqck
