#include "sqck/realization.hpp"

#include <stdexcept>

namespace sqck {

QuaternionMatrix::QuaternionMatrix(int size) : size_(size), entries_(size * size) {
  if (size <= 0) throw std::invalid_argument("realization: matrix size must be positive");
}

bool QuaternionMatrix::is_zero() const {
  for (const auto& q : entries_)
    if (!q.is_zero()) return false;
  return true;
}

QuaternionMatrix QuaternionMatrix::conj_transpose() const {
  QuaternionMatrix out(size_);
  for (int r = 0; r < size_; ++r)
    for (int c = 0; c < size_; ++c) out.at(c, r) = at(r, c).conj();
  return out;
}

Quaternion QuaternionMatrix::trace() const {
  Quaternion t;
  for (int r = 0; r < size_; ++r) t = t + at(r, r);
  return t;
}

QuaternionMatrix operator+(const QuaternionMatrix& a, const QuaternionMatrix& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("realization: size mismatch");
  QuaternionMatrix out(a.size_);
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] = a.entries_[i] + b.entries_[i];
  return out;
}

QuaternionMatrix operator-(const QuaternionMatrix& a, const QuaternionMatrix& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("realization: size mismatch");
  QuaternionMatrix out(a.size_);
  for (std::size_t i = 0; i < out.entries_.size(); ++i)
    out.entries_[i] = a.entries_[i] - b.entries_[i];
  return out;
}

QuaternionMatrix operator*(const QuaternionMatrix& a, const QuaternionMatrix& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("realization: size mismatch");
  QuaternionMatrix out(a.size_);
  for (int r = 0; r < a.size_; ++r)
    for (int k = 0; k < a.size_; ++k) {
      if (a.at(r, k).is_zero()) continue;
      for (int c = 0; c < a.size_; ++c) {
        if (b.at(k, c).is_zero()) continue;
        out.at(r, c) = out.at(r, c) + a.at(r, k) * b.at(k, c);
      }
    }
  return out;
}

QuaternionMatrix operator*(const Quaternion& s, const QuaternionMatrix& a) {
  QuaternionMatrix out(a.size_);
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] = s * a.entries_[i];
  return out;
}

bool operator==(const QuaternionMatrix& a, const QuaternionMatrix& b) {
  return a.size_ == b.size_ && a.entries_ == b.entries_;
}

std::string to_string(const QuaternionMatrix& m) {
  std::string out;
  for (int r = 0; r < m.size(); ++r) {
    out += "[ ";
    for (int c = 0; c < m.size(); ++c) {
      if (c) out += "  ";
      out += to_string(m.at(r, c));
    }
    out += " ]\n";
  }
  return out;
}

QuaternionMatrix unit_matrix(int size, int a, int b) {
  QuaternionMatrix m(size);
  m.at(a, b) = Quaternion(Rational(1));
  return m;
}

std::vector<Rational> metric_matrix(const OmegaPattern& p) {
  std::vector<Rational> diag;
  for (int i = 0; i <= p.n; ++i) diag.push_back(p.omega_ab(0, i));
  return diag;
}

QuaternionMatrix realize_generator(const OmegaPattern& p, const GeneratorId& g) {
  const int size = p.n + 1;
  auto valid = [&](int i) { return i >= 0 && i <= p.n; };
  QuaternionMatrix m(size);
  switch (g.kind) {
    case GenKind::J: {
      if (!valid(g.a) || !valid(g.b) || g.a >= g.b)
        throw std::invalid_argument("realization: invalid J generator");
      m.at(g.a, g.b) = Quaternion(-p.omega_ab(g.a, g.b));
      m.at(g.b, g.a) = Quaternion(Rational(1));
      break;
    }
    case GenKind::M: {
      if (!valid(g.a) || !valid(g.b) || g.a >= g.b || g.alpha < 1 || g.alpha > 3)
        throw std::invalid_argument("realization: invalid M generator");
      m.at(g.a, g.b) = p.omega_ab(g.a, g.b) * Quaternion::unit(g.alpha);
      m.at(g.b, g.a) = Quaternion::unit(g.alpha);
      break;
    }
    case GenKind::E: {
      if (!valid(g.a) || g.alpha < 1 || g.alpha > 3)
        throw std::invalid_argument("realization: invalid E generator");
      m.at(g.a, g.a) = Quaternion::unit(g.alpha);
      break;
    }
  }
  return m;
}

bool antihermiticity_check(const OmegaPattern& p, const QuaternionMatrix& x) {
  if (x.size() != p.n + 1) throw std::invalid_argument("realization: size mismatch");
  const auto diag = metric_matrix(p);
  for (int r = 0; r < x.size(); ++r)
    for (int c = 0; c < x.size(); ++c) {
      // (X^dagger I_k)_rc + (I_k X)_rc
      Quaternion lhs = x.at(c, r).conj() * Quaternion(diag[c]) + Quaternion(diag[r]) * x.at(r, c);
      if (!lhs.is_zero()) return false;
    }
  return true;
}

QuaternionMatrix matrix_bracket(const QuaternionMatrix& x, const QuaternionMatrix& y) {
  return x * y - y * x;
}

QuaternionMatrix pure_bracket_identity(int alpha, const QuaternionMatrix& x, int beta,
                                       const QuaternionMatrix& y) {
  if (x.size() != y.size()) throw std::invalid_argument("realization: size mismatch");
  for (int r = 0; r < x.size(); ++r)
    for (int c = 0; c < x.size(); ++c)
      if (!x.at(r, c).is_real() || !y.at(r, c).is_real())
        throw std::invalid_argument("realization: pure_bracket_identity needs real matrices");
  QuaternionMatrix comm = matrix_bracket(x, y);
  QuaternionMatrix anti = x * y + y * x;
  QuaternionMatrix out(x.size());
  if (alpha == beta) {
    out = Quaternion(Rational(-1)) * comm;
  } else {
    for (int gamma = 1; gamma <= 3; ++gamma) {
      int e = epsilon(alpha, beta, gamma);
      if (e != 0) out = out + (Rational(e) * Quaternion::unit(gamma)) * anti;
    }
  }
  QuaternionMatrix direct =
      matrix_bracket(Quaternion::unit(alpha) * x, Quaternion::unit(beta) * y);
  if (!(out == direct))
    throw std::logic_error("realization: pure bracket identity violated");
  return out;
}

std::vector<RealizationViolation> realization_consistency(const OmegaPattern& p) {
  StructureConstants g = build_sq(p);
  std::vector<QuaternionMatrix> real;
  real.reserve(g.dim);
  for (const auto& gen : g.basis) real.push_back(realize_generator(p, gen));
  std::map<std::string, int> index;
  for (int i = 0; i < g.dim; ++i) index[g.basis[i].name()] = i;
  std::vector<RealizationViolation> violations;
  for (int i = 0; i < g.dim; ++i)
    for (int j = i + 1; j < g.dim; ++j) {
      QuaternionMatrix z = matrix_bracket(real[i], real[j]);
      std::map<int, Rational> coeffs;
      bool bad = false;
      std::string detail;
      // off-diagonal blocks: the (b,a) entry determines the J/M coefficients
      for (int a = 0; a <= p.n && !bad; ++a)
        for (int b = a + 1; b <= p.n && !bad; ++b) {
          const Quaternion& lower = z.at(b, a);
          Rational w = p.omega_ab(a, b);
          Rational cj = lower.re;
          if (!is_zero(cj)) coeffs[index.at(GeneratorId{GenKind::J, a, b, 0}.name())] = cj;
          Quaternion expect_upper(-w * cj);
          for (int alpha = 1; alpha <= 3; ++alpha) {
            Rational cm = lower.imag(alpha);
            if (!is_zero(cm)) coeffs[index.at(GeneratorId{GenKind::M, a, b, alpha}.name())] = cm;
            expect_upper.imag(alpha) = w * cm;
          }
          if (!(z.at(a, b) == expect_upper)) {
            bad = true;
            detail = "upper entry inconsistent with lower entry at (" + std::to_string(a) +
                     "," + std::to_string(b) + ")";
          }
        }
      // diagonal: pure imaginary, carries the E coefficients
      for (int a = 0; a <= p.n && !bad; ++a) {
        const Quaternion& d = z.at(a, a);
        if (!is_zero(d.re)) {
          bad = true;
          detail = "diagonal entry has a real part at (" + std::to_string(a) + ")";
          break;
        }
        for (int alpha = 1; alpha <= 3; ++alpha)
          if (!is_zero(d.imag(alpha)))
            coeffs[index.at(GeneratorId{GenKind::E, a, 0, alpha}.name())] = d.imag(alpha);
      }
      if (!bad) {
        std::map<int, Rational> expected;
        for (const Term& t : g.bracket(i, j)) expected[t.index] = t.coeff;
        if (coeffs != expected) {
          bad = true;
          detail = "matrix bracket disagrees with the abstract table";
        }
      }
      if (bad) violations.push_back({g.basis[i], g.basis[j], detail});
    }
  return violations;
}

std::vector<QuaternionMatrix> sq1_generators(int size) {
  std::vector<QuaternionMatrix> out;
  for (int alpha = 1; alpha <= 3; ++alpha) {
    QuaternionMatrix m(size);
    for (int a = 0; a < size; ++a) m.at(a, a) = Quaternion::unit(alpha);
    Quaternion tr = m.trace();
    if (!is_zero(tr.re) || tr.is_zero())
      throw std::logic_error("realization: sq(1) trace must be pure imaginary and non-zero");
    out.push_back(std::move(m));
  }
  for (int alpha = 1; alpha <= 3; ++alpha)
    for (int beta = 1; beta <= 3; ++beta) {
      if (alpha == beta) continue;
      int gamma = 6 - alpha - beta;
      QuaternionMatrix expected(size);  // 2 eps i_gamma Id
      for (int a = 0; a < size; ++a)
        expected.at(a, a) = Rational(2 * epsilon(alpha, beta, gamma)) * Quaternion::unit(gamma);
      if (!(matrix_bracket(out[alpha - 1], out[beta - 1]) == expected))
        throw std::logic_error("realization: sq(1) bracket check failed");
    }
  return out;
}

}  // namespace sqck
