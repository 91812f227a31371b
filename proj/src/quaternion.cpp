#include "sqck/quaternion.hpp"

#include <stdexcept>

namespace sqck {

int epsilon(int alpha, int beta, int gamma) {
  if (alpha < 1 || alpha > 3 || beta < 1 || beta > 3 || gamma < 1 || gamma > 3)
    throw std::out_of_range("epsilon: indices must lie in 1..3");
  if (alpha == beta || beta == gamma || alpha == gamma) return 0;
  // even permutations of (1,2,3)
  if ((alpha == 1 && beta == 2) || (alpha == 2 && beta == 3) || (alpha == 3 && beta == 1))
    return 1;
  return -1;
}

Quaternion Quaternion::unit(int alpha) {
  Quaternion q;
  q.imag(alpha) = 1;
  return q;
}

Rational& Quaternion::imag(int alpha) {
  switch (alpha) {
    case 1: return im1;
    case 2: return im2;
    case 3: return im3;
  }
  throw std::out_of_range("Quaternion::imag: index must lie in 1..3");
}

const Rational& Quaternion::imag(int alpha) const {
  return const_cast<Quaternion*>(this)->imag(alpha);
}

bool Quaternion::is_zero() const {
  return sgn(re) == 0 && sgn(im1) == 0 && sgn(im2) == 0 && sgn(im3) == 0;
}

bool Quaternion::is_real() const {
  return sgn(im1) == 0 && sgn(im2) == 0 && sgn(im3) == 0;
}

Quaternion Quaternion::conj() const { return {re, -im1, -im2, -im3}; }

Rational Quaternion::norm2() const {
  return re * re + im1 * im1 + im2 * im2 + im3 * im3;
}

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.re + b.re, a.im1 + b.im1, a.im2 + b.im2, a.im3 + b.im3};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.re - b.re, a.im1 - b.im1, a.im2 - b.im2, a.im3 - b.im3};
}

Quaternion operator-(const Quaternion& a) {
  return {-a.re, -a.im1, -a.im2, -a.im3};
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  Quaternion r;
  r.re = a.re * b.re - a.im1 * b.im1 - a.im2 * b.im2 - a.im3 * b.im3;
  for (int g = 1; g <= 3; ++g) r.imag(g) = a.re * b.imag(g) + a.imag(g) * b.re;
  for (int al = 1; al <= 3; ++al)
    for (int be = 1; be <= 3; ++be) {
      if (al == be) continue;
      for (int g = 1; g <= 3; ++g) {
        int e = epsilon(al, be, g);
        if (e != 0) r.imag(g) += e * a.imag(al) * b.imag(be);
      }
    }
  return r;
}

Quaternion operator*(const Rational& s, const Quaternion& a) {
  return {s * a.re, s * a.im1, s * a.im2, s * a.im3};
}

bool operator==(const Quaternion& a, const Quaternion& b) {
  return a.re == b.re && a.im1 == b.im1 && a.im2 == b.im2 && a.im3 == b.im3;
}

bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }

std::string to_string(const Quaternion& q) {
  static const char* units[3] = {"i", "j", "k"};
  std::string out;
  auto append = [&out](const Rational& c, const char* unit) {
    if (sgn(c) == 0) return;
    std::string s = to_string(c);
    if (!out.empty() && s[0] != '-') out += "+";
    if (unit) {
      if (s == "1")
        s.clear();
      else if (s == "-1")
        s = "-";
      out += s + unit;
    } else {
      out += s;
    }
  };
  append(q.re, nullptr);
  for (int a = 1; a <= 3; ++a) append(q.imag(a), units[a - 1]);
  return out.empty() ? "0" : out;
}

}  // namespace sqck
