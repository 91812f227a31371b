#pragma once

#include <array>
#include <string>

#include "sqck/rational.hpp"

namespace sqck {

// Levi-Civita symbol on indices 1..3; zero on repeated indices.
int epsilon(int alpha, int beta, int gamma);

// Quaternion with exact rational coefficients in the basis {1, i1, i2, i3}.
// The unit table is i_a i_b = -delta_ab + sum_c eps_abc i_c.
struct Quaternion {
  Rational re, im1, im2, im3;

  Quaternion() = default;
  Quaternion(Rational r, Rational x, Rational y, Rational z)
      : re(std::move(r)), im1(std::move(x)), im2(std::move(y)), im3(std::move(z)) {}
  explicit Quaternion(Rational r) : re(std::move(r)) {}

  // i_alpha for alpha in 1..3.
  static Quaternion unit(int alpha);

  Rational& imag(int alpha);
  const Rational& imag(int alpha) const;

  bool is_zero() const;
  bool is_real() const;
  Quaternion conj() const;
  // re^2 + im1^2 + im2^2 + im3^2, always a non-negative rational.
  Rational norm2() const;

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator-(const Quaternion& a);
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
  friend Quaternion operator*(const Rational& s, const Quaternion& a);
  friend bool operator==(const Quaternion& a, const Quaternion& b);
  friend bool operator!=(const Quaternion& a, const Quaternion& b);
};

// Human-readable "a+bi+cj+dk" with rational coefficients; "0" for zero.
std::string to_string(const Quaternion& q);

}  // namespace sqck
