#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cy2 {

using Rational = mpq_class;

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

// Accepts "p", "-p", "p/q". Throws ConfigError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

inline int sign(const Rational& q) { return sgn(q); }

// Exact complex number with rational parts.
struct Complex {
  Rational re;
  Rational im;

  Complex() = default;
  Complex(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  Complex conj() const { return {re, -im}; }
  Complex operator-() const { return {-re, -im}; }

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator*(const Rational& s, const Complex& a) { return {s * a.re, s * a.im}; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

// Im > 0, or real and > 0: the half-open upper half plane.
inline bool in_upper_half_plane(const Complex& z) {
  return sgn(z.im) > 0 || (sgn(z.im) == 0 && sgn(z.re) > 0);
}

// Re(a) Im(b) - Im(a) Re(b). Positive iff arg(a) < arg(b) for a, b in the
// half-open upper half plane.
inline Rational cross(const Complex& a, const Complex& b) { return a.re * b.im - a.im * b.re; }

std::string to_string(const Complex& z);

}  // namespace cy2
