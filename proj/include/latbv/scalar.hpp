#ifndef LATBV_SCALAR_HPP
#define LATBV_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace latbv {

/// Exact rational number. GMP keeps values canonicalized (gcd-reduced,
/// positive denominator), which the string round-trip below relies on.
using Rat = mpq_class;

/// Parses "p", "-p", or "p/q" into an exact rational.
/// Throws std::invalid_argument on malformed input or q == 0.
Rat rat_from_string(const std::string& s);

/// Renders a rational as "p" or "p/q" (canonical form, minus sign on p).
std::string rat_to_string(const Rat& r);

/// Gaussian rational: re + im*i with exact rational parts.
/// This is the coefficient field of every algebraic object in the library;
/// no floating point enters any identity check.
struct Scalar {
  Rat re;
  Rat im;

  Scalar() : re(0), im(0) {}
  Scalar(long v) : re(v), im(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rat r) : re(std::move(r)), im(0) {}
  Scalar(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar unit_i() { return Scalar(Rat(0), Rat(1)); }
  /// i^k for integer k (negative allowed).
  static Scalar i_pow(long k);

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  Scalar operator-() const { return Scalar(-re, -im); }
  Scalar conj() const { return Scalar(re, -im); }

  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rat nre = re * o.re - im * o.im;
    Rat nim = re * o.im + im * o.re;
    re = std::move(nre);
    im = std::move(nim);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Exact division; throws std::domain_error on division by zero.
  Scalar operator/(const Scalar& o) const;

  /// Multiplicative inverse; throws std::domain_error at zero.
  Scalar inv() const;

  /// Deterministic rendering, e.g. "3/2", "i", "-1/3*i", "1/2+2*i".
  std::string str() const;
};

inline Scalar operator*(const Rat& r, Scalar s) {
  s.re *= r;
  s.im *= r;
  return s;
}

}  // namespace latbv

#endif  // LATBV_SCALAR_HPP
