#ifndef LATBV_SERIES_HPP
#define LATBV_SERIES_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "latbv/poly.hpp"

namespace latbv {

/// Fixed roster of counting parameters. Each series instance carries an
/// independent truncation cap per parameter; a cap of 0 means the parameter
/// does not occur.
enum Param : int {
  P_EPS = 0,  // interaction order
  P_TAU = 1,  // directional-derivative probe
  P_LAM = 2,  // first path parameter
  P_MU = 3,   // second path parameter
  P_NU = 4,   // auxiliary path / substitution parameter
  P_T1 = 5,   // polarization slots
  P_T2 = 6,
  P_T3 = 7,
};
inline constexpr int kNumParams = 8;

extern const char* const kParamNames[kNumParams];

using Expo = std::array<std::uint8_t, kNumParams>;

/// Per-parameter truncation orders.
struct Caps {
  std::array<int, kNumParams> cap{};  // all zero by default

  static Caps none() { return Caps{}; }
  Caps with(Param p, int k) const {
    Caps c = *this;
    c.cap[p] = k;
    return c;
  }
  bool admits(const Expo& e) const {
    for (int i = 0; i < kNumParams; ++i)
      if (static_cast<int>(e[i]) > cap[i]) return false;
    return true;
  }
  /// Elementwise max — the common refinement used by binary operations.
  static Caps join(const Caps& a, const Caps& b);
  int total() const;
  friend bool operator==(const Caps& a, const Caps& b) {
    return a.cap == b.cap;
  }
};

/// Formal power series in the counting parameters, truncated at `caps`,
/// with GradedPoly coefficients. All operations are exact through the caps;
/// coefficients beyond any cap are dropped. Products of coefficients are
/// performed via a caller-chosen bilinear product (pointwise by default) so
/// the same machinery serves the classical and deformed algebras.
class FormalSeries {
 public:
  using ProductFn =
      std::function<GradedPoly(const GradedPoly&, const GradedPoly&)>;

  /// Pointwise graded product of coefficients.
  static GradedPoly pointwise(const GradedPoly& a, const GradedPoly& b) {
    return a * b;
  }

  FormalSeries() = default;
  explicit FormalSeries(Caps caps) : caps_(caps) {}

  static FormalSeries zero(Caps caps) { return FormalSeries(caps); }
  static FormalSeries from_poly(Caps caps, const GradedPoly& p);
  static FormalSeries one(Caps caps) {
    return from_poly(caps, GradedPoly::constant(Scalar(1)));
  }
  /// p * param^k.
  static FormalSeries monomial(Caps caps, const GradedPoly& p, Param par,
                               int k = 1);

  const Caps& caps() const { return caps_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<Expo, GradedPoly>& coeffs() const { return coeffs_; }

  /// Coefficient of the given exponent (zero polynomial if absent).
  const GradedPoly& at(const Expo& e) const;
  GradedPoly coeff1(Param p, int k) const;  // coefficient of p^k, others 0

  void set(const Expo& e, GradedPoly p);
  void add(const Expo& e, const GradedPoly& p);

  FormalSeries operator-() const;
  FormalSeries& operator+=(const FormalSeries& o);
  FormalSeries& operator-=(const FormalSeries& o);
  friend FormalSeries operator+(FormalSeries a, const FormalSeries& b) {
    return a += b;
  }
  friend FormalSeries operator-(FormalSeries a, const FormalSeries& b) {
    return a -= b;
  }
  friend bool operator==(const FormalSeries& a, const FormalSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const FormalSeries& a, const FormalSeries& b) {
    return !(a == b);
  }

  FormalSeries scaled(const Scalar& c) const;

  /// Truncated product; coefficient pairs combine via `prod`.
  FormalSeries mul(const FormalSeries& o,
                   const ProductFn& prod = pointwise) const;
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
    return a.mul(b);
  }

  /// exp(this) through the caps; requires zero coefficient at exponent 0.
  FormalSeries exp(const ProductFn& prod = pointwise) const;
  /// log(this); requires coefficient 1 at exponent 0.
  FormalSeries log(const ProductFn& prod = pointwise) const;
  /// Multiplicative inverse; requires an invertible constant coefficient at
  /// exponent 0.
  FormalSeries inverse(const ProductFn& prod = pointwise) const;

  /// Applies `fn` to every coefficient (e.g. a linear operator).
  FormalSeries map_coeffs(
      const std::function<GradedPoly(const GradedPoly&)>& fn) const;

  /// Sum of coefficients of p^k for k in [0, cap], with p's exponent merged
  /// into `into` (exponents add; used to identify two path parameters).
  FormalSeries fold_param(Param p, Param into) const;

  /// Substitutes a rational value for parameter p (summing p-powers).
  FormalSeries subst_value(Param p, const Rat& v) const;

  /// Drops all coefficients with nonzero exponent of p except p^k, and
  /// removes the p-exponent (i.e. extracts the p^k slice as a series).
  FormalSeries slice(Param p, int k) const;

  /// Restricts the cap of parameter p (dropping higher coefficients).
  FormalSeries truncated(Param p, int k) const;

  /// Raises caps (no coefficients change).
  FormalSeries with_caps(Caps c) const;

  std::string str() const;

 private:
  Caps caps_{};
  std::map<Expo, GradedPoly> coeffs_;
};

/// expo helper: all zeros except e[p] = k.
Expo expo_of(Param p, int k);

/// Substitutes each even field variable of `p` for which `fn` returns a
/// series (the images must have purely even, field-sector coefficients;
/// typically field polynomials or constants). Unmapped variables, antifields
/// and odd multipliers pass through unchanged.
FormalSeries subst_fields_series(
    Caps caps, const GradedPoly& p,
    const std::function<std::optional<FormalSeries>(VarId)>& fn);

/// Coefficient-wise version: exponents of the coefficients' expansions merge
/// additively with the outer exponents.
FormalSeries subst_fields_series(
    const FormalSeries& s,
    const std::function<std::optional<FormalSeries>(VarId)>& fn);

}  // namespace latbv

#endif  // LATBV_SERIES_HPP
