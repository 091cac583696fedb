#ifndef LATBV_POLY_HPP
#define LATBV_POLY_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "latbv/scalar.hpp"
#include "latbv/vars.hpp"

namespace latbv {

/// Canonical monomial: a multiset of commuting generators (`ev`, sorted,
/// with repetitions) times a wedge of anticommuting generators (`od`,
/// strictly increasing). The orientation of `od` is part of the canonical
/// form; signs from reordering are absorbed into the coefficient.
struct Mono {
  std::vector<VarId> ev;
  std::vector<VarId> od;

  bool operator<(const Mono& o) const;
  bool operator==(const Mono& o) const { return ev == o.ev && od == o.od; }

  int antifield_number() const;
  /// Parity of the monomial: number of odd generators mod 2.
  int parity() const { return static_cast<int>(od.size() % 2); }
  int field_degree() const { return static_cast<int>(ev.size()); }
  std::string str() const;
};

/// Sparse polynomial in the graded-commutative algebra generated by fields
/// (even), antifields (odd) and multipliers (odd), with Gaussian-rational
/// coefficients. Zero coefficients are never stored, so equality of maps is
/// equality of polynomials.
class GradedPoly {
 public:
  GradedPoly() = default;

  static GradedPoly constant(Scalar c);
  static GradedPoly var(VarId v);

  bool is_zero() const { return terms_.empty(); }
  /// True when the polynomial is a pure scalar (possibly 0).
  bool is_constant() const;
  /// The coefficient of the empty monomial.
  Scalar constant_part() const;
  /// Requires is_constant(); throws std::logic_error otherwise.
  Scalar scalar_value() const;

  std::size_t term_count() const { return terms_.size(); }
  const std::map<Mono, Scalar>& terms() const { return terms_; }

  void add_term(const Mono& m, const Scalar& c);

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) {
    return a += b;
  }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) {
    return a -= b;
  }
  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const GradedPoly& a, const GradedPoly& b) {
    return !(a == b);
  }

  GradedPoly scaled(const Scalar& c) const;

  /// Graded-commutative product (the pointwise product of functionals).
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);

  /// Partial derivative with respect to an even generator.
  GradedPoly dfield(VarId v) const;
  /// Left derivative with respect to an odd generator.
  GradedPoly dodd_left(VarId v) const;
  /// Right derivative with respect to an odd generator.
  GradedPoly dodd_right(VarId v) const;

  /// Replaces every field generator by `fn(v)` where provided; other
  /// generators (and unmapped fields) are kept. Images may be arbitrary
  /// polynomials; odd generators are never substituted.
  GradedPoly substitute_fields(
      const std::function<std::optional<GradedPoly>(VarId)>& fn) const;

  /// Evaluates all field generators via `val`; odd generators must be
  /// absent (throws std::logic_error otherwise).
  Scalar eval_fields(const std::function<Scalar(VarId)>& val) const;

  /// True when every monomial has the same parity `p` (the zero polynomial
  /// is homogeneous of any parity).
  bool homogeneous_parity(int p) const;
  /// Parity of the polynomial if homogeneous, std::nullopt otherwise.
  std::optional<int> parity() const;
  int max_antifield_number() const;
  int max_field_degree() const;
  bool has_odd() const;

  /// Sites carried by field/antifield generators of nonzero terms.
  std::set<int> support() const;

  /// Deterministic rendering (canonical monomial order).
  std::string str() const;

 private:
  std::map<Mono, Scalar> terms_;
};

/// Product of two canonical monomials: nullopt when an odd generator
/// collides, otherwise the canonical monomial and the reordering sign.
std::optional<std::pair<Mono, int>> mono_mul(const Mono& a, const Mono& b);

}  // namespace latbv

#endif  // LATBV_POLY_HPP
