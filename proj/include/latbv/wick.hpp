#ifndef LATBV_WICK_HPP
#define LATBV_WICK_HPP

#include "latbv/model.hpp"
#include "latbv/poly.hpp"

namespace latbv {

/// Time-ordering operator of a free model:
///   T = exp(D),  D = ½ Σ_{jk} E_{jk} ∂_j ∂_k,  E = i·M⁻¹.
/// D strictly lowers the field degree by 2, so exp terminates exactly on
/// polynomials. T acts on field variables only; antifields and odd
/// multipliers pass through untouched. T⁻¹ is the same sum with −E.
class Wick {
 public:
  explicit Wick(const FreeModel& m);

  GradedPoly T(const GradedPoly& p) const { return expD(p, +1); }
  GradedPoly Tinv(const GradedPoly& p) const { return expD(p, -1); }

  /// F ·_T G = T((T⁻¹F)·(T⁻¹G)): commutative, associative, unit 1.
  GradedPoly tprod(const GradedPoly& f, const GradedPoly& g) const {
    return T(Tinv(f) * Tinv(g));
  }

  /// One application of D (or −D for sign = −1).
  GradedPoly contract_once(const GradedPoly& p, int sign) const;

 private:
  GradedPoly expD(const GradedPoly& p, int sign) const;

  // Nonzero kernel entries (j ≤ k, with the ½·(symmetry) weight absorbed).
  struct Entry {
    VarId j, k;
    Scalar w;
  };
  std::vector<Entry> entries_;
};

}  // namespace latbv

#endif  // LATBV_WICK_HPP
