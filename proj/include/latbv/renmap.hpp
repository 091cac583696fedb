#ifndef LATBV_RENMAP_HPP
#define LATBV_RENMAP_HPP

#include <set>
#include <vector>

#include "latbv/poly.hpp"

namespace latbv {

/// One diagonal counterterm kernel: the operator
///   F ↦ c · δ^m F / δφ_{a₁}(x) … δφ_{a_m}(x),   m ≥ 2,
/// all derivatives at a single site x.
struct CounterTerm {
  int site = 0;
  std::vector<int> comps;  // component multi-index (a₁…a_m), m = comps.size()
  Scalar coeff;
};

/// A finite-renormalization map Z = exp(z), where z is the sum of the
/// counterterm kernels. Each kernel strictly lowers polynomial degree, so
/// exp(z) acts exactly (finite sum) on every polynomial; Z is linear,
/// invertible (Z⁻¹ = exp(−z)), commutes with adding field-linear terms and
/// constants, and is field-independent (commutes with δ/δφ). Kernels of
/// distinct maps commute, so composition is kernel-list concatenation.
class RenMap {
 public:
  RenMap() = default;  // identity
  explicit RenMap(std::vector<CounterTerm> kernels, int ncomp = -1);

  static RenMap identity() { return RenMap(); }
  bool is_identity() const { return kernels_.empty(); }
  const std::vector<CounterTerm>& kernels() const { return kernels_; }

  /// The Lie element z applied once.
  GradedPoly z(const GradedPoly& f) const;
  /// Z(F) = exp(z)(F), exact.
  GradedPoly apply(const GradedPoly& f) const;
  /// Z⁻¹(F) = exp(−z)(F), exact.
  GradedPoly apply_inverse(const GradedPoly& f) const;

  /// Z₁∘Z₂ (and the group inverse).
  RenMap composed(const RenMap& other) const;
  RenMap inverse() const;

  /// Sites carrying at least one kernel.
  std::set<int> support() const;

 private:
  GradedPoly expz(const GradedPoly& f, int sign) const;
  void canonicalize();

  std::vector<CounterTerm> kernels_;
};

}  // namespace latbv

#endif  // LATBV_RENMAP_HPP
