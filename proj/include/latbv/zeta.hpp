#ifndef LATBV_ZETA_HPP
#define LATBV_ZETA_HPP

#include <optional>
#include <vector>

#include "latbv/anomaly.hpp"
#include "latbv/context.hpp"
#include "latbv/group.hpp"

namespace latbv {

/// One leg of a symmetry path: the one-parameter subgroup exp(par·X),
/// carried as an exact series in `par` truncated at `order`.
struct PathLeg {
  LieSymmetry x;
  Param par;
  int order;
};

/// The unitary-Ward cocycle ζ along a path in the affine symmetry group.
///
/// For a path λ ↦ g^λ = exp(λX), ζ_{g^λ} is the unique renormalization map
/// solving the flow equation
///   d/dλ ζ⁻¹_{g^λ}(F) = −(g^λ_*)⁻¹ ΔX( g^λ_L( ζ⁻¹_{g^λ}(F) ) ),
///   ζ⁻¹_{g⁰} = id,
/// with ΔX the Ward anomaly of the context (module anomaly). It turns the
/// anomalous Ward identity into its unitary off-shell form
///   S(ζ_{g^λ}(F))[φ̄] = S(g^λ_{L_q}(F))[φ̄],   q ≐ Mφ̄,
/// where g_{L_q}F ≐ g_L F − (g_*⟨Φ,q⟩ − ⟨Φ,q⟩), valid for every
/// configuration φ̄ with the single q-independent ζ.
///
/// A multi-leg path g^λ·h^μ·… (legs listed left to right) is integrated
/// right to left: the rightmost leg flows from the identity and each further
/// leg flows with the already-integrated right factor riding along, using
///   (g h)_* = g_* ∘ h_*,   (g h)_L = g_L ∘ h_L.
/// The integrated family then satisfies the group cocycle relation
///   ζ_{g h} = ζ_h ∘ (h_L⁻¹ ∘ ζ_g ∘ h_L)
/// exactly through the caps; see cocycle_residual.
///
/// Every ζ⁻¹_{g^λ} is affine in its argument, ζ⁻¹(F) = ζ⁻¹(0) + Z(F) with
/// Z linear and degree-non-increasing, so the map is stored by its action
/// on the basis of field monomials of total degree ≤ degree_cap: the
/// constant part and one image column per basis monomial, each an exact
/// series in the path parameters. Applications expand the argument in that
/// basis, so parameters carried by the argument — including the path
/// parameters themselves — ride along as series coefficients.
class CocycleSeries {
 public:
  /// Integrates the flow for the given legs (empty legs give the identity
  /// map). Arguments of the map must be field functionals (no antifields or
  /// multipliers) of polynomial degree ≤ degree_cap; a functional met during
  /// integration or application that leaves the basis span throws
  /// std::runtime_error. Path parameters must be distinct and different
  /// from P_T1 (tags the linear slot during integration) and P_TAU
  /// (reserved for anomaly derivatives).
  ///
  /// With a source configuration the flow is integrated against g_{L_q},
  /// q ≐ M·source, instead of g_L. The result is the identical map — the
  /// anomaly never sees the at-most-linear difference g_*⟨Φ,q⟩ − ⟨Φ,q⟩ —
  /// which callers use to pin the q-independence of ζ coefficient by
  /// coefficient.
  CocycleSeries(const DeformContext& ctx, std::vector<PathLeg> legs,
                int degree_cap,
                const std::optional<std::vector<Rat>>& source = std::nullopt);

  const FreeModel& model() const { return model_; }
  const std::vector<PathLeg>& legs() const { return legs_; }
  int degree_cap() const { return deg_; }
  /// Caps of the path parameters (each leg's par ≤ order, all else 0).
  const Caps& caps() const { return caps_; }

  /// ζ⁻¹_{g^λ}(F) as a joint series in the path parameters and whatever
  /// parameters F carries.
  FormalSeries apply_inverse(const FormalSeries& f) const;
  /// ζ_{g^λ}(F), the order-by-order functional inverse of apply_inverse.
  FormalSeries apply(const FormalSeries& f) const;
  /// ζ⁻¹_{g^λ}(0), the argument-independent part of the affine map.
  const FormalSeries& constant_part() const { return kcol_; }
  /// Image of the basis monomial with index j under the linear part.
  const FormalSeries& column(int j) const { return col_[j]; }
  const std::vector<Mono>& basis() const { return basis_; }

  /// (g^λ…)_L F: the L-twisted path action, legs composed left to right.
  FormalSeries path_gL(const FormalSeries& f) const;
  /// (g^λ…)_* F: the path pullback.
  FormalSeries path_pullback(const FormalSeries& f) const;
  /// g_*⟨Φ,q⟩ − ⟨Φ,q⟩ for q ≐ M·phibar, as a series in the path parameters.
  FormalSeries path_delta_phiq(const std::vector<Rat>& phibar) const;

  /// Maps agree entry by entry (basis, constant part and all columns).
  friend bool operator==(const CocycleSeries& a, const CocycleSeries& b) {
    return a.deg_ == b.deg_ && a.caps_ == b.caps_ && a.basis_ == b.basis_ &&
           a.kcol_ == b.kcol_ && a.col_ == b.col_;
  }
  friend bool operator!=(const CocycleSeries& a, const CocycleSeries& b) {
    return !(a == b);
  }

 private:
  /// Expands a series of field polynomials into basis-indexed scalar
  /// coefficient series (throwing per the contract above).
  std::vector<FormalSeries> expand(const FormalSeries& f, const Caps& c) const;

  FreeModel model_;
  std::vector<PathLeg> legs_;
  int deg_;
  Caps caps_;
  std::vector<Mono> basis_;
  std::map<Mono, int> index_;
  FormalSeries kcol_;
  std::vector<FormalSeries> col_;
};

/// Convenience entry points for the flow integration.
CocycleSeries integrate_zeta(
    const DeformContext& ctx, const LieSymmetry& x, Param par, int order,
    int degree_cap,
    const std::optional<std::vector<Rat>>& source = std::nullopt);
CocycleSeries integrate_zeta(
    const DeformContext& ctx, std::vector<PathLeg> legs, int degree_cap,
    const std::optional<std::vector<Rat>>& source = std::nullopt);

/// The conjugated cocycle ζ_g^h(F) ≐ h_L⁻¹( ζ_g( h_L(F) ) ) for a direct
/// group element h. It inherits the support of ζ_g: for G with
/// supp G ∩ supp g = ∅ and h_*G again off supp g,
/// ζ_g^h(F + G) = ζ_g^h(F) + G.
FormalSeries conjugate_zeta(const CocycleSeries& zg, const GroupElement& h,
                            const FormalSeries& f);
/// Same with h a one-parameter path.
FormalSeries conjugate_zeta(const CocycleSeries& zg, const ExpPath& h,
                            const FormalSeries& f);

/// Residual of the off-shell unitary Ward identity at the configuration φ̄:
///   S(ζ_{g^λ}(F))[φ̄] − S(g^λ_{L_q}(F))[φ̄],   q ≐ Mφ̄.
/// Vanishes identically in all parameters for every φ̄.
FormalSeries uamwi_residual(const DeformContext& ctx,
                            const CocycleSeries& zeta, const FormalSeries& f,
                            const std::vector<Rat>& phibar);

/// Residual of the group cocycle relation on F:
///   ζ_{g^λ h^μ}(F) − ζ_{h^μ}( (h^μ_L)⁻¹( ζ_{g^λ}( h^μ_L(F) ) ) ),
/// with ζ_{g^λh^μ} integrated along the composite path. Vanishes
/// identically through the (λ, μ) caps.
FormalSeries cocycle_residual(const DeformContext& ctx, const PathLeg& g,
                              const PathLeg& h, const FormalSeries& f,
                              int degree_cap);

}  // namespace latbv

#endif  // LATBV_ZETA_HPP
