#ifndef LATBV_ANOMALY_HPP
#define LATBV_ANOMALY_HPP

#include <functional>
#include <vector>

#include "latbv/context.hpp"
#include "latbv/group.hpp"

namespace latbv {

/// The anomaly ΔX(V) of the anomalous Ward identity, defined as the unique
/// series solving
///   TS_ins(V, ∂_X V + ∂_X L − ΔX(V)) = Σ_j TS_ins(V, (φX)_j) · (Mφ)_j,
/// i.e. ΔX(V) = ∂_X V + ∂_X L − solve_ins(V, Σ_j TS_ins(V,(φX)_j)·(Mφ)_j),
/// where j runs over flat field indices and the (Mφ)_j factor multiplies
/// each series coefficient pointwise. On the untwisted context the result is
/// the field- and V-independent constant i·Σ_x tr a(x).
/// V must have zero coefficient at the zero exponent.
FormalSeries solve_anomaly(const DeformContext& ctx, const LieSymmetry& x,
                           const FormalSeries& v);
/// Convenience overload: V = ε·f with cap K on ε.
FormalSeries solve_anomaly(const DeformContext& ctx, const LieSymmetry& x,
                           const GradedPoly& f, int K);

/// Directional derivative ⟨(ΔX)'(V), G⟩ = d/dτ|₀ ΔX(V + τG), computed as
/// the τ-slice of the solver. The τ parameter is reserved: V and G must not
/// carry it. A constant component of G contributes nothing (ΔX(F+c)=ΔX(F)).
FormalSeries anomaly_prime(const DeformContext& ctx, const LieSymmetry& x,
                           const FormalSeries& v, const FormalSeries& g);

/// Evaluates every series coefficient at the configuration φ̄ (flat-indexed).
FormalSeries eval_at_config(const FormalSeries& s, const FreeModel& m,
                            const std::vector<Rat>& phibar);

/// On-shell residual of the anomalous Ward identity at φ̄: with q ≐ Mφ̄,
///   TS_ins(V, ∂_X V + ∂_X L_q − ΔX(V)) [φ̄],   L_q ≐ L − ⟨Φ,q⟩.
/// Vanishes identically for every configuration.
FormalSeries amwi_residual(const DeformContext& ctx, const LieSymmetry& x,
                           const FormalSeries& v,
                           const std::vector<Rat>& phibar);

/// The seven constituents of the extended Wess–Zumino consistency identity
///   Δ[X,Y](V) = ⟨(ΔY)'(V),ΔX(V)⟩ − ⟨(ΔX)'(V),ΔY(V)⟩
///             + ∂_X(ΔY(V)) − ∂_Y(ΔX(V))
///             − ⟨(ΔY)'(V),∂_X(L+V)⟩ + ⟨(ΔX)'(V),∂_Y(L+V)⟩.
struct WZTerms {
  FormalSeries lhs;         // Δ[X,Y](V)
  FormalSeries dYp_dX;      // ⟨(ΔY)'(V), ΔX(V)⟩
  FormalSeries dXp_dY;      // ⟨(ΔX)'(V), ΔY(V)⟩
  FormalSeries dX_of_dY;    // ∂_X(ΔY(V))
  FormalSeries dY_of_dX;    // ∂_Y(ΔX(V))
  FormalSeries dYp_XL;      // ⟨(ΔY)'(V), ∂_X(L+V)⟩
  FormalSeries dXp_YL;      // ⟨(ΔX)'(V), ∂_Y(L+V)⟩

  FormalSeries rhs() const {
    return dYp_dX - dXp_dY + dX_of_dY - dY_of_dX - dYp_XL + dXp_YL;
  }
  FormalSeries residual() const { return lhs - rhs(); }
};
WZTerms wz_terms(const DeformContext& ctx, const LieSymmetry& x,
                 const LieSymmetry& y, const FormalSeries& v);

/// An element of the renormalization Lie algebra realized as a map on
/// functional series together with its directional derivative
/// ⟨z'(V), G⟩ = d/dτ|₀ z(V + τG).
struct FunctionalMap {
  std::function<FormalSeries(const FormalSeries&)> value;
  std::function<FormalSeries(const FormalSeries&, const FormalSeries&)> prime;
};

/// ΔX as a FunctionalMap (value via solve_anomaly, prime via anomaly_prime).
FunctionalMap anomaly_map(const DeformContext& ctx, const LieSymmetry& x);
/// A counterterm kernel z as a (linear) FunctionalMap: value applies z
/// coefficient-wise; prime(V, G) = z(G).
FunctionalMap kernel_lie_map(const RenMap& z);
/// The constant map F ↦ c (value independent of F; prime = 0).
FunctionalMap constant_map(const GradedPoly& c);

/// Lie bracket on such maps:
///   [z₁,z₂](V) = ⟨z₁'(V), z₂(V)⟩ − ⟨z₂'(V), z₁(V)⟩.
FormalSeries lieR_bracket(const FunctionalMap& z1, const FunctionalMap& z2,
                          const FormalSeries& v);

/// The derivative representation on such maps:
///   (∂_X z)(V) = ∂_X(z(V)) − ⟨z'(V), ∂_X(V + L)⟩.
FormalSeries dX_on_map(const LieSymmetry& x, const FunctionalMap& z,
                       const FormalSeries& v);

/// ∂_X(V + L) as a series (the L part enters at the zero exponent).
FormalSeries partial_X_of_VL(const LieSymmetry& x, const FormalSeries& v);

}  // namespace latbv

#endif  // LATBV_ANOMALY_HPP
