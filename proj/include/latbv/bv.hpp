#ifndef LATBV_BV_HPP
#define LATBV_BV_HPP

#include <vector>

#include "latbv/context.hpp"
#include "latbv/group.hpp"
#include "latbv/series.hpp"

namespace latbv {

/// Batalin–Vilkovisky layer: the antibracket on field/antifield polynomials,
/// the classical and quantum BV differentials, the BV Laplacian, the anomaly
/// functional of the generalized anomalous Ward identity and the homotopy
/// brackets it generates.
///
/// Conventions (matching the rest of the library):
///   {F,G}  = Σ_k (δʳF/δφ_k)(δˡG/δφ‡_k) − (δʳF/δφ‡_k)(δˡG/δφ_k),
///   s₀(G)  = {G, L} = −Σ_k (δʳG/δφ‡_k)·(Mφ)_k,
///   △(G)   = −Σ_k ∂_{φ_k} (δʳG/δφ‡_k),       so  △(φ_k φ‡_k) = −1,
///   mv(X)  = −Σ_k (φX)_k φ‡_k,                so  s₀(mv X) = ∂_X L and
///                                                 △(mv X) = Σ_x tr a(x).

/// Graded antibracket (Schouten bracket) of two polynomials.
GradedPoly antibracket(const FreeModel& m, const GradedPoly& f,
                       const GradedPoly& g);
/// Antibracket extended bilinearly to truncated series (caps join).
FormalSeries antibracket(const FreeModel& m, const FormalSeries& f,
                         const FormalSeries& g);

/// Free classical BV differential s₀(x) = {x, L}.
GradedPoly s0_free(const FreeModel& m, const GradedPoly& x);
FormalSeries s0_free(const FreeModel& m, const FormalSeries& x);

/// Classical BV differential of the interacting theory,
/// s_f(x) = {x, L + f}. `f` may contain antifields; then s_f is still a
/// derivation but is nilpotent only if {L+f, L+f} = 0.
FormalSeries s_classical(const FreeModel& m, const FormalSeries& f,
                         const FormalSeries& x);

/// Free BV Laplacian △ (nilpotent, odd, second order).
GradedPoly bv_laplacian(const FreeModel& m, const GradedPoly& x);
FormalSeries bv_laplacian(const FreeModel& m, const FormalSeries& x);

/// The odd multivector −Σ (φX)ᵀφ‡ representing the vector field that acts on
/// functionals as the directional derivative along X.
GradedPoly multivector_of(const LieSymmetry& x);

/// ½{L+f, L+f}: the obstruction to nilpotency of s_f (zero iff the classical
/// master equation holds; automatically zero when f has no antifields).
FormalSeries half_master(const FreeModel& m, const FormalSeries& f);

/// Quantum BV operator on insertions: the unique G' with
///   TS_ins(f, G') = s₀(TS_ins(f, G)),
/// i.e. the conjugate of s₀ by the dressed generating functional. Nilpotent
/// for every even interaction f with vanishing constant term.
FormalSeries shat_ins(const DeformContext& ctx, const FormalSeries& f,
                      const FormalSeries& g);

/// Generating insertion U(f) = ŝ-image of the unit:
///   TS_ins(f, U(f)) = s₀(TS(f)),
/// which the Ward identity writes as U(f) = i(½{L+f,L+f} + A(f)).
FormalSeries bv_u(const DeformContext& ctx, const FormalSeries& f);

/// Anomaly functional A(f) = −i·U(f) − ½{L+f,L+f}. Odd, lowers the
/// antifield number by one; vanishes on interactions without antifields.
FormalSeries bv_anomaly(const DeformContext& ctx, const FormalSeries& f);

/// Directional derivative ⟨A'(f), g⟩ for an even direction g, computed as
/// the first-order coefficient of A(f + τ·g). Inputs must not carry τ.
FormalSeries bv_anomaly_prime(const DeformContext& ctx, const FormalSeries& f,
                              const FormalSeries& g);

/// ⟨A'(f), g⟩ for an ODD direction g: the graded left derivative, realized
/// by adjoining an auxiliary odd multiplier η (index `eta_index`, must not
/// occur in f or g) on the LEFT of the direction and stripping it back off
/// from the left:
///   A(f + τ·η·g) = A(f) + τ·η·⟨A'(f), g⟩ + O(τ²).
/// The result is independent of the chosen index. Key identities in this
/// convention: ⟨A'(f), mv X⟩ = −Δ_X(f), △_f(x) = i⟨A'(f), x⟩, and the
/// consistency condition {L+f, A(f)} = ⟨A'(f), ½{L+f,L+f} + A(f)⟩.
FormalSeries bv_anomaly_prime_odd(const DeformContext& ctx,
                                  const FormalSeries& f, const FormalSeries& g,
                                  int eta_index);

/// Interaction-dependent BV Laplacian △_f(x) = i(ŝ_f(x) − s_f(x)).
/// Coincides with △ in the untwisted context; the counterterm twist deforms
/// it. Satisfies △_f(x) = i⟨A'(f), x⟩ and ΔX(f) = i·△_f(mv X).
FormalSeries bv_laplacian_int(const DeformContext& ctx, const FormalSeries& f,
                              const FormalSeries& x);

/// Interacting Laplacian evaluated on the product x·y of two even insertions,
/// computed through the two-parameter generating family U(f + t₁x + t₂y):
///   ŝ_f(x·y) = −(u₁₁ + i·x·u₀₁ + i·y·u₁₀ − x·y·u₀₀),
///   △_f(x·y) = i(ŝ_f(x·y) − s_f(x·y)),
/// where u_{jk} is the t₁^j t₂^k coefficient of U(f + t₁x + t₂y). This
/// dresses each factor separately, which differs from
/// bv_laplacian_int(ctx, f, x·y) whenever the counterterm twist can contract
/// the two factors; the two renderings agree in the untwisted context. For f
/// satisfying the master equation ½{L+f,L+f} + A(f) = 0 and factors at most
/// linear in the fields it obeys the product rule
///   △_f(x·y) = △_f(x)·y + x·△_f(y) + {x,y}.
/// Both factors must be even (use the multiplier trick); f must not carry the
/// probe slots t₁, t₂.
FormalSeries bv_laplacian_int_pair(const DeformContext& ctx,
                                   const FormalSeries& f, const GradedPoly& x,
                                   const GradedPoly& y);

/// n-th homotopy bracket [x₁,…,x_n] at background interaction f (n ≤ 3),
/// extracted from the generating insertion U(f + Σ t_j x_j) as i^{−n} times
/// the coefficient of t₁⋯t_n. Each x_j must be even (use the multiplier
/// trick for odd arguments).
FormalSeries l_bracket(const DeformContext& ctx, const FormalSeries& f,
                       const std::vector<GradedPoly>& xs);

}  // namespace latbv

#endif  // LATBV_BV_HPP
