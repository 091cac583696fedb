#ifndef LATBV_GAUGE_HPP
#define LATBV_GAUGE_HPP

#include <set>
#include <vector>

#include "latbv/anomaly.hpp"
#include "latbv/context.hpp"
#include "latbv/group.hpp"
#include "latbv/matrix.hpp"
#include "latbv/model.hpp"
#include "latbv/zeta.hpp"

namespace latbv {

/// An external gauge field on the model's edge set, stored as per-edge
/// transports W_e (n×n rational, invertible); the gauge field proper is
/// A_e ≐ W_e − Id, and its support is the set of edges where W_e ≠ Id.
/// Storing transports keeps gauge covariance an exact rational identity on
/// the lattice; the price is that a transformed W^g − Id need not be
/// antisymmetric (the continuum 𝔰𝔬(n) constraint is relaxed to "W near the
/// identity").
///
/// Requires a graph model: the model's mass matrix must be exactly the one
/// generated by its edge list and edge mass (so that the trivial connection
/// reproduces the free Lagrangian).
class Connection {
 public:
  /// The trivial connection (W_e = Id on every model edge).
  explicit Connection(const FreeModel& m);

  const FreeModel& model() const { return *model_; }
  int nedges() const { return static_cast<int>(w_.size()); }
  /// Transport of edge e (index into model().edges()).
  const RatMat& W(int e) const { return w_.at(static_cast<std::size_t>(e)); }
  /// Sets W_e. Throws std::invalid_argument on a bad index or shape and
  /// std::domain_error if w is singular.
  void set_transport(int e, RatMat w);

  /// Reads `omega` as a gauge-field perturbation and adds it:
  /// W_e ↦ W_e + (ω_e − Id) on every edge. Throws std::domain_error if a
  /// perturbed transport becomes singular.
  Connection perturbed(const Connection& omega) const;

  /// Edge indices where W_e ≠ Id.
  std::set<int> support() const;
  /// Sites incident to a supporting edge.
  std::set<int> site_support() const;

  friend bool operator==(const Connection& a, const Connection& b) {
    return a.model_->name() == b.model_->name() && a.w_ == b.w_;
  }
  friend bool operator!=(const Connection& a, const Connection& b) {
    return !(a == b);
  }

 private:
  const FreeModel* model_;
  std::vector<RatMat> w_;
};

/// A per-site rational orthogonal field redefinition g: sites → SO(n),
/// identity off its support, acting on configurations in the row convention
/// (gφ)(x) = φ(x) G(x). Exact orthogonality (GᵀG = Id, det G = 1) is
/// enforced entrywise over the rationals.
class OrthoGauge {
 public:
  explicit OrthoGauge(const FreeModel& m);

  const FreeModel& model() const { return *model_; }
  /// Sets G(x). Throws std::invalid_argument unless GᵀG = Id and det G = 1.
  void set_g(int site, RatMat g);
  const RatMat& g(int site) const {
    return g_.at(static_cast<std::size_t>(site));
  }
  std::set<int> support() const;

  /// A rational SO(n) rotation in the (i,j) coordinate plane with
  /// cos = (1−t²)/(1+t²) and sin = 2t/(1+t²) — an exact Pythagorean point
  /// of the circle for every rational t.
  static RatMat rotation(int n, int i, int j, const Rat& t);

  /// The affine lattice symmetry realizing the action (ρ = id, ψ = 0).
  GroupElement element() const;

 private:
  const FreeModel* model_;
  std::vector<RatMat> g_;
};

/// L_A = ½ Σ_e |φ_t − φ_s W_e|² + ½ m Σ_x |φ(x)|² (row convention). With
/// the trivial connection this is exactly the model's free Lagrangian.
GradedPoly build_LA(const FreeModel& m, const Connection& a);

/// V(A) ≐ L_A − L, the interaction induced by the gauge field: a quadratic
/// polynomial supported on the endpoints of supp A.
GradedPoly gauge_interaction(const FreeModel& m, const Connection& a);

/// The Euler–Lagrange matrix of L_A, i.e. the symmetric M_A (flat indices)
/// with L_A = ½ φ M_A φᵀ.
RatMat gauge_hessian(const FreeModel& m, const Connection& a);

/// The source functional ⟨Φ, □_A φ̄⟩ = Σ_j φ_j (M_A φ̄)_j.
GradedPoly gauge_source(const FreeModel& m, const Connection& a,
                        const std::vector<Rat>& phibar);

/// The transformed connection A^g with W^g_e = G(s) W_e G(t)ᵀ, the unique
/// rule making gauge covariance exact for the substitution pullback:
///   g_*L_A = L_{A^g},   where  g_*F[φ] ≐ F[gφ].
/// Consequences, all exact:
///   (A^g)^h = A^k with k = h.times(g) (pointwise matrices K(x) = H(x)G(x)),
///   V(A^g) = g_L V(A),
///   V(A^g) + ⟨Φ,□_{A^g}(gφ̄)⟩ = g_L(V(A) + ⟨Φ,□_A φ̄⟩).
Connection gauge_transform(const OrthoGauge& g, const Connection& a);

/// The effective action at the zero configuration,
///   Γ(A,φ̄) = L_A(φ̄) − i·log( S(ε·V(A) + ς·⟨Φ,□_Aφ̄⟩)[φ=0] ),
/// as a series in the interaction counter ε (cap K) and the source counter
/// ς (cap Ks). The source must carry its own counter for the dressed
/// exponential to terminate; the classical term L_A(φ̄) sits at ε⁰ς⁰.
/// Every coefficient is a constant polynomial.
FormalSeries effective_action(const DeformContext& ctx, const Connection& a,
                              const std::vector<Rat>& phibar, int K, int Ks);

/// Γ(A^{g^λ}, g^λφ̄) along the exponential path g^λ = exp(λX) of `leg`,
/// computed from the exact transformation laws
///   V(A^{g^λ}) + ⟨Φ,□_{A^{g^λ}}(g^λφ̄)⟩ = g^λ_L(V(A) + ⟨Φ,□_Aφ̄⟩)
/// and L_{A^{g^λ}}(g^λφ̄) = L_A(φ̄):
///   Γ = L_A(φ̄) − i·log( S(g^λ_L(ε·V(A) + ς·⟨Φ,□_Aφ̄⟩))[φ=0] ).
FormalSeries effective_action_along(const DeformContext& ctx,
                                    const Connection& a, const PathLeg& leg,
                                    const std::vector<Rat>& phibar, int K,
                                    int Ks);

/// ζ_legs(w) − w for a general interaction series w of degree ≤ 2: the
/// anomaly term the renormalization cocycle adds to the interaction.
FormalSeries frak_G_of(const DeformContext& ctx,
                       const std::vector<PathLeg>& legs,
                       const FormalSeries& w);

/// 𝔊(g, A) ≐ ζ_g(ε·V(A)) − ε·V(A) along the composite exponential path
/// `legs` (ε capped at K). Every coefficient is a constant polynomial — the
/// anomaly of a quadratic interaction is field-independent — and on the
/// untwisted context 𝔊 = i·tr(a_X)·λ exactly for a single leg.
FormalSeries frak_G(const DeformContext& ctx, const std::vector<PathLeg>& legs,
                    const Connection& a, int K);

/// Residual of the anomaly cocycle relation
///   𝔊(gh, A) = 𝔊(g, A^{h}) + 𝔊(h, A)
/// along the composite path g^λ h^μ, with the transformed-connection term
/// realized through V(A^{h^μ}) = h^μ_L V(A):
///   frak_G({g,h}, A) − frak_G_of({g}, h^μ_L(ε·V(A))) − frak_G({h}, A).
/// Zero through all (λ,μ,ε) orders.
FormalSeries g_cocycle_residual(const DeformContext& ctx, const PathLeg& g,
                                const PathLeg& h, const Connection& a, int K);

/// Mixed second difference of ζ_h∘V in the gauge field: for perturbations
/// ω₁, ω₂ with disjoint edge supports (throws std::invalid_argument
/// otherwise),
///   ζ_h(εV(A+ω₁+ω₂)) − ζ_h(εV(A+ω₁)) − ζ_h(εV(A+ω₂)) + ζ_h(εV(A)) = 0,
/// the lattice form of δ²𝔊/δA(x)δA(y) = 0 for x ≠ y.
FormalSeries g_locality_AA_residual(const DeformContext& ctx,
                                    const std::vector<PathLeg>& h,
                                    const Connection& a, const Connection& w1,
                                    const Connection& w2, int K);

/// Mixed second difference in (g, A): for a perturbation ω whose edge
/// endpoints avoid supp X_g ∪ supp twist (throws std::invalid_argument
/// otherwise),
///   ζ_{gh}(εV(A+ω)) − ζ_h(εV(A+ω)) − ζ_{gh}(εV(A)) + ζ_h(εV(A)) = 0,
/// the lattice form of δ²𝔊/δ𝔤(x)δA(y) = 0 for x ≠ y.
FormalSeries g_locality_gA_residual(const DeformContext& ctx, const PathLeg& g,
                                    const std::vector<PathLeg>& h,
                                    const Connection& a, const Connection& w,
                                    int K);

/// Disjoint-support additivity in the group slot: when the coupling
/// neighborhood of supp X_{g2} avoids supp X_{g1} ∪ supp twist (throws
/// std::invalid_argument otherwise),
///   ζ_{g1 g2 h}(εV(A)) − ζ_{g1 h}(εV(A)) − ζ_{g2 h}(εV(A)) + ζ_h(εV(A)) = 0,
/// the lattice form of δ²𝔊/δ𝔤(x)δ𝔤(y) = 0 for x ≠ y.
FormalSeries g_locality_gg_residual(const DeformContext& ctx,
                                    const PathLeg& g1, const PathLeg& g2,
                                    const std::vector<PathLeg>& h,
                                    const Connection& a, int K);

/// Residual of Γ(A^{g^λ}, g^λφ̄) = Γ(A,φ̄) + 𝔊(g^λ,A) through the caps
/// (λ ≤ leg order, ε ≤ K, ς ≤ Ks). Vanishing simultaneously states that the
/// effective action shifts by the gauge anomaly, that the shift is
/// independent of φ̄, and that it carries no source counter.
FormalSeries gamma_shift_residual(const DeformContext& ctx,
                                  const Connection& a, const PathLeg& leg,
                                  const std::vector<Rat>& phibar, int K,
                                  int Ks);

/// The infinitesimal gauge anomaly G(X,A) ≐ −ΔX(ε·V(A)) (ε capped at K).
/// For the quadratic V(A) every coefficient is constant; untwisted it is
/// the A-independent −i·tr(a_X).
FormalSeries gauge_anomaly(const DeformContext& ctx, const LieSymmetry& x,
                           const Connection& a, int K);

/// The Wess–Zumino constituents evaluated at the quadratic interaction
/// ε·V(A). Because ΔX of a quadratic functional is a constant functional,
/// the four terms dXp_dY, dYp_dX, dX_of_dY, dY_of_dX vanish and the
/// identity reduces to the gauge consistency relation
///   ∂_X G(Y,A) − ∂_Y G(X,A) = G([X,Y],A)
/// with ∂_X G(Y,A) = ⟨(ΔY)′(εV), ∂_X(L + εV)⟩ (= dYp_XL).
WZTerms gauge_wz_terms(const DeformContext& ctx, const LieSymmetry& x,
                       const LieSymmetry& y, const Connection& a, int K);

}  // namespace latbv

#endif  // LATBV_GAUGE_HPP
