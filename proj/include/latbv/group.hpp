#ifndef LATBV_GROUP_HPP
#define LATBV_GROUP_HPP

#include <set>
#include <vector>

#include "latbv/matrix.hpp"
#include "latbv/model.hpp"
#include "latbv/poly.hpp"
#include "latbv/series.hpp"

namespace latbv {

/// Infinitesimal affine symmetry X = (a, p): a per-site matrix a(x) and a
/// per-site shift p(x), acting on configurations in the row convention
///   (φX)(x) = φ(x) a(x) + p(x),
/// i.e. (φX)_b(x) = Σ_c φ_c(x) a(x)_{cb} + p(x)_b.
class LieSymmetry {
 public:
  /// The zero element of the Lie algebra for the given model.
  explicit LieSymmetry(const FreeModel& m);

  const FreeModel& model() const { return *model_; }
  void set_a(int site, RatMat a);
  void set_p(int site, std::vector<Rat> p);
  const RatMat& a(int site) const { return a_[site]; }
  const std::vector<Rat>& p(int site) const { return p_[site]; }

  bool is_zero() const;
  /// Sites where (a, p) is nonzero.
  std::set<int> support() const;
  /// Σ_x tr a(x).
  Rat trace() const;

  /// (φX)_b(x) for the flat index j = (x, b), as a degree-≤1 polynomial.
  GradedPoly phiX(int flat) const;

  /// ∂_X F = ⟨F′, φX⟩ = Σ_j (∂F/∂φ_j)(φX)_j.
  GradedPoly partial(const GradedPoly& f) const;
  /// Coefficient-wise action on a formal series.
  FormalSeries partial(const FormalSeries& f) const;
  /// ∂_X L for the model's quadratic action (cutoff ≡ 1).
  GradedPoly partial_L() const;

  LieSymmetry scaled(const Rat& c) const;
  friend LieSymmetry operator+(const LieSymmetry& x, const LieSymmetry& y);
  friend LieSymmetry operator-(const LieSymmetry& x);

  /// Lie bracket [(a,p),(b,q)] = ([a,b], pb − qa), matching the commutator
  /// of the derivations: [∂_X, ∂_Y] = ∂_{[X,Y]}.
  LieSymmetry bracket(const LieSymmetry& y) const;

 private:
  const FreeModel* model_;
  std::vector<RatMat> a_;
  std::vector<std::vector<Rat>> p_;
};

/// Affine lattice symmetry g = (A, ψ, ρ): a site permutation ρ followed by a
/// per-site invertible affine map, acting on configurations by
///   (gφ)(x) = φ(ρ(x)) A(x) + ψ(x)   (row convention).
/// The product is defined so that (gh)(φ) = h(g(φ)); pullbacks then compose
/// covariantly: (gh)_* = g_* ∘ h_*.
class GroupElement {
 public:
  /// The identity element for the given model.
  explicit GroupElement(const FreeModel& m);

  const FreeModel& model() const { return *model_; }
  void set_perm(std::vector<int> rho);
  void set_matrix(int site, RatMat a);  // must be invertible
  void set_shift(int site, std::vector<Rat> psi);
  int rho(int site) const { return rho_[site]; }
  const RatMat& A(int site) const { return A_[site]; }
  const std::vector<Rat>& psi(int site) const { return psi_[site]; }

  bool is_identity() const;
  /// Sites where (A, ψ, ρ) differs from the identity.
  std::set<int> support() const;

  /// (gφ) on an explicit configuration (flat-indexed, length dim()).
  std::vector<Rat> act_config(const std::vector<Rat>& phi) const;

  /// Pullback g_*F[φ] = F[g(φ)], i.e. the substitution
  /// φ_b(x) → Σ_c φ_c(ρ(x)) A(x)_{cb} + ψ(x)_b.
  /// Requires F free of antifields (throws std::logic_error otherwise).
  GradedPoly pullback(const GradedPoly& f) const;
  /// Coefficient-wise pullback of a formal series.
  FormalSeries pullback(const FormalSeries& f) const;

  /// δ_g L = g_*L(f) − L(f) with the cutoff f ≡ 1 (always admissible on a
  /// finite lattice). Independent of the admissible choice; see the overload.
  GradedPoly delta_L() const;
  /// δ_g L for an explicit cutoff; admissible means f ≡ 1 on supp(g)
  /// enlarged by one coupling neighborhood of the mass matrix.
  GradedPoly delta_L(const std::vector<Rat>& cutoff) const;

  /// The action twisted by the free Lagrangian: g_L F = δ_g L + g_* F.
  /// Satisfies (gh)_L = g_L ∘ h_L and e_L = id.
  GradedPoly gL(const GradedPoly& f) const;
  FormalSeries gL(const FormalSeries& f) const;

  /// Group product: (g.times(h))(φ) = h(g(φ)).
  GroupElement times(const GroupElement& h) const;
  GroupElement inverse() const;

 private:
  const FreeModel* model_;
  std::vector<int> rho_;
  std::vector<RatMat> A_;
  std::vector<std::vector<Rat>> psi_;
};

/// One-parameter family g^λ = exp(λX) of affine symmetries, represented by
/// exact truncated λ-series: A^λ(x) = e^{λ a(x)} and ψ^λ(x) = p(x)·Φ(λ a(x))
/// with Φ(z) = (e^z − 1)/z. Exposes the pullback and L-twisted actions as
/// series maps in a chosen formal parameter; the tangent at λ = 0 is ∂_X.
class ExpPath {
 public:
  ExpPath(const LieSymmetry& x, Param par, int order);

  const LieSymmetry& tangent() const { return x_; }
  Param param() const { return par_; }
  int order() const { return order_; }

  /// The image of the field variable with flat index j, as a series whose
  /// λ^k coefficient is a degree-≤1 polynomial.
  FormalSeries field_image(int flat, const Caps& caps) const;

  /// g^λ_* f, coefficient-wise in f; caps are joined with (par ≤ order).
  FormalSeries pullback(const FormalSeries& f) const;
  FormalSeries pullback(const GradedPoly& f, const Caps& caps) const;

  /// δ_{g^λ} L as a series (vanishes at λ = 0).
  FormalSeries delta_L(const Caps& caps) const;

  /// g^λ_L f = δ_{g^λ}L + g^λ_* f.
  FormalSeries gL(const FormalSeries& f) const;

  /// The inverse path (g^λ)⁻¹ = exp(λ(−X)).
  ExpPath inverse() const;

 private:
  LieSymmetry x_;
  Param par_;
  int order_;
  // akl_[x][k] = a(x)^k / k!  (k ≤ order); psik_[x][k] = p(x)·a(x)^{k−1}/k!.
  std::vector<std::vector<RatMat>> akl_;
  std::vector<std::vector<std::vector<Rat>>> psik_;
};

}  // namespace latbv

#endif  // LATBV_GROUP_HPP
