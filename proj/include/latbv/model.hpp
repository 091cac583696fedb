#ifndef LATBV_MODEL_HPP
#define LATBV_MODEL_HPP

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latbv/matrix.hpp"
#include "latbv/poly.hpp"

namespace latbv {

/// A free scalar multiplet on a finite site set: quadratic action
/// L = ½ φᵀ M φ with M symmetric and invertible over the rationals.
/// The propagator kernel is fixed to E = i·M⁻¹, so M·E = i·Id exactly —
/// the normalization every contraction identity downstream relies on.
class FreeModel {
 public:
  FreeModel(std::string name, int nsites, int ncomp, RatMat mass_matrix,
            std::vector<std::pair<int, int>> edges = {}, Rat edge_mass = Rat(0));

  /// Builds the mass matrix of a graph field theory,
  ///   L = ½ Σ_e |φ_t − φ_s|² + ½ m Σ_x |φ(x)|²,
  /// i.e. (graph Laplacian + m)⊗Id_n.
  static FreeModel graph(std::string name, int nsites, int ncomp,
                         const std::vector<std::pair<int, int>>& edges,
                         const Rat& mass);

  const std::string& name() const { return name_; }
  int nsites() const { return nsites_; }
  int ncomp() const { return ncomp_; }
  int dim() const { return nsites_ * ncomp_; }
  const RatMat& M() const { return M_; }
  const RatMat& Minv() const { return Minv_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const Rat& edge_mass() const { return edge_mass_; }

  int flat(int site, int comp) const { return site * ncomp_ + comp; }
  int site_of(int flat_index) const { return flat_index / ncomp_; }
  int comp_of(int flat_index) const { return flat_index % ncomp_; }
  VarId fvar(int flat_index) const;
  VarId avar(int flat_index) const;

  /// Propagator entry E_{jk} = i·(M⁻¹)_{jk} (flat indices).
  Scalar E(int j, int k) const;

  /// L(f) = ½ Σ_{x,y} ½(f(x)+f(y)) φ(x)ᵀ M_{xy} φ(y) for a site weight f.
  GradedPoly lagrangian(const std::vector<Rat>& f) const;
  /// L = L(1).
  GradedPoly lagrangian1() const;

  /// The field-equation polynomial (Mφ)_j (flat index).
  GradedPoly mphi(int flat_index) const;

  /// Sites coupled to `sites` through one application of M (inclusive).
  std::set<int> m_neighborhood(const std::set<int>& sites) const;

 private:
  std::string name_;
  int nsites_ = 0, ncomp_ = 1;
  RatMat M_, Minv_;
  std::vector<std::pair<int, int>> edges_;
  Rat edge_mass_{0};
};

}  // namespace latbv

#endif  // LATBV_MODEL_HPP
