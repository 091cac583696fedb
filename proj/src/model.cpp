#include "latbv/model.hpp"

#include <stdexcept>

namespace latbv {

FreeModel::FreeModel(std::string name, int nsites, int ncomp,
                     RatMat mass_matrix, std::vector<std::pair<int, int>> edges,
                     Rat edge_mass)
    : name_(std::move(name)),
      nsites_(nsites),
      ncomp_(ncomp),
      M_(std::move(mass_matrix)),
      edges_(std::move(edges)),
      edge_mass_(std::move(edge_mass)) {
  if (nsites_ <= 0 || ncomp_ <= 0)
    throw std::invalid_argument("FreeModel: sites and n must be positive");
  const auto n = static_cast<std::size_t>(dim());
  if (M_.rows() != n || M_.cols() != n)
    throw std::invalid_argument("FreeModel: mass matrix has wrong shape");
  if (!M_.is_symmetric())
    throw std::invalid_argument("FreeModel: mass matrix must be symmetric");
  for (const auto& [s, t] : edges_)
    if (s < 0 || t < 0 || s >= nsites_ || t >= nsites_)
      throw std::invalid_argument("FreeModel: edge refers to missing site");
  Minv_ = M_.inverse();  // throws std::domain_error if singular
}

FreeModel FreeModel::graph(std::string name, int nsites, int ncomp,
                           const std::vector<std::pair<int, int>>& edges,
                           const Rat& mass) {
  const std::size_t n = static_cast<std::size_t>(nsites) * ncomp;
  RatMat m(n, n);
  for (int x = 0; x < nsites; ++x)
    for (int c = 0; c < ncomp; ++c)
      m.at(static_cast<std::size_t>(x) * ncomp + c,
           static_cast<std::size_t>(x) * ncomp + c) = mass;
  for (const auto& [s, t] : edges) {
    if (s < 0 || t < 0 || s >= nsites || t >= nsites)
      throw std::invalid_argument("FreeModel::graph: edge refers to missing site");
    for (int c = 0; c < ncomp; ++c) {
      const std::size_t is = static_cast<std::size_t>(s) * ncomp + c;
      const std::size_t it = static_cast<std::size_t>(t) * ncomp + c;
      m.at(is, is) += 1;
      m.at(it, it) += 1;
      m.at(is, it) -= 1;
      m.at(it, is) -= 1;
    }
  }
  return FreeModel(std::move(name), nsites, ncomp, std::move(m), edges, mass);
}

VarId FreeModel::fvar(int flat_index) const {
  return field_var(static_cast<uint16_t>(site_of(flat_index)),
                   static_cast<uint8_t>(comp_of(flat_index)));
}

VarId FreeModel::avar(int flat_index) const {
  return antifield_var(static_cast<uint16_t>(site_of(flat_index)),
                       static_cast<uint8_t>(comp_of(flat_index)));
}

Scalar FreeModel::E(int j, int k) const {
  const Rat& v = Minv_.at(static_cast<std::size_t>(j),
                          static_cast<std::size_t>(k));
  return Scalar(Rat(0), v);  // i * M⁻¹
}

GradedPoly FreeModel::lagrangian(const std::vector<Rat>& f) const {
  if (static_cast<int>(f.size()) != nsites_)
    throw std::invalid_argument("FreeModel::lagrangian: weight size mismatch");
  GradedPoly L;
  for (int j = 0; j < dim(); ++j) {
    for (int k = 0; k < dim(); ++k) {
      const Rat& m = M_.at(j, k);
      if (m == 0) continue;
      Rat w = (f[site_of(j)] + f[site_of(k)]) / 2;
      if (w == 0) continue;
      L += (GradedPoly::var(fvar(j)) * GradedPoly::var(fvar(k)))
               .scaled(Scalar(m * w / 2));
    }
  }
  return L;
}

GradedPoly FreeModel::lagrangian1() const {
  return lagrangian(std::vector<Rat>(nsites_, Rat(1)));
}

GradedPoly FreeModel::mphi(int flat_index) const {
  GradedPoly p;
  for (int k = 0; k < dim(); ++k) {
    const Rat& m = M_.at(static_cast<std::size_t>(flat_index),
                         static_cast<std::size_t>(k));
    if (m == 0) continue;
    p += GradedPoly::var(fvar(k)).scaled(Scalar(m));
  }
  return p;
}

std::set<int> FreeModel::m_neighborhood(const std::set<int>& sites) const {
  std::set<int> out = sites;
  for (int j = 0; j < dim(); ++j) {
    if (!sites.count(site_of(j))) continue;
    for (int k = 0; k < dim(); ++k)
      if (M_.at(j, k) != 0) out.insert(site_of(k));
  }
  return out;
}

}  // namespace latbv
