#include "latbv/wick.hpp"

namespace latbv {

Wick::Wick(const FreeModel& m) {
  // ½ Σ_{jk} E_{jk} ∂_j∂_k = Σ_{j<k} E_{jk} ∂_j∂_k + ½ Σ_j E_{jj} ∂_j².
  for (int j = 0; j < m.dim(); ++j) {
    for (int k = j; k < m.dim(); ++k) {
      Scalar e = m.E(j, k);
      if (e.is_zero()) continue;
      if (j == k) e = e * Scalar(Rat(1, 2));
      entries_.push_back({m.fvar(j), m.fvar(k), e});
    }
  }
}

GradedPoly Wick::contract_once(const GradedPoly& p, int sign) const {
  GradedPoly out;
  for (const auto& e : entries_) {
    GradedPoly d = p.dfield(e.j).dfield(e.k);
    if (d.is_zero()) continue;
    out += d.scaled(sign > 0 ? e.w : -e.w);
  }
  return out;
}

GradedPoly Wick::expD(const GradedPoly& p, int sign) const {
  GradedPoly out = p;
  GradedPoly pw = p;
  Rat fact(1);
  for (int k = 1;; ++k) {
    pw = contract_once(pw, sign);
    if (pw.is_zero()) break;
    fact *= k;
    out += pw.scaled(Scalar(Rat(1) / fact));
  }
  return out;
}

}  // namespace latbv
