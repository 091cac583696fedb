#include "latbv/renmap.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace latbv {

RenMap::RenMap(std::vector<CounterTerm> kernels, int ncomp)
    : kernels_(std::move(kernels)) {
  for (const auto& k : kernels_) {
    if (k.comps.size() < 2)
      throw std::invalid_argument("RenMap: kernel order must be >= 2");
    if (k.site < 0) throw std::invalid_argument("RenMap: negative site");
    for (int c : k.comps)
      if (c < 0 || (ncomp >= 0 && c >= ncomp))
        throw std::invalid_argument("RenMap: component out of range");
  }
  canonicalize();
}

void RenMap::canonicalize() {
  // Even derivatives commute: sort each multi-index, then merge duplicates.
  std::map<std::pair<int, std::vector<int>>, Scalar> merged;
  for (auto& k : kernels_) {
    std::sort(k.comps.begin(), k.comps.end());
    merged[{k.site, k.comps}] += k.coeff;
  }
  kernels_.clear();
  for (auto& [key, c] : merged) {
    if (c.is_zero()) continue;
    kernels_.push_back({key.first, key.second, c});
  }
}

GradedPoly RenMap::z(const GradedPoly& f) const {
  GradedPoly out;
  for (const auto& k : kernels_) {
    GradedPoly d = f;
    for (int c : k.comps) {
      d = d.dfield(field_var(static_cast<uint16_t>(k.site),
                             static_cast<uint8_t>(c)));
      if (d.is_zero()) break;
    }
    if (!d.is_zero()) out += d.scaled(k.coeff);
  }
  return out;
}

GradedPoly RenMap::expz(const GradedPoly& f, int sign) const {
  GradedPoly out = f;
  GradedPoly pw = f;
  Rat fact(1);
  for (int n = 1;; ++n) {
    pw = z(pw);
    if (pw.is_zero()) break;
    if (sign < 0 && n % 2 == 1) {
      fact *= n;
      out -= pw.scaled(Scalar(Rat(1) / fact));
    } else {
      fact *= n;
      out += pw.scaled(Scalar(Rat(1) / fact));
    }
  }
  return out;
}

GradedPoly RenMap::apply(const GradedPoly& f) const { return expz(f, +1); }

GradedPoly RenMap::apply_inverse(const GradedPoly& f) const {
  return expz(f, -1);
}

RenMap RenMap::composed(const RenMap& other) const {
  std::vector<CounterTerm> ks = kernels_;
  ks.insert(ks.end(), other.kernels_.begin(), other.kernels_.end());
  RenMap r;
  r.kernels_ = std::move(ks);
  r.canonicalize();
  return r;
}

RenMap RenMap::inverse() const {
  RenMap r = *this;
  for (auto& k : r.kernels_) k.coeff = -k.coeff;
  return r;
}

std::set<int> RenMap::support() const {
  std::set<int> s;
  for (const auto& k : kernels_) s.insert(k.site);
  return s;
}

}  // namespace latbv
