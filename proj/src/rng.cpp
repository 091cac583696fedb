#include "latbv/rng.hpp"

#include <algorithm>

namespace latbv {

std::uint64_t ProbeRng::mix(std::uint64_t seed, std::string_view tag) {
  std::uint64_t h = 14695981039346656037ull;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return seed ^ h;
}

int ProbeRng::range(int lo, int hi) {
  if (hi <= lo) return lo;
  auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(u64() % span);
}

Rat ProbeRng::rat(int max_num, int max_den, bool nonzero) {
  int num = range(nonzero ? 1 : 0, max_num);
  if (nonzero && num == 0) num = 1;
  if (chance(1, 2)) num = -num;
  int den = range(1, max_den);
  Rat r(num, den);
  // mpq_class does not reduce two-argument constructions; comparisons
  // require canonical form.
  r.canonicalize();
  return r;
}

Scalar ProbeRng::scalar(int max_num, int max_den, bool nonzero) {
  Scalar s(rat(max_num, max_den), rat(max_num, max_den));
  if (nonzero && s.is_zero()) s = Scalar(1);
  return s;
}

Mono ProbeRng::field_mono(const FreeModel& m, int deg) {
  Mono mono;
  for (int i = 0; i < deg; ++i)
    mono.ev.push_back(m.fvar(range(0, m.dim() - 1)));
  std::sort(mono.ev.begin(), mono.ev.end());
  return mono;
}

GradedPoly ProbeRng::field_poly(const FreeModel& m, int max_deg, int nterms) {
  GradedPoly p;
  for (int t = 0; t < nterms; ++t)
    p.add_term(field_mono(m, range(0, max_deg)), scalar(3, 2, true));
  return p;
}

GradedPoly ProbeRng::homogeneous_field_poly(const FreeModel& m, int deg,
                                            int nterms) {
  GradedPoly p;
  for (int t = 0; t < nterms; ++t)
    p.add_term(field_mono(m, deg), scalar(3, 2, true));
  return p;
}

GradedPoly ProbeRng::multivector(const FreeModel& m, int max_deg, int nterms,
                                 int antifields) {
  GradedPoly p;
  for (int t = 0; t < nterms; ++t) {
    Mono mono = field_mono(m, range(0, max_deg));
    // Distinct antifield factors (odd variables square to zero).
    std::vector<int> picks;
    while (static_cast<int>(picks.size()) < antifields) {
      int j = range(0, m.dim() - 1);
      if (std::find(picks.begin(), picks.end(), j) == picks.end())
        picks.push_back(j);
    }
    std::sort(picks.begin(), picks.end());
    for (int j : picks) mono.od.push_back(m.avar(j));
    p.add_term(mono, scalar(3, 2, true));
  }
  return p;
}

}  // namespace latbv
