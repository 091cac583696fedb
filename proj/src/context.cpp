#include "latbv/context.hpp"

namespace latbv {

FormalSeries DeformContext::tmap(const FormalSeries& v) const {
  return v.map_coeffs([this](const GradedPoly& p) { return wick_.T(p); });
}

FormalSeries DeformContext::tinvmap(const FormalSeries& v) const {
  return v.map_coeffs([this](const GradedPoly& p) { return wick_.Tinv(p); });
}

FormalSeries DeformContext::zmap(const FormalSeries& v) const {
  if (!twisted()) return v;
  return v.map_coeffs([this](const GradedPoly& p) { return twist_.apply(p); });
}

FormalSeries DeformContext::zinvmap(const FormalSeries& v) const {
  if (!twisted()) return v;
  return v.map_coeffs(
      [this](const GradedPoly& p) { return twist_.apply_inverse(p); });
}

FormalSeries DeformContext::dressed_exp(const FormalSeries& v,
                                        int sign) const {
  Scalar iu = sign > 0 ? Scalar::unit_i() : -Scalar::unit_i();
  return zmap(v).scaled(iu).exp();
}

FormalSeries DeformContext::TS(const FormalSeries& v) const {
  return tmap(dressed_exp(v));
}

FormalSeries DeformContext::TS_ins(const FormalSeries& v,
                                   const FormalSeries& p) const {
  return tmap(dressed_exp(v).mul(zmap(p)));
}

FormalSeries DeformContext::TS_ins(const FormalSeries& v,
                                   const GradedPoly& p) const {
  return TS_ins(v, FormalSeries::from_poly(v.caps(), p));
}

FormalSeries DeformContext::solve_ins(const FormalSeries& v,
                                      const FormalSeries& r) const {
  return zinvmap(dressed_exp(v, -1).mul(tinvmap(r)));
}

FormalSeries DeformContext::smatrix(const GradedPoly& f, int K) const {
  Caps caps = Caps::none().with(P_EPS, K);
  return TS(FormalSeries::monomial(caps, f, P_EPS));
}

FormalSeries DeformContext::tprod(const FormalSeries& a,
                                  const FormalSeries& b) const {
  return a.mul(b, [this](const GradedPoly& x, const GradedPoly& y) {
    return wick_.tprod(x, y);
  });
}

}  // namespace latbv
