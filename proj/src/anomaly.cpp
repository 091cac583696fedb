#include "latbv/anomaly.hpp"

#include <stdexcept>

namespace latbv {

FormalSeries solve_anomaly(const DeformContext& ctx, const LieSymmetry& x,
                           const FormalSeries& v) {
  if (!v.at(Expo{}).is_zero())
    throw std::invalid_argument(
        "solve_anomaly: vertex series must vanish at the zero exponent");
  const FreeModel& m = ctx.model();
  FormalSeries r(v.caps());
  for (int site : x.support())
    for (int b = 0; b < m.ncomp(); ++b) {
      int j = m.flat(site, b);
      GradedPoly px = x.phiX(j);
      if (px.is_zero()) continue;
      GradedPoly mp = m.mphi(j);
      r += ctx.TS_ins(v, px).map_coeffs(
          [&](const GradedPoly& c) { return c * mp; });
    }
  FormalSeries out = x.partial(v) - ctx.solve_ins(v, r);
  out.add(Expo{}, x.partial_L());
  return out;
}

FormalSeries solve_anomaly(const DeformContext& ctx, const LieSymmetry& x,
                           const GradedPoly& f, int K) {
  return solve_anomaly(
      ctx, x, FormalSeries::monomial(Caps::none().with(P_EPS, K), f, P_EPS));
}

FormalSeries anomaly_prime(const DeformContext& ctx, const LieSymmetry& x,
                           const FormalSeries& v, const FormalSeries& g) {
  if (v.caps().cap[P_TAU] != 0 || g.caps().cap[P_TAU] != 0)
    throw std::invalid_argument("anomaly_prime: tau parameter is reserved");
  Caps c = Caps::join(v.caps(), g.caps()).with(P_TAU, 1);
  FormalSeries tau =
      FormalSeries::monomial(c, GradedPoly::constant(Scalar(1)), P_TAU);
  FormalSeries v2 = v.with_caps(c) + g.with_caps(c).mul(tau);
  return solve_anomaly(ctx, x, v2).slice(P_TAU, 1);
}

FormalSeries eval_at_config(const FormalSeries& s, const FreeModel& m,
                            const std::vector<Rat>& phibar) {
  return s.map_coeffs([&](const GradedPoly& p) {
    return GradedPoly::constant(p.eval_fields([&](VarId v) {
      return Scalar(phibar[m.flat(v.site(), v.comp())]);
    }));
  });
}

FormalSeries amwi_residual(const DeformContext& ctx, const LieSymmetry& x,
                           const FormalSeries& v,
                           const std::vector<Rat>& phibar) {
  const FreeModel& m = ctx.model();
  // ∂_X L_q = ∂_X L − ⟨φX, q⟩ with q ≐ Mφ̄.
  GradedPoly xlq = x.partial_L();
  for (int j = 0; j < m.dim(); ++j) {
    Scalar qj = m.mphi(j).eval_fields(
        [&](VarId w) { return Scalar(phibar[m.flat(w.site(), w.comp())]); });
    if (!qj.is_zero()) xlq -= x.phiX(j).scaled(qj);
  }
  FormalSeries p = x.partial(v) - solve_anomaly(ctx, x, v);
  p.add(Expo{}, xlq);
  return eval_at_config(ctx.TS_ins(v, p), m, phibar);
}

FormalSeries partial_X_of_VL(const LieSymmetry& x, const FormalSeries& v) {
  FormalSeries r = x.partial(v);
  r.add(Expo{}, x.partial_L());
  return r;
}

WZTerms wz_terms(const DeformContext& ctx, const LieSymmetry& x,
                 const LieSymmetry& y, const FormalSeries& v) {
  WZTerms t;
  FormalSeries dx = solve_anomaly(ctx, x, v);
  FormalSeries dy = solve_anomaly(ctx, y, v);
  t.lhs = solve_anomaly(ctx, x.bracket(y), v);
  t.dYp_dX = anomaly_prime(ctx, y, v, dx);
  t.dXp_dY = anomaly_prime(ctx, x, v, dy);
  t.dX_of_dY = x.partial(dy);
  t.dY_of_dX = y.partial(dx);
  t.dYp_XL = anomaly_prime(ctx, y, v, partial_X_of_VL(x, v));
  t.dXp_YL = anomaly_prime(ctx, x, v, partial_X_of_VL(y, v));
  return t;
}

FunctionalMap anomaly_map(const DeformContext& ctx, const LieSymmetry& x) {
  FunctionalMap m;
  m.value = [&ctx, x](const FormalSeries& v) {
    return solve_anomaly(ctx, x, v);
  };
  m.prime = [&ctx, x](const FormalSeries& v, const FormalSeries& g) {
    return anomaly_prime(ctx, x, v, g);
  };
  return m;
}

FunctionalMap kernel_lie_map(const RenMap& z) {
  FunctionalMap m;
  m.value = [z](const FormalSeries& v) {
    return v.map_coeffs([&](const GradedPoly& p) { return z.z(p); });
  };
  m.prime = [z](const FormalSeries& v, const FormalSeries& g) {
    Caps c = Caps::join(v.caps(), g.caps());
    return g.with_caps(c).map_coeffs(
        [&](const GradedPoly& p) { return z.z(p); });
  };
  return m;
}

FunctionalMap constant_map(const GradedPoly& c) {
  FunctionalMap m;
  m.value = [c](const FormalSeries& v) {
    FormalSeries r(v.caps());
    r.add(Expo{}, c);
    return r;
  };
  m.prime = [](const FormalSeries& v, const FormalSeries&) {
    return FormalSeries(v.caps());
  };
  return m;
}

FormalSeries lieR_bracket(const FunctionalMap& z1, const FunctionalMap& z2,
                          const FormalSeries& v) {
  return z1.prime(v, z2.value(v)) - z2.prime(v, z1.value(v));
}

FormalSeries dX_on_map(const LieSymmetry& x, const FunctionalMap& z,
                       const FormalSeries& v) {
  return x.partial(z.value(v)) - z.prime(v, partial_X_of_VL(x, v));
}

}  // namespace latbv
