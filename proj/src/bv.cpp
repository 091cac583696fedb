#include "latbv/bv.hpp"

#include <stdexcept>

namespace latbv {

GradedPoly antibracket(const FreeModel& m, const GradedPoly& f,
                       const GradedPoly& g) {
  GradedPoly r;
  for (int k = 0; k < m.dim(); ++k) {
    r += f.dfield(m.fvar(k)) * g.dodd_left(m.avar(k));
    r -= f.dodd_right(m.avar(k)) * g.dfield(m.fvar(k));
  }
  return r;
}

FormalSeries antibracket(const FreeModel& m, const FormalSeries& f,
                         const FormalSeries& g) {
  return f.mul(g, [&m](const GradedPoly& a, const GradedPoly& b) {
    return antibracket(m, a, b);
  });
}

GradedPoly s0_free(const FreeModel& m, const GradedPoly& x) {
  GradedPoly r;
  for (int k = 0; k < m.dim(); ++k) r -= x.dodd_right(m.avar(k)) * m.mphi(k);
  return r;
}

FormalSeries s0_free(const FreeModel& m, const FormalSeries& x) {
  return x.map_coeffs([&m](const GradedPoly& p) { return s0_free(m, p); });
}

FormalSeries s_classical(const FreeModel& m, const FormalSeries& f,
                         const FormalSeries& x) {
  return antibracket(m, x, f) + s0_free(m, x);
}

GradedPoly bv_laplacian(const FreeModel& m, const GradedPoly& x) {
  GradedPoly r;
  for (int k = 0; k < m.dim(); ++k)
    r -= x.dodd_right(m.avar(k)).dfield(m.fvar(k));
  return r;
}

FormalSeries bv_laplacian(const FreeModel& m, const FormalSeries& x) {
  return x.map_coeffs(
      [&m](const GradedPoly& p) { return bv_laplacian(m, p); });
}

GradedPoly multivector_of(const LieSymmetry& x) {
  const FreeModel& m = x.model();
  GradedPoly r;
  for (int site : x.support())
    for (int b = 0; b < m.ncomp(); ++b) {
      int k = m.flat(site, b);
      r -= x.phiX(k) * GradedPoly::var(m.avar(k));
    }
  return r;
}

FormalSeries half_master(const FreeModel& m, const FormalSeries& f) {
  FormalSeries lf = f;
  lf.add(Expo{}, m.lagrangian1());
  return antibracket(m, lf, lf).scaled(Scalar(Rat(1, 2)));
}

namespace {
void require_interaction(const FormalSeries& f, const char* where) {
  if (!f.at(Expo{}).is_zero())
    throw std::invalid_argument(std::string(where) +
                                ": interaction needs zero constant term");
}
}  // namespace

FormalSeries shat_ins(const DeformContext& ctx, const FormalSeries& f,
                      const FormalSeries& g) {
  require_interaction(f, "shat_ins");
  return ctx.solve_ins(f, s0_free(ctx.model(), ctx.TS_ins(f, g)));
}

FormalSeries bv_u(const DeformContext& ctx, const FormalSeries& f) {
  require_interaction(f, "bv_u");
  return ctx.solve_ins(f, s0_free(ctx.model(), ctx.TS(f)));
}

FormalSeries bv_anomaly(const DeformContext& ctx, const FormalSeries& f) {
  return bv_u(ctx, f).scaled(Scalar(Rat(0), Rat(-1))) -
         half_master(ctx.model(), f);
}

FormalSeries bv_anomaly_prime(const DeformContext& ctx, const FormalSeries& f,
                              const FormalSeries& g) {
  for (const auto& [e, c] : f.coeffs())
    if (e[P_TAU] != 0)
      throw std::invalid_argument("bv_anomaly_prime: tau is reserved");
  for (const auto& [e, c] : g.coeffs())
    if (e[P_TAU] != 0)
      throw std::invalid_argument("bv_anomaly_prime: tau is reserved");
  Caps c = Caps::join(f.caps(), g.caps()).with(P_TAU, 1);
  FormalSeries tau = FormalSeries::monomial(
      c, GradedPoly::constant(Scalar(1)), P_TAU);
  FormalSeries probe = f.with_caps(c) + g.with_caps(c).mul(tau);
  return bv_anomaly(ctx, probe).slice(P_TAU, 1);
}

FormalSeries bv_anomaly_prime_odd(const DeformContext& ctx,
                                  const FormalSeries& f, const FormalSeries& g,
                                  int eta_index) {
  GradedPoly eta = GradedPoly::var(mult_var(eta_index));
  FormalSeries geta =
      g.map_coeffs([&eta](const GradedPoly& p) { return eta * p; });
  return bv_anomaly_prime(ctx, f, geta)
      .map_coeffs([&](const GradedPoly& p) {
        return p.dodd_left(mult_var(eta_index));
      });
}

FormalSeries bv_laplacian_int(const DeformContext& ctx, const FormalSeries& f,
                              const FormalSeries& x) {
  return (shat_ins(ctx, f, x) - s_classical(ctx.model(), f, x))
      .scaled(Scalar::unit_i());
}

FormalSeries bv_laplacian_int_pair(const DeformContext& ctx,
                                   const FormalSeries& f, const GradedPoly& x,
                                   const GradedPoly& y) {
  for (const auto& [e, c] : f.coeffs())
    if (e[P_T1] != 0 || e[P_T2] != 0)
      throw std::invalid_argument("bv_laplacian_int_pair: t1/t2 are reserved");
  if (x.parity() != std::optional<int>(0) ||
      y.parity() != std::optional<int>(0))
    throw std::invalid_argument("bv_laplacian_int_pair: factors must be even");
  Caps c = f.caps().with(P_T1, 1).with(P_T2, 1);
  FormalSeries ff = f.with_caps(c) + FormalSeries::monomial(c, x, P_T1) +
                    FormalSeries::monomial(c, y, P_T2);
  FormalSeries u = bv_u(ctx, ff);
  Scalar kI = Scalar::unit_i();
  auto times = [](const FormalSeries& s, const GradedPoly& p) {
    return s.map_coeffs([&p](const GradedPoly& q) { return p * q; });
  };
  FormalSeries shat_pair =
      (u.slice(P_T1, 1).slice(P_T2, 1) +
       times(u.slice(P_T1, 0).slice(P_T2, 1), x).scaled(kI) +
       times(u.slice(P_T1, 1).slice(P_T2, 0), y).scaled(kI) -
       times(u.slice(P_T1, 0).slice(P_T2, 0), x * y))
          .scaled(Scalar(-1));
  FormalSeries xy = FormalSeries::from_poly(f.caps(), x * y);
  return (shat_pair - s_classical(ctx.model(), f, xy)).scaled(kI);
}

FormalSeries l_bracket(const DeformContext& ctx, const FormalSeries& f,
                       const std::vector<GradedPoly>& xs) {
  static const Param slots[3] = {P_T1, P_T2, P_T3};
  if (xs.size() > 3)
    throw std::invalid_argument("l_bracket: at most 3 arguments");
  Caps c = f.caps();
  for (std::size_t j = 0; j < xs.size(); ++j) c = c.with(slots[j], 1);
  FormalSeries ff = f.with_caps(c);
  for (std::size_t j = 0; j < xs.size(); ++j)
    ff += FormalSeries::monomial(c, xs[j], slots[j]);
  FormalSeries r = bv_u(ctx, ff);
  for (std::size_t j = 0; j < xs.size(); ++j) r = r.slice(slots[j], 1);
  return r.scaled(Scalar::i_pow(-static_cast<long>(xs.size())));
}

}  // namespace latbv
