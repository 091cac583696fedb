#include "latbv/gauge.hpp"

#include <stdexcept>
#include <utility>

namespace latbv {

namespace {

// The source counter ς of the effective action.
constexpr Param kSigma = P_T2;

Rat det_of(const RatMat& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
  Rat det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rat f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

// ½ φ M φᵀ for a symmetric flat matrix M.
GradedPoly quad_form(const FreeModel& m, const RatMat& q) {
  GradedPoly p;
  for (int j = 0; j < m.dim(); ++j) {
    for (int k = j; k < m.dim(); ++k) {
      const Rat c = (j == k) ? q.at(j, j) / 2 : q.at(j, k);
      if (c == 0) continue;
      p += (GradedPoly::var(m.fvar(j)) * GradedPoly::var(m.fvar(k)))
               .scaled(Scalar(c));
    }
  }
  return p;
}

RatMat hessian_of(const FreeModel& m, const std::vector<RatMat>& w) {
  const int n = m.ncomp();
  RatMat q(m.dim(), m.dim());
  for (int j = 0; j < m.dim(); ++j) q.at(j, j) = m.edge_mass();
  for (std::size_t e = 0; e < w.size(); ++e) {
    const auto [s, t] = m.edges()[e];
    const RatMat& we = w[e];
    const RatMat wwt = we * we.transpose();
    for (int b = 0; b < n; ++b) {
      q.at(m.flat(t, b), m.flat(t, b)) += Rat(1);
      for (int c = 0; c < n; ++c) {
        q.at(m.flat(s, b), m.flat(s, c)) += wwt.at(b, c);
        q.at(m.flat(s, b), m.flat(t, c)) -= we.at(b, c);
        q.at(m.flat(t, c), m.flat(s, b)) -= we.at(b, c);
      }
    }
  }
  return q;
}

void require_invertible(const RatMat& w) {
  if (det_of(w) == 0) throw std::domain_error("transport must be invertible");
}

void check_gauge_legs(const std::vector<PathLeg>& legs) {
  for (const PathLeg& l : legs) {
    if (l.par == P_EPS || l.par == kSigma)
      throw std::invalid_argument(
          "path parameter collides with an effective-action counter");
  }
}

bool sets_disjoint(const std::set<int>& a, const std::set<int>& b) {
  for (int s : a)
    if (b.count(s)) return false;
  return true;
}

std::set<int> zeta_support(const DeformContext& ctx, const LieSymmetry& x) {
  std::set<int> s = x.support();
  for (int t : ctx.twist().support()) s.insert(t);
  return s;
}

std::vector<PathLeg> concat(std::vector<PathLeg> a,
                            const std::vector<PathLeg>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// ε·V(A) with the ε cap K.
FormalSeries interaction_series(const FreeModel& m, const Connection& a,
                                int K) {
  return FormalSeries::monomial(Caps::none().with(P_EPS, K),
                                gauge_interaction(m, a), P_EPS);
}

FormalSeries minus_i_log(const FormalSeries& s) {
  return s.log().scaled(Scalar(Rat(0), Rat(-1)));
}

// −i·log(S(arg)[φ=0]) + L_A(φ̄) at ε⁰ς⁰: the common tail of the two
// effective-action entry points.
FormalSeries gamma_of(const DeformContext& ctx, const FormalSeries& arg,
                      const GradedPoly& la, const std::vector<Rat>& phibar) {
  const FreeModel& m = ctx.model();
  const std::vector<Rat> zeros(static_cast<std::size_t>(m.dim()), Rat(0));
  FormalSeries g = minus_i_log(eval_at_config(ctx.TS(arg), m, zeros));
  GradedPoly cl = GradedPoly::constant(la.eval_fields([&](VarId v) {
    return Scalar(phibar[static_cast<std::size_t>(
        m.flat(v.site(), v.comp()))]);
  }));
  g.add(Expo{}, cl);
  return g;
}

}  // namespace

Connection::Connection(const FreeModel& m) : model_(&m) {
  if (m.edges().empty())
    throw std::invalid_argument("connections need a model with an edge set");
  w_.assign(m.edges().size(),
            RatMat::identity(static_cast<std::size_t>(m.ncomp())));
  if (!(hessian_of(m, w_) == m.M()))
    throw std::invalid_argument(
        "model mass matrix is not the graph form of its edge set");
}

void Connection::set_transport(int e, RatMat w) {
  if (e < 0 || e >= nedges())
    throw std::invalid_argument("edge index out of range");
  if (w.rows() != static_cast<std::size_t>(model_->ncomp()) ||
      w.cols() != w.rows())
    throw std::invalid_argument("transport has the wrong shape");
  require_invertible(w);
  w_[static_cast<std::size_t>(e)] = std::move(w);
}

Connection Connection::perturbed(const Connection& omega) const {
  if (omega.model_->name() != model_->name())
    throw std::invalid_argument("perturbation lives on a different model");
  Connection out(*this);
  const RatMat id = RatMat::identity(static_cast<std::size_t>(model_->ncomp()));
  for (int e : omega.support()) {
    const RatMat w = out.w_[static_cast<std::size_t>(e)] +
                     (omega.W(e) - id);
    require_invertible(w);
    out.w_[static_cast<std::size_t>(e)] = w;
  }
  return out;
}

std::set<int> Connection::support() const {
  std::set<int> s;
  const RatMat id = RatMat::identity(static_cast<std::size_t>(model_->ncomp()));
  for (int e = 0; e < nedges(); ++e)
    if (!(w_[static_cast<std::size_t>(e)] == id)) s.insert(e);
  return s;
}

std::set<int> Connection::site_support() const {
  std::set<int> s;
  for (int e : support()) {
    s.insert(model_->edges()[static_cast<std::size_t>(e)].first);
    s.insert(model_->edges()[static_cast<std::size_t>(e)].second);
  }
  return s;
}

OrthoGauge::OrthoGauge(const FreeModel& m) : model_(&m) {
  g_.assign(static_cast<std::size_t>(m.nsites()),
            RatMat::identity(static_cast<std::size_t>(m.ncomp())));
}

void OrthoGauge::set_g(int site, RatMat g) {
  if (site < 0 || site >= model_->nsites())
    throw std::invalid_argument("site out of range");
  const std::size_t n = static_cast<std::size_t>(model_->ncomp());
  if (g.rows() != n || g.cols() != n)
    throw std::invalid_argument("gauge matrix has the wrong shape");
  if (!(g.transpose() * g == RatMat::identity(n)))
    throw std::invalid_argument("gauge matrix is not orthogonal");
  if (det_of(g) != Rat(1))
    throw std::invalid_argument("gauge matrix is not special orthogonal");
  g_[static_cast<std::size_t>(site)] = std::move(g);
}

std::set<int> OrthoGauge::support() const {
  std::set<int> s;
  const RatMat id = RatMat::identity(static_cast<std::size_t>(model_->ncomp()));
  for (int x = 0; x < model_->nsites(); ++x)
    if (!(g_[static_cast<std::size_t>(x)] == id)) s.insert(x);
  return s;
}

RatMat OrthoGauge::rotation(int n, int i, int j, const Rat& t) {
  if (n < 2 || i < 0 || j <= i || j >= n)
    throw std::invalid_argument("rotation plane out of range");
  const Rat d = Rat(1) + t * t;
  const Rat c = (Rat(1) - t * t) / d;
  const Rat s = (Rat(2) * t) / d;
  RatMat r = RatMat::identity(static_cast<std::size_t>(n));
  r.at(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = c;
  r.at(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = c;
  r.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = s;
  r.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = -s;
  return r;
}

GroupElement OrthoGauge::element() const {
  GroupElement g(*model_);
  for (int x : support()) g.set_matrix(x, g_[static_cast<std::size_t>(x)]);
  return g;
}

GradedPoly build_LA(const FreeModel& m, const Connection& a) {
  if (a.model().name() != m.name())
    throw std::invalid_argument("connection lives on a different model");
  return quad_form(m, gauge_hessian(m, a));
}

GradedPoly gauge_interaction(const FreeModel& m, const Connection& a) {
  return build_LA(m, a) - m.lagrangian1();
}

RatMat gauge_hessian(const FreeModel& m, const Connection& a) {
  std::vector<RatMat> w;
  w.reserve(static_cast<std::size_t>(a.nedges()));
  for (int e = 0; e < a.nedges(); ++e) w.push_back(a.W(e));
  return hessian_of(m, w);
}

GradedPoly gauge_source(const FreeModel& m, const Connection& a,
                        const std::vector<Rat>& phibar) {
  if (phibar.size() != static_cast<std::size_t>(m.dim()))
    throw std::invalid_argument("configuration has the wrong dimension");
  const RatMat q = gauge_hessian(m, a);
  GradedPoly p;
  for (int j = 0; j < m.dim(); ++j) {
    Rat jj(0);
    for (int k = 0; k < m.dim(); ++k)
      jj += q.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k)) *
            phibar[static_cast<std::size_t>(k)];
    if (jj != 0) p += GradedPoly::var(m.fvar(j)).scaled(Scalar(jj));
  }
  return p;
}

Connection gauge_transform(const OrthoGauge& g, const Connection& a) {
  const FreeModel& m = a.model();
  Connection out(a);
  for (int e = 0; e < a.nedges(); ++e) {
    const auto [s, t] = m.edges()[static_cast<std::size_t>(e)];
    out.set_transport(e, g.g(s) * a.W(e) * g.g(t).transpose());
  }
  return out;
}

FormalSeries effective_action(const DeformContext& ctx, const Connection& a,
                              const std::vector<Rat>& phibar, int K, int Ks) {
  const FreeModel& m = ctx.model();
  const Caps caps = Caps::none().with(P_EPS, K).with(kSigma, Ks);
  const GradedPoly la = build_LA(m, a);
  FormalSeries arg(caps);
  const GradedPoly v = la - m.lagrangian1();
  if (!v.is_zero()) arg.add(expo_of(P_EPS, 1), v);
  const GradedPoly src = gauge_source(m, a, phibar);
  if (!src.is_zero()) arg.add(expo_of(kSigma, 1), src);
  return gamma_of(ctx, arg, la, phibar);
}

FormalSeries effective_action_along(const DeformContext& ctx,
                                    const Connection& a, const PathLeg& leg,
                                    const std::vector<Rat>& phibar, int K,
                                    int Ks) {
  check_gauge_legs({leg});
  const FreeModel& m = ctx.model();
  const Caps caps = Caps::none()
                        .with(P_EPS, K)
                        .with(kSigma, Ks)
                        .with(leg.par, leg.order);
  const GradedPoly la = build_LA(m, a);
  FormalSeries arg(caps);
  const GradedPoly v = la - m.lagrangian1();
  if (!v.is_zero()) arg.add(expo_of(P_EPS, 1), v);
  const GradedPoly src = gauge_source(m, a, phibar);
  if (!src.is_zero()) arg.add(expo_of(kSigma, 1), src);
  ExpPath gp(leg.x, leg.par, leg.order);
  return gamma_of(ctx, gp.gL(arg), la, phibar);
}

FormalSeries frak_G_of(const DeformContext& ctx,
                       const std::vector<PathLeg>& legs,
                       const FormalSeries& w) {
  check_gauge_legs(legs);
  CocycleSeries z(ctx, legs, 2);
  return z.apply(w) - w;
}

FormalSeries frak_G(const DeformContext& ctx, const std::vector<PathLeg>& legs,
                    const Connection& a, int K) {
  return frak_G_of(ctx, legs, interaction_series(ctx.model(), a, K));
}

FormalSeries g_cocycle_residual(const DeformContext& ctx, const PathLeg& g,
                                const PathLeg& h, const Connection& a, int K) {
  check_gauge_legs({g, h});
  const FormalSeries w = interaction_series(ctx.model(), a, K);
  CocycleSeries zgh(ctx, {g, h}, 2);
  CocycleSeries zg(ctx, {g}, 2);
  CocycleSeries zh(ctx, {h}, 2);
  const FormalSeries hw = zh.path_gL(w);
  return (zgh.apply(w) - w) - (zg.apply(hw) - hw) - (zh.apply(w) - w);
}

FormalSeries g_locality_AA_residual(const DeformContext& ctx,
                                    const std::vector<PathLeg>& h,
                                    const Connection& a, const Connection& w1,
                                    const Connection& w2, int K) {
  check_gauge_legs(h);
  if (!sets_disjoint(w1.support(), w2.support()))
    throw std::invalid_argument("perturbations must touch disjoint edges");
  const FreeModel& m = ctx.model();
  CocycleSeries zh(ctx, h, 2);
  auto term = [&](const Connection& c) {
    return zh.apply(interaction_series(m, c, K));
  };
  return term(a.perturbed(w1).perturbed(w2)) - term(a.perturbed(w1)) -
         term(a.perturbed(w2)) + term(a);
}

FormalSeries g_locality_gA_residual(const DeformContext& ctx, const PathLeg& g,
                                    const std::vector<PathLeg>& h,
                                    const Connection& a, const Connection& w,
                                    int K) {
  check_gauge_legs(concat({g}, h));
  if (!sets_disjoint(w.site_support(), zeta_support(ctx, g.x)))
    throw std::invalid_argument(
        "perturbation endpoints must avoid the symmetry and twist support");
  const FreeModel& m = ctx.model();
  CocycleSeries zgh(ctx, concat({g}, h), 2);
  CocycleSeries zh(ctx, h, 2);
  const FormalSeries wa = interaction_series(m, a, K);
  const FormalSeries wp = interaction_series(m, a.perturbed(w), K);
  return zgh.apply(wp) - zh.apply(wp) - zgh.apply(wa) + zh.apply(wa);
}

FormalSeries g_locality_gg_residual(const DeformContext& ctx,
                                    const PathLeg& g1, const PathLeg& g2,
                                    const std::vector<PathLeg>& h,
                                    const Connection& a, int K) {
  check_gauge_legs(concat({g1, g2}, h));
  if (!sets_disjoint(ctx.model().m_neighborhood(g2.x.support()),
                     zeta_support(ctx, g1.x)))
    throw std::invalid_argument(
        "symmetry supports must be separated by the coupling neighborhood");
  const FormalSeries w = interaction_series(ctx.model(), a, K);
  CocycleSeries z12h(ctx, concat({g1, g2}, h), 2);
  CocycleSeries z1h(ctx, concat({g1}, h), 2);
  CocycleSeries z2h(ctx, concat({g2}, h), 2);
  CocycleSeries zh(ctx, h, 2);
  return z12h.apply(w) - z1h.apply(w) - z2h.apply(w) + zh.apply(w);
}

FormalSeries gamma_shift_residual(const DeformContext& ctx,
                                  const Connection& a, const PathLeg& leg,
                                  const std::vector<Rat>& phibar, int K,
                                  int Ks) {
  return effective_action_along(ctx, a, leg, phibar, K, Ks) -
         effective_action(ctx, a, phibar, K, Ks) - frak_G(ctx, {leg}, a, K);
}

FormalSeries gauge_anomaly(const DeformContext& ctx, const LieSymmetry& x,
                           const Connection& a, int K) {
  return solve_anomaly(ctx, x, interaction_series(ctx.model(), a, K))
      .scaled(Scalar(Rat(-1)));
}

WZTerms gauge_wz_terms(const DeformContext& ctx, const LieSymmetry& x,
                       const LieSymmetry& y, const Connection& a, int K) {
  return wz_terms(ctx, x, y, interaction_series(ctx.model(), a, K));
}

}  // namespace latbv
