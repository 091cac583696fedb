#include "latbv/zeta.hpp"

#include <stdexcept>

namespace latbv {

namespace {

// Tags the linear slot of the affine map during integration: flowing
// probe·m along the path yields ζ⁻¹(0) at probe⁰ and the linear image of m
// at probe¹, exactly, because the flow is affine and the probe is capped
// at one.
constexpr Param kProbe = P_T1;

GradedPoly mono_poly(const Mono& m) {
  GradedPoly p;
  p.add_term(m, Scalar(1));
  return p;
}

void gen_basis(const FreeModel& m, int first, int deg, Mono* cur,
               std::vector<Mono>* out) {
  out->push_back(*cur);
  if (deg == 0) return;
  for (int j = first; j < m.dim(); ++j) {
    cur->ev.push_back(m.fvar(j));
    gen_basis(m, j, deg - 1, cur, out);
    cur->ev.pop_back();
  }
}

// ⟨Φ,q⟩ with q ≐ M·phibar.
GradedPoly phi_q(const FreeModel& m, const std::vector<Rat>& phibar) {
  GradedPoly p;
  for (int j = 0; j < m.dim(); ++j) {
    Scalar qj = m.mphi(j).eval_fields(
        [&](VarId w) { return Scalar(phibar[m.flat(w.site(), w.comp())]); });
    if (!qj.is_zero()) p += GradedPoly::var(m.fvar(j)).scaled(qj);
  }
  return p;
}

// The anomaly is affine with a parameter-independent linear part, so it
// acts on a series coefficient by coefficient:
//   ΔX(v) = ΔX(0) + Σ_e ΔX′(v_e)·e.
// Evaluating it this way keeps every solver call on a two-slot series
// instead of re-exponentiating the full multi-parameter argument.
class AffineAnomaly {
 public:
  AffineAnomaly(const DeformContext& ctx, const LieSymmetry& x)
      : ctx_(&ctx),
        x_(&x),
        xsupp_(x.support()),
        d0_(solve_anomaly(ctx, x, FormalSeries(Caps::none()))
                .coeff1(P_EPS, 0)) {}

  FormalSeries operator()(const FormalSeries& v) const {
    const Caps ct = Caps::none().with(P_TAU, 1);
    FormalSeries out(v.caps());
    for (const auto& [e, p] : v.coeffs()) {
      // ΔX′(p) = 0 whenever supp p ∩ supp X = ∅: both ∂_X p and
      // ∂_X(Zp) vanish because the twist kernels never enlarge support.
      if (disjoint(p.support(), xsupp_)) continue;
      GradedPoly d =
          solve_anomaly(*ctx_, *x_, FormalSeries::monomial(ct, p, P_TAU))
              .coeff1(P_TAU, 1);
      if (!d.is_zero()) out.add(e, d);
    }
    out.add(Expo{}, d0_);
    return out;
  }

 private:
  static bool disjoint(const std::set<int>& a, const std::set<int>& b) {
    for (int s : a)
      if (b.count(s)) return false;
    return true;
  }

  const DeformContext* ctx_;
  const LieSymmetry* x_;
  std::set<int> xsupp_;
  GradedPoly d0_;
};

// Flows u along one leg of the path, with the already-integrated right
// factor riding along as the frame:
//   du/dλ = −(frame_*)⁻¹ (g^λ_*)⁻¹ ΔX( g^λ_L( frame_L( u ) ) − δ⟨Φ,q⟩ ),
// one exact Picard step per order in the leg parameter. Step k determines
// the coefficient of λ^{k+1}, which only needs the path through order k, so
// the leg runs on order-k truncations; the frame-transformed argument is
// maintained incrementally via frame_L(u + inc) = frame_L(u) + frame_*(inc).
void flow_leg(const DeformContext& ctx, const PathLeg& leg,
              const std::vector<PathLeg>& frame,
              const std::optional<std::vector<Rat>>& source, FormalSeries* u) {
  const Caps c = u->caps();
  std::vector<ExpPath> fp, fpi;
  for (const PathLeg& s : frame) {
    fp.emplace_back(s.x, s.par, s.order);
    fpi.push_back(fp.back().inverse());
  }
  FormalSeries fu = *u;
  for (auto it = fp.rbegin(); it != fp.rend(); ++it) fu = it->gL(fu);
  FormalSeries imgs(c), fimg(c);
  if (source) {
    imgs = FormalSeries::from_poly(c, phi_q(ctx.model(), *source));
    fimg = imgs;
    for (auto it = fp.rbegin(); it != fp.rend(); ++it)
      fimg = it->pullback(fimg);
  }
  AffineAnomaly ax(ctx, leg.x);
  const GradedPoly one = GradedPoly::constant(Scalar(1));
  for (int k = 0; k < leg.order; ++k) {
    ExpPath gpk(leg.x, leg.par, k);
    FormalSeries v = gpk.gL(fu.truncated(leg.par, k));
    if (source) v -= gpk.pullback(fimg) - imgs;
    FormalSeries w =
        gpk.inverse().pullback(ax(v)).slice(leg.par, k).with_caps(c);
    for (const ExpPath& s : fpi) w = s.pullback(w);
    FormalSeries inc =
        w.scaled(Scalar(Rat(-1, k + 1)))
            .mul(FormalSeries::monomial(c, one, leg.par, k + 1));
    *u += inc;
    if (k + 1 < leg.order) {
      for (auto it = fp.rbegin(); it != fp.rend(); ++it)
        inc = it->pullback(inc);
      fu += inc;
    }
  }
}

}  // namespace

CocycleSeries::CocycleSeries(const DeformContext& ctx,
                             std::vector<PathLeg> legs, int degree_cap,
                             const std::optional<std::vector<Rat>>& source)
    : model_(ctx.model()), legs_(std::move(legs)), deg_(degree_cap) {
  if (deg_ < 0)
    throw std::invalid_argument("CocycleSeries: negative degree cap");
  for (const PathLeg& l : legs_) {
    if (l.order < 1)
      throw std::invalid_argument("CocycleSeries: leg order must be >= 1");
    if (l.par == kProbe)
      throw std::invalid_argument(
          "CocycleSeries: P_T1 is reserved for the integration probe");
    if (l.par == P_TAU)
      throw std::invalid_argument(
          "CocycleSeries: P_TAU is reserved for anomaly derivatives");
    if (caps_.cap[l.par] != 0)
      throw std::invalid_argument(
          "CocycleSeries: path parameters must be distinct");
    caps_.cap[l.par] = l.order;
  }
  if (source && static_cast<int>(source->size()) != model_.dim())
    throw std::invalid_argument("CocycleSeries: source has wrong dimension");

  Mono scratch;
  gen_basis(model_, 0, deg_, &scratch, &basis_);
  for (int i = 0; i < static_cast<int>(basis_.size()); ++i)
    index_[basis_[i]] = i;

  Caps ci = caps_.with(kProbe, 1);
  std::vector<FormalSeries> u(basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j)
    u[j] = FormalSeries::monomial(ci, mono_poly(basis_[j]), kProbe);
  for (int i = static_cast<int>(legs_.size()) - 1; i >= 0; --i) {
    std::vector<PathLeg> frame(legs_.begin() + i + 1, legs_.end());
    for (auto& uj : u) flow_leg(ctx, legs_[i], frame, source, &uj);
  }
  kcol_ = u[0].slice(kProbe, 0);
  col_.resize(basis_.size());
  for (std::size_t j = 0; j < basis_.size(); ++j)
    col_[j] = u[j].slice(kProbe, 1);
  // Surface a too-small degree cap at construction: the stored map must
  // stay inside the basis span to be applied at all.
  expand(kcol_, caps_);
  for (const FormalSeries& cj : col_) expand(cj, caps_);
}

std::vector<FormalSeries> CocycleSeries::expand(const FormalSeries& f,
                                                const Caps& c) const {
  std::vector<FormalSeries> out(basis_.size(), FormalSeries(c));
  for (const auto& [e, poly] : f.coeffs()) {
    for (const auto& [mono, s] : poly.terms()) {
      if (!mono.od.empty())
        throw std::invalid_argument(
            "CocycleSeries: arguments must be field functionals");
      auto it = index_.find(mono);
      if (it == index_.end())
        throw std::runtime_error(
            "CocycleSeries: functional degree exceeds the degree cap");
      out[it->second].add(e, GradedPoly::constant(s));
    }
  }
  return out;
}

FormalSeries CocycleSeries::apply_inverse(const FormalSeries& f) const {
  Caps c = Caps::join(f.caps(), caps_);
  std::vector<FormalSeries> coef = expand(f, c);
  FormalSeries out = kcol_.with_caps(c);
  for (std::size_t j = 0; j < basis_.size(); ++j)
    if (!coef[j].is_zero()) out += col_[j].with_caps(c).mul(coef[j]);
  return out;
}

FormalSeries CocycleSeries::apply(const FormalSeries& f) const {
  Caps c = Caps::join(f.caps(), caps_);
  const int n = static_cast<int>(basis_.size());
  std::vector<FormalSeries> rhs = expand(f, c);
  {
    std::vector<FormalSeries> kv = expand(kcol_, c);
    for (int j = 0; j < n; ++j) rhs[j] -= kv[j];
  }
  // Solve (id + N)·v = rhs with N ≐ Z − id, which carries at least one
  // power of a path parameter; the Neumann recursion v ← rhs − N·v is
  // exact once iterated to the total path order.
  std::vector<std::vector<FormalSeries>> ncol(n);
  for (int j = 0; j < n; ++j) {
    ncol[j] = expand(col_[j], c);
    ncol[j][j] -= FormalSeries::one(c);
  }
  int steps = 0;
  for (const PathLeg& l : legs_) steps += l.order;
  std::vector<FormalSeries> v = rhs;
  for (int it = 0; it < steps; ++it) {
    std::vector<FormalSeries> nv(n, FormalSeries(c));
    for (int j = 0; j < n; ++j) {
      if (v[j].is_zero()) continue;
      for (int i = 0; i < n; ++i)
        if (!ncol[j][i].is_zero()) nv[i] += ncol[j][i].mul(v[j]);
    }
    for (int i = 0; i < n; ++i) v[i] = rhs[i] - nv[i];
  }
  FormalSeries out(c);
  for (int j = 0; j < n; ++j)
    if (!v[j].is_zero())
      out += v[j].mul(FormalSeries::from_poly(c, mono_poly(basis_[j])));
  return out;
}

FormalSeries CocycleSeries::path_gL(const FormalSeries& f) const {
  FormalSeries r = f.with_caps(Caps::join(f.caps(), caps_));
  for (auto it = legs_.rbegin(); it != legs_.rend(); ++it)
    r = ExpPath(it->x, it->par, it->order).gL(r);
  return r;
}

FormalSeries CocycleSeries::path_pullback(const FormalSeries& f) const {
  FormalSeries r = f.with_caps(Caps::join(f.caps(), caps_));
  for (auto it = legs_.rbegin(); it != legs_.rend(); ++it)
    r = ExpPath(it->x, it->par, it->order).pullback(r);
  return r;
}

FormalSeries CocycleSeries::path_delta_phiq(
    const std::vector<Rat>& phibar) const {
  FormalSeries img = FormalSeries::from_poly(caps_, phi_q(model_, phibar));
  return path_pullback(img) - img;
}

CocycleSeries integrate_zeta(const DeformContext& ctx, const LieSymmetry& x,
                             Param par, int order, int degree_cap,
                             const std::optional<std::vector<Rat>>& source) {
  return CocycleSeries(ctx, {PathLeg{x, par, order}}, degree_cap, source);
}

CocycleSeries integrate_zeta(const DeformContext& ctx,
                             std::vector<PathLeg> legs, int degree_cap,
                             const std::optional<std::vector<Rat>>& source) {
  return CocycleSeries(ctx, std::move(legs), degree_cap, source);
}

FormalSeries conjugate_zeta(const CocycleSeries& zg, const GroupElement& h,
                            const FormalSeries& f) {
  return h.inverse().gL(zg.apply(h.gL(f)));
}

FormalSeries conjugate_zeta(const CocycleSeries& zg, const ExpPath& h,
                            const FormalSeries& f) {
  return h.inverse().gL(zg.apply(h.gL(f)));
}

FormalSeries uamwi_residual(const DeformContext& ctx,
                            const CocycleSeries& zeta, const FormalSeries& f,
                            const std::vector<Rat>& phibar) {
  const FreeModel& m = ctx.model();
  FormalSeries lhs = ctx.TS(zeta.apply(f));
  FormalSeries rhs = ctx.TS(zeta.path_gL(f) - zeta.path_delta_phiq(phibar));
  return eval_at_config(lhs, m, phibar) - eval_at_config(rhs, m, phibar);
}

FormalSeries cocycle_residual(const DeformContext& ctx, const PathLeg& g,
                              const PathLeg& h, const FormalSeries& f,
                              int degree_cap) {
  if (g.par == h.par)
    throw std::invalid_argument(
        "cocycle_residual: the paths need distinct parameters");
  CocycleSeries zg(ctx, {g}, degree_cap);
  CocycleSeries zh(ctx, {h}, degree_cap);
  CocycleSeries zgh(ctx, {g, h}, degree_cap);
  ExpPath hp(h.x, h.par, h.order);
  FormalSeries rhs = zh.apply(hp.inverse().gL(zg.apply(hp.gL(f))));
  return zgh.apply(f) - rhs;
}

}  // namespace latbv
