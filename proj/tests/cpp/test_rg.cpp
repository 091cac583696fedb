#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latbv/anomaly.hpp"
#include "latbv/rng.hpp"

using namespace latbv;

namespace {

FreeModel model_m1() {
  RatMat m(1, 1);
  m.at(0, 0) = 1;
  return FreeModel("m1", 1, 1, m);
}

FreeModel model_m2() {
  RatMat m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = -1;
  m.at(1, 0) = -1;
  m.at(1, 1) = 2;
  return FreeModel("m2", 2, 1, m);
}

FreeModel model_chain4() {
  return FreeModel::graph("chain4", 4, 1, {{0, 1}, {1, 2}, {2, 3}}, Rat(1));
}

LieSymmetry random_lie(ProbeRng& rng, const FreeModel& m) {
  LieSymmetry x(m);
  for (int s = 0; s < m.nsites(); ++s) {
    RatMat a(m.ncomp(), m.ncomp());
    for (int i = 0; i < m.ncomp(); ++i)
      for (int j = 0; j < m.ncomp(); ++j) a.at(i, j) = rng.rat(2, 2);
    x.set_a(s, a);
    std::vector<Rat> p(m.ncomp());
    for (auto& v : p) v = rng.rat(2, 2);
    x.set_p(s, p);
  }
  return x;
}

RenMap random_twist(ProbeRng& rng, const FreeModel& m) {
  std::vector<CounterTerm> ks;
  int n = rng.range(1, 2);
  for (int i = 0; i < n; ++i) {
    int site = rng.range(0, m.nsites() - 1);
    int order = rng.range(2, 3);
    std::vector<int> comps(order);
    for (auto& c : comps) c = rng.range(0, m.ncomp() - 1);
    ks.push_back(CounterTerm{site, comps, rng.scalar(2, 2, true)});
  }
  return RenMap(ks, m.ncomp());
}

std::vector<Rat> random_config(ProbeRng& rng, const FreeModel& m) {
  std::vector<Rat> phi(m.dim());
  for (auto& v : phi) v = rng.rat(3, 2);
  return phi;
}

FormalSeries eps_series(const GradedPoly& f, int K) {
  return FormalSeries::monomial(Caps::none().with(P_EPS, K), f, P_EPS);
}

// Independent oracle for the anomaly: the dressed Ward identity collapses,
// via the off-shell field equation, to the closed form
//   Δ_X(V) = i·Σ_x tr a(x) + (1 − Z⁻¹)∂_X L + ∂_X V − Z⁻¹ ∂_X (Z V).
FormalSeries closed_form_anomaly(const DeformContext& ctx,
                                 const LieSymmetry& x, const FormalSeries& v) {
  const RenMap& zk = ctx.twist();
  RenMap zi = zk.inverse();
  GradedPoly xl = x.partial_L();
  FormalSeries out = x.partial(v) - v.map_coeffs([&](const GradedPoly& p) {
    return zi.apply(x.partial(zk.apply(p)));
  });
  out.add(Expo{}, xl - zi.apply(xl));
  out.add(Expo{}, GradedPoly::constant(Scalar(Rat(0), x.trace())));
  return out;
}

std::set<int> series_support(const FormalSeries& s) {
  std::set<int> sup;
  for (const auto& [e, c] : s.coeffs())
    for (int site : c.support()) sup.insert(site);
  return sup;
}

bool subset(const std::set<int>& a, const std::set<int>& b) {
  for (int x : a)
    if (!b.count(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("anomaly of the Ward identity: constants and sign convention") {
  FreeModel m1 = model_m1();
  GradedPoly p0 = GradedPoly::var(m1.fvar(0));
  DeformContext ctx(m1);

  LieSymmetry x(m1);
  RatMat a(1, 1);
  a.at(0, 0) = Rat(5, 7);
  x.set_a(0, a);

  // Untwisted: ΔX(F) = i·a, independent of F and of φ.
  for (const GradedPoly& f : {p0 * p0 * p0, p0 * p0, p0 * p0 * p0 * p0}) {
    FormalSeries d = solve_anomaly(ctx, x, f, 3);
    FormalSeries expect(d.caps());
    expect.add(Expo{}, GradedPoly::constant(Scalar(Rat(0), Rat(5, 7))));
    CHECK(d == expect);
  }

  // Pure shifts have vanishing anomaly in both contexts.
  LieSymmetry sh(m1);
  sh.set_p(0, {Rat(3)});
  CHECK(solve_anomaly(ctx, sh, p0 * p0 * p0, 3).is_zero());
  RenMap z({CounterTerm{0, {0, 0}, Scalar(Rat(1, 2))}}, 1);
  DeformContext tw(m1, z);
  CHECK(solve_anomaly(tw, sh, p0 * p0 * p0, 3).is_zero());
}

TEST_CASE("twisted anomaly: frozen regression and closed-form oracle") {
  FreeModel m1 = model_m1();
  GradedPoly p0 = GradedPoly::var(m1.fvar(0));
  LieSymmetry x(m1);
  RatMat a(1, 1);
  a.at(0, 0) = 1;
  x.set_a(0, a);

  // z = (1/3)∂², X = (1,0), V = εφ₀³:  Δ = (i + 2/3) + 4ε·φ₀.
  RenMap z({CounterTerm{0, {0, 0}, Scalar(Rat(1, 3))}}, 1);
  DeformContext tw(m1, z);
  FormalSeries d = solve_anomaly(tw, x, p0 * p0 * p0, 2);
  FormalSeries expect(d.caps());
  expect.add(Expo{}, GradedPoly::constant(Scalar(Rat(2, 3), Rat(1))));
  expect.add(expo_of(P_EPS, 1), p0.scaled(Scalar(4)));
  CHECK(d == expect);

  // Solver agrees with the closed form on random twisted instances.
  FreeModel m2 = model_m2();
  ProbeRng rng(ProbeRng::mix(7, "rg.closed"));
  for (int it = 0; it < 20; ++it) {
    DeformContext ctx(m2, random_twist(rng, m2));
    LieSymmetry y = random_lie(rng, m2);
    FormalSeries v = eps_series(rng.field_poly(m2, 3, 3), 3);
    CHECK(solve_anomaly(ctx, y, v) == closed_form_anomaly(ctx, y, v));
  }
}

TEST_CASE("anomaly is linear in the symmetry and shift-invariant in F") {
  FreeModel m2 = model_m2();
  ProbeRng rng(ProbeRng::mix(7, "rg.linear"));
  DeformContext ctx(m2, random_twist(rng, m2));

  for (int it = 0; it < 8; ++it) {
    LieSymmetry x = random_lie(rng, m2);
    LieSymmetry y = random_lie(rng, m2);
    FormalSeries v = eps_series(rng.field_poly(m2, 3, 3), 2);

    CHECK(solve_anomaly(ctx, x + y, v) ==
          solve_anomaly(ctx, x, v) + solve_anomaly(ctx, y, v));
    CHECK(solve_anomaly(ctx, x.scaled(Rat(-3, 2)), v) ==
          solve_anomaly(ctx, x, v).scaled(Scalar(Rat(-3, 2))));

    // ΔX(F + ⟨Φ,ψ⟩ + c) = ΔX(F).
    GradedPoly smeared = GradedPoly::constant(Scalar(rng.rat()));
    for (int j = 0; j < m2.dim(); ++j)
      smeared += GradedPoly::var(m2.fvar(j)).scaled(Scalar(rng.rat()));
    FormalSeries v2 = v + eps_series(smeared, 2);
    CHECK(solve_anomaly(ctx, x, v2) == solve_anomaly(ctx, x, v));
  }
}

TEST_CASE("on-shell Ward identity residual vanishes") {
  FreeModel m2 = model_m2();
  ProbeRng rng(ProbeRng::mix(7, "rg.onshell"));
  DeformContext plain(m2);

  for (int it = 0; it < 8; ++it) {
    LieSymmetry x = random_lie(rng, m2);
    FormalSeries v = eps_series(rng.field_poly(m2, 3, 3), 3);
    std::vector<Rat> phibar = random_config(rng, m2);
    CHECK(amwi_residual(plain, x, v, phibar).is_zero());

    DeformContext tw(m2, random_twist(rng, m2));
    CHECK(amwi_residual(tw, x, v, phibar).is_zero());
    CHECK(amwi_residual(tw, LieSymmetry(m2), v, phibar).is_zero());
  }
}

TEST_CASE("common locality of the anomaly") {
  FreeModel ch = model_chain4();
  GradedPoly p1 = GradedPoly::var(ch.fvar(1));
  GradedPoly p2 = GradedPoly::var(ch.fvar(2));
  GradedPoly p3 = GradedPoly::var(ch.fvar(3));
  LieSymmetry x(ch);
  RatMat a(1, 1);
  a.at(0, 0) = Rat(2);
  x.set_a(0, a);
  x.set_p(0, {Rat(1)});

  for (int twist_site : {0, 3}) {
    RenMap z({CounterTerm{twist_site, {0, 0}, Scalar(Rat(1, 2))}}, 1);
    DeformContext ctx(ch, z);
    // supp F = {3}, supp X = {0}: the F-dependent part vanishes identically.
    FormalSeries v = eps_series(p3 * p3 * p3 * p3, 3);
    FormalSeries d = solve_anomaly(ctx, x, v);
    CHECK(d == solve_anomaly(ctx, x, FormalSeries(v.caps())));
  }

  // Single-site interaction densities (the lattice form of a local
  // functional): supp(ΔY(V) − ΔY(0)) ⊆ supp F ∩ supp Y per coefficient.
  LieSymmetry y(ch);
  y.set_a(0, a);
  y.set_a(1, a);
  RenMap z1({CounterTerm{1, {0, 0}, Scalar(Rat(1, 3))}}, 1);
  DeformContext ctx1(ch, z1);
  FormalSeries zero3(Caps::none().with(P_EPS, 3));
  FormalSeries d0 = solve_anomaly(ctx1, y, zero3);
  FormalSeries d = solve_anomaly(ctx1, y, eps_series(p1 * p1 * p1 + p2 * p2, 3));
  CHECK(subset(series_support(d - d0), {1}));  // supp F ∩ supp Y = {1}

  // A product density spanning sites spreads only within supp F: the
  // counterterm contraction at site 1 leaves the site-3 factor intact.
  FormalSeries dp = solve_anomaly(ctx1, y, eps_series(p1 * p1 * p3 * p3, 3));
  FormalSeries dep = dp - d0;
  CHECK(!dep.is_zero());
  CHECK(subset(series_support(dep), {1, 3}));
}

TEST_CASE("extended Wess-Zumino consistency condition") {
  // Needs n ≥ 2 components: on a scalar model the matrix parts commute, so
  // [X,Y] is a pure shift and both sides collapse to 0.
  FreeModel m = FreeModel::graph("m22", 2, 2, {{0, 1}}, Rat(1));
  ProbeRng rng(ProbeRng::mix(7, "rg.wz"));

  // Untwisted: every right-hand term vanishes individually and the
  // left-hand side is i·tr[a,b] = 0.
  DeformContext plain(m);
  for (int it = 0; it < 3; ++it) {
    LieSymmetry x = random_lie(rng, m);
    LieSymmetry y = random_lie(rng, m);
    FormalSeries v = eps_series(rng.field_poly(m, 3, 3), 2);
    WZTerms t = wz_terms(plain, x, y, v);
    CHECK(t.lhs.is_zero());
    CHECK(t.dYp_dX.is_zero());
    CHECK(t.dXp_dY.is_zero());
    CHECK(t.dX_of_dY.is_zero());
    CHECK(t.dY_of_dX.is_zero());
    CHECK(t.dYp_XL.is_zero());
    CHECK(t.dXp_YL.is_zero());
  }

  // Twisted: both sides are nonzero yet agree exactly. Quartic interactions
  // keep the second-order pairings ⟨Δ'(V),·⟩ alive under order-2 kernels.
  bool saw_nonzero = false;
  for (int it = 0; it < 6; ++it) {
    DeformContext tw(m, random_twist(rng, m));
    LieSymmetry x = random_lie(rng, m);
    LieSymmetry y = random_lie(rng, m);
    FormalSeries v = eps_series(rng.field_poly(m, 4, 3), 3);
    WZTerms t = wz_terms(tw, x, y, v);
    CHECK(t.residual().is_zero());
    if (!t.rhs().is_zero()) saw_nonzero = true;

    // X = Y degenerates to 0 = 0.
    WZTerms tx = wz_terms(tw, x, x, v);
    CHECK(tx.lhs.is_zero());
    CHECK(tx.residual().is_zero());
  }
  CHECK(saw_nonzero);
}

TEST_CASE("Lie-cocycle form agrees with the extended condition term by term") {
  FreeModel m2 = model_m2();
  ProbeRng rng(ProbeRng::mix(7, "rg.liecc"));

  GradedPoly p0 = GradedPoly::var(m2.fvar(0));
  bool saw_nonzero = false;
  for (int it = 0; it < 6; ++it) {
    // An order-2 kernel over a quartic keeps both pairings ⟨Δ'(V),Δ(V)⟩
    // nonzero (each pairing consumes two fields at the kernel site).
    RenMap z({CounterTerm{0, {0, 0}, rng.scalar(2, 2, true)}}, 1);
    DeformContext tw(m2, z);
    LieSymmetry x = random_lie(rng, m2);
    LieSymmetry y = random_lie(rng, m2);
    FormalSeries v = eps_series(rng.field_poly(m2, 4, 3) + p0 * p0 * p0 * p0, 3);

    FunctionalMap mx = anomaly_map(tw, x);
    FunctionalMap my = anomaly_map(tw, y);
    WZTerms t = wz_terms(tw, x, y, v);

    // [ΔX,ΔY](V) = ⟨ΔX'(V),ΔY(V)⟩ − ⟨ΔY'(V),ΔX(V)⟩.
    FormalSeries br = lieR_bracket(mx, my, v);
    CHECK(br == t.dXp_dY - t.dYp_dX);
    // For single-site constant-coefficient counterterm kernels the two
    // pairings coincide (the induced operators commute), so the bracket of
    // two anomaly maps vanishes even where each pairing is nonzero.
    CHECK(br.is_zero());
    // (∂_X ΔY)(V) = ∂_X(ΔY(V)) − ⟨ΔY'(V), ∂_X(V+L)⟩.
    FormalSeries dxy = dX_on_map(x, my, v);
    FormalSeries dyx = dX_on_map(y, mx, v);
    CHECK(dxy == t.dX_of_dY - t.dYp_XL);
    CHECK(dyx == t.dY_of_dX - t.dXp_YL);
    // Δ[X,Y](V) = −[ΔX,ΔY](V) + (∂_X ΔY)(V) − (∂_Y ΔX)(V).
    CHECK(t.lhs == -br + dxy - dyx);
    if (!t.dYp_dX.is_zero() && !dxy.is_zero()) saw_nonzero = true;
  }
  CHECK(saw_nonzero);
}

TEST_CASE("bracket and derivative on renormalization maps") {
  FreeModel m2 = model_m2();
  ProbeRng rng(ProbeRng::mix(7, "rg.maps"));
  DeformContext tw(m2, random_twist(rng, m2));
  LieSymmetry x = random_lie(rng, m2);
  LieSymmetry y = random_lie(rng, m2);
  FormalSeries v = eps_series(rng.field_poly(m2, 3, 3), 2);

  FunctionalMap mx = anomaly_map(tw, x);
  FunctionalMap my = anomaly_map(tw, y);

  CHECK(lieR_bracket(mx, mx, v).is_zero());
  CHECK(lieR_bracket(mx, my, v) == -lieR_bracket(my, mx, v));

  // Counterterm kernels commute under the bracket.
  FunctionalMap k1 = kernel_lie_map(random_twist(rng, m2));
  FunctionalMap k2 = kernel_lie_map(random_twist(rng, m2));
  CHECK(lieR_bracket(k1, k2, v).is_zero());

  // A V-independent map with field content gives a nonzero bracket against
  // an anomaly map: [c,ΔX](V) = −⟨ΔX'(V), c⟩.
  GradedPoly p0 = GradedPoly::var(m2.fvar(0));
  RenMap z2({CounterTerm{0, {0, 0}, Scalar(Rat(1, 2))}}, 1);
  DeformContext tw2(m2, z2);
  FunctionalMap mx2 = anomaly_map(tw2, x);
  FormalSeries vq = eps_series(p0 * p0 * p0 * p0, 2);
  FunctionalMap cmap = constant_map(p0 * p0);
  FormalSeries cbr = lieR_bracket(cmap, mx2, vq);
  CHECK(!cbr.is_zero());
  CHECK(cbr == -anomaly_prime(tw2, x, vq, FormalSeries::from_poly(vq.caps(),
                                                                  p0 * p0)));

  // Degenerate derivative inputs.
  CHECK(dX_on_map(LieSymmetry(m2), my, v).is_zero());
  CHECK(dX_on_map(x, constant_map(GradedPoly::constant(Scalar(3))), v)
            .is_zero());
}

TEST_CASE("derivative of a map matches the conjugated one-parameter family") {
  // (∂_X z)(V) = d/dλ|₀ g^λ_*( z( (g^λ_L)⁻¹ V ) ) with g^λ = exp(λX).
  FreeModel m2 = model_m2();
  ProbeRng rng(ProbeRng::mix(7, "rg.dgK"));

  for (int it = 0; it < 5; ++it) {
    DeformContext tw(m2, random_twist(rng, m2));
    LieSymmetry x = random_lie(rng, m2);
    LieSymmetry y = random_lie(rng, m2);
    FormalSeries v = eps_series(rng.field_poly(m2, 3, 3), 2);
    FunctionalMap my = anomaly_map(tw, y);

    ExpPath path(x, P_LAM, 1);
    FormalSeries u = path.inverse().gL(v);      // (g^λ_L)⁻¹ V
    FormalSeries w = path.pullback(my.value(u));  // g^λ_* ΔY(…)
    CHECK(w.slice(P_LAM, 1) == dX_on_map(x, my, v));
    CHECK(w.slice(P_LAM, 0) == my.value(v));
  }
}

TEST_CASE("derivation relation on evaluation functionals") {
  // q([X,Y]) = [q(X),q(Y)] + [r(X),q(Y)] − [r(Y),q(X)] applied to the
  // evaluation functional K(F) = F[φ̄]:
  //   Δ[X,Y](V)[φ̄] = (⟨ΔY',ΔX⟩ − ⟨ΔX',ΔY⟩)[φ̄]
  //                + (∂_X(ΔY(V)) − ⟨ΔY',∂_X(V+L)⟩)[φ̄]
  //                − (∂_Y(ΔX(V)) − ⟨ΔX',∂_Y(V+L)⟩)[φ̄].
  FreeModel m2 = model_m2();
  ProbeRng rng(ProbeRng::mix(7, "rg.relq"));

  for (int it = 0; it < 5; ++it) {
    DeformContext tw(m2, random_twist(rng, m2));
    LieSymmetry x = random_lie(rng, m2);
    LieSymmetry y = random_lie(rng, m2);
    FormalSeries v = eps_series(rng.field_poly(m2, 3, 3), 2);
    std::vector<Rat> phibar = random_config(rng, m2);
    auto K = [&](const FormalSeries& s) {
      return eval_at_config(s, m2, phibar);
    };

    WZTerms t = wz_terms(tw, x, y, v);
    FormalSeries lhs = K(t.lhs);
    FormalSeries qq = K(t.dYp_dX) - K(t.dXp_dY);
    FormalSeries rqXY = K(t.dX_of_dY) - K(t.dYp_XL);
    FormalSeries rqYX = K(t.dY_of_dX) - K(t.dXp_YL);
    CHECK(lhs == qq + rqXY - rqYX);
  }
}

TEST_CASE("counterterm kernels: structural properties") {
  FreeModel ch = model_chain4();
  ProbeRng rng(ProbeRng::mix(7, "rg.kernel"));
  RenMap z({CounterTerm{1, {0, 0}, Scalar(Rat(1, 2))},
            CounterTerm{1, {0, 0, 0}, Scalar(Rat(-1, 3))}},
           1);

  for (int it = 0; it < 10; ++it) {
    GradedPoly f = rng.field_poly(ch, 4, 4);

    // Additivity (z and Z = exp z are linear).
    GradedPoly g = rng.field_poly(ch, 4, 4);
    CHECK(z.apply(f + g) == z.apply(f) + z.apply(g));

    // Field independence: Z commutes with every field derivative.
    for (int j = 0; j < ch.dim(); ++j)
      CHECK(z.apply(f).dfield(ch.fvar(j)) == z.apply(f.dfield(ch.fvar(j))));

    // z removes fields at its kernel sites; the rest of each monomial
    // survives in place, so supp z(F) ⊆ supp F.
    CHECK(subset(z.z(f).support(), f.support()));
  }

  // F with no fields on supp z is annihilated by z (and fixed by Z).
  GradedPoly away = GradedPoly::var(ch.fvar(0)) * GradedPoly::var(ch.fvar(0)) *
                    GradedPoly::var(ch.fvar(3));
  CHECK(z.z(away).is_zero());
  CHECK(z.apply(away) == away);
}
