#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "latbv/group.hpp"
#include "latbv/model.hpp"
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

// Two sites, two components per site, coupled through one edge.
FreeModel model_m22() {
  return FreeModel::graph("m22", 2, 2, {{0, 1}}, Rat(1));
}

RatMat random_matrix(ProbeRng& rng, int n) {
  RatMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rng.rat(2, 2);
  return m;
}

RatMat random_invertible(ProbeRng& rng, int n) {
  for (;;) {
    RatMat m = random_matrix(rng, n);
    try {
      (void)m.inverse();
      return m;
    } catch (const std::domain_error&) {
    }
  }
}

GroupElement random_group_element(ProbeRng& rng, const FreeModel& m,
                                  bool with_perm = true) {
  GroupElement g(m);
  if (with_perm && m.nsites() > 1 && rng.chance(1, 2)) {
    std::vector<int> rho(m.nsites());
    for (int i = 0; i < m.nsites(); ++i) rho[i] = i;
    for (int i = m.nsites() - 1; i > 0; --i)
      std::swap(rho[i], rho[rng.range(0, i)]);
    g.set_perm(rho);
  }
  for (int x = 0; x < m.nsites(); ++x) {
    g.set_matrix(x, random_invertible(rng, m.ncomp()));
    std::vector<Rat> psi(m.ncomp());
    for (auto& v : psi) v = rng.rat(2, 2);
    g.set_shift(x, psi);
  }
  return g;
}

LieSymmetry random_lie(ProbeRng& rng, const FreeModel& m) {
  LieSymmetry x(m);
  for (int s = 0; s < m.nsites(); ++s) {
    x.set_a(s, random_matrix(rng, m.ncomp()));
    std::vector<Rat> p(m.ncomp());
    for (auto& v : p) v = rng.rat(2, 2);
    x.set_p(s, p);
  }
  return x;
}

std::vector<Rat> random_config(ProbeRng& rng, const FreeModel& m) {
  std::vector<Rat> phi(m.dim());
  for (auto& v : phi) v = rng.rat(3, 2);
  return phi;
}

Scalar eval_at(const GradedPoly& f, const FreeModel& m,
               const std::vector<Rat>& phi) {
  return f.eval_fields([&](VarId v) {
    return Scalar(phi[m.flat(v.site(), v.comp())]);
  });
}

bool subset(const std::set<int>& a, const std::set<int>& b) {
  for (int x : a)
    if (!b.count(x)) return false;
  return true;
}

}  // namespace

TEST_CASE("configuration action: examples") {
  FreeModel m1 = model_m1();
  GroupElement e(m1);
  CHECK(e.is_identity());
  CHECK(e.act_config({Rat(5, 3)}) == std::vector<Rat>{Rat(5, 3)});

  GroupElement g(m1);
  RatMat two(1, 1);
  two.at(0, 0) = 2;
  g.set_matrix(0, two);
  g.set_shift(0, {Rat(3)});
  CHECK(g.act_config({Rat(7)}) == std::vector<Rat>{Rat(17)});

  FreeModel m2 = model_m2();
  GroupElement swap(m2);
  swap.set_perm({1, 0});
  CHECK(swap.act_config({Rat(4), Rat(9)}) == std::vector<Rat>({Rat(9), Rat(4)}));
}

TEST_CASE("pullback: substitution law and representation property") {
  FreeModel m1 = model_m1();
  GradedPoly p0 = GradedPoly::var(m1.fvar(0));
  GroupElement g(m1);
  RatMat two(1, 1);
  two.at(0, 0) = 2;
  g.set_matrix(0, two);
  CHECK(g.pullback(p0 * p0) == (p0 * p0).scaled(Scalar(4)));
  CHECK(GroupElement(m1).pullback(p0 * p0) == p0 * p0);

  FreeModel m = model_m22();
  ProbeRng rng(ProbeRng::mix(7, "sym.pullback"));
  for (int it = 0; it < 15; ++it) {
    GroupElement a = random_group_element(rng, m);
    GroupElement b = random_group_element(rng, m);
    GradedPoly f = rng.field_poly(m, 3, 4);

    // (gh)_* F = g_*(h_* F).
    CHECK(a.times(b).pullback(f) == a.pullback(b.pullback(f)));

    // g_*F[φ] = F[g(φ)] on explicit configurations.
    std::vector<Rat> phi = random_config(rng, m);
    CHECK(eval_at(a.pullback(f), m, phi) == eval_at(f, m, a.act_config(phi)));

    // supp(g_*F − F) ⊆ supp F ∪ supp g.
    std::set<int> bound = f.support();
    for (int x : a.support()) bound.insert(x);
    CHECK(subset((a.pullback(f) - f).support(), bound));
  }

  GradedPoly with_af = GradedPoly::var(m.avar(0));
  CHECK_THROWS_AS(GroupElement(m).inverse().pullback(with_af), std::logic_error);
}

TEST_CASE("group laws") {
  FreeModel m = model_m22();
  ProbeRng rng(ProbeRng::mix(7, "sym.laws"));
  GroupElement e(m);

  for (int it = 0; it < 12; ++it) {
    GroupElement a = random_group_element(rng, m);
    GroupElement b = random_group_element(rng, m);
    GroupElement c = random_group_element(rng, m);
    std::vector<Rat> phi = random_config(rng, m);

    CHECK(a.times(b).times(c).act_config(phi) ==
          a.times(b.times(c)).act_config(phi));
    CHECK(a.times(a.inverse()).is_identity());
    CHECK(a.inverse().times(a).is_identity());
    CHECK(a.times(e).act_config(phi) == a.act_config(phi));
    CHECK(e.times(a).act_config(phi) == a.act_config(phi));
    // (g·h)(φ) = h(g(φ)).
    CHECK(a.times(b).act_config(phi) == b.act_config(a.act_config(phi)));
    CHECK(a.inverse().act_config(a.act_config(phi)) == phi);
  }
}

TEST_CASE("Lagrangian-twisted action") {
  FreeModel m1 = model_m1();
  GradedPoly p0 = GradedPoly::var(m1.fvar(0));
  GroupElement e(m1);
  CHECK(e.delta_L().is_zero());
  CHECK(e.gL(p0 * p0) == p0 * p0);

  GroupElement g(m1);
  RatMat two(1, 1);
  two.at(0, 0) = 2;
  g.set_matrix(0, two);
  CHECK(g.delta_L() == (p0 * p0).scaled(Scalar(Rat(3, 2))));

  // (gh)_L = g_L ∘ h_L on random inputs.
  FreeModel m = model_m22();
  ProbeRng rng(ProbeRng::mix(7, "sym.gL"));
  for (int it = 0; it < 12; ++it) {
    GroupElement a = random_group_element(rng, m);
    GroupElement b = random_group_element(rng, m);
    GradedPoly f = rng.field_poly(m, 3, 3);
    CHECK(a.times(b).gL(f) == a.gL(b.gL(f)));
  }
}

TEST_CASE("cutoff independence of the Lagrangian variation") {
  FreeModel chain = FreeModel::graph("chain4", 4, 1, {{0, 1}, {1, 2}, {2, 3}},
                                     Rat(1));
  GroupElement g(chain);
  RatMat two(1, 1);
  two.at(0, 0) = 2;
  g.set_matrix(0, two);
  g.set_shift(0, {Rat(1, 2)});
  CHECK(g.support() == std::set<int>{0});

  // Any cutoff that is ≡ 1 on supp(g) and its coupling neighborhood gives
  // the same δ_g L; the canonical choice is f ≡ 1 everywhere.
  GradedPoly canonical = g.delta_L();
  CHECK(g.delta_L({Rat(1), Rat(1), Rat(1), Rat(1)}) == canonical);
  CHECK(g.delta_L({Rat(1), Rat(1), Rat(0), Rat(0)}) == canonical);
  CHECK(g.delta_L({Rat(1), Rat(1), Rat(1, 2), Rat(3)}) == canonical);
  CHECK_THROWS_AS(g.delta_L({Rat(1), Rat(0), Rat(0), Rat(0)}),
                  std::invalid_argument);

  // supp(δ_g L) ⊆ supp(g) ∪ coupling neighborhood.
  CHECK(subset(canonical.support(), chain.m_neighborhood(g.support())));
}

TEST_CASE("Lie bracket") {
  FreeModel m = model_m22();
  ProbeRng rng(ProbeRng::mix(7, "sym.bracket"));

  auto same = [&](const LieSymmetry& x, const LieSymmetry& y) {
    for (int s = 0; s < m.nsites(); ++s) {
      if (!(x.a(s) == y.a(s))) return false;
      if (x.p(s) != y.p(s)) return false;
    }
    return true;
  };

  for (int it = 0; it < 12; ++it) {
    LieSymmetry x = random_lie(rng, m);
    LieSymmetry y = random_lie(rng, m);
    LieSymmetry z = random_lie(rng, m);

    CHECK(x.bracket(x).is_zero());
    CHECK(same(x.bracket(y), -(y.bracket(x))));
    // Jacobi identity.
    LieSymmetry j = x.bracket(y.bracket(z)) + y.bracket(z.bracket(x)) +
                    z.bracket(x.bracket(y));
    CHECK(j.is_zero());

    // [∂_X, ∂_Y] = ∂_{[X,Y]} on random functionals.
    GradedPoly f = rng.field_poly(m, 3, 4);
    CHECK(x.partial(y.partial(f)) - y.partial(x.partial(f)) ==
          x.bracket(y).partial(f));
  }

  // One component: matrices commute, only the shift part survives.
  FreeModel m1 = model_m1();
  LieSymmetry x(m1), y(m1);
  RatMat a(1, 1), b(1, 1);
  a.at(0, 0) = Rat(2);
  b.at(0, 0) = Rat(5);
  x.set_a(0, a);
  x.set_p(0, {Rat(3)});
  y.set_a(0, b);
  y.set_p(0, {Rat(7)});
  LieSymmetry br = x.bracket(y);
  CHECK(br.a(0).at(0, 0) == 0);
  CHECK(br.p(0) == std::vector<Rat>{Rat(3) * Rat(5) - Rat(7) * Rat(2)});
}

TEST_CASE("directional derivative along a symmetry") {
  FreeModel m1 = model_m1();
  GradedPoly p0 = GradedPoly::var(m1.fvar(0));
  LieSymmetry x(m1);
  RatMat a(1, 1);
  a.at(0, 0) = Rat(2, 3);
  x.set_a(0, a);
  x.set_p(0, {Rat(5)});

  // ∂_X φ₀² = 2φ₀(aφ₀ + p).
  GradedPoly ax = p0.scaled(Scalar(Rat(2, 3))) + GradedPoly::constant(Scalar(5));
  CHECK(x.partial(p0 * p0) == (p0 * ax).scaled(Scalar(2)));
  CHECK(x.partial_L() == p0 * ax);
  CHECK(LieSymmetry(m1).partial(p0 * p0).is_zero());

  // Derivation property.
  FreeModel m = model_m22();
  ProbeRng rng(ProbeRng::mix(7, "sym.partial"));
  for (int it = 0; it < 12; ++it) {
    LieSymmetry y = random_lie(rng, m);
    GradedPoly f = rng.field_poly(m, 3, 3);
    GradedPoly g = rng.field_poly(m, 3, 3);
    CHECK(y.partial(f * g) == y.partial(f) * g + f * y.partial(g));
  }
}

TEST_CASE("exponential path") {
  FreeModel m1 = model_m1();
  Caps caps = Caps::none().with(P_LAM, 4);

  // X = 0: constant identity series.
  ExpPath trivial(LieSymmetry(m1), P_LAM, 4);
  GradedPoly p0 = GradedPoly::var(m1.fvar(0));
  CHECK(trivial.pullback(p0 * p0, caps) ==
        FormalSeries::from_poly(caps, p0 * p0));

  // a = 1, p = 0: φ₀ ↦ φ₀ e^λ.
  LieSymmetry x(m1);
  RatMat one(1, 1);
  one.at(0, 0) = 1;
  x.set_a(0, one);
  ExpPath path(x, P_LAM, 4);
  FormalSeries img = path.pullback(p0, caps);
  Rat fact(1);
  for (int k = 0; k <= 4; ++k) {
    CHECK(img.coeff1(P_LAM, k) == p0.scaled(Scalar(Rat(1) / fact)));
    fact *= Rat(k + 1);
  }

  // Tangent at λ = 0 is ∂_X; inverse path inverts the substitution.
  FreeModel m = model_m22();
  ProbeRng rng(ProbeRng::mix(7, "sym.exp"));
  Caps c2 = Caps::none().with(P_LAM, 3);
  for (int it = 0; it < 10; ++it) {
    LieSymmetry y = random_lie(rng, m);
    ExpPath py(y, P_LAM, 3);
    GradedPoly f = rng.field_poly(m, 3, 3);
    FormalSeries fs = py.pullback(f, c2);
    CHECK(fs.coeff1(P_LAM, 0) == f);
    CHECK(fs.coeff1(P_LAM, 1) == y.partial(f));
    CHECK(py.inverse().pullback(fs) == FormalSeries::from_poly(c2, f));

    // d/dλ|₀ δ_{g^λ}L = ∂_X L.
    FormalSeries dl = py.delta_L(c2);
    CHECK(dl.coeff1(P_LAM, 0).is_zero());
    CHECK(dl.coeff1(P_LAM, 1) == y.partial_L());

    // g^λ_L as a series map agrees with δ + pullback.
    CHECK(py.gL(fs) == py.pullback(fs) + py.delta_L(fs.caps()));
  }
}
