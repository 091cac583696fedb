#include "latbv/group.hpp"

#include <stdexcept>

namespace latbv {

namespace {

std::vector<Rat> row_times(const std::vector<Rat>& v, const RatMat& m) {
  std::vector<Rat> r(m.cols(), Rat(0));
  for (int b = 0; b < m.cols(); ++b)
    for (int c = 0; c < m.rows(); ++c) r[b] += v[c] * m.at(c, b);
  return r;
}

std::vector<Rat> vec_scaled(const std::vector<Rat>& v, const Rat& c) {
  std::vector<Rat> r = v;
  for (Rat& x : r) x *= c;
  return r;
}

bool vec_zero(const std::vector<Rat>& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

bool mat_zero(const RatMat& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) return false;
  return true;
}

}  // namespace

LieSymmetry::LieSymmetry(const FreeModel& m)
    : model_(&m),
      a_(m.nsites(), RatMat(m.ncomp(), m.ncomp())),
      p_(m.nsites(), std::vector<Rat>(m.ncomp(), Rat(0))) {}

void LieSymmetry::set_a(int site, RatMat a) {
  if (site < 0 || site >= model_->nsites())
    throw std::invalid_argument("LieSymmetry::set_a: site out of range");
  if (a.rows() != model_->ncomp() || a.cols() != model_->ncomp())
    throw std::invalid_argument("LieSymmetry::set_a: wrong matrix shape");
  a_[site] = std::move(a);
}

void LieSymmetry::set_p(int site, std::vector<Rat> p) {
  if (site < 0 || site >= model_->nsites())
    throw std::invalid_argument("LieSymmetry::set_p: site out of range");
  if (static_cast<int>(p.size()) != model_->ncomp())
    throw std::invalid_argument("LieSymmetry::set_p: wrong vector length");
  p_[site] = std::move(p);
}

bool LieSymmetry::is_zero() const { return support().empty(); }

std::set<int> LieSymmetry::support() const {
  std::set<int> s;
  for (int x = 0; x < model_->nsites(); ++x)
    if (!mat_zero(a_[x]) || !vec_zero(p_[x])) s.insert(x);
  return s;
}

Rat LieSymmetry::trace() const {
  Rat t(0);
  for (int x = 0; x < model_->nsites(); ++x)
    for (int c = 0; c < model_->ncomp(); ++c) t += a_[x].at(c, c);
  return t;
}

GradedPoly LieSymmetry::phiX(int flat) const {
  int x = model_->site_of(flat);
  int b = model_->comp_of(flat);
  GradedPoly r;
  for (int c = 0; c < model_->ncomp(); ++c) {
    const Rat& acb = a_[x].at(c, b);
    if (acb != 0)
      r += GradedPoly::var(model_->fvar(model_->flat(x, c))).scaled(Scalar(acb));
  }
  if (p_[x][b] != 0) r += GradedPoly::constant(Scalar(p_[x][b]));
  return r;
}

GradedPoly LieSymmetry::partial(const GradedPoly& f) const {
  GradedPoly r;
  for (int x : support())
    for (int b = 0; b < model_->ncomp(); ++b) {
      int j = model_->flat(x, b);
      GradedPoly dj = f.dfield(model_->fvar(j));
      if (!dj.is_zero()) r += dj * phiX(j);
    }
  return r;
}

FormalSeries LieSymmetry::partial(const FormalSeries& f) const {
  return f.map_coeffs([this](const GradedPoly& p) { return partial(p); });
}

GradedPoly LieSymmetry::partial_L() const {
  return partial(model_->lagrangian1());
}

LieSymmetry LieSymmetry::scaled(const Rat& c) const {
  LieSymmetry r(*model_);
  for (int x = 0; x < model_->nsites(); ++x) {
    r.a_[x] = a_[x].scaled(c);
    r.p_[x] = vec_scaled(p_[x], c);
  }
  return r;
}

LieSymmetry operator+(const LieSymmetry& x, const LieSymmetry& y) {
  LieSymmetry r(x.model());
  for (int s = 0; s < x.model().nsites(); ++s) {
    r.a_[s] = x.a_[s] + y.a_[s];
    r.p_[s] = x.p_[s];
    for (int c = 0; c < x.model().ncomp(); ++c) r.p_[s][c] += y.p_[s][c];
  }
  return r;
}

LieSymmetry operator-(const LieSymmetry& x) { return x.scaled(Rat(-1)); }

LieSymmetry LieSymmetry::bracket(const LieSymmetry& y) const {
  LieSymmetry r(*model_);
  for (int x = 0; x < model_->nsites(); ++x) {
    r.a_[x] = a_[x] * y.a_[x] - y.a_[x] * a_[x];
    std::vector<Rat> pb = row_times(p_[x], y.a_[x]);
    std::vector<Rat> qa = row_times(y.p_[x], a_[x]);
    for (int c = 0; c < model_->ncomp(); ++c) pb[c] -= qa[c];
    r.p_[x] = std::move(pb);
  }
  return r;
}

GroupElement::GroupElement(const FreeModel& m)
    : model_(&m),
      rho_(m.nsites()),
      A_(m.nsites(), RatMat::identity(m.ncomp())),
      psi_(m.nsites(), std::vector<Rat>(m.ncomp(), Rat(0))) {
  for (int x = 0; x < m.nsites(); ++x) rho_[x] = x;
}

void GroupElement::set_perm(std::vector<int> rho) {
  if (static_cast<int>(rho.size()) != model_->nsites())
    throw std::invalid_argument("GroupElement::set_perm: wrong length");
  std::vector<bool> seen(rho.size(), false);
  for (int y : rho) {
    if (y < 0 || y >= model_->nsites() || seen[y])
      throw std::invalid_argument("GroupElement::set_perm: not a permutation");
    seen[y] = true;
  }
  rho_ = std::move(rho);
}

void GroupElement::set_matrix(int site, RatMat a) {
  if (site < 0 || site >= model_->nsites())
    throw std::invalid_argument("GroupElement::set_matrix: site out of range");
  if (a.rows() != model_->ncomp() || a.cols() != model_->ncomp())
    throw std::invalid_argument("GroupElement::set_matrix: wrong shape");
  (void)a.inverse();  // throws std::domain_error when singular
  A_[site] = std::move(a);
}

void GroupElement::set_shift(int site, std::vector<Rat> psi) {
  if (site < 0 || site >= model_->nsites())
    throw std::invalid_argument("GroupElement::set_shift: site out of range");
  if (static_cast<int>(psi.size()) != model_->ncomp())
    throw std::invalid_argument("GroupElement::set_shift: wrong length");
  psi_[site] = std::move(psi);
}

bool GroupElement::is_identity() const { return support().empty(); }

std::set<int> GroupElement::support() const {
  std::set<int> s;
  RatMat id = RatMat::identity(model_->ncomp());
  for (int x = 0; x < model_->nsites(); ++x)
    if (rho_[x] != x || !(A_[x] == id) || !vec_zero(psi_[x])) s.insert(x);
  return s;
}

std::vector<Rat> GroupElement::act_config(const std::vector<Rat>& phi) const {
  if (static_cast<int>(phi.size()) != model_->dim())
    throw std::invalid_argument("GroupElement::act_config: wrong length");
  std::vector<Rat> out(model_->dim(), Rat(0));
  for (int x = 0; x < model_->nsites(); ++x)
    for (int b = 0; b < model_->ncomp(); ++b) {
      Rat v = psi_[x][b];
      for (int c = 0; c < model_->ncomp(); ++c)
        v += phi[model_->flat(rho_[x], c)] * A_[x].at(c, b);
      out[model_->flat(x, b)] = v;
    }
  return out;
}

GradedPoly GroupElement::pullback(const GradedPoly& f) const {
  if (f.max_antifield_number() != 0)
    throw std::logic_error("GroupElement::pullback: antifields present");
  std::set<int> supp = support();
  return f.substitute_fields([&](VarId v) -> std::optional<GradedPoly> {
    int x = v.site();
    if (!supp.count(x)) return std::nullopt;
    int b = v.comp();
    GradedPoly img;
    for (int c = 0; c < model_->ncomp(); ++c) {
      const Rat& acb = A_[x].at(c, b);
      if (acb != 0)
        img += GradedPoly::var(model_->fvar(model_->flat(rho_[x], c)))
                   .scaled(Scalar(acb));
    }
    if (psi_[x][b] != 0) img += GradedPoly::constant(Scalar(psi_[x][b]));
    return img;
  });
}

FormalSeries GroupElement::pullback(const FormalSeries& f) const {
  return f.map_coeffs([this](const GradedPoly& p) { return pullback(p); });
}

GradedPoly GroupElement::delta_L() const {
  GradedPoly l = model_->lagrangian1();
  return pullback(l) - l;
}

GradedPoly GroupElement::delta_L(const std::vector<Rat>& cutoff) const {
  std::set<int> need = model_->m_neighborhood(support());
  for (int x : need)
    if (cutoff[x] != 1)
      throw std::invalid_argument(
          "GroupElement::delta_L: cutoff not identically 1 near supp(g)");
  GradedPoly l = model_->lagrangian(cutoff);
  return pullback(l) - l;
}

GradedPoly GroupElement::gL(const GradedPoly& f) const {
  return delta_L() + pullback(f);
}

FormalSeries GroupElement::gL(const FormalSeries& f) const {
  FormalSeries r = pullback(f);
  r.add(Expo{}, delta_L());
  return r;
}

GroupElement GroupElement::times(const GroupElement& h) const {
  GroupElement r(*model_);
  for (int x = 0; x < model_->nsites(); ++x) {
    int hx = h.rho_[x];
    r.rho_[x] = rho_[hx];
    r.A_[x] = A_[hx] * h.A_[x];
    std::vector<Rat> ps = row_times(psi_[hx], h.A_[x]);
    for (int c = 0; c < model_->ncomp(); ++c) ps[c] += h.psi_[x][c];
    r.psi_[x] = std::move(ps);
  }
  return r;
}

GroupElement GroupElement::inverse() const {
  GroupElement r(*model_);
  std::vector<int> rinv(model_->nsites());
  for (int x = 0; x < model_->nsites(); ++x) rinv[rho_[x]] = x;
  for (int x = 0; x < model_->nsites(); ++x) {
    r.rho_[x] = rinv[x];
    r.A_[x] = A_[rinv[x]].inverse();
    r.psi_[x] = vec_scaled(row_times(psi_[rinv[x]], r.A_[x]), Rat(-1));
  }
  return r;
}

ExpPath::ExpPath(const LieSymmetry& x, Param par, int order)
    : x_(x), par_(par), order_(order) {
  const FreeModel& m = x.model();
  if (order < 0) throw std::invalid_argument("ExpPath: negative order");
  akl_.resize(m.nsites());
  psik_.resize(m.nsites());
  for (int s = 0; s < m.nsites(); ++s) {
    akl_[s].reserve(order + 1);
    akl_[s].push_back(RatMat::identity(m.ncomp()));
    psik_[s].resize(order + 1, std::vector<Rat>(m.ncomp(), Rat(0)));
    for (int k = 1; k <= order; ++k) {
      akl_[s].push_back((akl_[s][k - 1] * x.a(s)).scaled(Rat(1, k)));
      psik_[s][k] = vec_scaled(row_times(x.p(s), akl_[s][k - 1]), Rat(1, k));
    }
  }
}

FormalSeries ExpPath::field_image(int flat, const Caps& caps) const {
  const FreeModel& m = x_.model();
  int x = m.site_of(flat);
  int b = m.comp_of(flat);
  Caps c = Caps::join(caps, Caps::none().with(par_, order_));
  FormalSeries img(c);
  int kmax = std::min(order_, c.cap[par_]);
  for (int k = 0; k <= kmax; ++k) {
    GradedPoly coeff;
    for (int cc = 0; cc < m.ncomp(); ++cc) {
      const Rat& e = akl_[x][k].at(cc, b);
      if (e != 0)
        coeff += GradedPoly::var(m.fvar(m.flat(x, cc))).scaled(Scalar(e));
    }
    if (k >= 1 && psik_[x][k][b] != 0)
      coeff += GradedPoly::constant(Scalar(psik_[x][k][b]));
    if (!coeff.is_zero()) img.add(expo_of(par_, k), coeff);
  }
  return img;
}

FormalSeries ExpPath::pullback(const FormalSeries& f) const {
  const FreeModel& m = x_.model();
  Caps c = Caps::join(f.caps(), Caps::none().with(par_, order_));
  std::set<int> supp = x_.support();
  return subst_fields_series(
      f.with_caps(c), [&](VarId v) -> std::optional<FormalSeries> {
        if (!supp.count(v.site())) return std::nullopt;
        return field_image(m.flat(v.site(), v.comp()), c);
      });
}

FormalSeries ExpPath::pullback(const GradedPoly& f, const Caps& caps) const {
  return pullback(FormalSeries::from_poly(caps, f));
}

FormalSeries ExpPath::delta_L(const Caps& caps) const {
  Caps c = Caps::join(caps, Caps::none().with(par_, order_));
  FormalSeries l = FormalSeries::from_poly(c, x_.model().lagrangian1());
  return pullback(l) - l;
}

FormalSeries ExpPath::gL(const FormalSeries& f) const {
  return pullback(f) + delta_L(f.caps());
}

ExpPath ExpPath::inverse() const { return ExpPath(-x_, par_, order_); }

}  // namespace latbv
