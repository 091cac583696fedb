#include "latbv/series.hpp"

#include <sstream>
#include <stdexcept>

namespace latbv {

const char* const kParamNames[kNumParams] = {"eps", "tau", "lam", "mu",
                                             "nu",  "t1",  "t2", "t3"};

Caps Caps::join(const Caps& a, const Caps& b) {
  Caps c;
  for (int i = 0; i < kNumParams; ++i)
    c.cap[i] = a.cap[i] > b.cap[i] ? a.cap[i] : b.cap[i];
  return c;
}

int Caps::total() const {
  int t = 0;
  for (int i = 0; i < kNumParams; ++i) t += cap[i];
  return t;
}

Expo expo_of(Param p, int k) {
  Expo e{};
  e[p] = static_cast<std::uint8_t>(k);
  return e;
}

FormalSeries FormalSeries::from_poly(Caps caps, const GradedPoly& p) {
  FormalSeries s(caps);
  s.set(Expo{}, p);
  return s;
}

FormalSeries FormalSeries::monomial(Caps caps, const GradedPoly& p, Param par,
                                    int k) {
  FormalSeries s(caps);
  s.set(expo_of(par, k), p);
  return s;
}

const GradedPoly& FormalSeries::at(const Expo& e) const {
  static const GradedPoly kZero;
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? kZero : it->second;
}

GradedPoly FormalSeries::coeff1(Param p, int k) const {
  return at(expo_of(p, k));
}

void FormalSeries::set(const Expo& e, GradedPoly p) {
  if (!caps_.admits(e)) return;
  if (p.is_zero())
    coeffs_.erase(e);
  else
    coeffs_[e] = std::move(p);
}

void FormalSeries::add(const Expo& e, const GradedPoly& p) {
  if (!caps_.admits(e) || p.is_zero()) return;
  auto [it, fresh] = coeffs_.try_emplace(e, p);
  if (!fresh) {
    it->second += p;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

FormalSeries FormalSeries::operator-() const {
  FormalSeries r(caps_);
  for (const auto& [e, c] : coeffs_) r.coeffs_.emplace(e, -c);
  return r;
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& o) {
  caps_ = Caps::join(caps_, o.caps_);
  for (const auto& [e, c] : o.coeffs_) add(e, c);
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& o) {
  caps_ = Caps::join(caps_, o.caps_);
  for (const auto& [e, c] : o.coeffs_) add(e, -c);
  return *this;
}

FormalSeries FormalSeries::scaled(const Scalar& c) const {
  FormalSeries r(caps_);
  if (c.is_zero()) return r;
  for (const auto& [e, p] : coeffs_) r.coeffs_.emplace(e, p.scaled(c));
  return r;
}

FormalSeries FormalSeries::mul(const FormalSeries& o,
                               const ProductFn& prod) const {
  FormalSeries r(Caps::join(caps_, o.caps_));
  for (const auto& [ea, ca] : coeffs_) {
    for (const auto& [eb, cb] : o.coeffs_) {
      Expo e;
      bool ok = true;
      for (int i = 0; i < kNumParams; ++i) {
        int s = static_cast<int>(ea[i]) + static_cast<int>(eb[i]);
        if (s > r.caps_.cap[i]) {
          ok = false;
          break;
        }
        e[i] = static_cast<std::uint8_t>(s);
      }
      if (!ok) continue;
      r.add(e, prod(ca, cb));
    }
  }
  return r;
}

FormalSeries FormalSeries::exp(const ProductFn& prod) const {
  if (!at(Expo{}).is_zero())
    throw std::logic_error(
        "FormalSeries::exp requires vanishing order-zero coefficient");
  FormalSeries r = one(caps_);
  FormalSeries pw = one(caps_);
  Rat fact(1);
  const int n = caps_.total();
  for (int k = 1; k <= n; ++k) {
    pw = pw.mul(*this, prod);
    if (pw.is_zero()) break;
    fact *= k;
    r += pw.scaled(Scalar(Rat(1) / fact));
  }
  return r;
}

FormalSeries FormalSeries::log(const ProductFn& prod) const {
  GradedPoly c0 = at(Expo{});
  if (!(c0 == GradedPoly::constant(Scalar(1))))
    throw std::logic_error(
        "FormalSeries::log requires order-zero coefficient 1");
  FormalSeries n = *this;
  n.add(Expo{}, GradedPoly::constant(Scalar(Rat(-1))));
  FormalSeries r = zero(caps_);
  FormalSeries pw = one(caps_);
  const int total = caps_.total();
  for (int k = 1; k <= total; ++k) {
    pw = pw.mul(n, prod);
    if (pw.is_zero()) break;
    Rat c = Rat(k % 2 == 1 ? 1 : -1) / Rat(k);
    r += pw.scaled(Scalar(c));
  }
  return r;
}

FormalSeries FormalSeries::inverse(const ProductFn& prod) const {
  GradedPoly c0 = at(Expo{});
  if (!c0.is_constant() || c0.is_zero())
    throw std::logic_error(
        "FormalSeries::inverse requires an invertible constant order-zero "
        "coefficient");
  Scalar c0inv = c0.scalar_value().inv();
  // this = c0 (1 + n)  =>  inverse = (sum_k (-n)^k) c0^{-1}.
  FormalSeries n = scaled(c0inv);
  n.add(Expo{}, GradedPoly::constant(Scalar(Rat(-1))));
  FormalSeries r = one(caps_);
  FormalSeries pw = one(caps_);
  const int total = caps_.total();
  for (int k = 1; k <= total; ++k) {
    pw = pw.mul(n, prod);
    if (pw.is_zero()) break;
    r += pw.scaled(Scalar(Rat(k % 2 == 1 ? -1 : 1)));
  }
  return r.scaled(c0inv);
}

FormalSeries FormalSeries::map_coeffs(
    const std::function<GradedPoly(const GradedPoly&)>& fn) const {
  FormalSeries r(caps_);
  for (const auto& [e, c] : coeffs_) r.set(e, fn(c));
  return r;
}

FormalSeries FormalSeries::fold_param(Param p, Param into) const {
  Caps c = caps_;
  c.cap[p] = 0;
  FormalSeries r(c);
  for (const auto& [e, coef] : coeffs_) {
    Expo e2 = e;
    e2[into] = static_cast<std::uint8_t>(static_cast<int>(e2[into]) +
                                         static_cast<int>(e[p]));
    e2[p] = 0;
    r.add(e2, coef);
  }
  return r;
}

FormalSeries FormalSeries::subst_value(Param p, const Rat& v) const {
  Caps c = caps_;
  c.cap[p] = 0;
  FormalSeries r(c);
  for (const auto& [e, coef] : coeffs_) {
    Expo e2 = e;
    e2[p] = 0;
    Rat w(1);
    for (int k = 0; k < static_cast<int>(e[p]); ++k) w *= v;
    r.add(e2, coef.scaled(Scalar(w)));
  }
  return r;
}

FormalSeries FormalSeries::slice(Param p, int k) const {
  Caps c = caps_;
  c.cap[p] = 0;
  FormalSeries r(c);
  for (const auto& [e, coef] : coeffs_) {
    if (static_cast<int>(e[p]) != k) continue;
    Expo e2 = e;
    e2[p] = 0;
    r.add(e2, coef);
  }
  return r;
}

FormalSeries FormalSeries::truncated(Param p, int k) const {
  Caps c = caps_;
  c.cap[p] = k;
  FormalSeries r(c);
  for (const auto& [e, coef] : coeffs_) r.add(e, coef);
  return r;
}

FormalSeries FormalSeries::with_caps(Caps c) const {
  FormalSeries r(c);
  for (const auto& [e, coef] : coeffs_) r.add(e, coef);
  return r;
}

FormalSeries subst_fields_series(
    Caps caps, const GradedPoly& p,
    const std::function<std::optional<FormalSeries>(VarId)>& fn) {
  FormalSeries out(caps);
  for (const auto& [mono, coeff] : p.terms()) {
    FormalSeries acc = FormalSeries::from_poly(caps, GradedPoly::constant(coeff));
    Mono rest;
    rest.od = mono.od;
    for (const VarId& v : mono.ev) {
      auto img = fn(v);
      if (img) {
        acc = acc.mul(*img);
        if (acc.is_zero()) break;
      } else {
        rest.ev.push_back(v);
      }
    }
    if (acc.is_zero()) continue;
    if (!rest.ev.empty() || !rest.od.empty()) {
      GradedPoly rp;
      rp.add_term(rest, Scalar(1));
      acc = acc.mul(FormalSeries::from_poly(caps, rp));
    }
    out += acc;
  }
  return out;
}

FormalSeries subst_fields_series(
    const FormalSeries& s,
    const std::function<std::optional<FormalSeries>(VarId)>& fn) {
  FormalSeries out(s.caps());
  for (const auto& [e, c] : s.coeffs()) {
    FormalSeries part = subst_fields_series(s.caps(), c, fn);
    for (const auto& [e2, c2] : part.coeffs()) {
      Expo e3;
      bool ok = true;
      for (int i = 0; i < kNumParams; ++i) {
        int v = static_cast<int>(e[i]) + static_cast<int>(e2[i]);
        if (v > s.caps().cap[i]) {
          ok = false;
          break;
        }
        e3[i] = static_cast<std::uint8_t>(v);
      }
      if (ok) out.add(e3, c2);
    }
  }
  return out;
}

std::string FormalSeries::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << "\n";
    first = false;
    os << "[";
    bool any = false;
    for (int i = 0; i < kNumParams; ++i) {
      if (e[i] == 0) continue;
      if (any) os << "*";
      any = true;
      os << kParamNames[i];
      if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
    }
    if (!any) os << "1";
    os << "] " << c.str();
  }
  return os.str();
}

}  // namespace latbv
