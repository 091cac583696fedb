#include "latbv/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "latbv/vars.hpp"

namespace latbv {

std::string VarId::str() const {
  std::ostringstream os;
  switch (kind()) {
    case VarKind::Field:
      os << "phi[" << site() << "," << comp() << "]";
      break;
    case VarKind::Antifield:
      os << "phd[" << site() << "," << comp() << "]";
      break;
    case VarKind::Mult:
      os << "eta[" << comp() << "]";
      break;
  }
  return os.str();
}

bool Mono::operator<(const Mono& o) const {
  auto key = [](const std::vector<VarId>& v) {
    return v;  // lexicographic via VarId::operator< below
  };
  if (ev.size() != o.ev.size()) return ev.size() < o.ev.size();
  for (std::size_t i = 0; i < ev.size(); ++i)
    if (ev[i] != o.ev[i]) return ev[i] < o.ev[i];
  if (od.size() != o.od.size()) return od.size() < o.od.size();
  for (std::size_t i = 0; i < od.size(); ++i)
    if (od[i] != o.od[i]) return od[i] < o.od[i];
  (void)key;
  return false;
}

int Mono::antifield_number() const {
  int n = 0;
  for (VarId v : od)
    if (v.kind() == VarKind::Antifield) ++n;
  return n;
}

std::string Mono::str() const {
  if (ev.empty() && od.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  std::size_t i = 0;
  while (i < ev.size()) {
    std::size_t j = i;
    while (j < ev.size() && ev[j] == ev[i]) ++j;
    if (!first) os << "*";
    os << ev[i].str();
    if (j - i > 1) os << "^" << (j - i);
    first = false;
    i = j;
  }
  for (VarId v : od) {
    if (!first) os << "*";
    os << v.str();
    first = false;
  }
  return os.str();
}

std::optional<std::pair<Mono, int>> mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  r.ev.resize(a.ev.size() + b.ev.size());
  std::merge(a.ev.begin(), a.ev.end(), b.ev.begin(), b.ev.end(),
             r.ev.begin());
  // Merge the odd wedges counting inversions: each element of b.od that
  // passes over remaining elements of a.od contributes a sign flip.
  r.od.reserve(a.od.size() + b.od.size());
  int sign = 1;
  std::size_t i = 0, j = 0;
  while (i < a.od.size() && j < b.od.size()) {
    if (a.od[i] == b.od[j]) return std::nullopt;  // odd square -> 0
    if (a.od[i] < b.od[j]) {
      r.od.push_back(a.od[i++]);
    } else {
      if ((a.od.size() - i) % 2 == 1) sign = -sign;
      r.od.push_back(b.od[j++]);
    }
  }
  while (i < a.od.size()) r.od.push_back(a.od[i++]);
  while (j < b.od.size()) r.od.push_back(b.od[j++]);
  return std::make_pair(std::move(r), sign);
}

GradedPoly GradedPoly::constant(Scalar c) {
  GradedPoly p;
  p.add_term(Mono{}, c);
  return p;
}

GradedPoly GradedPoly::var(VarId v) {
  Mono m;
  if (v.odd())
    m.od.push_back(v);
  else
    m.ev.push_back(v);
  GradedPoly p;
  p.add_term(m, Scalar(1));
  return p;
}

bool GradedPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first.ev.empty() &&
         terms_.begin()->first.od.empty();
}

Scalar GradedPoly::constant_part() const {
  auto it = terms_.find(Mono{});
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar GradedPoly::scalar_value() const {
  if (!is_constant())
    throw std::logic_error("scalar_value() on non-constant polynomial");
  return constant_part();
}

void GradedPoly::add_term(const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

GradedPoly GradedPoly::scaled(const Scalar& c) const {
  GradedPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  GradedPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto prod = mono_mul(ma, mb);
      if (!prod) continue;
      Scalar c = ca * cb;
      if (prod->second < 0) c = -c;
      r.add_term(prod->first, c);
    }
  }
  return r;
}

GradedPoly GradedPoly::dfield(VarId v) const {
  if (v.odd()) throw std::logic_error("dfield() on odd generator");
  GradedPoly r;
  for (const auto& [m, c] : terms_) {
    auto lo = std::lower_bound(m.ev.begin(), m.ev.end(), v);
    if (lo == m.ev.end() || *lo != v) continue;
    auto hi = std::upper_bound(lo, m.ev.end(), v);
    long mult = hi - lo;
    Mono n = m;
    n.ev.erase(n.ev.begin() + (lo - m.ev.begin()));
    r.add_term(n, Rat(mult) * c);
  }
  return r;
}

GradedPoly GradedPoly::dodd_left(VarId v) const {
  if (!v.odd()) throw std::logic_error("dodd_left() on even generator");
  GradedPoly r;
  for (const auto& [m, c] : terms_) {
    auto it = std::lower_bound(m.od.begin(), m.od.end(), v);
    if (it == m.od.end() || *it != v) continue;
    std::size_t j = it - m.od.begin();
    Mono n = m;
    n.od.erase(n.od.begin() + j);
    Scalar cc = (j % 2 == 0) ? c : -c;
    r.add_term(n, cc);
  }
  return r;
}

GradedPoly GradedPoly::dodd_right(VarId v) const {
  if (!v.odd()) throw std::logic_error("dodd_right() on even generator");
  GradedPoly r;
  for (const auto& [m, c] : terms_) {
    auto it = std::lower_bound(m.od.begin(), m.od.end(), v);
    if (it == m.od.end() || *it != v) continue;
    std::size_t j = it - m.od.begin();
    std::size_t k = m.od.size();
    Mono n = m;
    n.od.erase(n.od.begin() + j);
    Scalar cc = ((k - 1 - j) % 2 == 0) ? c : -c;
    r.add_term(n, cc);
  }
  return r;
}

GradedPoly GradedPoly::substitute_fields(
    const std::function<std::optional<GradedPoly>(VarId)>& fn) const {
  GradedPoly r;
  for (const auto& [m, c] : terms_) {
    GradedPoly acc = GradedPoly::constant(c);
    Mono rest;
    rest.od = m.od;
    for (VarId v : m.ev) {
      auto img = fn(v);
      if (img)
        acc = acc * *img;
      else
        rest.ev.push_back(v);
    }
    GradedPoly restp;
    restp.add_term(rest, Scalar(1));
    r += acc * restp;
  }
  return r;
}

Scalar GradedPoly::eval_fields(const std::function<Scalar(VarId)>& val) const {
  Scalar out;
  for (const auto& [m, c] : terms_) {
    if (!m.od.empty())
      throw std::logic_error("eval_fields() on polynomial with odd part");
    Scalar t = c;
    for (VarId v : m.ev) t *= val(v);
    out += t;
  }
  return out;
}

bool GradedPoly::homogeneous_parity(int p) const {
  for (const auto& [m, c] : terms_)
    if (m.parity() != p) return false;
  return true;
}

std::optional<int> GradedPoly::parity() const {
  if (terms_.empty()) return 0;
  int p = terms_.begin()->first.parity();
  return homogeneous_parity(p) ? std::optional<int>(p) : std::nullopt;
}

int GradedPoly::max_antifield_number() const {
  int n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.antifield_number());
  return n;
}

int GradedPoly::max_field_degree() const {
  int n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.field_degree());
  return n;
}

bool GradedPoly::has_odd() const {
  for (const auto& [m, c] : terms_)
    if (!m.od.empty()) return true;
  return false;
}

std::set<int> GradedPoly::support() const {
  std::set<int> s;
  for (const auto& [m, c] : terms_) {
    for (VarId v : m.ev) s.insert(v.site());
    for (VarId v : m.od)
      if (v.kind() == VarKind::Antifield) s.insert(v.site());
  }
  return s;
}

std::string GradedPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.str() << ")";
    if (!(m.ev.empty() && m.od.empty())) os << "*" << m.str();
    first = false;
  }
  return os.str();
}

}  // namespace latbv
