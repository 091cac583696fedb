#include "latbv/scalar.hpp"

namespace latbv {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Scalar Scalar::i_pow(long k) {
  long m = ((k % 4) + 4) % 4;
  switch (m) {
    case 0:
      return Scalar(1);
    case 1:
      return unit_i();
    case 2:
      return Scalar(-1);
    default:
      return Scalar(Rat(0), Rat(-1));
  }
}

Scalar Scalar::inv() const {
  Rat n = re * re + im * im;
  if (n == 0) throw std::domain_error("division by zero Scalar");
  return Scalar(re / n, -im / n);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

std::string Scalar::str() const {
  if (im == 0) return rat_to_string(re);
  std::string ip;
  if (im == 1)
    ip = "i";
  else if (im == -1)
    ip = "-i";
  else
    ip = rat_to_string(im) + "*i";
  if (re == 0) return ip;
  if (im > 0) return rat_to_string(re) + "+" + ip;
  return rat_to_string(re) + ip;  // ip already carries the minus sign
}

}  // namespace latbv
