#ifndef LATBV_CONTEXT_HPP
#define LATBV_CONTEXT_HPP

#include "latbv/model.hpp"
#include "latbv/renmap.hpp"
#include "latbv/series.hpp"
#include "latbv/wick.hpp"

namespace latbv {

/// A quantization context: a free model together with a (possibly trivial)
/// finite-renormalization twist Z. The S-matrix of the context is
///   S_Z(V) = T(e^{i·Z(V)})
/// with one Z per interaction vertex, and insertions are derivatives of the
/// generating function:
///   d/(i dτ) S_Z(V + τP)|₀ = T(e^{i·Z(V)} · Z(P)).
/// Because Z is an invertible operator, the insertion map is exactly
/// invertible: solving T(e^{iZV}·Z(W)) = R for W gives
///   W = Z⁻¹(e^{−iZV} · T⁻¹(R)).
/// Every quantum operation downstream (anomaly solving, quantum BV
/// operators, cocycle integration) is built from these three maps.
class DeformContext {
 public:
  explicit DeformContext(FreeModel m, RenMap z = RenMap::identity())
      : model_(std::move(m)), twist_(std::move(z)), wick_(model_) {}

  const FreeModel& model() const { return model_; }
  const RenMap& twist() const { return twist_; }
  const Wick& wick() const { return wick_; }
  bool twisted() const { return !twist_.is_identity(); }

  /// Re-twists the context: the composite S-matrix is S_{Z∘Y}.
  DeformContext retwisted(const RenMap& y) const {
    return DeformContext(model_, twist_.composed(y));
  }

  /// Coefficient-wise operator applications.
  FormalSeries tmap(const FormalSeries& v) const;
  FormalSeries tinvmap(const FormalSeries& v) const;
  FormalSeries zmap(const FormalSeries& v) const;
  FormalSeries zinvmap(const FormalSeries& v) const;

  /// e^{iZV} (pointwise exponential; V needs zero order-0 coefficient).
  FormalSeries dressed_exp(const FormalSeries& v, int sign = +1) const;

  /// S_Z(V) = T(e^{iZV}).
  FormalSeries TS(const FormalSeries& v) const;
  /// T(e^{iZV}·Z(P)).
  FormalSeries TS_ins(const FormalSeries& v, const FormalSeries& p) const;
  FormalSeries TS_ins(const FormalSeries& v, const GradedPoly& p) const;
  /// Inverse of P ↦ TS_ins(V,P): Z⁻¹(e^{−iZV}·T⁻¹(R)).
  FormalSeries solve_ins(const FormalSeries& v, const FormalSeries& r) const;

  /// S(εF) through order K: coefficient of ε^k is i^k/k!·T((ZF)^k).
  FormalSeries smatrix(const GradedPoly& f, int K) const;

  /// ·_T on series (coefficient products via tprod).
  FormalSeries tprod(const FormalSeries& a, const FormalSeries& b) const;

 private:
  FreeModel model_;
  RenMap twist_;
  Wick wick_;
};

}  // namespace latbv

#endif  // LATBV_CONTEXT_HPP
