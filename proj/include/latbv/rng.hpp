#ifndef LATBV_RNG_HPP
#define LATBV_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

#include "latbv/model.hpp"
#include "latbv/poly.hpp"

namespace latbv {

/// Deterministic probe generator. All randomness flows through the raw
/// mt19937_64 stream with modulo reduction — std::uniform_int_distribution
/// is implementation-defined and would break bit-identical reports across
/// standard libraries. The tiny modulo bias is irrelevant for probes.
class ProbeRng {
 public:
  explicit ProbeRng(std::uint64_t seed) : eng_(seed) {}

  /// Stable per-check seed: base seed mixed with an FNV-1a hash of the tag.
  static std::uint64_t mix(std::uint64_t seed, std::string_view tag);

  std::uint64_t u64() { return eng_(); }
  /// Uniform-ish integer in [lo, hi], inclusive.
  int range(int lo, int hi);
  bool chance(int num, int den) { return range(1, den) <= num; }

  /// Rational with small numerator/denominator; never zero if nonzero set.
  Rat rat(int max_num = 3, int max_den = 3, bool nonzero = false);
  Scalar scalar(int max_num = 3, int max_den = 2, bool nonzero = false);

  /// Random field monomial of exact degree `deg` on the model.
  Mono field_mono(const FreeModel& m, int deg);

  /// Random field polynomial: `nterms` monomials of degree ≤ max_deg
  /// (possibly fewer after coefficient collisions).
  GradedPoly field_poly(const FreeModel& m, int max_deg, int nterms);

  /// Random field polynomial with every monomial of exact degree `deg`.
  GradedPoly homogeneous_field_poly(const FreeModel& m, int deg, int nterms);

  /// Random multivector: field polynomial terms, each carrying
  /// `antifields` distinct antifield factors (0, 1 or 2).
  GradedPoly multivector(const FreeModel& m, int max_deg, int nterms,
                         int antifields);

 private:
  std::mt19937_64 eng_;
};

}  // namespace latbv

#endif  // LATBV_RNG_HPP
