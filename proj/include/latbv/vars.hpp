#ifndef LATBV_VARS_HPP
#define LATBV_VARS_HPP

#include <cstdint>
#include <string>

namespace latbv {

/// Generator kinds of the lattice BV algebra.
///  - Field:     commuting generator phi_a(x); one per (site, component).
///  - Antifield: anticommuting generator phd_a(x) dual to phi_a(x).
///  - Mult:      anticommuting bookkeeping multiplier eta_i, carrying no
///               site; inert under Wick ordering and field derivatives.
enum class VarKind : std::uint8_t { Field = 0, Antifield = 1, Mult = 2 };

/// Packed generator id with a total order (kind, site, comp).
/// The packing is an implementation detail; use the accessors.
struct VarId {
  std::uint32_t code = 0;

  VarId() = default;
  VarId(VarKind k, int site, int comp)
      : code((static_cast<std::uint32_t>(k) << 24) |
             (static_cast<std::uint32_t>(site & 0xffff) << 8) |
             static_cast<std::uint32_t>(comp & 0xff)) {}

  VarKind kind() const { return static_cast<VarKind>(code >> 24); }
  int site() const { return static_cast<int>((code >> 8) & 0xffff); }
  int comp() const { return static_cast<int>(code & 0xff); }

  bool odd() const { return kind() != VarKind::Field; }

  friend bool operator==(VarId a, VarId b) { return a.code == b.code; }
  friend bool operator!=(VarId a, VarId b) { return a.code != b.code; }
  friend bool operator<(VarId a, VarId b) { return a.code < b.code; }

  /// "phi[x,a]", "phd[x,a]", or "eta[i]".
  std::string str() const;
};

inline VarId field_var(int site, int comp) {
  return VarId(VarKind::Field, site, comp);
}
inline VarId antifield_var(int site, int comp) {
  return VarId(VarKind::Antifield, site, comp);
}
inline VarId mult_var(int index) { return VarId(VarKind::Mult, 0, index); }

}  // namespace latbv

#endif  // LATBV_VARS_HPP
