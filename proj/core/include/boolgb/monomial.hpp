#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace boolgb {

using VarIndex = std::uint32_t;
using Exponent = std::uint32_t;

/// Ring flavour. `BooleanRing` is F2[vars] modulo v^2 + v for every variable,
/// i.e. exponents are capped at 1.
enum class Mode { FullRing, BooleanRing };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& text);

enum class VarKind : std::uint8_t { X = 0, Y = 1, Z = 2 };

/// A named variable x_i, y_i or z_i. Variables are laid out block-major:
/// x1, y1, z1, x2, y2, z2, ... so that flat = 3 * (block - 1) + kind.
struct VarId {
  std::uint32_t block = 1;  // 1-based
  VarKind kind = VarKind::X;

  constexpr VarIndex flat() const {
    return 3 * (block - 1) + static_cast<VarIndex>(kind);
  }
  static constexpr VarId from_flat(VarIndex flat) {
    return VarId{flat / 3 + 1, static_cast<VarKind>(flat % 3)};
  }
  std::string name() const;

  friend constexpr bool operator==(const VarId&, const VarId&) = default;
};

struct VarPower {
  VarIndex var = 0;
  Exponent exp = 0;

  friend constexpr bool operator==(const VarPower&, const VarPower&) = default;
};

/// Power product over F2. Stored sparsely as (variable, exponent) pairs sorted
/// by variable; zero exponents are never stored, so the unit monomial is empty.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(VarIndex var, Exponent exp = 1);
  /// Accepts unsorted input and repeated variables (exponents add).
  static Monomial from_powers(std::vector<VarPower> powers);

  std::span<const VarPower> powers() const { return powers_; }
  Exponent exponent(VarIndex var) const;
  std::uint32_t degree() const { return degree_; }
  bool is_unit() const { return powers_.empty(); }
  bool is_squarefree() const;
  /// One bit per variable (mod 64); a quick necessary condition for division.
  std::uint64_t signature() const { return signature_; }
  /// Largest variable index present plus one; 0 for the unit.
  VarIndex var_bound() const { return powers_.empty() ? 0 : powers_.back().var + 1; }

  /// Caps every exponent at 1.
  Monomial support() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.powers_ == b.powers_;
  }

 private:
  explicit Monomial(std::vector<VarPower> sorted);

  std::vector<VarPower> powers_;
  std::uint32_t degree_ = 0;
  std::uint64_t signature_ = 0;
};

Monomial multiply(const Monomial& a, const Monomial& b, Mode mode);
/// True iff every exponent of `a` is at most the matching one in `b`.
bool divides(const Monomial& a, const Monomial& b);
/// b / a. Throws DivisionError unless divides(a, b).
Monomial quotient(const Monomial& b, const Monomial& a);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

std::string format_monomial(const Monomial& m);

enum class OrderScheme { DegLex, DegRevLex };

std::string to_string(OrderScheme scheme);
OrderScheme order_from_string(const std::string& text);

/// Degree-compatible monomial order on the fixed variable priority
/// x1 > y1 > z1 > x2 > ...
///
/// DegLex breaks degree ties at the first differing variable: the larger
/// exponent wins. DegRevLex breaks ties at the last differing variable: the
/// smaller exponent wins. With x > y > z in degree 2:
///   DegLex:    x^2 > xy > xz > y^2 > yz > z^2
///   DegRevLex: x^2 > xy > y^2 > xz > yz > z^2
struct MonomialOrder {
  OrderScheme scheme = OrderScheme::DegLex;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend constexpr bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

inline constexpr MonomialOrder kDegLex{OrderScheme::DegLex};
inline constexpr MonomialOrder kDegRevLex{OrderScheme::DegRevLex};

}  // namespace boolgb
