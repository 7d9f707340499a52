#pragma once

// Type(0)/Type(1) classification of units of GR(p^a, m).
//
// Writing a unit as zeta_0 + p*zeta_1 + p^2*z with zeta_0, zeta_1 Teichmuller
// representatives, it is of Type(1) when zeta_1 != 0 and of Type(0) when
// zeta_1 = 0. For a = 1 there is no p-digit and every unit is Type(0).

#include <cstddef>
#include <optional>
#include <string_view>

#include "galring/galois_ring.hpp"

namespace galring {

enum class UnitKind { NonUnit, Type0, Type1 };

std::string_view to_string(UnitKind kind);

struct UnitClass {
  UnitKind kind = UnitKind::NonUnit;
  /// Teichmuller index of zeta_0 (set for Type0 and Type1).
  std::optional<std::size_t> zeta0_idx;
  /// Teichmuller index of zeta_1 (set and nonzero for Type1 only).
  std::optional<std::size_t> zeta1_idx;
  /// Cofactor of p^2; the zero element when a <= 2.
  GrElement z;
};

UnitClass classify_unit(const RingContext& ctx, const GrElement& x);

/// zeta_0 + p*zeta_1 + p^2*z; throws WrongType for NonUnit.
GrElement recompose(const RingContext& ctx, const UnitClass& cls);

/// GR(p^a,m)[x]/<x^{p^s} - gamma> is a chain ring iff gamma is
/// Type(1). For a = 1 the quotient is F_{p^m}[x]/<(x - alpha)^{p^s}>, which is
/// always a chain ring, so this returns true.
bool is_chain_ambient(const RingContext& ctx, const GrElement& gamma, int s);

/// Smallest integer a0 >= 2 with 2^{a0} >= a.
int inverse_product_depth(int a);

/// gamma^{-1} = zeta0^{-1} (1 - p w) prod_{j=1}^{a0-1} (1 + (p w)^{2^j}),
/// with w = zeta0^{-1} zeta1 + p zeta0^{-1} z.
GrElement type1_inverse(const RingContext& ctx, const GrElement& gamma);

/// gamma^{-1} = zeta0^{-1} (1 - p^2 w) prod_{j=1}^{a0-1} (1 + (p^2 w)^{2^j}),
/// with w = zeta0^{-1} z. zeta0 = 1 recovers the textbook formula.
GrElement type0_inverse(const RingContext& ctx, const GrElement& gamma);

/// Predicted kind of a product: Type1*Type0 -> Type1, Type0*Type0 -> Type0,
/// anything with a non-unit -> NonUnit. Type1*Type1 has no rule (nullopt).
std::optional<UnitKind> type_product_class(UnitKind x, UnitKind y);

}  // namespace galring
