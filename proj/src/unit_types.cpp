#include "galring/unit_types.hpp"

#include "galring/error.hpp"

namespace galring {

std::string_view to_string(UnitKind kind) {
  switch (kind) {
    case UnitKind::NonUnit: return "NonUnit";
    case UnitKind::Type0: return "Type0";
    case UnitKind::Type1: return "Type1";
  }
  return "NonUnit";
}

namespace {

// sum_{k>=2} p^{k-2} T[digits[k]]
GrElement p2_cofactor(const RingContext& ctx, const PadicCoords& coords) {
  GrElement z = ctx.zero();
  Residue pk = 1;
  for (std::size_t k = 2; k < coords.digits.size(); ++k) {
    z = ctx.add(z, ctx.scale(ctx.teichmuller(coords.digits[k]), pk));
    pk *= ctx.p();
  }
  return z;
}

GrElement p_power(const RingContext& ctx, int k) {
  Residue v = 1;
  for (int i = 0; i < k; ++i) v *= ctx.p();
  return ctx.from_int(v);
}

// Inverse of zeta^e is zeta^{-e}; no generic inversion involved.
const GrElement& teichmuller_inverse(const RingContext& ctx, std::size_t idx) {
  return ctx.zeta_power(-static_cast<std::int64_t>(idx - 1));
}

// prod_{j=1}^{a0-1} (1 + t^{2^j})
GrElement doubling_product(const RingContext& ctx, const GrElement& t) {
  GrElement acc = ctx.one();
  GrElement power = t;
  for (int j = 1; j < inverse_product_depth(ctx.a()); ++j) {
    power = ctx.mul(power, power);
    acc = ctx.mul(acc, ctx.add(ctx.one(), power));
  }
  return acc;
}

}  // namespace

UnitClass classify_unit(const RingContext& ctx, const GrElement& x) {
  const PadicCoords coords = ctx.p_adic_decompose(x);
  UnitClass cls;
  cls.z = p2_cofactor(ctx, coords);
  if (coords.digits[0] == 0) return cls;
  cls.zeta0_idx = coords.digits[0];
  if (ctx.a() >= 2 && coords.digits[1] != 0) {
    cls.kind = UnitKind::Type1;
    cls.zeta1_idx = coords.digits[1];
  } else {
    cls.kind = UnitKind::Type0;
  }
  return cls;
}

GrElement recompose(const RingContext& ctx, const UnitClass& cls) {
  if (cls.kind == UnitKind::NonUnit || !cls.zeta0_idx) {
    throw Error(ErrorCode::WrongType, "cannot recompose a non-unit classification");
  }
  GrElement r = ctx.teichmuller(*cls.zeta0_idx);
  if (cls.kind == UnitKind::Type1) {
    r = ctx.add(r, ctx.scale(ctx.teichmuller(cls.zeta1_idx.value()), ctx.p()));
  }
  return ctx.add(r, ctx.mul(p_power(ctx, 2), cls.z));
}

bool is_chain_ambient(const RingContext& ctx, const GrElement& gamma, int s) {
  if (s < 1) throw Error(ErrorCode::InvalidArgument, "s must be >= 1");
  const UnitClass cls = classify_unit(ctx, gamma);
  if (cls.kind == UnitKind::NonUnit) throw Error(ErrorCode::NotAUnit, "gamma must be a unit");
  if (ctx.a() == 1) return true;
  return cls.kind == UnitKind::Type1;
}

int inverse_product_depth(int a) {
  int a0 = 2;
  while ((1 << a0) < a) ++a0;
  return a0;
}

GrElement type1_inverse(const RingContext& ctx, const GrElement& gamma) {
  const UnitClass cls = classify_unit(ctx, gamma);
  if (cls.kind != UnitKind::Type1) throw Error(ErrorCode::WrongType, "gamma is not of Type(1)");
  const GrElement& zeta0_inv = teichmuller_inverse(ctx, *cls.zeta0_idx);
  const GrElement w = ctx.add(ctx.mul(zeta0_inv, ctx.teichmuller(*cls.zeta1_idx)),
                              ctx.scale(ctx.mul(zeta0_inv, cls.z), ctx.p()));
  const GrElement pw = ctx.scale(w, ctx.p());
  return ctx.mul(ctx.mul(zeta0_inv, ctx.sub(ctx.one(), pw)), doubling_product(ctx, pw));
}

GrElement type0_inverse(const RingContext& ctx, const GrElement& gamma) {
  const UnitClass cls = classify_unit(ctx, gamma);
  if (cls.kind != UnitKind::Type0) throw Error(ErrorCode::WrongType, "gamma is not of Type(0)");
  const GrElement& zeta0_inv = teichmuller_inverse(ctx, *cls.zeta0_idx);
  const GrElement p2w = ctx.mul(p_power(ctx, 2), ctx.mul(zeta0_inv, cls.z));
  return ctx.mul(ctx.mul(zeta0_inv, ctx.sub(ctx.one(), p2w)), doubling_product(ctx, p2w));
}

std::optional<UnitKind> type_product_class(UnitKind x, UnitKind y) {
  if (x == UnitKind::NonUnit || y == UnitKind::NonUnit) return UnitKind::NonUnit;
  if (x == UnitKind::Type0 && y == UnitKind::Type0) return UnitKind::Type0;
  if (x == UnitKind::Type1 && y == UnitKind::Type1) return std::nullopt;
  return UnitKind::Type1;
}

}  // namespace galring
