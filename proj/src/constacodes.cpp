#include "galring/constacodes.hpp"

#include <algorithm>
#include <unordered_set>

#include "galring/error.hpp"

namespace galring {
namespace {

bool zeta0_self_inverse(const RingContext& ctx, const UnitClass& cls) {
  const auto e = static_cast<std::int64_t>(*cls.zeta0_idx - 1);
  return ctx.zeta_power(e) == ctx.zeta_power(-e);
}

std::vector<AmbientPoly> spanning_set(const ConstaCode& code) {
  const Ambient& amb = code.ambient();
  std::vector<AmbientPoly> gens;
  for (const auto& b : amb.basis()) gens.push_back(amb.mul(b, code.generator()));
  return gens;
}

}  // namespace

AmbientPtr make_ambient(RingPtr ctx, int s, GrElement gamma) {
  return std::make_shared<const Ambient>(std::move(ctx), s, std::move(gamma));
}

ConstaCode ConstaCode::build(AmbientPtr ambient, int i) {
  if (!ambient) throw Error(ErrorCode::InvalidArgument, "null ambient");
  if (ambient->gamma_class().kind != UnitKind::Type1) {
    throw Error(ErrorCode::TypeMismatch, "constacyclic codes are built over Type(1) gamma only");
  }
  const int max_i = ambient->ring().a() * static_cast<int>(ambient->length());
  if (i < 0 || i > max_i) {
    throw Error(ErrorCode::IndexOutOfRange,
                "i = " + std::to_string(i) + " outside [0, " + std::to_string(max_i) + "]");
  }
  GrElement alpha = solve_alpha(ambient->ring(), ambient->gamma_class(), ambient->s());
  AmbientPoly generator =
      ambient->pow(ambient->x_minus(alpha), static_cast<std::uint64_t>(i));
  return ConstaCode(std::move(ambient), std::move(alpha), i, std::move(generator));
}

int ConstaCode::max_index() const {
  return ambient_->ring().a() * static_cast<int>(ambient_->length());
}

int ConstaCode::log_cardinality() const { return ambient_->ring().m() * (max_index() - i_); }

std::uint64_t ConstaCode::cardinality() const {
  const int e = log_cardinality();
  const auto p = static_cast<std::uint64_t>(ambient_->ring().p());
  std::uint64_t n = 1;
  for (int k = 0; k < e; ++k) {
    if (n > (std::uint64_t{1} << 62) / p) {
      throw Error(ErrorCode::BudgetExceeded, "cardinality does not fit in 63 bits");
    }
    n *= p;
  }
  return n;
}

CodewordSet enumerate_codewords(const ConstaCode& code, const Budget& budget) {
  return code.ambient().enumerate_span(spanning_set(code), budget.codewords);
}

ConstaCode dual_code(const ConstaCode& code) {
  const Ambient& amb = code.ambient();
  const GrElement gamma_inv = type1_inverse(amb.ring(), amb.gamma());
  auto dual_amb = make_ambient(amb.ring_ptr(), amb.s(), gamma_inv);
  return ConstaCode::build(std::move(dual_amb), code.max_index() - code.index());
}

GrElement inner_product(const RingContext& ctx, const AmbientPoly& x, const AmbientPoly& y) {
  if (x.length() != y.length() || x.m() != y.m()) {
    throw Error(ErrorCode::ParamsMismatch, "words of different shapes");
  }
  std::vector<Residue> acc(x.m(), 0);
  for (std::size_t k = 0; k < x.length(); ++k) ctx.mul_acc(x.coeff(k), y.coeff(k), acc);
  return GrElement(std::move(acc));
}

CodewordSet brute_force_dual(const ConstaCode& code, const Budget& budget) {
  const Ambient& amb = code.ambient();
  const RingContext& ctx = amb.ring();
  std::uint64_t space = 0;
  try {
    space = amb.size();
  } catch (const Error&) {
    space = budget.dual_space + 1;
  }
  if (space > budget.dual_space) {
    throw Error(ErrorCode::BudgetExceeded, "word space exceeds the dual-oracle budget");
  }
  // Orthogonality to the spanning set is orthogonality to every codeword.
  const std::vector<AmbientPoly> words = spanning_set(code);
  CodewordSet dual;
  for (std::uint64_t w = 0; w < space; ++w) {
    const AmbientPoly candidate = amb.decode(w);
    const bool orthogonal = std::all_of(words.begin(), words.end(), [&](const AmbientPoly& c) {
      return inner_product(ctx, candidate, c).is_zero();
    });
    if (orthogonal) dual.push_back(w);
  }
  return dual;
}

bool is_self_orthogonal(const ConstaCode& code) {
  const Ambient& amb = code.ambient();
  const int a = amb.ring().a();
  const int ps = static_cast<int>(amb.length());
  if (zeta0_self_inverse(amb.ring(), amb.gamma_class())) {
    return code.index() >= (a * ps + 1) / 2;
  }
  return code.index() >= ((a + 1) / 2) * ps;
}

bool self_orthogonal_oracle(const ConstaCode& code, const Budget& budget) {
  const Ambient& amb = code.ambient();
  const auto gens = spanning_set(code);
  for (std::uint64_t c : enumerate_codewords(code, budget)) {
    const AmbientPoly word = amb.decode(c);
    for (const auto& g : gens) {
      if (!inner_product(amb.ring(), word, g).is_zero()) return false;
    }
  }
  return true;
}

std::vector<ConstaCode> self_dual_codes(const AmbientPtr& ambient) {
  if (ambient->gamma_class().kind != UnitKind::Type1) {
    throw Error(ErrorCode::TypeMismatch, "gamma must be of Type(1)");
  }
  const RingContext& ctx = ambient->ring();
  const int a = ctx.a();
  const int ps = static_cast<int>(ambient->length());
  const bool exists = zeta0_self_inverse(ctx, ambient->gamma_class()) ? (a * ctx.p()) % 2 == 0
                                                                       : a % 2 == 0;
  if (!exists) return {};
  // a p^s / 2 is an integer in both branches; for even a it is <p^{a/2}>.
  return {ConstaCode::build(ambient, a * ps / 2)};
}

bool is_gamma2_constacyclic(const ConstaCode& code, const GrElement& gamma2, const Budget& budget) {
  const Ambient& amb = code.ambient();
  const CodewordSet words = enumerate_codewords(code, budget);
  for (std::uint64_t c : words) {
    const AmbientPoly shifted = constacyclic_shift(amb.ring(), amb.decode(c), gamma2);
    if (!std::binary_search(words.begin(), words.end(), amb.encode(shifted.flat()))) return false;
  }
  return true;
}

}  // namespace galring
