#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "galring/ambient_ring.hpp"
#include "galring/constacodes.hpp"
#include "galring/error.hpp"
#include "oracles.hpp"

using namespace galring;

namespace {

oracle::Vec vec(const GrElement& x) { return {x.coeffs().begin(), x.coeffs().end()}; }

oracle::NaiveGR naive(const RingContext& ctx) {
  return {ctx.p(), ctx.a(), oracle::Vec(ctx.modulus_poly().begin(), ctx.modulus_poly().end())};
}

oracle::NaiveAmbient::Poly poly(const AmbientPoly& f) {
  oracle::NaiveAmbient::Poly out;
  for (std::size_t k = 0; k < f.length(); ++k) out.push_back(vec(f.element(k)));
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no galring::Error thrown";
  return ErrorCode::InvalidArgument;
}

std::vector<GrElement> units(const RingContext& ctx) {
  std::vector<GrElement> out;
  for (std::uint64_t k = 0; k < ctx.order(); ++k) {
    if (ctx.is_unit(ctx.element_at(k))) out.push_back(ctx.element_at(k));
  }
  return out;
}

AmbientPoly random_poly(const Ambient& amb, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> digit(0, amb.ring().modulus() - 1);
  AmbientPoly f = amb.zero();
  for (auto& c : f.flat()) c = digit(rng);
  return f;
}

struct Case {
  RingParams params;
  int s;
};

const std::vector<Case> kSmall = {{{2, 2, 1}, 1}, {{2, 2, 1}, 2}, {{2, 3, 1}, 1}, {{3, 2, 1}, 1},
                                  {{2, 2, 2}, 1}};

}  // namespace

TEST(Ambient, ArithmeticMatchesSchoolbook) {
  std::mt19937_64 rng(11);
  for (const Case& c : kSmall) {
    const auto ctx = RingContext::build(c.params);
    const auto gr = naive(*ctx);
    for (const auto& gamma : units(*ctx)) {
      const Ambient amb(ctx, c.s, gamma);
      const oracle::NaiveAmbient ref{gr, static_cast<int>(amb.length()), vec(gamma)};
      for (int t = 0; t < 30; ++t) {
        const AmbientPoly f = random_poly(amb, rng);
        const AmbientPoly g = random_poly(amb, rng);
        const AmbientPoly h = random_poly(amb, rng);
        EXPECT_EQ(poly(amb.mul(f, g)), ref.mul(poly(f), poly(g)));
        EXPECT_EQ(amb.mul(f, amb.add(g, h)), amb.add(amb.mul(f, g), amb.mul(f, h)));
        EXPECT_EQ(amb.mul(amb.mul(f, g), h), amb.mul(f, amb.mul(g, h)));
        EXPECT_EQ(amb.sub(amb.add(f, g), g), f);
        EXPECT_EQ(amb.decode(amb.encode(f.flat())), f);
        // x * f is the constacyclic shift of f.
        EXPECT_EQ(amb.mul(amb.x(), f), constacyclic_shift(*ctx, f, gamma));
      }
      EXPECT_EQ(amb.pow(amb.x(), amb.length()), amb.constant(gamma));
    }
  }
}

TEST(Ambient, RejectsNonUnitGamma) {
  const auto z4 = RingContext::build({2, 2, 1});
  EXPECT_EQ(code_of([&] { Ambient(z4, 1, z4->from_int(2)); }), ErrorCode::NotAUnit);
}

TEST(Ambient, AlphaIsTeichmullerRoot) {
  for (const Case& c : kSmall) {
    const auto ctx = RingContext::build(c.params);
    const auto gr = naive(*ctx);
    const auto teich = gr.teichmuller_set();
    for (const auto& gamma : units(*ctx)) {
      const UnitClass cls = classify_unit(*ctx, gamma);
      const GrElement alpha = solve_alpha(*ctx, cls, c.s);
      std::uint64_t ps = 1;
      for (int k = 0; k < c.s; ++k) ps *= static_cast<std::uint64_t>(c.params.p);
      EXPECT_EQ(ctx->pow(alpha, ps), ctx->teichmuller(*cls.zeta0_idx));
      EXPECT_NE(std::find(teich.begin(), teich.end(), vec(alpha)), teich.end());
    }
  }
}

TEST(Ambient, NilpotencyExamples) {
  const auto z4 = RingContext::build({2, 2, 1});
  const Ambient neg(z4, 2, z4->from_int(3));
  EXPECT_EQ(nilpotency_index(neg, neg.x_minus(z4->one())), 8);
  EXPECT_FALSE(nilpotency_index(neg, neg.one()).has_value());
  EXPECT_EQ(nilpotency_index(neg, neg.constant(z4->from_int(2))), 2);
  // Type(0), z = 0: 2*4 - 1*2.
  const Ambient cyc(z4, 2, z4->one());
  EXPECT_EQ(nilpotency_index(cyc, cyc.x_minus(z4->one())), 6);
  // Z8, s = 1, gamma = 1: (x-1)^k = (-2)^{k-1} (x-1), zero first at k = 4.
  const auto z8 = RingContext::build({2, 3, 1});
  const Ambient c8(z8, 1, z8->one());
  EXPECT_EQ(nilpotency_index(c8, c8.x_minus(z8->one())), 4);
}

TEST(Ambient, UnitTestByIdealSize) {
  std::mt19937_64 rng(3);
  const auto z4 = RingContext::build({2, 2, 1});
  const auto gr = naive(*z4);
  const Ambient amb(z4, 1, z4->from_int(3));
  const oracle::NaiveAmbient ref{gr, 2, vec(z4->from_int(3))};
  for (std::int64_t i = 0; i < ref.size(); ++i) {
    const AmbientPoly f = amb.decode(static_cast<std::uint64_t>(i));
    bool invertible = false;
    for (std::int64_t j = 0; j < ref.size() && !invertible; ++j) {
      auto prod = ref.mul(poly(f), ref.at(j));
      invertible = prod == poly(amb.one());
    }
    EXPECT_EQ(amb.is_unit(f), invertible);
  }
}

TEST(Ambient, IdealMatchesMultiples) {
  std::mt19937_64 rng(21);
  for (const Case& c : kSmall) {
    const auto ctx = RingContext::build(c.params);
    const auto gr = naive(*ctx);
    const GrElement gamma = units(*ctx).back();
    const Ambient amb(ctx, c.s, gamma);
    const oracle::NaiveAmbient ref{gr, static_cast<int>(amb.length()), vec(gamma)};
    if (ref.size() > 4096) continue;
    for (int t = 0; t < 8; ++t) {
      AmbientPoly g = random_poly(amb, rng);
      if (t % 2 == 1) g = amb.mul(g, amb.constant(ctx->from_int(ctx->p())));
      const auto multiples = ref.multiples(poly(g));
      const auto listed = amb.enumerate_ideal({g}, 1u << 20);
      ASSERT_EQ(listed.size(), multiples.size());
      for (std::uint64_t code : listed) EXPECT_EQ(multiples.count(poly(amb.decode(code))), 1u);
      int log = 0;
      for (std::size_t n = multiples.size(); n > 1; n /= static_cast<std::size_t>(ctx->p())) ++log;
      EXPECT_EQ(amb.ideal(g).log_size(), log);
    }
  }
}

TEST(Ambient, EnumerationRespectsCap) {
  const auto z4 = RingContext::build({2, 2, 1});
  const Ambient amb(z4, 2, z4->from_int(3));
  EXPECT_EQ(code_of([&] { amb.enumerate_ideal({amb.one()}, 100); }), ErrorCode::BudgetExceeded);
}

TEST(Chain, StructuralAgreesWithExhaustive) {
  const std::vector<Case> cases = {{{2, 2, 1}, 1}, {{2, 2, 1}, 2}, {{2, 3, 1}, 1},
                                   {{3, 2, 1}, 1}, {{2, 2, 2}, 1}};
  Budget budget;
  budget.chain_exhaustive = 1u << 12;
  for (const Case& c : cases) {
    const auto ctx = RingContext::build(c.params);
    for (const auto& gamma : units(*ctx)) {
      const Ambient amb(ctx, c.s, gamma);
      const ChainReport ex = verify_chain_structure(amb, budget, ChainMethod::Exhaustive);
      const ChainReport st = verify_chain_structure(amb, budget, ChainMethod::Structural, 300);
      EXPECT_EQ(ex.method, ChainMethod::Exhaustive);
      EXPECT_EQ(st.method, ChainMethod::Structural);
      EXPECT_EQ(ex.is_chain, st.is_chain);
      EXPECT_EQ(ex.maximal_ideal_principal, st.maximal_ideal_principal);
      EXPECT_EQ(ex.p_in_x_minus_alpha, st.p_in_x_minus_alpha);
      EXPECT_EQ(ex.x_minus_alpha_in_p, st.x_minus_alpha_in_p);
      EXPECT_EQ(ex.power_chain_length, st.power_chain_length);
      EXPECT_EQ(ex.is_chain, is_chain_ambient(*ctx, gamma, c.s));
      if (ex.is_chain) {
        EXPECT_EQ(ex.ideal_log_sizes, st.ideal_log_sizes);
        EXPECT_TRUE(ex.matches_power_chain);
        EXPECT_TRUE(st.matches_power_chain);
      }
    }
  }
}

TEST(Chain, Z4Examples) {
  const auto z4 = RingContext::build({2, 2, 1});
  const Ambient neg(z4, 2, z4->from_int(3));
  const ChainReport r = verify_chain_structure(neg);
  EXPECT_TRUE(r.is_chain);
  EXPECT_EQ(r.ideal_count, 9u);
  EXPECT_EQ(r.ideal_log_sizes, (std::vector<int>{8, 7, 6, 5, 4, 3, 2, 1, 0}));
  EXPECT_TRUE(r.maximal_ideal_principal);
  // <(x-1)^4> = <2>
  EXPECT_TRUE(neg.ideal(neg.pow(neg.x_minus(z4->one()), 4)) ==
              neg.ideal(neg.constant(z4->from_int(2))));

  const Ambient cyc(z4, 2, z4->one());
  const ChainReport c = verify_chain_structure(cyc);
  EXPECT_FALSE(c.is_chain);
  EXPECT_FALSE(c.maximal_ideal_principal);
  EXPECT_FALSE(c.p_in_x_minus_alpha);
  EXPECT_FALSE(c.x_minus_alpha_in_p);
}

TEST(Chain, ExhaustiveOverBudgetThrows) {
  const auto z9 = RingContext::build({3, 2, 1});
  const Ambient amb(z9, 2, z9->from_int(2));
  EXPECT_EQ(code_of([&] { verify_chain_structure(amb, Budget{}, ChainMethod::Exhaustive); }),
            ErrorCode::BudgetExceeded);
}

TEST(Freshman, HoldsForAllUnits) {
  for (const Case& c : kSmall) {
    const auto ctx = RingContext::build(c.params);
    for (const auto& gamma : units(*ctx)) {
      const Ambient amb(ctx, c.s, gamma);
      for (const auto& b : units(*ctx)) {
        for (int n = 1; n <= c.s; ++n) EXPECT_TRUE(freshman_congruence_check(amb, b, n));
      }
    }
  }
  const auto z4 = RingContext::build({2, 2, 1});
  const Ambient amb(z4, 1, z4->from_int(3));
  EXPECT_EQ(code_of([&] { freshman_congruence_check(amb, z4->from_int(2), 1); }),
            ErrorCode::NotAUnit);
  EXPECT_EQ(code_of([&] { freshman_congruence_check(amb, z4->one(), 2); }),
            ErrorCode::IndexOutOfRange);
}
