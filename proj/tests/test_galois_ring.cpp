#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "galring/error.hpp"
#include "galring/galois_ring.hpp"
#include "oracles.hpp"

using namespace galring;

namespace {

oracle::Vec vec(const GrElement& x) { return {x.coeffs().begin(), x.coeffs().end()}; }

oracle::NaiveGR naive(const RingContext& ctx) {
  return {ctx.p(), ctx.a(), oracle::Vec(ctx.modulus_poly().begin(), ctx.modulus_poly().end())};
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

const std::vector<RingParams> kSmallRings = {
    {2, 1, 1}, {2, 2, 1}, {2, 3, 1}, {3, 2, 1}, {2, 2, 2}, {2, 3, 2}, {3, 2, 2}, {2, 1, 3}, {5, 2, 1},
};

}  // namespace

TEST(RingParams, RejectsBadInput) {
  EXPECT_EQ(code_of([] { validate({4, 2, 1}); }), ErrorCode::NonPrime);
  EXPECT_EQ(code_of([] { validate({1, 2, 1}); }), ErrorCode::NonPrime);
  EXPECT_EQ(code_of([] { validate({2, 0, 1}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { validate({2, 1, 0}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { validate({2, 31, 1}); }), ErrorCode::InvalidArgument);
  EXPECT_NO_THROW(validate({3, 3, 2}));
}

TEST(RingContext, ModulusIsSmallestIrreducible) {
  for (const auto& params : kSmallRings) {
    const auto ctx = RingContext::build(params);
    const auto want = oracle::smallest_irreducible(params.p, params.m);
    EXPECT_EQ(oracle::Vec(ctx->modulus_poly().begin(), ctx->modulus_poly().end()), want)
        << params.p << " " << params.m;
  }
  // Frozen from the search above.
  const auto c = RingContext::build({2, 1, 3});
  EXPECT_EQ(oracle::Vec(c->modulus_poly().begin(), c->modulus_poly().end()),
            (oracle::Vec{1, 1, 0, 1}));
  const auto d = RingContext::build({3, 2, 2});
  EXPECT_EQ(oracle::Vec(d->modulus_poly().begin(), d->modulus_poly().end()),
            (oracle::Vec{1, 0, 1}));
}

TEST(RingContext, ZetaHasFullOrder) {
  for (const auto& params : kSmallRings) {
    const auto ctx = RingContext::build(params);
    const auto gr = naive(*ctx);
    const auto z = vec(ctx->zeta());
    const std::int64_t n = oracle::ipow(params.p, params.m) - 1;
    EXPECT_EQ(gr.pow(z, n), gr.one());
    for (std::int64_t d = 1; d < n; ++d) {
      if (n % d == 0) {
        EXPECT_NE(gr.pow(z, d), gr.one()) << "order divides " << d;
      }
    }
  }
}

TEST(RingContext, TeichmullerSetMatchesSearch) {
  for (const auto& params : kSmallRings) {
    const auto ctx = RingContext::build(params);
    const auto gr = naive(*ctx);
    auto want = gr.teichmuller_set();
    std::vector<oracle::Vec> got;
    for (std::size_t k = 0; k < ctx->teichmuller_count(); ++k) got.push_back(vec(ctx->teichmuller(k)));
    EXPECT_EQ(got.front(), gr.zero());
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, want);
    for (std::size_t k = 1; k < ctx->teichmuller_count(); ++k) {
      EXPECT_EQ(ctx->teichmuller(k), ctx->zeta_power(static_cast<std::int64_t>(k) - 1));
      EXPECT_EQ(ctx->teichmuller_log(ctx->teichmuller(k)), k - 1);
      EXPECT_EQ(ctx->teichmuller_index_of(ctx->teichmuller(k)), k);
    }
  }
}

TEST(RingContext, TeichmullerLogRejectsOthers) {
  const auto ctx = RingContext::build({2, 2, 1});
  EXPECT_EQ(code_of([&] { ctx->teichmuller_log(ctx->from_int(3)); }), ErrorCode::NotTeichmuller);
  EXPECT_EQ(code_of([&] { ctx->teichmuller_log(ctx->zero()); }), ErrorCode::NotTeichmuller);
}

TEST(RingContext, ArithmeticMatchesSchoolbook) {
  std::mt19937_64 rng(7);
  for (const auto& params : kSmallRings) {
    const auto ctx = RingContext::build(params);
    const auto gr = naive(*ctx);
    std::uniform_int_distribution<std::uint64_t> pick(0, ctx->order() - 1);
    for (int t = 0; t < 300; ++t) {
      const GrElement x = ctx->element_at(pick(rng));
      const GrElement y = ctx->element_at(pick(rng));
      const GrElement z = ctx->element_at(pick(rng));
      EXPECT_EQ(vec(ctx->mul(x, y)), gr.mul(vec(x), vec(y)));
      EXPECT_EQ(vec(ctx->add(x, y)), gr.add(vec(x), vec(y)));
      EXPECT_EQ(vec(ctx->sub(x, y)), gr.sub(vec(x), vec(y)));
      // Ring axioms.
      EXPECT_EQ(ctx->mul(x, ctx->add(y, z)), ctx->add(ctx->mul(x, y), ctx->mul(x, z)));
      EXPECT_EQ(ctx->mul(ctx->mul(x, y), z), ctx->mul(x, ctx->mul(y, z)));
      EXPECT_EQ(ctx->mul(x, y), ctx->mul(y, x));
      EXPECT_EQ(ctx->add(x, ctx->neg(x)), ctx->zero());
      EXPECT_EQ(vec(ctx->pow(x, 5)), gr.pow(vec(x), 5));
    }
  }
}

TEST(RingContext, InverseMatchesSearch) {
  for (const auto& params : kSmallRings) {
    const auto ctx = RingContext::build(params);
    const auto gr = naive(*ctx);
    for (std::uint64_t k = 0; k < ctx->order(); ++k) {
      const GrElement x = ctx->element_at(k);
      const auto inv = gr.brute_inverse(vec(x));
      EXPECT_EQ(ctx->is_unit(x), !inv.empty());
      if (inv.empty()) {
        EXPECT_EQ(code_of([&] { ctx->invert(x); }), ErrorCode::NotAUnit);
      } else {
        EXPECT_EQ(vec(ctx->invert(x)), inv);
      }
    }
  }
}

TEST(RingContext, PadicDigitsMatchGreedySearch) {
  for (const auto& params : kSmallRings) {
    const auto ctx = RingContext::build(params);
    const auto gr = naive(*ctx);
    const auto teich = gr.teichmuller_set();
    for (std::uint64_t k = 0; k < ctx->order(); ++k) {
      const GrElement x = ctx->element_at(k);
      const PadicCoords c = ctx->p_adic_decompose(x);
      ASSERT_EQ(c.digits.size(), static_cast<std::size_t>(params.a));
      const auto want = gr.digits(vec(x), teich);
      for (int d = 0; d < params.a; ++d) {
        EXPECT_EQ(vec(ctx->teichmuller(c.digits[d])), want[d]);
      }
      EXPECT_EQ(ctx->recompose(c), x);
    }
  }
}

TEST(RingContext, UnitPowerForm) {
  for (const auto& params : kSmallRings) {
    const auto ctx = RingContext::build(params);
    for (std::uint64_t k = 1; k < ctx->order(); ++k) {
      const GrElement x = ctx->element_at(k);
      const UnitPowerForm f = ctx->unit_p_power_form(x);
      EXPECT_TRUE(ctx->is_unit(f.unit));
      EXPECT_GE(f.valuation, 0);
      EXPECT_LT(f.valuation, params.a);
      GrElement back = f.unit;
      for (int v = 0; v < f.valuation; ++v) back = ctx->scale(back, params.p);
      EXPECT_EQ(back, x);
    }
    EXPECT_EQ(code_of([&] { ctx->unit_p_power_form(ctx->zero()); }), ErrorCode::ZeroElement);
  }
}

TEST(RingContext, Z4SpecExamples) {
  const auto ctx = RingContext::build({2, 2, 1});
  EXPECT_EQ(ctx->order(), 4u);
  EXPECT_EQ(ctx->invert(ctx->from_int(3)), ctx->from_int(3));
  // 3 = 1 + 2*1
  const PadicCoords c = ctx->p_adic_decompose(ctx->from_int(3));
  EXPECT_EQ(ctx->teichmuller(c.digits[0]), ctx->one());
  EXPECT_EQ(ctx->teichmuller(c.digits[1]), ctx->one());
  const UnitPowerForm f = ctx->unit_p_power_form(ctx->from_int(2));
  EXPECT_EQ(f.valuation, 1);
  EXPECT_EQ(f.unit, ctx->one());
}

TEST(RingContext, IndexRoundTrip) {
  const auto ctx = RingContext::build({3, 2, 2});
  for (std::uint64_t k = 0; k < ctx->order(); ++k) EXPECT_EQ(ctx->index_of(ctx->element_at(k)), k);
  const auto z4 = RingContext::build({2, 2, 1});
  EXPECT_EQ(z4->index_of(z4->from_int(3)), 3u);
}

TEST(RingContext, FromPartsValidates) {
  const auto ctx = RingContext::build({2, 2, 2});
  const std::vector<Residue> h(ctx->modulus_poly().begin(), ctx->modulus_poly().end());
  const auto same = RingContext::from_parts({2, 2, 2}, h, ctx->zeta());
  EXPECT_TRUE(same->same_ring(*ctx));
  // u^2 + 1 = (u + 1)^2 mod 2
  EXPECT_EQ(code_of([&] { RingContext::from_parts({2, 2, 2}, {1, 0, 1}, ctx->zeta()); }),
            ErrorCode::InvalidArgument);
  // 1 has order 1, not 3.
  EXPECT_EQ(code_of([&] { RingContext::from_parts({2, 2, 2}, h, ctx->one()); }),
            ErrorCode::InvalidArgument);
}

TEST(RingContext, ContextMismatchAndBudget) {
  const auto a = RingContext::build({2, 2, 1});
  const auto b = RingContext::build({2, 3, 1});
  EXPECT_FALSE(a->same_ring(*b));
  EXPECT_EQ(code_of([&] { a->check(GrElement({5})); }), ErrorCode::ContextMismatch);
  EXPECT_EQ(code_of([&] { a->check(GrElement({1, 0})); }), ErrorCode::ContextMismatch);
  Budget tight;
  tight.teichmuller_table = 2;
  EXPECT_EQ(code_of([&] { RingContext::build({2, 1, 2}, tight); }), ErrorCode::BudgetExceeded);
}

TEST(Budget, EnvironmentOverride) {
  setenv("GALRING_BUDGET", "1234", 1);
  const Budget b = budget_from_env();
  EXPECT_EQ(b.codewords, 1234u);
  EXPECT_EQ(b.ring_elements, 1234u);
  unsetenv("GALRING_BUDGET");
  EXPECT_EQ(budget_from_env().codewords, Budget{}.codewords);
}
