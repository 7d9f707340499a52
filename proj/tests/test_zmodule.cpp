#include <gtest/gtest.h>

#include <random>
#include <set>

#include "galring/zmodule.hpp"

using galring::Residue;
using galring::ZModule;

namespace {

using Row = std::vector<Residue>;

// Closure of the generators under addition and scaling, by breadth-first search.
std::set<Row> brute_span(Residue q, std::size_t width, const std::vector<Row>& gens) {
  std::set<Row> seen{Row(width, 0)};
  std::vector<Row> frontier{Row(width, 0)};
  while (!frontier.empty()) {
    std::vector<Row> next;
    for (const auto& v : frontier) {
      for (const auto& g : gens) {
        Row w(width);
        for (std::size_t k = 0; k < width; ++k) w[k] = (v[k] + g[k]) % q;
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

std::vector<Row> random_gens(std::mt19937_64& rng, Residue q, int p, std::size_t width, int count) {
  std::uniform_int_distribution<Residue> digit(0, q - 1);
  std::uniform_int_distribution<int> shape(0, 3);
  std::vector<Row> gens;
  for (int g = 0; g < count; ++g) {
    Row r(width);
    for (auto& c : r) c = digit(rng);
    // Push some generators into p * (module) so low-rank cases occur.
    if (shape(rng) == 0) for (auto& c : r) c = (c * p) % q;
    gens.push_back(r);
  }
  return gens;
}

struct Shape {
  int p, a;
  std::size_t width;
};

}  // namespace

TEST(ZModule, MatchesBruteForceSpan) {
  std::mt19937_64 rng(42);
  for (const Shape sh : {Shape{2, 2, 3}, Shape{2, 3, 3}, Shape{3, 2, 3}, Shape{2, 2, 4}, Shape{5, 1, 3}}) {
    Residue q = 1;
    for (int k = 0; k < sh.a; ++k) q *= sh.p;
    for (int trial = 0; trial < 40; ++trial) {
      const auto gens = random_gens(rng, q, sh.p, sh.width, 1 + trial % 3);
      const ZModule m(sh.p, sh.a, sh.width, gens);
      const auto span = brute_span(q, sh.width, gens);
      std::size_t size = 1;
      for (int k = 0; k < m.log_size(); ++k) size *= static_cast<std::size_t>(sh.p);
      ASSERT_EQ(size, span.size());
      // Membership agrees on every vector of the ambient space.
      Row v(sh.width, 0);
      for (;;) {
        EXPECT_EQ(m.contains(v), span.count(v) == 1);
        std::size_t k = 0;
        for (; k < sh.width; ++k) {
          if (++v[k] < q) break;
          v[k] = 0;
        }
        if (k == sh.width) break;
      }
    }
  }
}

TEST(ZModule, CanonicalFormDecidesEquality) {
  std::mt19937_64 rng(5);
  const int p = 2, a = 3;
  const Residue q = 8;
  for (int trial = 0; trial < 60; ++trial) {
    const auto gens = random_gens(rng, q, p, 3, 2);
    // Same span from a unimodular recombination of the generators.
    std::vector<Row> mixed = gens;
    for (std::size_t k = 0; k < 3; ++k) mixed[0][k] = (gens[0][k] + 3 * gens[1][k]) % q;
    const ZModule x(p, a, 3, gens);
    const ZModule y(p, a, 3, mixed);
    EXPECT_TRUE(x == y);
    EXPECT_TRUE(x.contains(y));
    EXPECT_TRUE(y.contains(x));
  }
}

TEST(ZModule, SumAndInclusion) {
  std::mt19937_64 rng(9);
  const int p = 3, a = 2;
  const Residue q = 9;
  for (int trial = 0; trial < 30; ++trial) {
    const auto g1 = random_gens(rng, q, p, 3, 1);
    const auto g2 = random_gens(rng, q, p, 3, 1);
    const ZModule x(p, a, 3, g1);
    const ZModule y(p, a, 3, g2);
    const ZModule s = x + y;
    std::vector<Row> both = g1;
    both.insert(both.end(), g2.begin(), g2.end());
    EXPECT_TRUE(s == ZModule(p, a, 3, both));
    EXPECT_TRUE(s.contains(x));
    EXPECT_TRUE(s.contains(y));
    EXPECT_EQ(x.contains(y), [&] {
      const auto sx = brute_span(q, 3, g1);
      for (const auto& v : brute_span(q, 3, g2)) if (!sx.count(v)) return false;
      return true;
    }());
  }
}

TEST(ZModule, ZeroModule) {
  const ZModule z = ZModule::zero(2, 2, 4);
  EXPECT_EQ(z.log_size(), 0);
  EXPECT_TRUE(z.contains(Row(4, 0)));
  EXPECT_FALSE(z.contains(Row{0, 2, 0, 0}));
  // The single vector 2e_1 over Z_4 spans {0, 2e_1}.
  const ZModule two(2, 2, 4, {Row{0, 2, 0, 0}});
  EXPECT_EQ(two.log_size(), 1);
  EXPECT_EQ(two.pivot_valuations(), std::vector<int>{1});
}
