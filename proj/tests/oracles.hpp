#pragma once

// Test-side reference implementations. They use nothing from the library but
// the parameters (p, a, h) and plain schoolbook arithmetic, so they share no
// code paths with what they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline std::int64_t mod(std::int64_t x, std::int64_t q) { return ((x % q) + q) % q; }

/// Z_q[u]/<h>, h monic of degree m, little-endian.
struct NaiveGR {
  int p, a, m;
  std::int64_t q;
  Vec h;

  NaiveGR(int p_, int a_, Vec h_) : p(p_), a(a_), m(static_cast<int>(h_.size()) - 1),
                                    q(ipow(p_, a_)), h(std::move(h_)) {}

  Vec zero() const { return Vec(m, 0); }
  Vec one() const { Vec v(m, 0); v[0] = 1; return v; }
  Vec from_int(std::int64_t c) const { Vec v(m, 0); v[0] = mod(c, q); return v; }

  Vec add(const Vec& x, const Vec& y) const {
    Vec r(m);
    for (int k = 0; k < m; ++k) r[k] = mod(x[k] + y[k], q);
    return r;
  }
  Vec sub(const Vec& x, const Vec& y) const {
    Vec r(m);
    for (int k = 0; k < m; ++k) r[k] = mod(x[k] - y[k], q);
    return r;
  }
  Vec mul(const Vec& x, const Vec& y) const {
    Vec t(2 * m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) t[i + j] = mod(t[i + j] + x[i] * y[j], q);
    for (int d = 2 * m - 1; d >= m; --d) {
      const std::int64_t c = t[d];
      if (c == 0) continue;
      for (int k = 0; k <= m; ++k) t[d - m + k] = mod(t[d - m + k] - c * h[k], q);
    }
    t.resize(m);
    return t;
  }
  Vec scale(const Vec& x, std::int64_t c) const {
    Vec r(m);
    for (int k = 0; k < m; ++k) r[k] = mod(x[k] * c, q);
    return r;
  }
  Vec pow(Vec x, std::uint64_t e) const {
    Vec r = one();
    for (std::uint64_t k = 0; k < e; ++k) r = mul(r, x);
    return r;
  }

  std::int64_t order() const { return ipow(q, m); }
  Vec at(std::int64_t idx) const {
    Vec v(m);
    for (int k = 0; k < m; ++k) { v[k] = idx % q; idx /= q; }
    return v;
  }
  std::vector<Vec> elements() const {
    std::vector<Vec> out;
    for (std::int64_t i = 0; i < order(); ++i) out.push_back(at(i));
    return out;
  }
  bool divisible_by_p(const Vec& x) const {
    return std::all_of(x.begin(), x.end(), [&](std::int64_t c) { return c % p == 0; });
  }
  /// Inverse by search; empty when none exists.
  Vec brute_inverse(const Vec& x) const {
    for (const auto& y : elements()) {
      if (mul(x, y) == one()) return y;
    }
    return {};
  }
  bool is_unit(const Vec& x) const { return !brute_inverse(x).empty(); }

  /// {t : t^{p^m} = t}, by search.
  std::vector<Vec> teichmuller_set() const {
    std::vector<Vec> out;
    for (const auto& x : elements()) {
      Vec y = x;
      // x^{p^m} by repeated p-th powers.
      for (int k = 0; k < m; ++k) y = pow(y, static_cast<std::uint64_t>(p));
      if (y == x) out.push_back(x);
    }
    return out;
  }

  /// x = sum_k t_k p^k with t_k Teichmuller, found digit by digit.
  std::vector<Vec> digits(Vec x, const std::vector<Vec>& teich) const {
    std::vector<Vec> out;
    for (int k = 0; k < a; ++k) {
      const Vec* pick = nullptr;
      for (const auto& t : teich) {
        if (divisible_by_p(sub(x, t))) { pick = &t; break; }
      }
      if (!pick) throw std::logic_error("no Teichmuller digit");
      out.push_back(*pick);
      Vec rest = sub(x, *pick);
      for (auto& c : rest) c /= p;  // exact: every coefficient is a multiple of p
      x = rest;
    }
    return out;
  }
};

/// The smallest monic irreducible of degree m over F_p, comparing coefficient
/// vectors as base-p numbers with the u^{m-1} coefficient most significant.
/// Irreducibility by trial division over all monic polynomials of lower degree.
inline Vec smallest_irreducible(int p, int m) {
  auto poly_mod_zero = [&](Vec f, const Vec& g) {
    // f mod g over F_p, g monic
    const int dg = static_cast<int>(g.size()) - 1;
    for (int d = static_cast<int>(f.size()) - 1; d >= dg; --d) {
      const std::int64_t c = mod(f[d], p);
      if (c == 0) continue;
      for (int k = 0; k <= dg; ++k) f[d - dg + k] = mod(f[d - dg + k] - c * g[k], p);
    }
    for (int k = 0; k < dg; ++k) if (mod(f[k], p) != 0) return false;
    return true;
  };
  const std::int64_t count = ipow(p, m);
  for (std::int64_t code = 0; code < count; ++code) {
    Vec f(m + 1, 0);
    f[m] = 1;
    std::int64_t c = code;
    for (int k = 0; k < m; ++k) { f[k] = c % p; c /= p; }
    bool irreducible = true;
    for (int d = 1; d <= m / 2 && irreducible; ++d) {
      for (std::int64_t gc = 0; gc < ipow(p, d) && irreducible; ++gc) {
        Vec g(d + 1, 0);
        g[d] = 1;
        std::int64_t t = gc;
        for (int k = 0; k < d; ++k) { g[k] = t % p; t /= p; }
        if (poly_mod_zero(f, g)) irreducible = false;
      }
    }
    if (irreducible) return f;
  }
  throw std::logic_error("no irreducible polynomial");
}

/// Words of length n over NaiveGR, multiplication modulo x^n - gamma.
struct NaiveAmbient {
  const NaiveGR& gr;
  int n;
  Vec gamma;

  using Poly = std::vector<Vec>;

  Poly zero() const { return Poly(n, gr.zero()); }
  Poly mul(const Poly& f, const Poly& g) const {
    Poly r = zero();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Vec c = gr.mul(f[i], g[j]);
        int k = i + j;
        if (k >= n) { k -= n; c = gr.mul(c, gamma); }
        r[k] = gr.add(r[k], c);
      }
    }
    return r;
  }
  /// (x - alpha)^i by repeated multiplication.
  Poly power_of_x_minus(const Vec& alpha, int i) const {
    Poly base = zero();
    base[0] = gr.sub(gr.zero(), alpha);
    if (n > 1) base[1] = gr.one(); else base[0] = gr.add(base[0], gamma);
    Poly r = zero();
    r[0] = gr.one();
    for (int k = 0; k < i; ++k) r = mul(r, base);
    return r;
  }
  std::int64_t size() const { return ipow(gr.order(), n); }
  Poly at(std::int64_t idx) const {
    Poly f(n);
    for (int k = 0; k < n; ++k) { f[k] = gr.at(idx % gr.order()); idx /= gr.order(); }
    return f;
  }
  /// The principal ideal {f g : f in R} as a set of words.
  std::set<Poly> multiples(const Poly& g) const {
    std::set<Poly> out;
    for (std::int64_t i = 0; i < size(); ++i) out.insert(mul(at(i), g));
    return out;
  }
};

/// Homogeneous weight on GR(p^a, m), a >= 2.
inline std::int64_t homogeneous_weight(const NaiveGR& gr, const Vec& x) {
  if (std::all_of(x.begin(), x.end(), [](std::int64_t c) { return c == 0; })) return 0;
  const std::int64_t top = gr.q / gr.p;
  const std::int64_t pm = ipow(gr.p, gr.m);
  const bool socle = std::all_of(x.begin(), x.end(), [&](std::int64_t c) { return c % top == 0; });
  return socle ? ipow(pm, gr.a - 1) : (pm - 1) * ipow(pm, gr.a - 2);
}

struct MinWeights {
  std::int64_t hamming = 0;
  std::int64_t homogeneous = 0;
};

inline MinWeights min_weights(const NaiveGR& gr, const std::set<NaiveAmbient::Poly>& words) {
  MinWeights best{0, 0};
  for (const auto& w : words) {
    std::int64_t ham = 0, hom = 0;
    for (const auto& c : w) {
      if (std::any_of(c.begin(), c.end(), [](std::int64_t v) { return v != 0; })) ++ham;
      if (gr.a >= 2) hom += homogeneous_weight(gr, c);
    }
    if (ham == 0) continue;
    if (best.hamming == 0 || ham < best.hamming) best.hamming = ham;
    if (gr.a >= 2 && (best.homogeneous == 0 || hom < best.homogeneous)) best.homogeneous = hom;
  }
  return best;
}

}  // namespace oracle
