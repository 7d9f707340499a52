#include "galring/galois_ring.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "galring/error.hpp"

namespace galring {
namespace {

constexpr int kMaxDegree = 32;

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

Residue mod(Residue v, Residue q) {
  v %= q;
  return v < 0 ? v + q : v;
}

// Multiplies x * y modulo (q, h) where h is monic of degree m = x.size().
void poly_mulmod(std::span<const Residue> x, std::span<const Residue> y,
                 std::span<const Residue> h, Residue q, std::span<Residue> out) {
  const std::size_t m = x.size();
  std::array<Residue, 2 * kMaxDegree> buf{};
  for (std::size_t i = 0; i < m; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) buf[i + j] = (buf[i + j] + x[i] * y[j]) % q;
  }
  for (std::size_t k = 2 * m - 1; k-- > m;) {
    const Residue c = buf[k];
    if (c == 0) continue;
    buf[k] = 0;
    for (std::size_t j = 0; j < m; ++j) buf[k - m + j] = mod(buf[k - m + j] - c * h[j], q);
  }
  std::copy_n(buf.begin(), m, out.begin());
}

std::vector<Residue> poly_powmod(std::vector<Residue> base, std::uint64_t e,
                                 std::span<const Residue> h, Residue q) {
  std::vector<Residue> result(base.size(), 0);
  result[0] = 1 % q;
  std::vector<Residue> tmp(base.size());
  while (e > 0) {
    if (e & 1) {
      poly_mulmod(result, base, h, q, tmp);
      result.swap(tmp);
    }
    e >>= 1;
    if (e > 0) {
      poly_mulmod(base, base, h, q, tmp);
      base.swap(tmp);
    }
  }
  return result;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Remainder of f by monic g over F_p; both little-endian, f is modified.
void poly_rem_fp(std::vector<Residue>& f, const std::vector<Residue>& g, Residue p) {
  const std::size_t dg = g.size() - 1;
  for (std::size_t k = f.size(); k-- > dg;) {
    const Residue c = f[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) f[k - dg + j] = mod(f[k - dg + j] - c * g[j], p);
  }
  f.resize(std::min(f.size(), dg));
}

std::vector<Residue> digits_base(std::uint64_t code, Residue base, std::size_t len) {
  std::vector<Residue> d(len);
  for (std::size_t k = 0; k < len; ++k) {
    d[k] = static_cast<Residue>(code % static_cast<std::uint64_t>(base));
    code /= static_cast<std::uint64_t>(base);
  }
  return d;
}

// Trial division by every monic polynomial of degree 1..m/2.
bool irreducible_fp(std::span<const Residue> h_monic, Residue p) {
  const std::size_t m = h_monic.size() - 1;
  for (std::size_t d = 1; 2 * d <= m; ++d) {
    const auto count = static_cast<std::uint64_t>(ipow(p, static_cast<int>(d)));
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Residue> g = digits_base(code, p, d);
      g.push_back(1);
      std::vector<Residue> f(h_monic.begin(), h_monic.end());
      poly_rem_fp(f, g, p);
      if (std::all_of(f.begin(), f.end(), [](Residue c) { return c == 0; })) return false;
    }
  }
  return true;
}

bool has_exact_order(std::span<const Residue> x, std::uint64_t order,
                     std::span<const Residue> h, Residue q,
                     const std::vector<std::uint64_t>& factors) {
  std::vector<Residue> base(x.begin(), x.end());
  auto is_one = [](const std::vector<Residue>& v) {
    return v[0] == 1 && std::all_of(v.begin() + 1, v.end(), [](Residue c) { return c == 0; });
  };
  if (!is_one(poly_powmod(base, order, h, q))) return false;
  for (std::uint64_t r : factors) {
    if (is_one(poly_powmod(base, order / r, h, q))) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void validate(const RingParams& params) {
  if (!is_prime(params.p)) {
    throw Error(ErrorCode::NonPrime, "p = " + std::to_string(params.p) + " is not prime");
  }
  if (params.a < 1 || params.m < 1) {
    throw Error(ErrorCode::InvalidArgument, "a and m must be >= 1");
  }
  if (params.m > kMaxDegree) {
    throw Error(ErrorCode::InvalidArgument, "m must be <= " + std::to_string(kMaxDegree));
  }
  std::int64_t q = 1;
  for (int i = 0; i < params.a; ++i) {
    q *= params.p;
    if (q >= (std::int64_t{1} << 31)) {
      throw Error(ErrorCode::InvalidArgument, "p^a must be < 2^31");
    }
  }
}

bool GrElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

RingPtr RingContext::build(const RingParams& params, const Budget& budget) {
  validate(params);
  auto ctx = std::shared_ptr<RingContext>(new RingContext());
  ctx->params_ = params;
  ctx->q_ = ipow(params.p, params.a);
  ctx->field_size_ = static_cast<std::uint64_t>(ipow(params.p, params.m));
  if (ctx->field_size_ - 1 > budget.teichmuller_table) {
    throw Error(ErrorCode::BudgetExceeded,
                "p^m - 1 = " + std::to_string(ctx->field_size_ - 1) + " exceeds the table cap");
  }
  const Residue p = params.p;
  const auto m = static_cast<std::size_t>(params.m);

  for (std::uint64_t code = 0;; ++code) {
    std::vector<Residue> h = digits_base(code, p, m);
    h.push_back(1);
    if (irreducible_fp(h, p)) {
      ctx->h_ = std::move(h);
      break;
    }
  }

  const std::uint64_t group_order = ctx->field_size_ - 1;
  const auto factors = prime_factors(group_order);
  bool found = false;
  for (std::uint64_t code = 1; code < ctx->field_size_ && !found; ++code) {
    std::vector<Residue> g = digits_base(code, p, m);
    if (!has_exact_order(g, group_order, ctx->h_, p, factors)) continue;
    // Teichmuller lift: iterate t <- t^{p^m} until it stabilizes.
    std::vector<Residue> t = g;
    for (int it = 0; it <= params.a + 1; ++it) {
      auto next = poly_powmod(t, ctx->field_size_, ctx->h_, ctx->q_);
      if (next == t) break;
      t = std::move(next);
    }
    if (has_exact_order(t, group_order, ctx->h_, ctx->q_, factors)) {
      ctx->zeta_ = GrElement(std::move(t));
      found = true;
    }
  }
  if (!found) {
    throw Error(ErrorCode::InvalidArgument, "no primitive Teichmuller element found");
  }
  ctx->build_tables(budget);
  return ctx;
}

RingPtr RingContext::from_parts(const RingParams& params, std::vector<Residue> h,
                                GrElement zeta, const Budget& budget) {
  validate(params);
  auto ctx = std::shared_ptr<RingContext>(new RingContext());
  ctx->params_ = params;
  ctx->q_ = ipow(params.p, params.a);
  ctx->field_size_ = static_cast<std::uint64_t>(ipow(params.p, params.m));
  if (ctx->field_size_ - 1 > budget.teichmuller_table) {
    throw Error(ErrorCode::BudgetExceeded, "p^m - 1 exceeds the table cap");
  }
  const auto m = static_cast<std::size_t>(params.m);
  if (h.size() != m + 1 || mod(h[m], ctx->q_) != 1) {
    throw Error(ErrorCode::InvalidArgument, "h must be monic of degree m");
  }
  for (auto& c : h) c = mod(c, ctx->q_);
  std::vector<Residue> h_bar(h.size());
  std::transform(h.begin(), h.end(), h_bar.begin(), [&](Residue c) { return c % params.p; });
  if (!irreducible_fp(h_bar, params.p)) {
    throw Error(ErrorCode::InvalidArgument, "h is not irreducible modulo p");
  }
  ctx->h_ = std::move(h);
  if (zeta.size() != m) throw Error(ErrorCode::ContextMismatch, "zeta has the wrong length");
  std::vector<Residue> z(zeta.coeffs().begin(), zeta.coeffs().end());
  for (auto& c : z) c = mod(c, ctx->q_);
  const std::uint64_t group_order = ctx->field_size_ - 1;
  if (!has_exact_order(z, group_order, ctx->h_, ctx->q_, prime_factors(group_order))) {
    throw Error(ErrorCode::InvalidArgument, "zeta does not have order p^m - 1");
  }
  ctx->zeta_ = GrElement(std::move(z));
  ctx->build_tables(budget);
  return ctx;
}

void RingContext::build_tables(const Budget&) {
  teich_.clear();
  teich_.reserve(field_size_);
  teich_.push_back(zero());
  GrElement power = one();
  for (std::uint64_t k = 0; k + 1 < field_size_; ++k) {
    teich_.push_back(power);
    power = mul(power, zeta_);
  }
  teich_log_.assign(field_size_, field_size_);
  for (std::size_t idx = 0; idx < teich_.size(); ++idx) {
    const auto code = residue_code(teich_[idx].coeffs());
    if (teich_log_[code] != field_size_) {
      throw Error(ErrorCode::InvalidArgument,
                  "Teichmuller elements are not pairwise incongruent mod p");
    }
    teich_log_[code] = idx;
  }
}

std::uint64_t RingContext::order() const {
  std::uint64_t n = 1;
  const auto q = static_cast<std::uint64_t>(q_);
  for (int i = 0; i < params_.m; ++i) {
    if (n > std::numeric_limits<std::uint64_t>::max() / 2 / q) {
      throw Error(ErrorCode::BudgetExceeded, "p^{am} does not fit in 63 bits");
    }
    n *= q;
  }
  return n;
}

bool RingContext::same_ring(const RingContext& other) const {
  return params_ == other.params_ && h_ == other.h_;
}

GrElement RingContext::zero() const {
  return GrElement(std::vector<Residue>(static_cast<std::size_t>(params_.m), 0));
}

GrElement RingContext::one() const { return from_int(1); }

GrElement RingContext::from_int(std::int64_t v) const {
  std::vector<Residue> c(static_cast<std::size_t>(params_.m), 0);
  c[0] = mod(v, q_);
  return GrElement(std::move(c));
}

GrElement RingContext::element(std::vector<Residue> coeffs) const {
  if (coeffs.size() != static_cast<std::size_t>(params_.m)) {
    throw Error(ErrorCode::ContextMismatch, "element must have exactly m coefficients");
  }
  for (auto& c : coeffs) c = mod(c, q_);
  return GrElement(std::move(coeffs));
}

void RingContext::check(const GrElement& x) const {
  if (x.size() != static_cast<std::size_t>(params_.m)) {
    throw Error(ErrorCode::ContextMismatch, "element length differs from m");
  }
  for (Residue c : x.coeffs()) {
    if (c < 0 || c >= q_) throw Error(ErrorCode::ContextMismatch, "coefficient not reduced mod p^a");
  }
}

GrElement RingContext::add(const GrElement& x, const GrElement& y) const {
  check(x);
  check(y);
  std::vector<Residue> out(x.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = (x[k] + y[k]) % q_;
  return GrElement(std::move(out));
}

GrElement RingContext::sub(const GrElement& x, const GrElement& y) const {
  check(x);
  check(y);
  std::vector<Residue> out(x.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = mod(x[k] - y[k], q_);
  return GrElement(std::move(out));
}

GrElement RingContext::neg(const GrElement& x) const { return sub(zero(), x); }

GrElement RingContext::mul(const GrElement& x, const GrElement& y) const {
  check(x);
  check(y);
  std::vector<Residue> out(x.size());
  mul_into(x.coeffs(), y.coeffs(), out);
  return GrElement(std::move(out));
}

GrElement RingContext::scale(const GrElement& x, Residue c) const {
  check(x);
  c = mod(c, q_);
  std::vector<Residue> out(x.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = x[k] * c % q_;
  return GrElement(std::move(out));
}

GrElement RingContext::pow(const GrElement& x, std::uint64_t e) const {
  check(x);
  return GrElement(poly_powmod(std::vector<Residue>(x.coeffs().begin(), x.coeffs().end()), e,
                               h_, q_));
}

void RingContext::mul_into(std::span<const Residue> x, std::span<const Residue> y,
                           std::span<Residue> out) const {
  if (params_.m == 1) {
    out[0] = x[0] * y[0] % q_;
    return;
  }
  poly_mulmod(x, y, h_, q_, out);
}

void RingContext::mul_acc(std::span<const Residue> x, std::span<const Residue> y,
                          std::span<Residue> out) const {
  if (params_.m == 1) {
    out[0] = (out[0] + x[0] * y[0]) % q_;
    return;
  }
  std::array<Residue, kMaxDegree> tmp{};
  poly_mulmod(x, y, h_, q_, std::span<Residue>(tmp.data(), x.size()));
  for (std::size_t k = 0; k < x.size(); ++k) out[k] = (out[k] + tmp[k]) % q_;
}

bool RingContext::is_zero_span(std::span<const Residue> x) const {
  return std::all_of(x.begin(), x.end(), [](Residue c) { return c == 0; });
}

std::uint64_t RingContext::residue_code(std::span<const Residue> x) const {
  std::uint64_t code = 0;
  for (std::size_t k = x.size(); k-- > 0;) {
    code = code * static_cast<std::uint64_t>(params_.p) +
           static_cast<std::uint64_t>(x[k] % params_.p);
  }
  return code;
}

std::size_t RingContext::teichmuller_index_of(const GrElement& x) const {
  check(x);
  return teich_log_[residue_code(x.coeffs())];
}

bool RingContext::is_unit(const GrElement& x) const { return teichmuller_index_of(x) != 0; }

const GrElement& RingContext::zeta_power(std::int64_t e) const {
  const auto n = static_cast<std::int64_t>(field_size_ - 1);
  return teich_[1 + static_cast<std::size_t>(mod(e, n))];
}

std::uint64_t RingContext::teichmuller_log(const GrElement& x) const {
  const std::size_t idx = teichmuller_index_of(x);
  if (idx == 0 || teich_[idx] != x) {
    throw Error(ErrorCode::NotTeichmuller, "element is not a nonzero Teichmuller representative");
  }
  return idx - 1;
}

GrElement RingContext::invert(const GrElement& x) const {
  const std::size_t idx = teichmuller_index_of(x);
  if (idx == 0) throw Error(ErrorCode::NotAUnit, "element is not a unit");
  GrElement y = zeta_power(-static_cast<std::int64_t>(idx - 1));
  const GrElement two = from_int(2);
  for (int precision = 1; precision < params_.a; precision *= 2) {
    y = mul(y, sub(two, mul(x, y)));
  }
  return y;
}

PadicCoords RingContext::p_adic_decompose(const GrElement& x) const {
  check(x);
  PadicCoords coords;
  coords.digits.reserve(static_cast<std::size_t>(params_.a));
  std::vector<Residue> cur(x.coeffs().begin(), x.coeffs().end());
  for (int k = 0; k < params_.a; ++k) {
    const std::size_t idx = teich_log_[residue_code(cur)];
    coords.digits.push_back(idx);
    const GrElement& t = teich_[idx];
    for (std::size_t j = 0; j < cur.size(); ++j) cur[j] = mod(cur[j] - t[j], q_) / params_.p;
  }
  return coords;
}

GrElement RingContext::recompose(const PadicCoords& coords) const {
  if (coords.digits.size() != static_cast<std::size_t>(params_.a)) {
    throw Error(ErrorCode::ContextMismatch, "expected a digits");
  }
  GrElement r = zero();
  Residue pk = 1;
  for (std::size_t idx : coords.digits) {
    if (idx >= teich_.size()) throw Error(ErrorCode::IndexOutOfRange, "bad Teichmuller index");
    r = add(r, scale(teich_[idx], pk));
    pk *= params_.p;
  }
  return r;
}

UnitPowerForm RingContext::unit_p_power_form(const GrElement& x) const {
  const PadicCoords coords = p_adic_decompose(x);
  const auto first = std::find_if(coords.digits.begin(), coords.digits.end(),
                                  [](std::size_t d) { return d != 0; });
  if (first == coords.digits.end()) throw Error(ErrorCode::ZeroElement, "zero has no vp^k form");
  const auto k = static_cast<int>(first - coords.digits.begin());
  PadicCoords shifted;
  shifted.digits.assign(coords.digits.size(), 0);
  std::copy(first, coords.digits.end(), shifted.digits.begin());
  return {recompose(shifted), k};
}

std::uint64_t RingContext::index_of(const GrElement& x) const {
  check(x);
  std::uint64_t index = 0;
  for (std::size_t k = x.size(); k-- > 0;) {
    index = index * static_cast<std::uint64_t>(q_) + static_cast<std::uint64_t>(x[k]);
  }
  return index;
}

GrElement RingContext::element_at(std::uint64_t index) const {
  return GrElement(digits_base(index, q_, static_cast<std::size_t>(params_.m)));
}

Budget with_cap(Budget b, std::uint64_t cap) {
  b.ring_elements = cap;
  b.codewords = cap;
  return b;
}

Budget budget_from_env() {
  Budget b;
  if (const char* env = std::getenv("GALRING_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b = with_cap(b, v);
  }
  return b;
}

}  // namespace galring
