#include "galring/ambient_ring.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <unordered_set>

#include "galring/error.hpp"

namespace galring {
namespace {

Residue mod(Residue v, Residue q) {
  v %= q;
  return v < 0 ? v + q : v;
}

std::int64_t inverse_mod(std::int64_t u, std::int64_t n) {
  std::int64_t r0 = n, r1 = mod(u, n), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t t = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - t * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - t * s1);
  }
  return mod(s0, n);
}

// Additive order of a flat vector over Z_{p^a}.
Residue additive_order(std::span<const Residue> v, int p, Residue q) {
  Residue order = 1;
  for (Residue c : v) {
    if (c == 0) continue;
    Residue o = q;
    Residue t = c;
    while (t % p == 0) {
      t /= p;
      o /= p;
    }
    order = std::max(order, o);
  }
  return order;
}

}  // namespace

bool AmbientPoly::is_zero() const {
  return std::all_of(flat_.begin(), flat_.end(), [](Residue c) { return c == 0; });
}

Ambient::Ambient(RingPtr ctx, int s, GrElement gamma)
    : ctx_(std::move(ctx)), s_(s), gamma_(std::move(gamma)) {
  if (!ctx_) throw Error(ErrorCode::InvalidArgument, "null ring context");
  if (s < 1) throw Error(ErrorCode::InvalidArgument, "s must be >= 1");
  ctx_->check(gamma_);
  n_ = 1;
  for (int i = 0; i < s; ++i) {
    n_ *= static_cast<std::size_t>(ctx_->p());
    if (n_ > (std::size_t{1} << 20)) throw Error(ErrorCode::BudgetExceeded, "p^s is too large");
  }
  gamma_class_ = classify_unit(*ctx_, gamma_);
  if (gamma_class_.kind == UnitKind::NonUnit) {
    throw Error(ErrorCode::NotAUnit, "gamma must be a unit");
  }
}

int Ambient::log_size() const { return ctx_->a() * static_cast<int>(width()); }

std::uint64_t Ambient::size() const {
  std::uint64_t n = 1;
  const auto q = static_cast<std::uint64_t>(ctx_->modulus());
  for (std::size_t i = 0; i < width(); ++i) {
    if (n > (std::numeric_limits<std::uint64_t>::max() >> 1) / q) {
      throw Error(ErrorCode::BudgetExceeded, "|R| does not fit in 63 bits");
    }
    n *= q;
  }
  return n;
}

bool Ambient::same_params(const Ambient& other) const {
  return ctx_->same_ring(*other.ctx_) && s_ == other.s_ && gamma_ == other.gamma_;
}

void Ambient::check(const AmbientPoly& f) const {
  if (f.m() != static_cast<std::size_t>(ctx_->m()) || f.length() != n_) {
    throw Error(ErrorCode::ParamsMismatch, "polynomial does not belong to this ambient ring");
  }
}

AmbientPoly Ambient::zero() const { return AmbientPoly(n_, static_cast<std::size_t>(ctx_->m())); }

AmbientPoly Ambient::one() const { return constant(ctx_->one()); }

AmbientPoly Ambient::x() const { return monomial(ctx_->one(), 1); }

AmbientPoly Ambient::constant(const GrElement& c) const { return monomial(c, 0); }

AmbientPoly Ambient::monomial(const GrElement& c, std::size_t k) const {
  ctx_->check(c);
  AmbientPoly f = zero();
  // x^{p^s} = gamma
  GrElement coeff = c;
  while (k >= n_) {
    coeff = ctx_->mul(coeff, gamma_);
    k -= n_;
  }
  std::copy(coeff.coeffs().begin(), coeff.coeffs().end(), f.coeff(k).begin());
  return f;
}

AmbientPoly Ambient::from_elements(const std::vector<GrElement>& coeffs) const {
  if (coeffs.size() > n_) throw Error(ErrorCode::ParamsMismatch, "too many coefficients");
  AmbientPoly f = zero();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    ctx_->check(coeffs[k]);
    std::copy(coeffs[k].coeffs().begin(), coeffs[k].coeffs().end(), f.coeff(k).begin());
  }
  return f;
}

AmbientPoly Ambient::x_minus(const GrElement& c) const {
  return sub(x(), constant(c));
}

AmbientPoly Ambient::add(const AmbientPoly& f, const AmbientPoly& g) const {
  check(f);
  check(g);
  AmbientPoly out = zero();
  const Residue q = ctx_->modulus();
  for (std::size_t k = 0; k < out.flat().size(); ++k) out.flat()[k] = (f.flat()[k] + g.flat()[k]) % q;
  return out;
}

AmbientPoly Ambient::sub(const AmbientPoly& f, const AmbientPoly& g) const {
  check(f);
  check(g);
  AmbientPoly out = zero();
  const Residue q = ctx_->modulus();
  for (std::size_t k = 0; k < out.flat().size(); ++k) out.flat()[k] = mod(f.flat()[k] - g.flat()[k], q);
  return out;
}

AmbientPoly Ambient::mul(const AmbientPoly& f, const AmbientPoly& g) const {
  check(f);
  check(g);
  const auto m = static_cast<std::size_t>(ctx_->m());
  AmbientPoly full(2 * n_ - 1, m);
  for (std::size_t i = 0; i < n_; ++i) {
    if (ctx_->is_zero_span(f.coeff(i))) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      ctx_->mul_acc(f.coeff(i), g.coeff(j), full.coeff(i + j));
    }
  }
  AmbientPoly out = zero();
  for (std::size_t k = 0; k < n_; ++k) {
    auto dst = out.coeff(k);
    std::copy(full.coeff(k).begin(), full.coeff(k).end(), dst.begin());
    if (k + n_ < 2 * n_ - 1) ctx_->mul_acc(gamma_.coeffs(), full.coeff(k + n_), dst);
  }
  return out;
}

AmbientPoly Ambient::scale(const GrElement& c, const AmbientPoly& f) const {
  check(f);
  ctx_->check(c);
  AmbientPoly out = zero();
  for (std::size_t k = 0; k < n_; ++k) ctx_->mul_into(c.coeffs(), f.coeff(k), out.coeff(k));
  return out;
}

AmbientPoly Ambient::pow(const AmbientPoly& f, std::uint64_t e) const {
  AmbientPoly result = one();
  AmbientPoly base = f;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

std::vector<AmbientPoly> Ambient::basis() const {
  std::vector<AmbientPoly> out;
  out.reserve(width());
  for (std::size_t k = 0; k < n_; ++k) {
    for (int j = 0; j < ctx_->m(); ++j) {
      AmbientPoly b = zero();
      b.coeff(k)[static_cast<std::size_t>(j)] = 1;
      out.push_back(std::move(b));
    }
  }
  return out;
}

ZModule Ambient::ideal(const std::vector<AmbientPoly>& gens) const {
  std::vector<std::vector<Residue>> rows;
  const auto basis_elems = basis();
  rows.reserve(gens.size() * basis_elems.size());
  for (const auto& g : gens) {
    for (const auto& b : basis_elems) {
      const AmbientPoly prod = mul(b, g);
      rows.emplace_back(prod.flat().begin(), prod.flat().end());
    }
  }
  return ZModule(ctx_->p(), ctx_->a(), width(), rows);
}

bool Ambient::is_unit(const AmbientPoly& f) const { return ideal(f).log_size() == log_size(); }

std::uint64_t Ambient::encode(std::span<const Residue> flat) const {
  if (flat.size() != width()) throw Error(ErrorCode::ParamsMismatch, "word width mismatch");
  (void)size();
  const auto q = static_cast<std::uint64_t>(ctx_->modulus());
  std::uint64_t code = 0;
  for (std::size_t k = flat.size(); k-- > 0;) code = code * q + static_cast<std::uint64_t>(flat[k]);
  return code;
}

AmbientPoly Ambient::decode(std::uint64_t code) const {
  AmbientPoly f = zero();
  const auto q = static_cast<std::uint64_t>(ctx_->modulus());
  for (auto& c : f.flat()) {
    c = static_cast<Residue>(code % q);
    code /= q;
  }
  return f;
}

std::vector<std::uint64_t> Ambient::enumerate_span(const std::vector<AmbientPoly>& gens,
                                                   std::uint64_t cap) const {
  (void)size();
  const Residue q = ctx_->modulus();
  std::vector<std::uint64_t> codes{0};
  std::unordered_set<std::uint64_t> seen{0};
  for (const auto& g : gens) {
    check(g);
    if (seen.count(encode(g.flat())) != 0) continue;
    const Residue order = additive_order(g.flat(), ctx_->p(), q);
    const std::size_t snapshot = codes.size();
    for (std::size_t idx = 0; idx < snapshot; ++idx) {
      AmbientPoly cur = decode(codes[idx]);
      for (Residue t = 1; t < order; ++t) {
        for (std::size_t k = 0; k < cur.flat().size(); ++k) {
          cur.flat()[k] = (cur.flat()[k] + g.flat()[k]) % q;
        }
        const std::uint64_t code = encode(cur.flat());
        if (seen.insert(code).second) {
          codes.push_back(code);
          if (codes.size() > cap) {
            throw Error(ErrorCode::BudgetExceeded,
                        "span exceeds the enumeration cap of " + std::to_string(cap));
          }
        }
      }
    }
  }
  std::sort(codes.begin(), codes.end());
  return codes;
}

std::vector<std::uint64_t> Ambient::enumerate_ideal(const std::vector<AmbientPoly>& gens,
                                                    std::uint64_t cap) const {
  std::vector<AmbientPoly> span_gens;
  const auto basis_elems = basis();
  for (const auto& g : gens) {
    for (const auto& b : basis_elems) span_gens.push_back(mul(b, g));
  }
  return enumerate_span(span_gens, cap);
}

AmbientPoly constacyclic_shift(const RingContext& ctx, const AmbientPoly& word,
                               const GrElement& gamma) {
  ctx.check(gamma);
  const std::size_t n = word.length();
  AmbientPoly out(n, word.m());
  if (n == 0) return out;
  ctx.mul_into(gamma.coeffs(), word.coeff(n - 1), out.coeff(0));
  for (std::size_t k = 1; k < n; ++k) {
    std::copy(word.coeff(k - 1).begin(), word.coeff(k - 1).end(), out.coeff(k).begin());
  }
  return out;
}

GrElement solve_alpha(const RingContext& ctx, const UnitClass& cls, int s) {
  if (!cls.zeta0_idx || *cls.zeta0_idx == 0) {
    throw Error(ErrorCode::NotAUnit, "zeta_0 must be nonzero");
  }
  const auto group = static_cast<std::int64_t>(ctx.residue_field_size() - 1);
  const auto e = static_cast<std::int64_t>(*cls.zeta0_idx - 1);
  if (group == 1) return ctx.one();
  std::int64_t ps = 1;
  for (int i = 0; i < s; ++i) ps = ps * ctx.p() % group;
  // gcd(p^s, p^m - 1) = 1, so i p^s = e has the unique solution below.
  const std::int64_t i = e * inverse_mod(ps, group) % group;
  return ctx.zeta_power(i);
}

std::optional<int> nilpotency_index(const Ambient& amb, const AmbientPoly& f) {
  if (amb.is_unit(f)) return std::nullopt;
  const int cap = amb.ring().a() * static_cast<int>(amb.length()) + 1;
  AmbientPoly power = f;
  for (int k = 1; k <= cap; ++k) {
    if (power.is_zero()) return k;
    power = amb.mul(power, f);
  }
  return std::nullopt;
}

namespace {

using IdealSet = std::vector<std::uint64_t>;

bool subset(const IdealSet& small, const IdealSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool holds(const IdealSet& ideal, std::uint64_t code) {
  return std::binary_search(ideal.begin(), ideal.end(), code);
}

// Distinct power-chain ideals <f^i>, i = 0, 1, ... until the zero ideal.
template <typename IdealOf>
auto power_chain(const Ambient& amb, const AmbientPoly& f, IdealOf ideal_of) {
  std::vector<decltype(ideal_of(f))> chain;
  AmbientPoly power = amb.one();
  const std::size_t limit = static_cast<std::size_t>(amb.log_size()) + 2;
  for (std::size_t i = 0; i < limit; ++i) {
    auto ideal = ideal_of(power);
    if (chain.empty() || !(chain.back() == ideal)) chain.push_back(ideal);
    if (power.is_zero()) break;
    power = amb.mul(power, f);
  }
  return chain;
}

ChainReport exhaustive_chain(const Ambient& amb, const GrElement& alpha) {
  ChainReport report;
  report.method = ChainMethod::Exhaustive;
  const std::uint64_t total = amb.size();
  const std::size_t width = amb.width();
  const Residue q = amb.ring().modulus();
  const auto basis = amb.basis();

  // Each principal ideal is keyed by its membership bitmap; only new ones are
  // converted to sorted code lists.
  std::map<std::vector<std::uint64_t>, IdealSet> distinct;
  std::vector<std::uint64_t> bits((total + 63) / 64);
  std::vector<Residue> digits(width);
  std::vector<Residue> cur(width);
  for (std::uint64_t gi = 0; gi < total; ++gi) {
    const AmbientPoly g = amb.decode(gi);
    std::vector<std::vector<Residue>> columns;
    columns.reserve(width);
    for (const auto& b : basis) {
      const AmbientPoly bg = amb.mul(b, g);
      const auto col = bg.flat();
      columns.emplace_back(col.begin(), col.end());
    }
    // Odometer over f = sum digits[j] * basis[j]; cur tracks f * g.
    std::fill(digits.begin(), digits.end(), 0);
    std::fill(cur.begin(), cur.end(), 0);
    std::fill(bits.begin(), bits.end(), 0);
    for (;;) {
      const std::uint64_t code = amb.encode(cur);
      bits[code >> 6] |= std::uint64_t{1} << (code & 63);
      std::size_t j = 0;
      for (; j < width; ++j) {
        const auto& col = columns[j];
        for (std::size_t k = 0; k < width; ++k) {
          cur[k] += col[k];
          if (cur[k] >= q) cur[k] -= q;
        }
        if (++digits[j] < q) break;
        digits[j] = 0;
      }
      if (j == width) break;
    }
    auto [it, fresh] = distinct.try_emplace(bits);
    if (fresh) {
      for (std::uint64_t c = 0; c < total; ++c) {
        if ((bits[c >> 6] >> (c & 63)) & 1) it->second.push_back(c);
      }
    }
  }

  std::vector<const IdealSet*> ideals;
  for (const auto& [_, set] : distinct) ideals.push_back(&set);
  std::sort(ideals.begin(), ideals.end(),
            [](const IdealSet* x, const IdealSet* y) { return x->size() > y->size(); });
  report.ideal_count = ideals.size();
  report.is_chain = true;
  for (std::size_t k = 0; k + 1 < ideals.size(); ++k) {
    if (!subset(*ideals[k + 1], *ideals[k])) report.is_chain = false;
  }
  const int p = amb.ring().p();
  for (const IdealSet* ideal : ideals) {
    int log = 0;
    for (std::size_t sz = ideal->size(); sz > 1; sz /= static_cast<std::size_t>(p)) ++log;
    report.ideal_log_sizes.push_back(log);
  }

  const auto known = [&](const IdealSet& set) {
    std::vector<std::uint64_t> key((total + 63) / 64);
    for (std::uint64_t c : set) key[c >> 6] |= std::uint64_t{1} << (c & 63);
    return distinct.count(key) != 0;
  };

  const AmbientPoly x_alpha = amb.x_minus(alpha);
  const AmbientPoly p_const = amb.constant(amb.ring().from_int(p));
  auto materialize = [&](const AmbientPoly& f) {
    return amb.enumerate_ideal({f}, std::numeric_limits<std::uint64_t>::max());
  };
  const auto chain = power_chain(amb, x_alpha, materialize);
  report.power_chain_length = chain.size();
  report.matches_power_chain =
      chain.size() == ideals.size() &&
      std::all_of(chain.begin(), chain.end(), known);

  const IdealSet ideal_x = materialize(x_alpha);
  const IdealSet ideal_p = materialize(p_const);
  report.p_in_x_minus_alpha = holds(ideal_x, amb.encode(p_const.flat()));
  report.x_minus_alpha_in_p = holds(ideal_p, amb.encode(x_alpha.flat()));
  const IdealSet maximal = amb.enumerate_ideal({p_const, x_alpha},
                                               std::numeric_limits<std::uint64_t>::max());
  report.maximal_ideal_principal = known(maximal);
  return report;
}

ChainReport structural_chain(const Ambient& amb, const GrElement& alpha, std::size_t samples) {
  ChainReport report;
  report.method = ChainMethod::Structural;
  const RingContext& ctx = amb.ring();
  const AmbientPoly x_alpha = amb.x_minus(alpha);
  const AmbientPoly p_const = amb.constant(ctx.from_int(ctx.p()));
  auto module_of = [&](const AmbientPoly& f) { return amb.ideal(f); };

  const auto chain = power_chain(amb, x_alpha, module_of);
  report.power_chain_length = chain.size();
  bool strict = true;
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
    strict = strict && chain[k].contains(chain[k + 1]) &&
             chain[k].log_size() > chain[k + 1].log_size();
  }

  const ZModule ideal_x = amb.ideal(x_alpha);
  const ZModule ideal_p = amb.ideal(p_const);
  report.p_in_x_minus_alpha = ideal_x.contains(p_const.flat());
  report.x_minus_alpha_in_p = ideal_p.contains(x_alpha.flat());

  // M = <p, x - alpha>. R/M is the residue field, and M is principal iff
  // M / M^2 is one-dimensional over it.
  const ZModule maximal = ideal_x + ideal_p;
  const ZModule maximal_sq = amb.ideal({amb.mul(p_const, p_const), amb.mul(p_const, x_alpha),
                                        amb.mul(x_alpha, x_alpha)});
  const bool residue_field = amb.log_size() - maximal.log_size() == ctx.m();
  report.maximal_ideal_principal =
      residue_field && maximal.log_size() - maximal_sq.log_size() <= ctx.m();

  std::vector<ZModule> observed(chain.begin(), chain.end());
  auto note = [&](const ZModule& ideal) {
    if (std::find(observed.begin(), observed.end(), ideal) == observed.end()) {
      observed.push_back(ideal);
    }
  };
  note(ideal_p);
  note(maximal);
  bool samples_in_chain = true;
  bool samples_local = true;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(amb.log_size()));
  std::uniform_int_distribution<Residue> digit(0, ctx.modulus() - 1);
  for (std::size_t t = 0; t < samples; ++t) {
    AmbientPoly f = amb.zero();
    for (auto& c : f.flat()) c = digit(rng);
    // Bias half the draws into M so deep ideals are hit as well.
    if (t % 2 == 1) f = amb.mul(f, (t % 4 == 1) ? x_alpha : p_const);
    const ZModule ideal = amb.ideal(f);
    note(ideal);
    if (std::find(chain.begin(), chain.end(), ideal) == chain.end()) samples_in_chain = false;
    const bool unit = ideal.log_size() == amb.log_size();
    if (!unit && !maximal.contains(f.flat())) samples_local = false;
  }
  report.samples = samples;

  std::sort(observed.begin(), observed.end(),
            [](const ZModule& x, const ZModule& y) { return x.log_size() > y.log_size(); });
  bool totally_ordered = true;
  for (std::size_t k = 0; k + 1 < observed.size(); ++k) {
    if (!observed[k].contains(observed[k + 1])) totally_ordered = false;
  }
  for (const auto& ideal : observed) report.ideal_log_sizes.push_back(ideal.log_size());
  report.ideal_count = observed.size();
  report.matches_power_chain = strict && samples_in_chain && observed.size() == chain.size();
  report.is_chain = totally_ordered && samples_local && report.maximal_ideal_principal &&
                    maximal == chain.at(std::min<std::size_t>(1, chain.size() - 1));
  return report;
}

}  // namespace

ChainReport verify_chain_structure(const Ambient& amb, const Budget& budget, ChainMethod method,
                                   std::size_t structural_samples) {
  const RingContext& ctx = amb.ring();
  const GrElement alpha = solve_alpha(ctx, amb.gamma_class(), amb.s());
  bool fits = false;
  try {
    fits = amb.size() <= budget.chain_exhaustive;
  } catch (const Error&) {
    fits = false;
  }
  if (method == ChainMethod::Exhaustive && !fits) {
    throw Error(ErrorCode::BudgetExceeded, "ambient ring too large for exhaustive ideal enumeration");
  }
  const bool exhaustive = method == ChainMethod::Exhaustive || (method == ChainMethod::Auto && fits);
  ChainReport report =
      exhaustive ? exhaustive_chain(amb, alpha) : structural_chain(amb, alpha, structural_samples);
  report.gamma_kind = amb.gamma_class().kind;
  report.alpha = alpha;
  return report;
}

bool freshman_congruence_check(const Ambient& amb, const GrElement& b, int n) {
  const RingContext& ctx = amb.ring();
  if (n < 1 || n > amb.s()) throw Error(ErrorCode::IndexOutOfRange, "need 1 <= n <= s");
  if (!ctx.is_unit(b)) throw Error(ErrorCode::NotAUnit, "b must be a unit");
  const int p = ctx.p();
  std::uint64_t big_n = 1;
  for (int i = 0; i < n; ++i) big_n *= static_cast<std::uint64_t>(p);

  const AmbientPoly x_plus_b = amb.add(amb.x(), amb.constant(b));
  const AmbientPoly diff =
      amb.sub(amb.sub(amb.pow(x_plus_b, big_n), amb.pow(amb.x(), big_n)),
              amb.constant(ctx.pow(b, big_n)));
  const bool in_pR = std::all_of(diff.flat().begin(), diff.flat().end(),
                                 [&](Residue c) { return c % p == 0; });
  if (!in_pR) return false;

  if (p != 2) {
    const AmbientPoly p_xb = amb.scale(ctx.from_int(p), x_plus_b);
    return amb.ideal(p_xb).contains(diff.flat());
  }

  // Binomial coefficients C(2^n, k) modulo 2q so that halving is exact mod q.
  const Residue q = ctx.modulus();
  const Residue q2 = 2 * q;
  std::vector<Residue> row{1};
  for (std::uint64_t r = 1; r <= big_n; ++r) {
    std::vector<Residue> next(row.size() + 1, 0);
    next[0] = 1;
    next[row.size()] = 1;
    for (std::size_t k = 1; k < row.size(); ++k) next[k] = (row[k - 1] + row[k]) % q2;
    row = std::move(next);
  }
  std::vector<GrElement> half(static_cast<std::size_t>(big_n), ctx.zero());
  for (std::uint64_t k = 1; k < big_n; ++k) {
    if (row[k] % 2 != 0) return false;
    half[k] = ctx.scale(ctx.pow(b, big_n - k), row[k] / 2);
  }
  const AmbientPoly alpha_n = amb.from_elements(half);
  return amb.add(alpha_n, alpha_n) == diff && amb.is_unit(alpha_n);
}

}  // namespace galring
