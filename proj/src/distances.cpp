#include "galring/distances.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "galring/error.hpp"

namespace galring {
namespace {

std::uint64_t upow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int k = 0; k < exp; ++k) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw Error(ErrorCode::BudgetExceeded, "distance value overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

void check_partition(const std::vector<DistanceBand>& bands, int top) {
  int next = 0;
  for (const auto& band : bands) {
    if (band.lo != next || band.hi < band.lo) {
      throw std::logic_error("distance bands do not partition [0, a p^s]");
    }
    next = band.hi + 1;
  }
  if (next != top + 1) throw std::logic_error("distance bands do not reach a p^s");
}

// Bands above (a-1) p^s shared by both weights; `unit` scales the Hamming
// values ((l+2) and (t+1)p^k) into the homogeneous ones.
void append_tail_bands(std::vector<DistanceBand>& bands, int a, int p, int s,
                       std::uint64_t unit) {
  const int ps = static_cast<int>(upow(p, s));
  const int ps1 = ps / p;
  const int base = ps * (a - 1);
  for (int l = 0; l <= p - 2; ++l) {
    bands.push_back({base + l * ps1 + 1, base + (l + 1) * ps1,
                     static_cast<std::uint64_t>(l + 2) * unit});
  }
  for (int k = 1; k <= s - 1; ++k) {
    const int psk = static_cast<int>(upow(p, s - k));
    const int psk1 = psk / p;
    for (int t = 1; t <= p - 1; ++t) {
      bands.push_back({a * ps - psk + (t - 1) * psk1 + 1, a * ps - psk + t * psk1,
                       static_cast<std::uint64_t>(t + 1) * upow(p, k) * unit});
    }
  }
  bands.push_back({a * ps, a * ps, 0});
}

std::uint64_t lookup(const std::vector<DistanceBand>& bands, int i) {
  for (const auto& band : bands) {
    if (band.lo <= i && i <= band.hi) return band.value;
  }
  throw Error(ErrorCode::IndexOutOfRange, "i = " + std::to_string(i) + " outside [0, a p^s]");
}

}  // namespace

std::vector<DistanceBand> hamming_bands(int a, int p, int s) {
  if (a < 1 || p < 2 || s < 1) throw Error(ErrorCode::InvalidArgument, "need a, s >= 1, p >= 2");
  const int ps = static_cast<int>(upow(p, s));
  std::vector<DistanceBand> bands{{0, ps * (a - 1), 1}};
  append_tail_bands(bands, a, p, s, 1);
  check_partition(bands, a * ps);
  return bands;
}

std::vector<DistanceBand> homogeneous_bands(int a, int p, int m, int s) {
  if (a < 2) throw Error(ErrorCode::CharacteristicTooSmall, "homogeneous weight needs a >= 2");
  if (p < 2 || m < 1 || s < 1) throw Error(ErrorCode::InvalidArgument, "need p >= 2, m, s >= 1");
  const int ps = static_cast<int>(upow(p, s));
  const std::uint64_t pm = upow(p, m);
  const std::uint64_t top = upow(pm, a - 1);
  std::vector<DistanceBand> bands{
      {0, ps * (a - 2), (pm - 1) * upow(pm, a - 2)},
      {ps * (a - 2) + 1, ps * (a - 1), top},
  };
  append_tail_bands(bands, a, p, s, top);
  check_partition(bands, a * ps);
  return bands;
}

std::uint64_t hamming_distance_formula(int a, int p, int s, int i) {
  return lookup(hamming_bands(a, p, s), i);
}

std::uint64_t field_hamming_distance_formula(int p, int s, int i) {
  return hamming_distance_formula(1, p, s, i);
}

std::uint64_t homogeneous_distance_formula(int a, int p, int m, int s, int i) {
  return lookup(homogeneous_bands(a, p, m, s), i);
}

std::size_t hamming_weight(const AmbientPoly& word) {
  std::size_t w = 0;
  for (std::size_t k = 0; k < word.length(); ++k) {
    const auto c = word.coeff(k);
    if (std::any_of(c.begin(), c.end(), [](Residue v) { return v != 0; })) ++w;
  }
  return w;
}

namespace {

struct HomogeneousScale {
  Residue top_ideal;       // p^{a-1}
  std::uint64_t generic;   // (p^m - 1) p^{m(a-2)}
  std::uint64_t socle;     // p^{m(a-1)}
};

HomogeneousScale homogeneous_scale(const RingContext& ctx) {
  if (ctx.a() < 2) {
    throw Error(ErrorCode::CharacteristicTooSmall, "homogeneous weight needs a >= 2");
  }
  const std::uint64_t pm = ctx.residue_field_size();
  return {ctx.modulus() / ctx.p(), (pm - 1) * upow(pm, ctx.a() - 2), upow(pm, ctx.a() - 1)};
}

std::uint64_t weight_of(const HomogeneousScale& w, std::span<const Residue> r) {
  if (std::all_of(r.begin(), r.end(), [](Residue c) { return c == 0; })) return 0;
  const bool socle = std::all_of(r.begin(), r.end(), [&](Residue c) { return c % w.top_ideal == 0; });
  return socle ? w.socle : w.generic;
}

}  // namespace

std::uint64_t homogeneous_weight(const RingContext& ctx, const GrElement& r) {
  ctx.check(r);
  return weight_of(homogeneous_scale(ctx), r.coeffs());
}

std::uint64_t homogeneous_weight(const RingContext& ctx, const AmbientPoly& word) {
  const HomogeneousScale w = homogeneous_scale(ctx);
  std::uint64_t total = 0;
  for (std::size_t k = 0; k < word.length(); ++k) total += weight_of(w, word.coeff(k));
  return total;
}

std::uint64_t brute_force_min_weight(const ConstaCode& code, WeightKind kind, const Budget& budget) {
  const Ambient& amb = code.ambient();
  std::uint64_t best = 0;
  for (std::uint64_t c : enumerate_codewords(code, budget)) {
    if (c == 0) continue;
    const AmbientPoly word = amb.decode(c);
    const std::uint64_t w = kind == WeightKind::Hamming ? hamming_weight(word)
                                                        : homogeneous_weight(amb.ring(), word);
    if (best == 0 || w < best) best = w;
  }
  return best;
}

LowWeightResult low_weight_min_weights(const ConstaCode& code, const Budget& budget) {
  const Ambient& amb = code.ambient();
  const RingContext& ctx = amb.ring();
  const std::size_t n = amb.length();
  const std::size_t m = static_cast<std::size_t>(ctx.m());
  const ZModule module = amb.ideal(code.generator());
  const bool with_hom = ctx.a() >= 2;
  LowWeightResult out;
  if (module.log_size() == 0) {
    if (with_hom) out.homogeneous = 0;
    return out;
  }

  std::vector<GrElement> nonzero;
  for (std::uint64_t k = 1; k < ctx.order(); ++k) nonzero.push_back(ctx.element_at(k));
  std::uint64_t floor_hom = 0;
  if (with_hom) {
    floor_hom = homogeneous_weight(ctx, nonzero.front());
    for (const auto& r : nonzero) floor_hom = std::min(floor_hom, homogeneous_weight(ctx, r));
  }
  std::uint64_t best_hom = 0;

  std::vector<Residue> flat(n * m, 0);
  for (std::size_t w = 1; w <= n; ++w) {
    const bool need_ham = out.hamming == 0;
    const bool need_hom = with_hom && (best_hom == 0 || w * floor_hom < best_hom);
    if (!need_ham && !need_hom) break;
    // Supports as increasing index tuples, values as a mixed-radix counter.
    std::vector<std::size_t> support(w);
    for (std::size_t k = 0; k < w; ++k) support[k] = k;
    while (true) {
      std::vector<std::size_t> digit(w, 0);
      while (true) {
        if (++out.candidates > budget.codewords) {
          throw Error(ErrorCode::BudgetExceeded,
                      "low-weight search needs more than " + std::to_string(budget.codewords) +
                          " candidate words");
        }
        std::fill(flat.begin(), flat.end(), 0);
        for (std::size_t k = 0; k < w; ++k) {
          const GrElement& r = nonzero[digit[k]];
          for (std::size_t j = 0; j < m; ++j) flat[support[k] * m + j] = r[j];
        }
        if (module.contains(flat)) {
          if (out.hamming == 0) out.hamming = w;
          if (with_hom) {
            std::uint64_t h = 0;
            for (std::size_t k = 0; k < w; ++k) h += homogeneous_weight(ctx, nonzero[digit[k]]);
            if (best_hom == 0 || h < best_hom) best_hom = h;
          }
        }
        std::size_t k = 0;
        while (k < w && ++digit[k] == nonzero.size()) digit[k++] = 0;
        if (k == w) break;
      }
      // Next support in lexicographic order.
      std::size_t k = w;
      while (k > 0 && support[k - 1] == n - w + k - 1) --k;
      if (k == 0) break;
      ++support[k - 1];
      for (std::size_t j = k; j < w; ++j) support[j] = support[j - 1] + 1;
    }
  }
  if (with_hom) out.homogeneous = best_hom;
  return out;
}

std::vector<DistanceRow> distance_table(const AmbientPtr& ambient, bool run_oracle,
                                        const Budget& budget) {
  const RingContext& ctx = ambient->ring();
  const int a = ctx.a();
  const int s = ambient->s();
  std::vector<DistanceRow> rows;
  const int top = a * static_cast<int>(ambient->length());
  for (int i = 0; i <= top; ++i) {
    const ConstaCode code = ConstaCode::build(ambient, i);
    DistanceRow row;
    row.i = i;
    row.log_cardinality = code.log_cardinality();
    row.hamming.i = i;
    row.hamming.formula_value = hamming_distance_formula(a, ctx.p(), s, i);
    if (a >= 2) {
      DistanceReport hom;
      hom.i = i;
      hom.formula_value = homogeneous_distance_formula(a, ctx.p(), ctx.m(), s, i);
      row.homogeneous = hom;
    }
    bool affordable = false;
    try {
      affordable = run_oracle && code.cardinality() <= budget.codewords;
    } catch (const Error&) {
      affordable = false;
    }
    if (affordable) {
      // One enumeration serves both weights.
      std::uint64_t best_ham = 0;
      std::uint64_t best_hom = 0;
      for (std::uint64_t c : enumerate_codewords(code, budget)) {
        if (c == 0) continue;
        const AmbientPoly word = ambient->decode(c);
        const std::uint64_t wh = hamming_weight(word);
        if (best_ham == 0 || wh < best_ham) best_ham = wh;
        if (a >= 2) {
          const std::uint64_t wm = homogeneous_weight(ctx, word);
          if (best_hom == 0 || wm < best_hom) best_hom = wm;
        }
      }
      row.hamming.oracle_value = best_ham;
      row.hamming.agree = best_ham == row.hamming.formula_value;
      if (row.homogeneous) {
        row.homogeneous->oracle_value = best_hom;
        row.homogeneous->agree = best_hom == row.homogeneous->formula_value;
      }
    } else if (run_oracle) {
      try {
        const LowWeightResult low = low_weight_min_weights(code, budget);
        row.hamming.oracle_value = low.hamming;
        row.hamming.agree = low.hamming == row.hamming.formula_value;
        if (row.homogeneous && low.homogeneous) {
          row.homogeneous->oracle_value = *low.homogeneous;
          row.homogeneous->agree = *low.homogeneous == row.homogeneous->formula_value;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BudgetExceeded) throw;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace galring
