#pragma once

// Hamming and homogeneous weights, closed-form minimum distances of the codes
// <(x - alpha)^i>, and the exhaustive minimum-weight oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "galring/budget.hpp"
#include "galring/constacodes.hpp"

namespace galring {

enum class WeightKind { Hamming, Homogeneous };

/// A closed range [lo, hi] of indices i on which a distance formula is
/// constant.
struct DistanceBand {
  int lo = 0;
  int hi = 0;
  std::uint64_t value = 0;
};

/// Bands of the Hamming distance of <(x - alpha)^i> over GR(p^a, m), length
/// p^s. They partition [0, a p^s]; construction throws std::logic_error
/// otherwise.
std::vector<DistanceBand> hamming_bands(int a, int p, int s);
/// Same for the homogeneous distance (a >= 2).
std::vector<DistanceBand> homogeneous_bands(int a, int p, int m, int s);

std::uint64_t hamming_distance_formula(int a, int p, int s, int i);
/// Residue-field case: codes of length p^s over F_{p^m}, 0 <= i <= p^s.
std::uint64_t field_hamming_distance_formula(int p, int s, int i);
std::uint64_t homogeneous_distance_formula(int a, int p, int m, int s, int i);

std::size_t hamming_weight(const AmbientPoly& word);
/// 0, (p^m - 1) p^{m(a-2)} off p^{a-1}GR, p^{m(a-1)} on p^{a-1}GR \ {0}.
std::uint64_t homogeneous_weight(const RingContext& ctx, const GrElement& r);
std::uint64_t homogeneous_weight(const RingContext& ctx, const AmbientPoly& word);

/// Minimum weight over the nonzero codewords; 0 for the zero code.
std::uint64_t brute_force_min_weight(const ConstaCode& code, WeightKind kind,
                                     const Budget& budget = {});

/// Exact minimum weights found without enumerating the code: candidate words
/// are scanned by increasing Hamming weight and tested for membership in the
/// Howell form of the code. A word of Hamming weight w has homogeneous weight
/// at least w times the smallest nonzero homogeneous weight, which bounds the
/// homogeneous search. BudgetExceeded once more than budget.codewords
/// candidates would be scanned. The homogeneous entry is absent when a = 1.
struct LowWeightResult {
  std::uint64_t hamming = 0;
  std::optional<std::uint64_t> homogeneous;
  std::uint64_t candidates = 0;
};
LowWeightResult low_weight_min_weights(const ConstaCode& code, const Budget& budget = {});

struct DistanceReport {
  int i = 0;
  std::uint64_t formula_value = 0;
  std::optional<std::uint64_t> oracle_value;
  std::optional<bool> agree;
};

/// One row of the distance table for a single code. With `run_oracle` the
/// code is enumerated when |C| <= budget.codewords, and otherwise searched by
/// low_weight_min_weights; the oracle values stay absent if both exceed the
/// budget.
struct DistanceRow {
  int i = 0;
  int log_cardinality = 0;
  DistanceReport hamming;
  std::optional<DistanceReport> homogeneous;
};

std::vector<DistanceRow> distance_table(const AmbientPtr& ambient, bool run_oracle,
                                        const Budget& budget = {});

}  // namespace galring
