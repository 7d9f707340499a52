#pragma once

#include <cstdint>

namespace galring {

/// Caps on the exhaustive routines. Each cap bounds a count of objects that a
/// routine would have to touch, so the cost of a call is known up front.
struct Budget {
  /// |GR(p^a, m)| = p^{am} for routines that enumerate the coefficient ring.
  std::uint64_t ring_elements = std::uint64_t{1} << 20;
  /// p^m - 1, the size of the Teichmuller and discrete-log tables.
  std::uint64_t teichmuller_table = std::uint64_t{1} << 16;
  /// Number of codewords an enumeration may materialize.
  std::uint64_t codewords = std::uint64_t{1} << 20;
  /// |R|^{p^s}, the number of words scanned by the brute-force dual.
  std::uint64_t dual_space = std::uint64_t{1} << 16;
  /// |R_p(a,m,gamma)| up to which every principal ideal is materialized.
  std::uint64_t chain_exhaustive = std::uint64_t{1} << 12;
};

/// `b` with the user-facing cap (ring elements and codewords) set to `cap`.
Budget with_cap(Budget b, std::uint64_t cap);

/// Default budget, with the user-facing cap taken from $GALRING_BUDGET when set.
Budget budget_from_env();

}  // namespace galring
