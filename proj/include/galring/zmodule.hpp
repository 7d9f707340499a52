#pragma once

// Submodules of (Z_{p^a})^n in Howell normal form.
//
// Over Z_{p^a} every submodule has a unique Howell form: rows in echelon
// order, each pivot a power p^v, entries above a pivot reduced below it, and
// the span closed under "multiply a row by p^{a-v} and re-reduce". The form
// gives exact membership, inclusion, equality and cardinality without
// materializing the submodule.

#include <cstdint>
#include <span>
#include <vector>

#include "galring/galois_ring.hpp"

namespace galring {

class ZModule {
 public:
  /// The span of `generators` (each of length `width`) over Z_{p^a}.
  ZModule(int p, int a, std::size_t width, const std::vector<std::vector<Residue>>& generators);

  static ZModule zero(int p, int a, std::size_t width) { return ZModule(p, a, width, {}); }

  std::size_t width() const { return width_; }
  /// log_p |M|.
  int log_size() const;
  bool contains(std::span<const Residue> v) const;
  bool contains(const ZModule& other) const;
  /// Submodule sum.
  ZModule operator+(const ZModule& other) const;

  const std::vector<std::vector<Residue>>& rows() const { return rows_; }
  const std::vector<int>& pivot_valuations() const { return valuations_; }

  bool operator==(const ZModule& other) const {
    return width_ == other.width_ && rows_ == other.rows_;
  }

 private:
  int p_;
  int a_;
  Residue q_;
  std::size_t width_;
  std::vector<std::vector<Residue>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<int> valuations_;
};

}  // namespace galring
