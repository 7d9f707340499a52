#pragma once

// Galois rings GR(p^a, m) = Z_{p^a}[u] / <h(u)> with Teichmuller coordinates.

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "galring/budget.hpp"

namespace galring {

/// Coefficients are stored as residues in [0, p^a).
using Residue = std::int64_t;

struct RingParams {
  int p = 2;
  int a = 1;
  int m = 1;

  bool operator==(const RingParams&) const = default;
};

/// Throws NonPrime / InvalidArgument when the triple cannot describe a ring
/// this library can represent (p^a < 2^31, m <= 32).
void validate(const RingParams& params);

bool is_prime(std::int64_t n);

/// One element of GR(p^a, m): coefficients of 1, u, ..., u^{m-1}.
class GrElement {
 public:
  GrElement() = default;
  explicit GrElement(std::vector<Residue> coeffs) : coeffs_(std::move(coeffs)) {}

  std::span<const Residue> coeffs() const { return coeffs_; }
  Residue operator[](std::size_t k) const { return coeffs_[k]; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const;

  bool operator==(const GrElement&) const = default;

 private:
  std::vector<Residue> coeffs_;
};

/// r = sum_k p^k * T[digits[k]], digits being Teichmuller indices.
struct PadicCoords {
  std::vector<std::size_t> digits;

  bool operator==(const PadicCoords&) const = default;
};

/// x = unit * p^valuation.
struct UnitPowerForm {
  GrElement unit;
  int valuation = 0;
};

/// A fully constructed GR(p^a, m). Immutable once built; share it through
/// std::shared_ptr<const RingContext>.
///
/// Teichmuller indices: index 0 is the element 0 and index k >= 1 is
/// zeta^{k-1}, so the table has p^m entries.
class RingContext {
 public:
  /// Deterministic construction: h is the smallest monic irreducible of
  /// degree m over F_p (coefficient vectors compared as base-p integers,
  /// i.e. high-degree coefficients most significant), lifted verbatim.
  static std::shared_ptr<const RingContext> build(const RingParams& params,
                                                  const Budget& budget = {});

  /// Rebuilds a context from serialized parts, re-checking every invariant.
  static std::shared_ptr<const RingContext> from_parts(const RingParams& params,
                                                       std::vector<Residue> h,
                                                       GrElement zeta,
                                                       const Budget& budget = {});

  const RingParams& params() const { return params_; }
  int p() const { return params_.p; }
  int a() const { return params_.a; }
  int m() const { return params_.m; }
  /// p^a
  Residue modulus() const { return q_; }
  /// p^m, the size of the residue field.
  std::uint64_t residue_field_size() const { return field_size_; }
  /// p^{am}; throws BudgetExceeded if it exceeds 2^63.
  std::uint64_t order() const;
  /// h(u) little-endian, length m + 1, leading coefficient 1.
  std::span<const Residue> modulus_poly() const { return h_; }
  const GrElement& zeta() const { return zeta_; }

  /// Contexts are interchangeable iff (p, a, m, h) agree.
  bool same_ring(const RingContext& other) const;

  GrElement zero() const;
  GrElement one() const;
  GrElement from_int(std::int64_t v) const;
  /// Reduces each coefficient into [0, p^a); the length must be m.
  GrElement element(std::vector<Residue> coeffs) const;
  /// Throws ContextMismatch unless x has length m with reduced entries.
  void check(const GrElement& x) const;

  GrElement add(const GrElement& x, const GrElement& y) const;
  GrElement sub(const GrElement& x, const GrElement& y) const;
  GrElement neg(const GrElement& x) const;
  GrElement mul(const GrElement& x, const GrElement& y) const;
  GrElement scale(const GrElement& x, Residue c) const;
  GrElement pow(const GrElement& x, std::uint64_t e) const;

  bool is_unit(const GrElement& x) const;
  /// Newton iteration y <- y(2 - xy) from the residue-field inverse.
  GrElement invert(const GrElement& x) const;

  PadicCoords p_adic_decompose(const GrElement& x) const;
  GrElement recompose(const PadicCoords& coords) const;
  UnitPowerForm unit_p_power_form(const GrElement& x) const;

  std::size_t teichmuller_count() const { return teich_.size(); }
  const GrElement& teichmuller(std::size_t index) const { return teich_.at(index); }
  /// Teichmuller index of the representative congruent to x mod p.
  std::size_t teichmuller_index_of(const GrElement& x) const;
  /// e in [0, p^m - 1) with zeta^e = x; x must be a nonzero Teichmuller element.
  std::uint64_t teichmuller_log(const GrElement& x) const;
  /// zeta^e for any integer e (reduced mod p^m - 1).
  const GrElement& zeta_power(std::int64_t e) const;

  /// Bijection between elements and [0, p^{am}) (base p^a digits, u^0 lowest).
  std::uint64_t index_of(const GrElement& x) const;
  GrElement element_at(std::uint64_t index) const;

  // Flat kernels on coefficient spans of length m, used by the ambient ring.
  void mul_into(std::span<const Residue> x, std::span<const Residue> y,
                std::span<Residue> out) const;
  void mul_acc(std::span<const Residue> x, std::span<const Residue> y,
               std::span<Residue> out) const;
  bool is_zero_span(std::span<const Residue> x) const;

 private:
  RingContext() = default;
  void build_tables(const Budget& budget);
  std::uint64_t residue_code(std::span<const Residue> x) const;

  RingParams params_;
  Residue q_ = 0;
  std::uint64_t field_size_ = 0;
  std::vector<Residue> h_;
  GrElement zeta_;
  std::vector<GrElement> teich_;
  // residue code (coefficients mod p read as base-p integer) -> Teichmuller index
  std::vector<std::size_t> teich_log_;
};

using RingPtr = std::shared_ptr<const RingContext>;

}  // namespace galring
