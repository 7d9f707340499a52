#pragma once

// The ambient ring R = GR(p^a, m)[x] / <x^{p^s} - gamma>.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "galring/budget.hpp"
#include "galring/galois_ring.hpp"
#include "galring/unit_types.hpp"
#include "galring/zmodule.hpp"

namespace galring {

/// Element of R (or a word of length p^s): p^s coefficients of GR(p^a, m),
/// stored flat as p^s blocks of m residues, x^0 first.
class AmbientPoly {
 public:
  AmbientPoly() = default;
  AmbientPoly(std::size_t length, std::size_t m) : m_(m), flat_(length * m, 0) {}
  AmbientPoly(std::vector<Residue> flat, std::size_t m) : m_(m), flat_(std::move(flat)) {}

  std::size_t length() const { return m_ == 0 ? 0 : flat_.size() / m_; }
  std::size_t m() const { return m_; }
  std::span<const Residue> coeff(std::size_t k) const {
    return std::span<const Residue>(flat_).subspan(k * m_, m_);
  }
  std::span<Residue> coeff(std::size_t k) { return std::span<Residue>(flat_).subspan(k * m_, m_); }
  GrElement element(std::size_t k) const {
    auto c = coeff(k);
    return GrElement(std::vector<Residue>(c.begin(), c.end()));
  }
  std::span<const Residue> flat() const { return flat_; }
  std::span<Residue> flat() { return flat_; }
  bool is_zero() const;

  bool operator==(const AmbientPoly&) const = default;

 private:
  std::size_t m_ = 0;
  std::vector<Residue> flat_;
};

/// Parameters (ctx, s, gamma) of one ambient ring, with gamma's class cached.
class Ambient {
 public:
  Ambient(RingPtr ctx, int s, GrElement gamma);

  const RingContext& ring() const { return *ctx_; }
  const RingPtr& ring_ptr() const { return ctx_; }
  int s() const { return s_; }
  /// p^s
  std::size_t length() const { return n_; }
  /// Number of residues in a flat element: m * p^s.
  std::size_t width() const { return n_ * static_cast<std::size_t>(ctx_->m()); }
  const GrElement& gamma() const { return gamma_; }
  const UnitClass& gamma_class() const { return gamma_class_; }
  /// log_p |R| = a m p^s.
  int log_size() const;
  /// |R|; throws BudgetExceeded when it does not fit in 63 bits.
  std::uint64_t size() const;

  /// Same ring context, s and gamma.
  bool same_params(const Ambient& other) const;

  AmbientPoly zero() const;
  AmbientPoly one() const;
  AmbientPoly x() const;
  AmbientPoly constant(const GrElement& c) const;
  AmbientPoly monomial(const GrElement& c, std::size_t k) const;
  /// c0 + c1 x + ... ; fewer than p^s coefficients are zero-padded.
  AmbientPoly from_elements(const std::vector<GrElement>& coeffs) const;
  /// x - c
  AmbientPoly x_minus(const GrElement& c) const;

  AmbientPoly add(const AmbientPoly& f, const AmbientPoly& g) const;
  AmbientPoly sub(const AmbientPoly& f, const AmbientPoly& g) const;
  AmbientPoly mul(const AmbientPoly& f, const AmbientPoly& g) const;
  AmbientPoly scale(const GrElement& c, const AmbientPoly& f) const;
  AmbientPoly pow(const AmbientPoly& f, std::uint64_t e) const;

  /// Multiplication by f is a bijection on R.
  bool is_unit(const AmbientPoly& f) const;

  /// u^j x^k, the Z_{p^a}-basis of R, in flat order (k major, j minor).
  std::vector<AmbientPoly> basis() const;
  /// The ideal <gens> as a Z_{p^a}-module in Howell form.
  ZModule ideal(const std::vector<AmbientPoly>& gens) const;
  ZModule ideal(const AmbientPoly& g) const { return ideal(std::vector<AmbientPoly>{g}); }

  /// Words are encoded as base-p^a integers over the flat residues.
  std::uint64_t encode(std::span<const Residue> flat) const;
  AmbientPoly decode(std::uint64_t code) const;
  /// Sorted codes of the Z_{p^a}-span of `gens`; BudgetExceeded once more
  /// than `cap` words have been produced.
  std::vector<std::uint64_t> enumerate_span(const std::vector<AmbientPoly>& gens,
                                            std::uint64_t cap) const;
  /// Sorted codes of the ideal <gens> = span of {b * g : b basis, g in gens}.
  std::vector<std::uint64_t> enumerate_ideal(const std::vector<AmbientPoly>& gens,
                                             std::uint64_t cap) const;

 private:
  void check(const AmbientPoly& f) const;

  RingPtr ctx_;
  int s_;
  std::size_t n_;
  GrElement gamma_;
  UnitClass gamma_class_;
};

/// (x_0, ..., x_{n-1}) -> (gamma x_{n-1}, x_0, ..., x_{n-2}).
AmbientPoly constacyclic_shift(const RingContext& ctx, const AmbientPoly& word,
                               const GrElement& gamma);

/// The Teichmuller alpha with alpha^{p^s} = zeta_0 of the given class.
GrElement solve_alpha(const RingContext& ctx, const UnitClass& cls, int s);

/// Smallest k >= 1 with f^k = 0, searching up to a p^s + 1. nullopt means
/// "not nilpotent": f is a unit or the cap was hit.
std::optional<int> nilpotency_index(const Ambient& amb, const AmbientPoly& f);

enum class ChainMethod {
  /// Exhaustive when |R| fits the chain budget, structural otherwise.
  Auto,
  /// Materialize <g> = {f g : f in R} for every g in R.
  Exhaustive,
  /// Howell forms of the power chain, the maximal ideal, M^2 and sampled
  /// principal ideals.
  Structural,
};

struct ChainReport {
  ChainMethod method = ChainMethod::Exhaustive;
  UnitKind gamma_kind = UnitKind::NonUnit;
  GrElement alpha;
  bool is_chain = false;
  /// Distinct principal ideals: all of them (exhaustive) or those observed.
  std::size_t ideal_count = 0;
  /// log_p of each distinct ideal's size, descending.
  std::vector<int> ideal_log_sizes;
  /// <p, x - alpha> equals some principal ideal.
  bool maximal_ideal_principal = false;
  /// The distinct principal ideals are exactly <(x - alpha)^i>, i >= 0.
  bool matches_power_chain = false;
  /// Number of distinct ideals <(x - alpha)^i>.
  std::size_t power_chain_length = 0;
  bool p_in_x_minus_alpha = false;
  bool x_minus_alpha_in_p = false;
  /// Random generators examined in structural mode.
  std::size_t samples = 0;
};

ChainReport verify_chain_structure(const Ambient& amb, const Budget& budget = {},
                                   ChainMethod method = ChainMethod::Auto,
                                   std::size_t structural_samples = 2000);

/// Checks (x+b)^{p^n} - x^{p^n} - b^{p^n} in R: it lies in pR; for odd p it
/// lies in p(x+b)R; for p = 2 half of it (taken over the integers) is a unit.
bool freshman_congruence_check(const Ambient& amb, const GrElement& b, int n);

}  // namespace galring
