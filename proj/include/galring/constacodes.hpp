#pragma once

// gamma-constacyclic codes of length p^s over GR(p^a, m) for Type(1) gamma.
// Every such code is an ideal <(x - alpha)^i> of the chain ring
// R_p(a, m, gamma), 0 <= i <= a p^s, with alpha^{p^s} = zeta_0(gamma).

#include <cstdint>
#include <memory>
#include <vector>

#include "galring/ambient_ring.hpp"
#include "galring/budget.hpp"

namespace galring {

using AmbientPtr = std::shared_ptr<const Ambient>;

/// Sorted encoded words (see Ambient::encode).
using CodewordSet = std::vector<std::uint64_t>;

class ConstaCode {
 public:
  /// TypeMismatch unless gamma is Type(1); IndexOutOfRange unless
  /// 0 <= i <= a p^s.
  static ConstaCode build(AmbientPtr ambient, int i);

  const Ambient& ambient() const { return *ambient_; }
  const AmbientPtr& ambient_ptr() const { return ambient_; }
  const GrElement& alpha() const { return alpha_; }
  int index() const { return i_; }
  /// (x - alpha)^i reduced in R.
  const AmbientPoly& generator() const { return generator_; }
  /// a p^s
  int max_index() const;
  /// log_p |C| = m (a p^s - i).
  int log_cardinality() const;
  /// p^{m (a p^s - i)}; BudgetExceeded if it does not fit in 63 bits.
  std::uint64_t cardinality() const;

 private:
  ConstaCode(AmbientPtr ambient, GrElement alpha, int i, AmbientPoly generator)
      : ambient_(std::move(ambient)), alpha_(std::move(alpha)), i_(i),
        generator_(std::move(generator)) {}

  AmbientPtr ambient_;
  GrElement alpha_;
  int i_;
  AmbientPoly generator_;
};

AmbientPtr make_ambient(RingPtr ctx, int s, GrElement gamma);

/// All codewords, as the Z_{p^a}-span of {u^j x^k g}.
CodewordSet enumerate_codewords(const ConstaCode& code, const Budget& budget = {});

/// <(x - alpha^{-1})^{a p^s - i}> in R_p(a, m, gamma^{-1}).
ConstaCode dual_code(const ConstaCode& code);

/// Every word orthogonal to every codeword, by scanning all |R| words of
/// length p^s. BudgetExceeded when |R| > budget.dual_space.
CodewordSet brute_force_dual(const ConstaCode& code, const Budget& budget = {});

/// Euclidean inner product sum_k x_k y_k of two words.
GrElement inner_product(const RingContext& ctx, const AmbientPoly& x, const AmbientPoly& y);

/// Closed-form decision: i >= ceil(a p^s / 2) if zeta_0 = zeta_0^{-1},
/// i >= ceil(a / 2) p^s otherwise.
bool is_self_orthogonal(const ConstaCode& code);

/// Direct check of C subset of C-perp over the enumerated codewords.
bool self_orthogonal_oracle(const ConstaCode& code, const Budget& budget = {});

/// Closed-form list of self-dual codes (empty or a single code).
std::vector<ConstaCode> self_dual_codes(const AmbientPtr& ambient);

/// Whether the code is closed under the gamma2-constacyclic shift (checked
/// on every codeword).
bool is_gamma2_constacyclic(const ConstaCode& code, const GrElement& gamma2,
                            const Budget& budget = {});

}  // namespace galring
