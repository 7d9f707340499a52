#pragma once

// Formula-versus-oracle checks over families of parameters. Each check
// returns a CheckResult; oracles that do not fit the budget are reported as
// skipped rather than run.

#include <optional>
#include <string>
#include <vector>

#include "galring/budget.hpp"
#include "galring/constacodes.hpp"
#include "galring/galois_ring.hpp"
#include "json.hpp"

namespace galring {

enum class CheckStatus { Pass, Fail, Skip };

std::string_view to_string(CheckStatus status);

struct CheckResult {
  /// Acceptance criterion this check belongs to (1..10), 0 for extras.
  int criterion = 0;
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

// Per-ambient checks. Names carry the parameters, e.g.
// "chain p=2 a=2 m=1 s=2 gamma=3".
CheckResult check_chain(const Ambient& amb, const Budget& budget);
CheckResult check_nilpotency(const Ambient& amb);
CheckResult check_cardinality_nesting(const AmbientPtr& amb, const Budget& budget);
CheckResult check_duality(const AmbientPtr& amb, const Budget& budget);
CheckResult check_self_orthogonality(const AmbientPtr& amb, const Budget& budget);
CheckResult check_self_dual_list(const AmbientPtr& amb, const Budget& budget);
CheckResult check_distances(const AmbientPtr& amb, const Budget& budget);
CheckResult check_freshman(const Ambient& amb);

/// Codes under gamma1 and gamma2 (same zeta_0) coincide and each is closed
/// under the other's shift.
CheckResult check_multi_constacyclic(const AmbientPtr& amb1, const AmbientPtr& amb2,
                                     const Budget& budget);

/// Structured inverses against generic inversion and the product type rules,
/// over every unit (pairs exhaustively while |units|^2 <= ring_elements).
CheckResult check_unit_algebra(const RingContext& ctx, const Budget& budget);

struct SweepTuple {
  int p = 2;
  int a = 2;
  int m = 1;
  int s = 1;
};

enum class GammaSelection { AllUnits, AllType1, Explicit };

struct SweepConfig {
  std::vector<SweepTuple> params;
  GammaSelection gamma_selection = GammaSelection::AllUnits;
  /// Used with GammaSelection::Explicit; coefficient vectors (length m).
  std::vector<std::vector<Residue>> gammas;
  Budget budget;
  std::optional<std::string> output;
  /// text, json or csv
  std::string format = "text";
};

/// Z4 s=1,2; Z8 s=1,2; Z9 s=1,2; GR(4,2) s=1; every unit gamma.
SweepConfig default_sweep_config();

/// Fields present in `j` replace those of `base`. Validates every tuple and
/// cap; InvalidArgument/NonPrime on failure.
SweepConfig sweep_config_from_json(const nlohmann::json& j,
                                   SweepConfig base = default_sweep_config());

struct SweepReport {
  std::vector<CheckResult> checks;
  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
};

/// Runs every applicable check. BudgetExceeded propagates when a ring cannot
/// be built or enumerated within the caps at all.
SweepReport run_sweep(const SweepConfig& config);

nlohmann::json sweep_report_to_json(const SweepReport& report);
/// "PASS name (detail)" lines followed by a summary line.
std::string sweep_report_to_text(const SweepReport& report);
std::string sweep_report_to_csv(const SweepReport& report);

}  // namespace galring
