#include "galring/sweep.hpp"

#include <algorithm>
#include <sstream>

#include "galring/distances.hpp"
#include "galring/error.hpp"
#include "galring/json_io.hpp"
#include "galring/unit_types.hpp"

namespace galring {
namespace {

std::string label(const Ambient& amb) {
  const RingContext& ctx = amb.ring();
  std::ostringstream out;
  out << "p=" << ctx.p() << " a=" << ctx.a() << " m=" << ctx.m() << " s=" << amb.s()
      << " gamma=" << format_element(amb.gamma());
  return out.str();
}

std::string ring_label(const RingContext& ctx) {
  std::ostringstream out;
  out << "p=" << ctx.p() << " a=" << ctx.a() << " m=" << ctx.m();
  return out.str();
}

CheckResult make(int criterion, std::string name, bool ok, std::string detail) {
  return {criterion, std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail,
          std::move(detail)};
}

CheckResult skip(int criterion, std::string name, std::string detail) {
  return {criterion, std::move(name), CheckStatus::Skip, std::move(detail)};
}

bool fits(const ConstaCode& code, std::uint64_t cap) {
  try {
    return code.cardinality() <= cap;
  } catch (const Error&) {
    return false;
  }
}

bool space_fits(const Ambient& amb, std::uint64_t cap) {
  try {
    return amb.size() <= cap;
  } catch (const Error&) {
    return false;
  }
}

std::vector<AmbientPoly> spanning_set(const ConstaCode& code) {
  const Ambient& amb = code.ambient();
  std::vector<AmbientPoly> gens;
  for (const auto& b : amb.basis()) gens.push_back(amb.mul(b, code.generator()));
  return gens;
}

// C is self-orthogonal iff its spanning vectors are pairwise orthogonal.
bool gram_self_orthogonal(const ConstaCode& code) {
  const auto gens = spanning_set(code);
  for (std::size_t x = 0; x < gens.size(); ++x) {
    for (std::size_t y = x; y < gens.size(); ++y) {
      if (!inner_product(code.ambient().ring(), gens[x], gens[y]).is_zero()) return false;
    }
  }
  return true;
}

std::vector<GrElement> units_of(const RingContext& ctx) {
  std::vector<GrElement> units;
  for (std::uint64_t k = 0; k < ctx.order(); ++k) {
    GrElement x = ctx.element_at(k);
    if (ctx.is_unit(x)) units.push_back(std::move(x));
  }
  return units;
}

std::string join(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(xs[k]);
  }
  return out + "}";
}

CheckResult not_type1(int criterion, const std::string& name) {
  return skip(criterion, name, "gamma is not Type(1); no codes");
}

}  // namespace

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

CheckResult check_chain(const Ambient& amb, const Budget& budget) {
  const std::string name = "chain " + label(amb);
  const RingContext& ctx = amb.ring();
  const bool expected = is_chain_ambient(ctx, amb.gamma(), amb.s());
  const ChainReport r = verify_chain_structure(amb, budget);
  const char* method = r.method == ChainMethod::Exhaustive ? "exhaustive" : "structural";
  if (expected) {
    const int top = ctx.a() * static_cast<int>(amb.length());
    std::vector<int> sizes;
    for (int i = 0; i <= top; ++i) sizes.push_back(ctx.m() * (top - i));
    const bool ok = r.is_chain && r.matches_power_chain &&
                    r.ideal_count == static_cast<std::size_t>(top + 1) &&
                    r.ideal_log_sizes == sizes;
    return make(1, name, ok,
                "expected chain; " + std::to_string(r.ideal_count) + " ideals (" + method + ")");
  }
  const bool ok = !r.is_chain && !r.maximal_ideal_principal;
  return make(1, name, ok,
              std::string("expected non-chain; <p, x-alpha> ") +
                  (r.maximal_ideal_principal ? "principal" : "not principal") + " (" + method +
                  ")");
}

CheckResult check_nilpotency(const Ambient& amb) {
  const std::string name = "nilpotency " + label(amb);
  const RingContext& ctx = amb.ring();
  const UnitClass& cls = amb.gamma_class();
  const GrElement alpha = solve_alpha(ctx, cls, amb.s());
  const auto measured = nilpotency_index(amb, amb.x_minus(alpha));
  const int a = ctx.a();
  const int ps = static_cast<int>(amb.length());
  const std::string got = measured ? std::to_string(*measured) : "none";
  if (cls.kind == UnitKind::Type1) {
    return make(2, name, measured == a * ps, "measured " + got + ", expected " + std::to_string(a * ps));
  }
  if (!cls.z.is_zero()) return skip(2, name, "Type(0) with z != 0, measured " + got);
  const int corrected = a * ps - (a - 1) * ps / ctx.p();
  // The literal a^{p^s} - (a-1) p^{s-1} is reported alongside.
  std::int64_t literal = 1;
  for (int k = 0; k < ps && literal < (std::int64_t{1} << 40); ++k) literal *= a;
  literal -= static_cast<std::int64_t>(a - 1) * (ps / ctx.p());
  return make(2, name, measured == corrected,
              "measured " + got + ", a p^s - (a-1) p^(s-1) = " + std::to_string(corrected) +
                  ", a^(p^s) - (a-1) p^(s-1) = " + std::to_string(literal));
}

CheckResult check_cardinality_nesting(const AmbientPtr& amb, const Budget& budget) {
  const std::string name = "cardinality " + label(*amb);
  if (amb->gamma_class().kind != UnitKind::Type1) return not_type1(3, name);
  const int p = amb->ring().p();
  const int top = amb->ring().a() * static_cast<int>(amb->length());
  std::optional<CodewordSet> prev_words;
  std::optional<ZModule> prev_module;
  int enumerated = 0;
  for (int i = 0; i <= top; ++i) {
    const ConstaCode code = ConstaCode::build(amb, i);
    const int expected = amb->ring().m() * (top - i);
    if (fits(code, budget.codewords)) {
      if (prev_module && !prev_words) {
        // First listed code after Howell-only ones: link the two routes.
        const ZModule module = amb->ideal(code.generator());
        if (!prev_module->contains(module) || prev_module->log_size() <= module.log_size()) {
          return make(3, name, false, "nesting fails at i=" + std::to_string(i));
        }
      }
      CodewordSet words = enumerate_codewords(code, budget);
      std::uint64_t want = 1;
      for (int k = 0; k < expected; ++k) want *= static_cast<std::uint64_t>(p);
      if (words.size() != want) {
        return make(3, name, false, "i=" + std::to_string(i) + ": |C|=" +
                                        std::to_string(words.size()) + ", expected " +
                                        std::to_string(want));
      }
      if (prev_words && !(words.size() < prev_words->size() &&
                          std::includes(prev_words->begin(), prev_words->end(), words.begin(),
                                        words.end()))) {
        return make(3, name, false, "nesting fails at i=" + std::to_string(i));
      }
      prev_words = std::move(words);
      ++enumerated;
    } else {
      // Too large to list: exact size and inclusion from the Howell form.
      ZModule module = amb->ideal(code.generator());
      if (module.log_size() != expected) {
        return make(3, name, false, "i=" + std::to_string(i) + ": log|C|=" +
                                        std::to_string(module.log_size()) + ", expected " +
                                        std::to_string(expected));
      }
      if (prev_module && !(prev_module->contains(module) &&
                           prev_module->log_size() > module.log_size())) {
        return make(3, name, false, "nesting fails at i=" + std::to_string(i));
      }
      prev_module = std::move(module);
    }
  }
  return make(3, name, true,
              std::to_string(top + 1) + " codes, " + std::to_string(enumerated) + " enumerated");
}

CheckResult check_duality(const AmbientPtr& amb, const Budget& budget) {
  const std::string name = "duality " + label(*amb);
  if (amb->gamma_class().kind != UnitKind::Type1) return not_type1(4, name);
  if (!space_fits(*amb, budget.dual_space)) return skip(4, name, "word space exceeds dual budget");
  const int top = amb->ring().a() * static_cast<int>(amb->length());
  const int full = amb->log_size();
  for (int i = 0; i <= top; ++i) {
    const ConstaCode code = ConstaCode::build(amb, i);
    const ConstaCode dual = dual_code(code);
    const CodewordSet brute = brute_force_dual(code, budget);
    const CodewordSet formula = enumerate_codewords(dual, budget);
    if (brute != formula) {
      return make(4, name, false, "dual mismatch at i=" + std::to_string(i));
    }
    const std::uint64_t card = enumerate_codewords(code, budget).size();
    std::uint64_t whole = 1;
    for (int k = 0; k < full; ++k) whole *= static_cast<std::uint64_t>(amb->ring().p());
    if (card * brute.size() != whole) {
      return make(4, name, false, "|C||C-perp| != |R| at i=" + std::to_string(i));
    }
  }
  return make(4, name, true, std::to_string(top + 1) + " codes");
}

CheckResult check_self_orthogonality(const AmbientPtr& amb, const Budget& budget) {
  const std::string name = "self-orthogonal " + label(*amb);
  if (amb->gamma_class().kind != UnitKind::Type1) return not_type1(5, name);
  const int top = amb->ring().a() * static_cast<int>(amb->length());
  int enumerated = 0;
  for (int i = 0; i <= top; ++i) {
    const ConstaCode code = ConstaCode::build(amb, i);
    bool oracle = false;
    if (fits(code, budget.codewords)) {
      oracle = self_orthogonal_oracle(code, budget);
      ++enumerated;
    } else {
      oracle = gram_self_orthogonal(code);
    }
    if (oracle != is_self_orthogonal(code)) {
      return make(5, name, false,
                  "i=" + std::to_string(i) + ": oracle " + (oracle ? "true" : "false"));
    }
  }
  return make(5, name, true,
              std::to_string(top + 1) + " codes, " + std::to_string(enumerated) + " enumerated");
}

CheckResult check_self_dual_list(const AmbientPtr& amb, const Budget& budget) {
  const std::string name = "self-dual " + label(*amb);
  if (amb->gamma_class().kind != UnitKind::Type1) return not_type1(5, name);
  const int top = amb->ring().a() * static_cast<int>(amb->length());
  const bool brute = space_fits(*amb, budget.dual_space);
  std::vector<int> oracle;
  for (int i = 0; i <= top; ++i) {
    const ConstaCode code = ConstaCode::build(amb, i);
    if (brute) {
      if (brute_force_dual(code, budget) == enumerate_codewords(code, budget)) oracle.push_back(i);
    } else if (2 * code.log_cardinality() == amb->log_size() && gram_self_orthogonal(code)) {
      oracle.push_back(i);
    }
  }
  std::vector<int> formula;
  for (const auto& c : self_dual_codes(amb)) formula.push_back(c.index());
  return make(5, name, formula == oracle,
              "formula " + join(formula) + ", oracle " + join(oracle) +
                  (brute ? " (brute-force dual)" : " (Gram)"));
}

CheckResult check_distances(const AmbientPtr& amb, const Budget& budget) {
  const bool hom = amb->ring().a() >= 2;
  const std::string name = "distances " + label(*amb);
  if (amb->gamma_class().kind != UnitKind::Type1) return not_type1(6, name);
  const auto rows = distance_table(amb, true, budget);
  int checked = 0;
  for (const auto& row : rows) {
    if (!row.hamming.oracle_value) continue;
    ++checked;
    if (!*row.hamming.agree || (hom && !*row.homogeneous->agree)) {
      std::ostringstream out;
      out << "i=" << row.i << ": hamming " << row.hamming.formula_value << " vs "
          << *row.hamming.oracle_value;
      if (hom) {
        out << ", homogeneous " << row.homogeneous->formula_value << " vs "
            << *row.homogeneous->oracle_value;
      }
      return make(6, name, false, out.str());
    }
  }
  if (checked == 0) return skip(6, name, "no code fits the codeword budget");
  return make(6, name, true,
              std::to_string(checked) + " of " + std::to_string(rows.size()) + " codes checked" +
                  (hom ? ", both weights" : ", Hamming only"));
}

CheckResult check_freshman(const Ambient& amb) {
  const std::string name = "freshman " + label(amb);
  int count = 0;
  for (const auto& b : units_of(amb.ring())) {
    for (int n = 1; n <= amb.s(); ++n) {
      if (!freshman_congruence_check(amb, b, n)) {
        return make(10, name, false, "fails at b=" + format_element(b) + " n=" + std::to_string(n));
      }
      ++count;
    }
  }
  return make(10, name, true, std::to_string(count) + " (b, n) pairs");
}

CheckResult check_multi_constacyclic(const AmbientPtr& amb1, const AmbientPtr& amb2,
                                     const Budget& budget) {
  const std::string name =
      "multi-constacyclic " + label(*amb1) + " gamma2=" + format_element(amb2->gamma());
  if (amb1->gamma_class().kind != UnitKind::Type1 || amb2->gamma_class().kind != UnitKind::Type1) {
    return not_type1(8, name);
  }
  if (amb1->gamma_class().zeta0_idx != amb2->gamma_class().zeta0_idx) {
    return skip(8, name, "different zeta_0");
  }
  const int top = amb1->ring().a() * static_cast<int>(amb1->length());
  int checked = 0;
  for (int i = 0; i <= top; ++i) {
    const ConstaCode c1 = ConstaCode::build(amb1, i);
    const ConstaCode c2 = ConstaCode::build(amb2, i);
    if (!fits(c1, budget.codewords)) continue;
    if (enumerate_codewords(c1, budget) != enumerate_codewords(c2, budget)) {
      return make(8, name, false, "codeword sets differ at i=" + std::to_string(i));
    }
    if (!is_gamma2_constacyclic(c1, amb2->gamma(), budget) ||
        !is_gamma2_constacyclic(c2, amb1->gamma(), budget)) {
      return make(8, name, false, "not shift-closed at i=" + std::to_string(i));
    }
    ++checked;
  }
  if (checked == 0) return skip(8, name, "no code fits the codeword budget");
  return make(8, name, true, std::to_string(checked) + " codes");
}

CheckResult check_unit_algebra(const RingContext& ctx, const Budget& budget) {
  const std::string name = "unit algebra " + ring_label(ctx);
  if (ctx.order() > budget.ring_elements) return skip(9, name, "ring exceeds element budget");
  const auto units = units_of(ctx);
  for (const auto& u : units) {
    const GrElement inv = ctx.invert(u);
    const UnitClass cls = classify_unit(ctx, u);
    const GrElement structured =
        cls.kind == UnitKind::Type1 ? type1_inverse(ctx, u) : type0_inverse(ctx, u);
    if (!(structured == inv) || !(ctx.mul(u, inv) == ctx.one())) {
      return make(9, name, false, "inverse mismatch at " + format_element(u));
    }
    if (classify_unit(ctx, inv).kind != cls.kind) {
      return make(9, name, false, "inverse changes type at " + format_element(u));
    }
  }
  std::size_t pairs = 0;
  if (units.size() * units.size() <= budget.ring_elements) {
    for (const auto& x : units) {
      const UnitKind kx = classify_unit(ctx, x).kind;
      for (const auto& y : units) {
        const UnitKind ky = classify_unit(ctx, y).kind;
        const auto predicted = type_product_class(kx, ky);
        if (!predicted) continue;
        ++pairs;
        if (classify_unit(ctx, ctx.mul(x, y)).kind != *predicted) {
          return make(9, name, false,
                      "product rule fails at " + format_element(x) + " * " + format_element(y));
        }
      }
    }
  }
  return make(9, name, true,
              std::to_string(units.size()) + " units, " + std::to_string(pairs) +
                  " product pairs with a rule");
}

std::size_t SweepReport::passed() const {
  return std::count_if(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::Pass; });
}

std::size_t SweepReport::failed() const {
  return std::count_if(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

std::size_t SweepReport::skipped() const {
  return std::count_if(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status == CheckStatus::Skip; });
}

SweepConfig default_sweep_config() {
  SweepConfig config;
  // Z27 and GR(8,2) exercise the odd-parity self-dual branch.
  config.params = {{2, 2, 1, 1}, {2, 2, 1, 2}, {2, 3, 1, 1}, {2, 3, 1, 2}, {3, 2, 1, 1},
                   {3, 2, 1, 2}, {2, 2, 2, 1}, {3, 3, 1, 1}, {2, 3, 2, 1}};
  return config;
}

SweepConfig sweep_config_from_json(const nlohmann::json& j, SweepConfig base) {
  SweepConfig config = std::move(base);
  try {
    if (j.contains("params")) {
      config.params.clear();
      for (const auto& t : j.at("params")) {
        SweepTuple tuple;
        if (t.is_array()) {
          if (t.size() != 4) throw Error(ErrorCode::InvalidArgument, "params entries are [p,a,m,s]");
          tuple = {t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<int>()};
        } else {
          tuple = {t.at("p").get<int>(), t.at("a").get<int>(), t.at("m").get<int>(),
                   t.at("s").get<int>()};
        }
        validate(RingParams{tuple.p, tuple.a, tuple.m});
        if (tuple.s < 1) throw Error(ErrorCode::InvalidArgument, "s must be >= 1");
        config.params.push_back(tuple);
      }
    }
    if (j.contains("gamma")) {
      const auto& g = j.at("gamma");
      if (g.is_string()) {
        const auto sel = g.get<std::string>();
        if (sel == "all-units") {
          config.gamma_selection = GammaSelection::AllUnits;
        } else if (sel == "all-type1") {
          config.gamma_selection = GammaSelection::AllType1;
        } else {
          throw Error(ErrorCode::InvalidArgument, "unknown gamma selection '" + sel + "'");
        }
      } else {
        config.gamma_selection = GammaSelection::Explicit;
        for (const auto& e : g) {
          config.gammas.push_back(e.is_array() ? e.get<std::vector<Residue>>()
                                               : std::vector<Residue>{e.get<Residue>()});
        }
      }
    }
    if (j.contains("budget")) {
      const auto& b = j.at("budget");
      auto read = [&](const char* key, std::uint64_t& field) {
        if (!b.contains(key)) return;
        const auto v = b.at(key).get<std::int64_t>();
        if (v <= 0) throw Error(ErrorCode::InvalidArgument, std::string(key) + " must be positive");
        field = static_cast<std::uint64_t>(v);
      };
      read("ring_elements", config.budget.ring_elements);
      read("teichmuller_table", config.budget.teichmuller_table);
      read("codewords", config.budget.codewords);
      read("dual_space", config.budget.dual_space);
      read("chain_exhaustive", config.budget.chain_exhaustive);
    }
    if (j.contains("output")) config.output = j.at("output").get<std::string>();
    if (j.contains("format")) {
      config.format = j.at("format").get<std::string>();
      if (config.format != "json" && config.format != "csv" && config.format != "text") {
        throw Error(ErrorCode::InvalidArgument, "format must be json, csv or text");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed sweep config: ") + e.what());
  }
  return config;
}

SweepReport run_sweep(const SweepConfig& config) {
  SweepReport report;
  auto add = [&](CheckResult r) { report.checks.push_back(std::move(r)); };
  for (const auto& t : config.params) {
    const RingParams params{t.p, t.a, t.m};
    validate(params);
    auto ctx = RingContext::build(params, config.budget);
    if (ctx->order() > config.budget.ring_elements) {
      throw Error(ErrorCode::BudgetExceeded,
                  "|GR(" + std::to_string(t.p) + "^" + std::to_string(t.a) + "," +
                      std::to_string(t.m) + ")| exceeds the ring-element budget");
    }
    std::vector<GrElement> gammas;
    if (config.gamma_selection == GammaSelection::Explicit) {
      for (const auto& g : config.gammas) gammas.push_back(ctx->element(g));
    } else {
      for (auto& u : units_of(*ctx)) {
        if (config.gamma_selection == GammaSelection::AllType1 &&
            classify_unit(*ctx, u).kind != UnitKind::Type1) {
          continue;
        }
        gammas.push_back(std::move(u));
      }
    }
    std::vector<AmbientPtr> type1;
    for (const auto& gamma : gammas) {
      const auto amb = make_ambient(ctx, t.s, gamma);
      add(check_chain(*amb, config.budget));
      add(check_nilpotency(*amb));
      add(check_freshman(*amb));
      if (amb->gamma_class().kind != UnitKind::Type1) continue;
      type1.push_back(amb);
      add(check_cardinality_nesting(amb, config.budget));
      add(check_duality(amb, config.budget));
      add(check_self_orthogonality(amb, config.budget));
      add(check_self_dual_list(amb, config.budget));
      add(check_distances(amb, config.budget));
    }
    // One partner per Type(1) gamma: the next one with the same zeta_0.
    for (std::size_t x = 0; x < type1.size(); ++x) {
      for (std::size_t y = x + 1; y < type1.size(); ++y) {
        if (type1[x]->gamma_class().zeta0_idx == type1[y]->gamma_class().zeta0_idx) {
          add(check_multi_constacyclic(type1[x], type1[y], config.budget));
          break;
        }
      }
    }
    const bool first_for_ring =
        std::find_if(config.params.begin(), config.params.end(), [&](const SweepTuple& o) {
          return o.p == t.p && o.a == t.a && o.m == t.m;
        }) == config.params.begin() + (&t - config.params.data());
    if (first_for_ring) add(check_unit_algebra(*ctx, config.budget));
  }
  return report;
}

nlohmann::json sweep_report_to_json(const SweepReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"criterion", c.criterion},
                      {"name", c.name},
                      {"status", std::string(to_string(c.status))},
                      {"detail", c.detail}});
  }
  return {{"checks", checks},
          {"passed", report.passed()},
          {"failed", report.failed()},
          {"skipped", report.skipped()}};
}

std::string sweep_report_to_text(const SweepReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << to_string(c.status) << ' ' << c.name;
    if (!c.detail.empty()) out << " (" << c.detail << ')';
    out << '\n';
  }
  out << report.passed() << " passed, " << report.failed() << " failed, " << report.skipped()
      << " skipped\n";
  return out.str();
}

std::string sweep_report_to_csv(const SweepReport& report) {
  std::ostringstream out;
  out << "criterion,status,name,detail\n";
  for (const auto& c : report.checks) {
    out << c.criterion << ',' << to_string(c.status) << ",\"" << c.name << "\",\"" << c.detail
        << "\"\n";
  }
  return out.str();
}

}  // namespace galring
