#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "galring/ambient_ring.hpp"
#include "galring/constacodes.hpp"
#include "galring/distances.hpp"
#include "galring/error.hpp"
#include "galring/json_io.hpp"
#include "galring/sweep.hpp"
#include "galring/unit_types.hpp"

namespace galring::cli {
namespace {

struct Options {
  int p = 0;
  int a = 0;
  int m = 1;
  int s = 1;
  std::string gamma;
  std::string element;
  int i = -1;
  bool oracle = false;
  std::string format;
  std::optional<std::uint64_t> budget;
  std::string config;
  std::string context;
  std::string method = "auto";
};

Budget budget_of(const Options& o) {
  Budget b = budget_from_env();
  if (o.budget) b = with_cap(b, *o.budget);
  return b;
}

RingPtr ring_of(const Options& o) {
  const Budget b = budget_of(o);
  if (!o.context.empty()) {
    std::ifstream in(o.context);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + o.context);
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::InvalidArgument, o.context + ": " + e.what());
    }
    return context_from_json(j, b);
  }
  if (o.p == 0 || o.a == 0) throw Error(ErrorCode::InvalidArgument, "-p and -a are required");
  return RingContext::build(RingParams{o.p, o.a, o.m}, b);
}

// Oracles enumerate the coefficient ring, so they need p^{am} within the cap.
void require_enumerable(const RingContext& ctx, const Budget& b) {
  if (ctx.order() > b.ring_elements) {
    throw Error(ErrorCode::BudgetExceeded, "p^(am) = " + std::to_string(ctx.order()) +
                                               " exceeds the budget " +
                                               std::to_string(b.ring_elements));
  }
}

AmbientPtr ambient_of(const Options& o) {
  auto ctx = ring_of(o);
  if (o.gamma.empty()) throw Error(ErrorCode::InvalidArgument, "--gamma is required");
  return make_ambient(ctx, o.s, parse_element(*ctx, o.gamma));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::uint64_t unit_count(const RingContext& ctx) {
  std::uint64_t q = ctx.residue_field_size();
  std::uint64_t unit_part = 1;
  for (int k = 0; k < ctx.a() - 1; ++k) unit_part *= q;
  return unit_part * (q - 1);
}

int cmd_ring_info(const Options& o, std::ostream& out) {
  const auto ctx = ring_of(o);
  Json j = context_to_json(*ctx);
  j["order"] = power_to_json(ctx->p(), ctx->a() * ctx->m());
  j["units"] = unit_count(*ctx);
  j["residue_field_size"] = ctx->residue_field_size();
  if (ctx->teichmuller_count() <= 64) {
    Json t = Json::array();
    for (std::size_t k = 0; k < ctx->teichmuller_count(); ++k) {
      t.push_back(element_to_json(ctx->teichmuller(k)));
    }
    j["teichmuller"] = t;
  }
  emit(out, j);
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto ctx = ring_of(o);
  const GrElement x = parse_element(*ctx, o.element);
  const UnitClass cls = classify_unit(*ctx, x);
  Json j = unit_class_to_json(x, cls);
  j["chain"] = cls.kind == UnitKind::NonUnit ? Json(nullptr)
                                             : Json(is_chain_ambient(*ctx, x, o.s));
  emit(out, j);
  return kOk;
}

Json code_json_with_generator(const ConstaCode& code) {
  Json j = code_to_json(code);
  Json g = Json::array();
  for (std::size_t k = 0; k < code.generator().length(); ++k) {
    g.push_back(element_to_json(code.generator().element(k)));
  }
  j["generator"] = g;
  return j;
}

int cmd_code(const Options& o, std::ostream& out) {
  const auto amb = ambient_of(o);
  const ConstaCode code = ConstaCode::build(amb, o.i);
  if (o.format == "csv") {
    const Budget b = budget_of(o);
    require_enumerable(amb->ring(), b);
    write_codewords_csv(out, *amb, enumerate_codewords(code, b));
    return kOk;
  }
  emit(out, code_json_with_generator(code));
  return kOk;
}

int cmd_dual(const Options& o, std::ostream& out) {
  const auto amb = ambient_of(o);
  const ConstaCode code = ConstaCode::build(amb, o.i);
  const ConstaCode dual = dual_code(code);
  Json j;
  j["code"] = code_to_json(code);
  j["dual"] = code_json_with_generator(dual);
  int status = kOk;
  if (o.oracle) {
    const Budget b = budget_of(o);
    require_enumerable(amb->ring(), b);
    const bool agree = brute_force_dual(code, b) == enumerate_codewords(dual, b);
    j["oracle_agrees"] = agree;
    if (!agree) status = kVerifyFailed;
  }
  emit(out, j);
  return status;
}

Json report_json(const DistanceReport& r) {
  Json j;
  j["formula"] = r.formula_value;
  if (r.oracle_value) j["oracle"] = *r.oracle_value;
  if (r.agree) j["agree"] = *r.agree;
  return j;
}

int cmd_distances(const Options& o, std::ostream& out) {
  const auto amb = ambient_of(o);
  const Budget b = budget_of(o);
  if (o.oracle) require_enumerable(amb->ring(), b);
  const ConstaCode probe = ConstaCode::build(amb, 0);
  const auto rows = distance_table(amb, o.oracle, b);
  bool agree = true;
  for (const auto& row : rows) {
    if (row.hamming.agree && !*row.hamming.agree) agree = false;
    if (row.homogeneous && row.homogeneous->agree && !*row.homogeneous->agree) agree = false;
  }
  if (o.format == "csv") {
    write_distance_csv_header(out);
    write_distance_csv(out, *amb, rows);
  } else {
    const RingContext& ctx = amb->ring();
    Json j;
    j["p"] = ctx.p();
    j["a"] = ctx.a();
    j["m"] = ctx.m();
    j["s"] = amb->s();
    j["gamma"] = element_to_json(amb->gamma());
    j["alpha"] = element_to_json(probe.alpha());
    Json list = Json::array();
    for (const auto& row : rows) {
      Json r;
      r["i"] = row.i;
      r["cardinality"] = power_to_json(ctx.p(), row.log_cardinality);
      r["hamming"] = report_json(row.hamming);
      if (row.homogeneous) r["homogeneous"] = report_json(*row.homogeneous);
      list.push_back(r);
    }
    j["rows"] = list;
    emit(out, j);
  }
  return agree ? kOk : kVerifyFailed;
}

int cmd_selfdual(const Options& o, std::ostream& out) {
  const auto amb = ambient_of(o);
  Json j;
  j["gamma"] = element_to_json(amb->gamma());
  Json list = Json::array();
  std::vector<int> formula;
  for (const auto& c : self_dual_codes(amb)) {
    list.push_back(code_to_json(c));
    formula.push_back(c.index());
  }
  j["self_dual"] = list;
  int status = kOk;
  if (o.oracle) {
    const Budget b = budget_of(o);
    require_enumerable(amb->ring(), b);
    std::vector<int> oracle;
    const int top = amb->ring().a() * static_cast<int>(amb->length());
    for (int i = 0; i <= top; ++i) {
      const ConstaCode c = ConstaCode::build(amb, i);
      if (brute_force_dual(c, b) == enumerate_codewords(c, b)) oracle.push_back(i);
    }
    j["oracle"] = oracle;
    j["agree"] = oracle == formula;
    if (oracle != formula) status = kVerifyFailed;
  }
  emit(out, j);
  return status;
}

int cmd_chain(const Options& o, std::ostream& out) {
  const auto amb = ambient_of(o);
  ChainMethod method = ChainMethod::Auto;
  if (o.method == "exhaustive") method = ChainMethod::Exhaustive;
  if (o.method == "structural") method = ChainMethod::Structural;
  const ChainReport r = verify_chain_structure(*amb, budget_of(o), method);
  const bool expected = is_chain_ambient(amb->ring(), amb->gamma(), amb->s());
  Json j = chain_report_to_json(*amb, r);
  j["expected_chain"] = expected;
  emit(out, j);
  return r.is_chain == expected ? kOk : kVerifyFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  SweepConfig config = default_sweep_config();
  config.budget = budget_from_env();
  if (!o.config.empty()) {
    std::ifstream in(o.config);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + o.config);
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::InvalidArgument, o.config + ": " + e.what());
    }
    config = sweep_config_from_json(j, config);
  }
  if (o.budget) config.budget = with_cap(config.budget, *o.budget);
  if (!o.format.empty()) config.format = o.format;

  const SweepReport report = run_sweep(config);
  std::string body;
  if (config.format == "json") {
    body = sweep_report_to_json(report).dump(2) + "\n";
  } else if (config.format == "csv") {
    body = sweep_report_to_csv(report);
  } else {
    body = sweep_report_to_text(report);
  }
  if (config.output) {
    std::ofstream file(*config.output);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + *config.output);
    file << body;
    out << report.passed() << " passed, " << report.failed() << " failed, " << report.skipped()
        << " skipped\n";
  } else {
    out << body;
  }
  return report.failed() == 0 ? kOk : kVerifyFailed;
}

void ring_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("-p", o.p, "Residue characteristic (prime)");
  cmd->add_option("-a", o.a, "Exponent: the ring has characteristic p^a");
  cmd->add_option("-m", o.m, "Degree of the residue field over F_p")->capture_default_str();
  cmd->add_option("--context", o.context, "Ring context JSON (overrides -p/-a/-m)");
  cmd->add_option("--budget", o.budget, "Cap on ring elements and listed codewords");
}

void ambient_flags(CLI::App* cmd, Options& o) {
  ring_flags(cmd, o);
  cmd->add_option("-s", o.s, "Code length is p^s")->capture_default_str();
  cmd->add_option("--gamma", o.gamma, "Unit gamma: integer (m = 1) or c0,c1,...");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Galois rings, constacyclic codes of length p^s and their distances", "galring"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&, std::ostream&)> action;
  auto on = [&](CLI::App* cmd, int (*fn)(const Options&, std::ostream&)) {
    cmd->callback([&action, fn] { action = fn; });
  };

  auto* info = app.add_subcommand("ring-info", "Print h, zeta, unit count and Teichmuller set");
  ring_flags(info, o);
  on(info, cmd_ring_info);

  auto* classify = app.add_subcommand("classify", "Classify an element as Type(0)/Type(1)");
  ring_flags(classify, o);
  classify->add_option("element", o.element, "Element: integer (m = 1) or c0,c1,...")->required();
  classify->add_option("-s", o.s, "Length exponent for the chain verdict")->capture_default_str();
  on(classify, cmd_classify);

  auto* code = app.add_subcommand("code", "Describe <(x - alpha)^i>, or list it with --format csv");
  ambient_flags(code, o);
  code->add_option("-i", o.i, "Index i, 0 <= i <= a p^s")->required();
  code->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  on(code, cmd_code);

  auto* dual = app.add_subcommand("dual", "Dual of <(x - alpha)^i>");
  ambient_flags(dual, o);
  dual->add_option("-i", o.i, "Index i")->required();
  dual->add_flag("--oracle", o.oracle, "Compare with the brute-force dual");
  on(dual, cmd_dual);

  auto* dist = app.add_subcommand("distances", "Hamming and homogeneous distance table");
  ambient_flags(dist, o);
  dist->add_flag("--oracle", o.oracle, "Check each row by exhaustive minimum weight");
  dist->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  on(dist, cmd_distances);

  auto* selfdual = app.add_subcommand("selfdual", "List the self-dual codes");
  ambient_flags(selfdual, o);
  selfdual->add_flag("--oracle", o.oracle, "Check against brute-force duals");
  on(selfdual, cmd_selfdual);

  auto* chain = app.add_subcommand("chain", "Ideal structure of GR(p^a,m)[x]/<x^{p^s} - gamma>");
  ambient_flags(chain, o);
  chain->add_option("--method", o.method, "auto, exhaustive or structural")
      ->check(CLI::IsMember({"auto", "exhaustive", "structural"}));
  on(chain, cmd_chain);

  auto* verify = app.add_subcommand("verify", "Run the formula-versus-oracle sweep");
  verify->add_option("--config", o.config, "Sweep configuration JSON");
  verify->add_option("--format", o.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--budget", o.budget, "Cap on ring elements and listed codewords");
  on(verify, cmd_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    return action(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::BudgetExceeded ? kBudget : kInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
}

}  // namespace galring::cli
