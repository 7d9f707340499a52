#include "galring/json_io.hpp"

#include <ostream>
#include <sstream>

#include "galring/error.hpp"

namespace galring {

Json context_to_json(const RingContext& ctx) {
  Json j;
  j["p"] = ctx.p();
  j["a"] = ctx.a();
  j["m"] = ctx.m();
  j["h"] = std::vector<Residue>(ctx.modulus_poly().begin(), ctx.modulus_poly().end());
  j["zeta"] = element_to_json(ctx.zeta());
  return j;
}

RingPtr context_from_json(const Json& j, const Budget& budget) {
  try {
    RingParams params{j.at("p").get<int>(), j.at("a").get<int>(), j.at("m").get<int>()};
    auto h = j.at("h").get<std::vector<Residue>>();
    auto zeta = j.at("zeta").get<std::vector<Residue>>();
    return RingContext::from_parts(params, std::move(h), GrElement(std::move(zeta)), budget);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed context JSON: ") + e.what());
  }
}

Json element_to_json(const GrElement& x) {
  return std::vector<Residue>(x.coeffs().begin(), x.coeffs().end());
}

GrElement parse_element(const RingContext& ctx, const std::string& text) {
  std::vector<Residue> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      coeffs.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "cannot parse element '" + text + "'");
    }
  }
  if (coeffs.size() != static_cast<std::size_t>(ctx.m())) {
    throw Error(ErrorCode::InvalidArgument,
                "element '" + text + "' needs " + std::to_string(ctx.m()) + " coefficient(s)");
  }
  for (Residue c : coeffs) {
    if (c < 0 || c >= ctx.modulus()) {
      throw Error(ErrorCode::InvalidArgument, "element '" + text + "': coefficients must lie in [0, " +
                                                  std::to_string(ctx.modulus()) + ")");
    }
  }
  return ctx.element(std::move(coeffs));
}

std::string format_element(const GrElement& x) {
  std::string out;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(x[k]);
  }
  return out;
}

Json unit_class_to_json(const GrElement& unit, const UnitClass& cls) {
  Json j;
  j["unit"] = element_to_json(unit);
  j["type"] = std::string(to_string(cls.kind));
  j["zeta0"] = cls.zeta0_idx ? Json(*cls.zeta0_idx) : Json(nullptr);
  j["zeta1"] = cls.zeta1_idx ? Json(*cls.zeta1_idx) : Json(nullptr);
  j["z"] = element_to_json(cls.z);
  return j;
}

Json power_to_json(int p, int e) {
  std::uint64_t v = 1;
  for (int k = 0; k < e; ++k) {
    if (v > (std::uint64_t{1} << 62) / static_cast<std::uint64_t>(p)) {
      return std::to_string(p) + "^" + std::to_string(e);
    }
    v *= static_cast<std::uint64_t>(p);
  }
  return v;
}

Json chain_report_to_json(const Ambient& amb, const ChainReport& report) {
  const int p = amb.ring().p();
  Json j;
  j["is_chain"] = report.is_chain;
  j["ideal_count"] = report.ideal_count;
  Json sizes = Json::array();
  for (int e : report.ideal_log_sizes) sizes.push_back(power_to_json(p, e));
  j["ideal_sizes"] = sizes;
  j["ideal_log_sizes"] = report.ideal_log_sizes;
  j["maximal_ideal_principal"] = report.maximal_ideal_principal;
  j["alpha"] = element_to_json(report.alpha);
  j["gamma"] = element_to_json(amb.gamma());
  j["gamma_type"] = std::string(to_string(report.gamma_kind));
  j["method"] = report.method == ChainMethod::Structural ? "structural" : "exhaustive";
  j["matches_power_chain"] = report.matches_power_chain;
  j["power_chain_length"] = report.power_chain_length;
  j["p_in_x_minus_alpha"] = report.p_in_x_minus_alpha;
  j["x_minus_alpha_in_p"] = report.x_minus_alpha_in_p;
  j["samples"] = report.samples;
  return j;
}

Json code_to_json(const ConstaCode& code) {
  const Ambient& amb = code.ambient();
  Json j;
  j["p"] = amb.ring().p();
  j["a"] = amb.ring().a();
  j["m"] = amb.ring().m();
  j["s"] = amb.s();
  j["gamma"] = element_to_json(amb.gamma());
  j["alpha"] = element_to_json(code.alpha());
  j["i"] = code.index();
  j["cardinality"] = power_to_json(amb.ring().p(), code.log_cardinality());
  return j;
}

void write_distance_csv_header(std::ostream& out) {
  out << "p,a,m,s,gamma,i,cardinality,d_hamming_formula,d_hamming_oracle,d_hom_formula,"
         "d_hom_oracle\n";
}

void write_distance_csv(std::ostream& out, const Ambient& amb,
                        const std::vector<DistanceRow>& rows) {
  const RingContext& ctx = amb.ring();
  const std::uint64_t gamma_index = ctx.index_of(amb.gamma());
  for (const auto& row : rows) {
    const Json card = power_to_json(ctx.p(), row.log_cardinality);
    out << ctx.p() << ',' << ctx.a() << ',' << ctx.m() << ',' << amb.s() << ',' << gamma_index
        << ',' << row.i << ',' << (card.is_string() ? card.get<std::string>() : card.dump())
        << ',' << row.hamming.formula_value << ',';
    if (row.hamming.oracle_value) out << *row.hamming.oracle_value;
    out << ',';
    if (row.homogeneous) {
      out << row.homogeneous->formula_value << ',';
      if (row.homogeneous->oracle_value) out << *row.homogeneous->oracle_value;
    } else {
      out << ',';
    }
    out << '\n';
  }
}

void write_codewords_csv(std::ostream& out, const Ambient& amb, const CodewordSet& words) {
  const RingContext& ctx = amb.ring();
  for (std::uint64_t code : words) {
    const AmbientPoly w = amb.decode(code);
    for (std::size_t k = 0; k < w.length(); ++k) {
      if (k > 0) out << ',';
      out << ctx.index_of(w.element(k));
    }
    out << '\n';
  }
}

}  // namespace galring
