#pragma once

// Serialization of contexts, classifications, reports and code tables.
// All JSON objects use sorted keys (nlohmann::json's default map) and carry
// no timestamps, so identical inputs produce byte-identical output.

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "galring/ambient_ring.hpp"
#include "galring/constacodes.hpp"
#include "galring/distances.hpp"
#include "galring/galois_ring.hpp"
#include "galring/unit_types.hpp"

namespace galring {

using Json = nlohmann::json;

/// {p, a, m, h: [...], zeta: [...]}, coefficients little-endian by degree.
Json context_to_json(const RingContext& ctx);
RingPtr context_from_json(const Json& j, const Budget& budget = {});

Json element_to_json(const GrElement& x);

/// "3" for m = 1, "c0,c1,...,c_{m-1}" otherwise.
GrElement parse_element(const RingContext& ctx, const std::string& text);
std::string format_element(const GrElement& x);

/// {"unit": [...], "type": ..., "zeta0": idx|null, "zeta1": idx|null, "z": [...]}
Json unit_class_to_json(const GrElement& unit, const UnitClass& cls);

/// {is_chain, ideal_count, ideal_sizes, maximal_ideal_principal, alpha, ...}
Json chain_report_to_json(const Ambient& amb, const ChainReport& report);

/// {p, a, m, s, gamma, alpha, i, cardinality}
Json code_to_json(const ConstaCode& code);

/// p^e as a JSON integer when it fits in 63 bits, else the string "p^e".
Json power_to_json(int p, int e);

/// Distance table CSV, one header line then one line per row.
void write_distance_csv_header(std::ostream& out);
void write_distance_csv(std::ostream& out, const Ambient& amb,
                        const std::vector<DistanceRow>& rows);

/// One line per codeword: p^s comma-separated coordinate indices
/// (RingContext::index_of, which is the integer itself when m = 1).
void write_codewords_csv(std::ostream& out, const Ambient& amb, const CodewordSet& words);

}  // namespace galring
