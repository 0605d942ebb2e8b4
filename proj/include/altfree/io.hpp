#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "altfree/types.hpp"

namespace altfree {

// Hypergraph file (.hg): line 1 "n m", then m lines of space-separated
// 1-based vertex indices, one hyperedge per line (a blank line is an empty
// edge). Matrix file (.mat): one row per line, characters '0'/'1' only,
// all lines the same length. Parsers throw ParseError with a 1-based
// line:column position; serialize o parse is the identity on canonical
// form.

OrderedHypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const OrderedHypergraph& h);

BinaryMatrix parse_matrix(std::string_view text);
std::string serialize_matrix(const BinaryMatrix& m);

/// JSON witness encoding. Vertex/row/column indices are 1-based in JSON,
/// color values stay 0-based; only fields relevant to the kind are present.
nlohmann::json witness_to_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);

}  // namespace altfree
