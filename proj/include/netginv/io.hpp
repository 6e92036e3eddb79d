#pragma once

#include "netginv/blockinv.hpp"
#include "netginv/connect.hpp"
#include "netginv/network.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace netginv::io {

// Network text format, one record per line ('#' starts a comment):
//   n <count>          exactly once, before any other record
//   w <i> <value>      optional vertex weight, at most once per vertex
//   e <i> <j> <c>      edge, 0-based indices, each unordered pair at most once
// Connection format:
//   c <i> <j> <a>      i indexes the first network, j the second

/// Throws ParseError carrying the 1-based line number. Value-level problems
/// (negative conductances, loops, connectivity) are left to validate_network().
/// A partial set of `w` lines is a parse error: either every vertex has a weight or none.
Network parse_network(std::string_view text);

ConnectionSpec parse_connection(std::string_view text);

std::string format_network(const Network& net);
std::string format_connection(const ConnectionSpec& conn);

/// Shortest-round-trip-safe decimal: 17 significant digits.
std::string format_number(double x);

/// Row-major text, one row per line, entries separated by single spaces.
std::string format_matrix_text(const Matrix& m);

/// {"order": n, "rows": [[...], ...]}
nlohmann::json matrix_to_json(const Matrix& m);

/// matrix_to_json plus {"residuals": {"commute", "projector", "kernel"}}.
nlohmann::json group_inverse_to_json(const GroupInverseResult& result);

}  // namespace netginv::io
