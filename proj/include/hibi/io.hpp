#pragma once

#include <string>
#include <string_view>

#include "hibi/analyze.hpp"
#include "hibi/frobenius.hpp"
#include "hibi/poset.hpp"

namespace hibi {

/// Parses either input format, auto-detected:
///  - JSON: {"elements": [...], "covers": [[x,y],...], "relations": [[x,y],...]}
///  - text: one relation "x < y" per line, elements inferred in first-mention
///    order, '#' lines and blank lines ignored.
/// Throws ParseError with a location, or the poset construction errors.
Poset parse_poset(std::string_view text);

/// Reads a file, or standard input when path is "-".
Poset parse_poset_file(const std::string& path);

/// Canonical JSON serialization; parse_poset round-trips it.
std::string poset_to_json(const Poset& p);

std::string report_to_json(const InvariantReport& r);
std::string report_to_text(const InvariantReport& r);

/// "T", "T*X[a]*X[b]^2", ... with exponent-1 factors unmarked.
std::string monomial_to_string(const Poset& p, const HibiMonomial& m);

std::string frobenius_report_to_json(const Poset& p, const FrobeniusReport& r);

}  // namespace hibi
