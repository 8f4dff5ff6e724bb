#pragma once

// Instance files and check-report serialization.
//
// Instance files are JSON objects:
//   { "name": "tetra",                       (optional)
//     "facets":  [["a","b","c"], ...],
//     "classes": [["a"], ["b"], ["c","d"]] } (optional coloring)
// A plain-text facet list (one facet per line, labels separated by spaces or
// commas, '#' starts a comment) is accepted as well.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "rainbow/chromatic.hpp"
#include "rainbow/complex.hpp"

namespace rainbow {

/// Malformed input; the message carries the position.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input whose coloring does not partition the vertex set.
class ColoringError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Instance {
    std::optional<std::string> name;
    SimplicialComplex complex;
    std::optional<Coloring> coloring;
    std::vector<std::string> warnings;
};

/// Parses JSON or facet-list text. Throws ParseError or ColoringError.
Instance parse_instance_text(const std::string& text);
/// Reads `path` ("-" for `in`) and parses it.
Instance parse_instance(const std::string& path, std::istream& in);

/// Deterministic JSON rendering, one facet per line, facets and classes in label order.
std::string instance_to_json(const SimplicialComplex& K, const std::optional<Coloring>& coloring,
                             const std::optional<std::string>& name);

inline constexpr int k_report_schema_version = 1;

nlohmann::ordered_json report_to_json(const CheckReport& report, std::optional<double> timing_ms = std::nullopt);
/// Inverse of report_to_json (timing is ignored). Throws ParseError on schema mismatch.
CheckReport report_from_json(const nlohmann::json& j);

} // namespace rainbow
