#pragma once

#include <string>
#include <variant>

#include "cratlas/maximal_group.hpp"

namespace cratlas {

// Diagram name grammar: comp ("x" comp)*, comp = FAMILY RANK "[" ids "]",
// ids local 1-based Bourbaki node numbers, e.g. "B3[1]", "C2[1]xA1[1]".
PaintedDiagram parse_diagram_name(const std::string& name);

// "1,-1" -> {1, -1}
std::vector<long long> parse_tuple(const std::string& text);

// Manifold spec: "<diagram> p=(<ints>)" or "<G> / <L> t=(<re>,<im>)".
using ManifoldSpec = std::variant<StandardCR, NonStandardCR>;
ManifoldSpec parse_manifold_spec(const std::string& text);

// Full classification reports.
Json classify_report(const StandardCR& s);
Json classify_report(const NonStandardCR& m);
Json classify_report(const ManifoldSpec& spec);

// Equivalence of two manifold specs; cross-kind is always inequivalent.
struct EquivalenceVerdict {
    bool equivalent = false;
    Json witness; // null when inequivalent or when no witness applies
};
EquivalenceVerdict decide_equivalent(const ManifoldSpec& a, const ManifoldSpec& b,
                                     bool allow_conjugate_J = true);

struct CatalogOptions {
    int max_rank = 3;
    long long tuple_bound = 2;
    int threads = 1;
};

// Deterministic catalog of all standard classes over the simple types up to
// max_rank plus all non-standard rows reachable within that rank. Entries are
// canonicalized and sorted; output is byte-stable for fixed options.
Json enumerate_catalog(const CatalogOptions& opts);

// Recomputes every entry of a catalog and reports mismatches.
Json verify_catalog(const Json& catalog);

// Simple types enumerated by the catalog, in order.
std::vector<SimpleLieType> simple_types_up_to_rank(int max_rank);

std::string render_text_report(const Json& report);

} // namespace cratlas
