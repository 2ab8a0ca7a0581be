#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cratlas/rootsys.hpp"

namespace cratlas {

// Flag manifold F = G/K with invariant complex structure J_F, encoded as a
// black/white Dynkin diagram. Black nodes span the center of the isotropy.
struct PaintedDiagram {
    RootSystemPtr system;
    std::vector<int> black; // sorted node ids, >= 1 per component

    std::string name() const; // "B3[1]", "C2[1]xA1[1]"
    Json to_json() const;
    bool is_black(int node) const;
    std::vector<int> white_nodes() const;
    // Black nodes belonging to one component, sorted.
    std::vector<int> black_in_component(int comp) const;
};

// Validates the painting (>= 1 black node per component, ids in range).
PaintedDiagram make_painting(RootSystemPtr sys, std::vector<int> black);

struct IsotropyDescription {
    std::vector<SimpleLieType> semisimple; // sorted classification of the white subdiagram
    int center_dim = 0;

    std::string str() const; // "T^1 . B2"
    Json to_json() const;
    bool operator==(const IsotropyDescription&) const = default;
};

IsotropyDescription isotropy(const PaintedDiagram& d);

// Classifies a connected subdiagram given by node ids; exposed for reuse.
SimpleLieType classify_subdiagram(const RootSystem& sys, const std::vector<int>& nodes);

// Splits a node set into connected components of the induced subdiagram.
std::vector<std::vector<int>> subdiagram_components(const RootSystem& sys, const std::vector<int>& nodes);

// Indices of the positive roots with a nonzero coefficient on a black node:
// R+ \ R_K+, spanning the holomorphic tangent space of F.
std::vector<int> complementary_positive_roots(const PaintedDiagram& d);

// All valid paintings of the system; with orbit_representatives, one painting
// per diagram-automorphism orbit (lexicographically least black set).
std::vector<PaintedDiagram> enumerate_paintings(RootSystemPtr sys, bool orbit_representatives = false);

// All diagram isomorphisms carrying black(d1) onto black(d2).
std::vector<NodePerm> painted_isomorphisms(const PaintedDiagram& d1, const PaintedDiagram& d2);

} // namespace cratlas
