#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cratlas/rational.hpp"

namespace cratlas {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);

struct SimpleLieType {
    Family family;
    int rank;

    bool operator==(const SimpleLieType&) const = default;
    bool operator<(const SimpleLieType& o) const {
        return family != o.family ? family < o.family : rank < o.rank;
    }
    std::string str() const; // "B3"
};

// Throws Error(invalid_rank) outside A:n>=1, B:n>=2, C:n>=2, D:n>=4,
// E:n in {6,7,8}, F:n=4, G:n=2.
void validate_type(const SimpleLieType& t);

// Node permutation of a root system, images indexed by node id.
using NodePerm = std::vector<int>;

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

class Weight {
  public:
    Weight(RootSystemPtr sys, std::vector<Rat> coords);

    const RootSystemPtr& system() const { return sys_; }
    // Coordinates over the fundamental-weight basis, one per node.
    const std::vector<Rat>& coords() const { return coords_; }

    Json to_json() const;

  private:
    RootSystemPtr sys_;
    std::vector<Rat> coords_;
};

// Exact root data of a (semi)simple compact Lie algebra. Nodes are numbered
// in Bourbaki order within each component, components in construction order.
class RootSystem {
  public:
    static RootSystemPtr build(std::vector<SimpleLieType> types);

    const std::vector<SimpleLieType>& components() const { return components_; }
    int rank() const { return rank_; }
    int component_of_node(int node) const { return comp_of_node_[node]; }
    int component_first_node(int comp) const { return comp_first_[comp]; }
    int component_rank(int comp) const { return components_[comp].rank; }

    // cartan(i, j) = pairing(alpha_j, alpha_i^vee); diagonal 2.
    long long cartan(int i, int j) const { return cartan_[i][j]; }
    // d_i = |alpha_i|^2 / 2 with long roots normalized to squared length 2.
    const Rat& node_d(int node) const { return node_d_[node]; }

    int num_positive_roots() const { return static_cast<int>(pos_roots_.size()); }
    // Integer coefficients over the simple roots.
    const std::vector<long long>& positive_root(int idx) const { return pos_roots_[idx]; }
    // Integer coefficients of the coroot over the simple coroots.
    const std::vector<long long>& coroot(int idx) const { return pos_coroots_[idx]; }
    int root_component(int idx) const { return root_comp_[idx]; }
    const Rat& root_length2(int idx) const { return root_len2_[idx]; }
    bool root_is_long(int idx) const;
    // Index of the positive root with the given coefficient vector, -1 if absent.
    int find_positive_root(const std::vector<long long>& coeffs) const;

    // (pi_i, pi_j) under the invariant form; block diagonal over components.
    const Rat& weight_form(int i, int j) const { return weight_form_[i][j]; }

    // theta(alpha^vee) for the positive root idx. Throws mismatched_system.
    Rat pairing(const Weight& w, int root_idx) const;
    // Same against an explicit coroot coefficient vector.
    Rat pairing_coroot(const Weight& w, const std::vector<long long>& coroot_coeffs) const;

    // B(w1, w2) on the weight side; B(Z,Z) for Z = B^{-1}theta is
    // weight_norm2(theta).
    Rat weight_product(const Weight& a, const Weight& b) const;
    Rat weight_norm2(const Weight& w) const { return weight_product(w, w); }

    // All graph automorphisms of the Dynkin diagram, including swaps of
    // isomorphic components. Deterministic order, closed under composition.
    std::vector<NodePerm> diagram_automorphisms() const;

    // All diagram isomorphisms onto another system (empty if none).
    std::vector<NodePerm> isomorphisms_to(const RootSystem& other) const;

    bool same_structure(const RootSystem& other) const;

    std::string name() const; // "B3", "A2xA1"
    Json to_json() const;

  private:
    RootSystem() = default;
    void build_component_roots(int comp);
    void build_weight_form();

    std::vector<SimpleLieType> components_;
    int rank_ = 0;
    std::vector<int> comp_of_node_;
    std::vector<int> comp_first_;
    std::vector<std::vector<long long>> cartan_;
    std::vector<Rat> node_d_;
    std::vector<std::vector<long long>> pos_roots_;
    std::vector<std::vector<long long>> pos_coroots_;
    std::vector<int> root_comp_;
    std::vector<Rat> root_len2_;
    std::vector<std::vector<Rat>> weight_form_;
};

RootSystemPtr build_root_system(std::vector<SimpleLieType> types);

Weight make_weight(RootSystemPtr sys, std::vector<Rat> coords);

// Exact inverse of a square rational matrix (throws internal on singular).
std::vector<std::vector<Rat>> rational_inverse(std::vector<std::vector<Rat>> m);

} // namespace cratlas
