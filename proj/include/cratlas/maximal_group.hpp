#pragma once

#include <optional>
#include <variant>

#include "cratlas/nonstandard_cr.hpp"
#include "cratlas/standard_cr.hpp"

namespace cratlas {

enum class OnishchikRow { I, II, III };

const char* onishchik_row_name(OnishchikRow r);

// A flag manifold with two distinct transitive compact holomorphic groups:
// (A/C, G/K) with A strictly larger. Three families exist.
struct OnishchikPair {
    OnishchikRow row;
    int ell; // row I: C_ell (ell >= 2); row III: B_ell (ell >= 3); row II: fixed
    PaintedDiagram g_side;
    PaintedDiagram a_side;
    std::string g_space; // "Sp_2/Sp_1.T^1"
    std::string a_space; // "SU_4/U_3"

    Json to_json() const;
};

// Matches a single painted simple component against the three G-side
// patterns: C_ell[1] (ell>1), G_2[2] (the long simple root), B_ell[ell]
// (ell>2). none otherwise.
std::optional<OnishchikPair> onishchik_extension(const PaintedDiagram& factor);

struct HolomorphicGroup {
    SymbolicGroup a;
    std::string a_str;
    PaintedDiagram a_flag;
    // Per component of the input flag: the pair when the factor is a G-side.
    std::vector<std::optional<OnishchikPair>> factor_pairs;
};

// Factorwise maximal compact group of holomorphic transformations of (F, J_F)
// and its flag presentation; the complex structure carries over uniquely.
HolomorphicGroup maximal_holomorphic_group(const PaintedDiagram& flag);

// Contact element transfer data for one simple factor. For an Onishchik
// factor, Z' = coefficient * E^c where E^c generates the center of the A-side
// isotropy (quotient-circle primitive, B_a(E^c, E^c) = -1); otherwise Z' = Z.
struct FactorTransfer {
    int component = 0;
    bool onishchik = false;
    Rat bg_zz;                   // B_g(Z, Z), positive-definite normalization
    Rat lambda;                  // Z = lambda * E^k, E^k the exp-primitive generator of Z(k)
    long long embedding_index = 0; // B_a(E^k, E^c)
    Rat ba_z_ec;                 // B_a(Z, E^c) = lambda * embedding_index
    Rat coefficient;             // Z' = coefficient * E^c
    Rat ba_z_zprime;             // equals B_g(Z, Z) by construction
    std::string note;

    Json to_json() const;
};

std::vector<FactorTransfer> transfer_contact_element(const StandardCR& s);

// Embedding index B_a(E^k, E^c) of an Onishchik family: -1, -1, -ell for rows
// I, II, III. Constants derived from the matrix realizations in the oracle.
long long onishchik_embedding_index(OnishchikRow row, int ell);

// lambda with Z = B^{-1}(p pi) = lambda * E^k: p/2, p, p/2 for rows I, II, III.
Rat onishchik_lambda(OnishchikRow row, long long p);

struct MaxGroupReport {
    SymbolicGroup a_ss;
    std::string a_ss_str;
    int center_dim = 0; // 1 iff standard
    std::string a_full_str; // a_ss (x T^1 when center_dim = 1)
    std::optional<PaintedDiagram> a_side_flag;
    std::string a_side_isotropy; // B with M = A/B (semisimple part + torus), symbolic
    std::vector<FactorTransfer> transfer;

    Json to_json() const;
};

MaxGroupReport maximal_cr_group(const StandardCR& s);
MaxGroupReport maximal_cr_group(const NonStandardCR& m);

inline bool is_standard_by_center(const MaxGroupReport& r) { return r.center_dim == 1; }

// Symbolic name of the simply connected group of one simple type: A_n ->
// SU_{n+1}, B_n -> SO_{2n+1}, C_n -> Sp_n, D_n -> SO_{2n}, exceptional as is.
std::string simple_group_name(const SimpleLieType& t);
GroupFactor simple_group_factor(const SimpleLieType& t);

} // namespace cratlas
