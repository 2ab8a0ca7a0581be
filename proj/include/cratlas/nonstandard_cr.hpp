#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cratlas/flag.hpp"

namespace cratlas {

enum class FactorKind { SU, SO, Sp, Spin, G2, F4, E6, E7, E8 };

struct GroupFactor {
    FactorKind kind;
    int n = 0; // subscript for SU/SO/Sp/Spin, unused for exceptional kinds

    auto operator<=>(const GroupFactor&) const = default;
    std::string str() const;
    long long dim() const;
    int rank() const;
};

// Compact group up to local isomorphism: a torus rank and a sorted multiset of
// simple factors. U_n is normalized to T^1 . SU_n, SO_2 to T^1; trivial
// factors (SU_1, SO_1, Sp_0, ...) are dropped. Labels are otherwise kept
// distinct (no B2=C2 style identifications).
struct SymbolicGroup {
    int torus_rank = 0;
    std::vector<GroupFactor> factors;

    void add(FactorKind kind, int n);
    void normalize();
    long long dim() const;
    int semisimple_rank() const;
    bool trivial() const { return torus_rank == 0 && factors.empty(); }
    std::string str() const;

    bool operator==(const SymbolicGroup&) const = default;
};

// Grammar: factors joined by '.', 'x', '*', U+00B7 or U+00D7; tokens
// SU_n | SUn | SO_n | Sp_n | Spin_n | U_n | G2 | F4 | E6 | E7 | E8 | T^k | Tk
// | {e} | e | 1; parentheses and primes allowed. Throws unparseable_isotropy.
SymbolicGroup parse_group(const std::string& text);

// One row of the non-standard classification table, instantiated.
struct NonstandardRow {
    int row = 0;                            // 1..12
    std::map<std::string, long long> params; // "n" or "p","q"
    std::string g_str, l_str, k_str;        // printed forms
    SymbolicGroup G, L, K;

    long long dim_G() const { return G.dim(); }
    long long dim_L() const { return L.dim(); }
    long long dim_M() const { return G.dim() - L.dim(); }
    int rank_G() const { return G.semisimple_rank(); }
    // Painted diagram of the associated flag G/K.
    PaintedDiagram flag_painting() const;
    Json to_json() const;
};

// Row template as printed (parameter letters kept symbolic).
struct NonstandardRowTemplate {
    int row;
    std::string g_pattern, l_pattern, k_pattern;
    std::string constraint; // "" when none
    std::map<std::string, long long> minimal_params;
};

// The twelve rows, in table order.
const std::vector<NonstandardRowTemplate>& nonstandard_catalog();

// Instantiates a row at given parameter values (validates constraints).
NonstandardRow instantiate_row(int row, const std::map<std::string, long long>& params);

// Matches (G, L) against the table; parameters inferred. none when no row fits.
std::optional<NonstandardRow> recognize(const SymbolicGroup& G, const SymbolicGroup& L);
std::optional<NonstandardRow> recognize(const std::string& group, const std::string& isotropy);

// Non-standard CR manifold: a table row plus the disc modulus t, 0 < |t| < 1.
struct NonStandardCR {
    NonstandardRow entry;
    Rat t_re, t_im;

    Rat modulus2() const { return t_re * t_re + t_im * t_im; }
    std::string name() const;
    Json to_json() const;
};

NonStandardCR make_nonstandard(NonstandardRow entry, Rat t_re, Rat t_im);

// Same homogeneous manifold up to the exceptional identification
// (row 2 <-> row 6 at n = 4, both S(S^7)), and |t| = |t'| exactly.
bool equivalent_nonstandard(const NonStandardCR& a, const NonStandardCR& b);

// True when the two rows present the same homogeneous manifold.
bool same_homogeneous_manifold(const NonstandardRow& a, const NonstandardRow& b);

// The maximal connected semisimple compact automorphism group: G itself,
// except SO_8 for the Spin_7/SU_3 row.
SymbolicGroup maximal_semisimple_nonstandard(const NonstandardRow& entry);
std::string maximal_semisimple_nonstandard_str(const NonstandardRow& entry);

} // namespace cratlas
