#pragma once

#include <optional>

#include "cratlas/flag.hpp"

namespace cratlas {

// Standard homogeneous CR manifold over a painted flag: an integer tuple on
// the black nodes. theta = sum p_i pi_i over black weights, Z = B^{-1} theta.
struct StandardCR {
    PaintedDiagram diagram;
    std::vector<long long> tuple; // indexed by diagram.black in ascending node order

    std::string name() const; // "B3[1] p=(2)"
    Json to_json() const;
};

struct ContactData {
    Weight theta;
    IsotropyDescription isotropy_L;
    std::string contact_element_note;
};

struct LeviSignature {
    int n_plus = 0;
    int n_minus = 0; // complex dimensions

    bool operator==(const LeviSignature&) const = default;
    Json to_json() const { return Json{{"n_plus", n_plus}, {"n_minus", n_minus}}; }
};

struct StandardWitness {
    NodePerm perm;
    bool negated = false; // used the conjugate structure J -> -J

    Json to_json() const;
};

// Validates: nonzero entries, gcd 1, theta(alpha^vee) != 0 on every
// complementary positive root. Throws zero_entry / non_primitive / non_regular.
StandardCR make_standard(PaintedDiagram d, std::vector<long long> tuple);

Weight theta_weight(const StandardCR& s);

ContactData contact_data(const StandardCR& s);

LeviSignature levi_signature(const StandardCR& s);

// Orbit equivalence: some painted-diagram isomorphism carries tuple(s1) to
// tuple(s2); with allow_conjugate_J also up to global sign.
std::optional<StandardWitness> equivalent_standard(const StandardCR& s1, const StandardCR& s2,
                                                   bool allow_conjugate_J);

// Tuple transported along a painted isomorphism d -> target.
std::vector<long long> transport_tuple(const PaintedDiagram& d, const std::vector<long long>& tuple,
                                       const NodePerm& perm, const PaintedDiagram& target);

// Canonical representative of the orbit of `tuple` under the painted
// automorphisms of d (and global negation when allow_conjugate_J). Entries are
// ordered 1 < 2 < ... < -1 < -2 < ...; tuples compared lexicographically.
std::vector<long long> canonical_tuple(const PaintedDiagram& d, const std::vector<long long>& tuple,
                                       bool allow_conjugate_J);

// All admissible tuples with max |p_i| <= bound, one canonical representative
// per equivalence class, deterministically sorted.
std::vector<StandardCR> enumerate_standard(const PaintedDiagram& d, long long bound,
                                           bool allow_conjugate_J = true);

} // namespace cratlas
