#pragma once

#include <optional>
#include <vector>

#include "cratlas/maximal_group.hpp"
#include "cratlas/standard_cr.hpp"

// Independent brute-force verification layer. Everything here recomputes
// structure from scratch (Chevalley brackets, explicit matrices, epsilon
// coordinates) instead of reusing the combinatorial paths it checks.
namespace cratlas::oracle {

struct GaussRat {
    Rat re{0}, im{0};

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    static GaussRat i() { return GaussRat{Rat(0), Rat(1)}; }

    bool zero() const { return re == Rat(0) && im == Rat(0); }
    GaussRat conj() const { return {re, -im}; }

    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
        Rat n = b.re * b.re + b.im * b.im;
        if (n == Rat(0)) throw Error(Errc::internal, "division by zero");
        GaussRat t = a * b.conj();
        return {t.re / n, t.im / n};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }
};

using Vec = std::vector<GaussRat>;

// Chevalley basis {H_1..H_r} u {E_a : a in R} of one simple algebra, rank <= 3.
// Signed root ids: 0..P-1 the positive roots in system order, P+i is -root(i).
// Structure constants are built from the extraspecial-pair convention: for
// each non-simple positive root, the decomposition with the smallest first
// summand (height-then-lex order) gets N = +(p+1).
class ChevalleyAlgebra {
  public:
    static ChevalleyAlgebra build(const SimpleLieType& type); // throws unsupported_rank if rank > 3

    const RootSystemPtr& system() const { return sys_; }
    int rank() const { return sys_->rank(); }
    int num_positive() const { return sys_->num_positive_roots(); }
    int num_signed() const { return 2 * num_positive(); }
    int dim() const { return rank() + num_signed(); }

    int negate(int signed_id) const {
        int p = num_positive();
        return signed_id < p ? signed_id + p : signed_id - p;
    }
    bool is_positive(int signed_id) const { return signed_id < num_positive(); }
    std::vector<long long> signed_root_coeffs(int signed_id) const;
    // Signed id of a coefficient vector, -1 when not a root.
    int find_signed(const std::vector<long long>& coeffs) const;

    // N_{a,b} for signed roots with root(a) + root(b) a root; 0 otherwise.
    long long n_constant(int a, int b) const { return n_[a][b]; }

    // Basis order: H_1..H_r then E_{signed 0..2P-1}.
    int basis_h(int k) const { return k; }
    int basis_e(int signed_id) const { return rank() + signed_id; }

    Vec bracket(const Vec& x, const Vec& y) const;
    Vec basis_vector(int basis_id) const;

    // Compact real form elements.
    Vec compact_x(int pos_id) const; // X_a = E_a - E_{-a}
    Vec compact_y(int pos_id) const; // Y_a = i(E_a + E_{-a})
    Vec compact_h(int node) const;   // i H_k

  private:
    RootSystemPtr sys_;
    std::vector<std::vector<long long>> n_; // signed x signed
    // [E_a, E_{-a}] = sum coroot_coeffs[k] H_k for a positive.
    std::vector<std::vector<long long>> coroot_of_pos_;
    std::vector<Rat> len2_signed_;

    friend struct ChevalleyBuilder;
    ChevalleyAlgebra() = default;
};

ChevalleyAlgebra build_chevalley(const SimpleLieType& type);

// dim C_g(Z) for Z = B^{-1}theta, found by solving [Z, X] = 0 on the basis.
int centralizer_dim(const ChevalleyAlgebra& alg, const std::vector<Rat>& theta_coords);

// dim h + #{a in R : theta(a^vee) = 0}; the combinatorial cross-check.
int centralizer_dim_formula(const ChevalleyAlgebra& alg, const std::vector<Rat>& theta_coords);

// Checks m10 n conj(m10) = 0 and m10 + conj(m10) = complement of R_K (throws
// invalid_span otherwise), then decides whether l^C + span(m10) is closed
// under bracket, by evaluating all brackets. white_nodes defines l.
bool verify_integrability(const ChevalleyAlgebra& alg, const std::vector<int>& white_nodes,
                          const std::vector<int>& m10_signed);

// [Z, m10] in m10 for the painting's m10 = positive complementary root spaces.
bool standardness_check(const ChevalleyAlgebra& alg, const std::vector<int>& black_nodes,
                        const std::vector<int>& m10_signed);

// Signature of the Levi form computed on the compact real form basis
// {X_a, Y_a}. Throws degenerate_form when the form is singular.
LeviSignature levi_form_oracle(const ChevalleyAlgebra& alg, const std::vector<int>& black_nodes,
                               const std::vector<long long>& tuple);

// Signature (n_plus, n_minus, n_zero) of a symmetric rational matrix by
// congruence diagonalization.
struct MatrixSignature {
    int plus = 0, minus = 0, zero = 0;
};
MatrixSignature symmetric_signature(std::vector<std::vector<Rat>> m);

// --- explicit matrix realizations for the Onishchik embedding indices ---

struct EmbeddingReport {
    Rat index;       // B_a(E^k, E^c); must land in Z \ {0}
    Rat bg_zz;       // B_g(Z, Z) for Z = B^{-1}(p pi), from traces
    Rat ba_z_ec;     // B_a(Z, E^c)
    Rat lambda;      // Z = lambda E^k
};

// Supported: row I with ell in {2, 3} (Sp_ell in SU_2ell), row III with
// ell = 3 (SO_7 in SO_8), row II (G_2 in SO_7 via the long-root centralizer).
// Throws unsupported_instance otherwise.
Rat matrix_embedding_index(OnishchikRow row, int ell);
EmbeddingReport embedding_report(OnishchikRow row, int ell, long long p);

// --- independent epsilon-coordinate root tables, rank <= 4 ---

struct EpsilonTable {
    // Positive roots as integer coefficient vectors over the Bourbaki simple
    // roots, together with squared lengths in the realization's own scale.
    std::vector<std::vector<long long>> positive_roots;
    std::vector<Rat> length2;
    std::vector<std::vector<long long>> cartan;
};

EpsilonTable epsilon_root_table(const SimpleLieType& type); // throws unsupported_rank above 4

} // namespace cratlas::oracle
