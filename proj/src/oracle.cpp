#include "cratlas/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cratlas::oracle {

namespace {

std::vector<long long> add_vec(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

std::vector<long long> sub_vec(const std::vector<long long>& a, const std::vector<long long>& b) {
    std::vector<long long> c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

bool zero_vec(const std::vector<long long>& a) {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

} // namespace

std::vector<long long> ChevalleyAlgebra::signed_root_coeffs(int signed_id) const {
    int p = num_positive();
    if (signed_id < p) return sys_->positive_root(signed_id);
    auto c = sys_->positive_root(signed_id - p);
    for (auto& v : c) v = -v;
    return c;
}

int ChevalleyAlgebra::find_signed(const std::vector<long long>& coeffs) const {
    bool nonneg = std::all_of(coeffs.begin(), coeffs.end(), [](long long x) { return x >= 0; });
    bool nonpos = std::all_of(coeffs.begin(), coeffs.end(), [](long long x) { return x <= 0; });
    if (zero_vec(coeffs)) return -1;
    if (nonneg) return sys_->find_positive_root(coeffs);
    if (nonpos) {
        auto neg = coeffs;
        for (auto& v : neg) v = -v;
        int id = sys_->find_positive_root(neg);
        return id < 0 ? -1 : id + num_positive();
    }
    return -1;
}

struct ChevalleyBuilder {
    ChevalleyAlgebra alg;
    int P = 0;
    int rank = 0;

    explicit ChevalleyBuilder(const SimpleLieType& type) {
        if (type.rank > 3)
            throw Error(Errc::unsupported_rank, "Chevalley tables are built for rank <= 3 only");
        alg.sys_ = build_root_system({type});
        P = alg.num_positive();
        rank = alg.rank();
        alg.n_.assign(2 * P, std::vector<long long>(2 * P, 0));
        for (int i = 0; i < P; ++i) alg.coroot_of_pos_.push_back(alg.sys_->coroot(i));
        for (int i = 0; i < 2 * P; ++i)
            alg.len2_signed_.push_back(alg.sys_->root_length2(i < P ? i : i - P));
    }

    long long string_down(int r, int s) const {
        // max k with root(s) - k root(r) a root
        long long k = 0;
        auto cur = alg.sys_->positive_root(s);
        const auto& step = alg.sys_->positive_root(r);
        while (true) {
            cur = sub_vec(cur, step);
            if (alg.find_signed(cur) < 0) break;
            ++k;
        }
        return k;
    }

    // N_{x, -y} for positive ids x != y, via reduction to positive pairs.
    Rat mixed(int x, int y) const {
        auto w = sub_vec(alg.sys_->positive_root(x), alg.sys_->positive_root(y));
        int id = alg.find_signed(w);
        if (id < 0) return Rat(0);
        if (alg.is_positive(id)) {
            // (x) + (-y) + (-w) = 0 with w = x - y positive
            return -alg.sys_->root_length2(id) * Rat(alg.n_[y][id]) / alg.sys_->root_length2(x);
        }
        int u = id - P; // u = y - x positive
        return -alg.sys_->root_length2(u) * Rat(alg.n_[x][u]) / alg.sys_->root_length2(y);
    }

    void fill_positive_pairs() {
        for (int g = 0; g < P; ++g) {
            const auto& gamma = alg.sys_->positive_root(g);
            long long height = std::accumulate(gamma.begin(), gamma.end(), 0LL);
            if (height < 2) continue;
            std::vector<std::pair<int, int>> decomps;
            for (int r = 0; r < P; ++r) {
                int s = alg.sys_->find_positive_root(sub_vec(gamma, alg.sys_->positive_root(r)));
                if (s >= 0 && r < s) decomps.emplace_back(r, s);
            }
            if (decomps.empty()) throw Error(Errc::internal, "non-simple root without decomposition");
            std::sort(decomps.begin(), decomps.end());
            auto [r, s] = decomps.front(); // extraspecial pair: minimal first summand
            alg.n_[r][s] = string_down(r, s) + 1;
            alg.n_[s][r] = -alg.n_[r][s];
            for (size_t d = 1; d < decomps.size(); ++d) {
                auto [u, v] = decomps[d];
                // four-root identity on (r, s, -u, -v)
                Rat acc(0);
                auto su = sub_vec(alg.sys_->positive_root(s), alg.sys_->positive_root(u));
                if (alg.find_signed(su) >= 0) {
                    Rat len2 = alg.sys_->root_length2(alg.find_signed(su) % P);
                    acc += mixed(s, u) * mixed(r, v) / len2;
                }
                auto ru = sub_vec(alg.sys_->positive_root(r), alg.sys_->positive_root(u));
                if (alg.find_signed(ru) >= 0) {
                    Rat len2 = alg.sys_->root_length2(alg.find_signed(ru) % P);
                    acc -= mixed(r, u) * mixed(s, v) / len2;
                }
                Rat n_uv = alg.sys_->root_length2(g) * acc / Rat(alg.n_[r][s]);
                if (n_uv.denominator() != 1 || n_uv == Rat(0))
                    throw Error(Errc::internal, "structure constant propagation failed");
                alg.n_[u][v] = n_uv.numerator();
                alg.n_[v][u] = -n_uv.numerator();
            }
        }
    }

    void fill_all_pairs() {
        for (int a = 0; a < 2 * P; ++a) {
            for (int b = 0; b < 2 * P; ++b) {
                if (alg.is_positive(a) && alg.is_positive(b)) continue; // done
                auto sum = add_vec(alg.signed_root_coeffs(a), alg.signed_root_coeffs(b));
                if (zero_vec(sum) || alg.find_signed(sum) < 0) continue;
                if (!alg.is_positive(a) && !alg.is_positive(b)) {
                    alg.n_[a][b] = -alg.n_[a - P][b - P];
                } else if (alg.is_positive(a)) {
                    Rat m = mixed(a, b - P);
                    if (m.denominator() != 1) throw Error(Errc::internal, "non-integral mixed constant");
                    alg.n_[a][b] = m.numerator();
                } else {
                    Rat m = mixed(b, a - P);
                    if (m.denominator() != 1) throw Error(Errc::internal, "non-integral mixed constant");
                    alg.n_[a][b] = -m.numerator();
                }
            }
        }
    }
};

ChevalleyAlgebra ChevalleyAlgebra::build(const SimpleLieType& type) {
    ChevalleyBuilder b(type);
    b.fill_positive_pairs();
    b.fill_all_pairs();
    return std::move(b.alg);
}

ChevalleyAlgebra build_chevalley(const SimpleLieType& type) { return ChevalleyAlgebra::build(type); }

Vec ChevalleyAlgebra::basis_vector(int basis_id) const {
    Vec v(dim());
    v[basis_id] = GaussRat(Rat(1));
    return v;
}

Vec ChevalleyAlgebra::compact_x(int pos_id) const {
    Vec v(dim());
    v[basis_e(pos_id)] = GaussRat(Rat(1));
    v[basis_e(pos_id + num_positive())] = GaussRat(Rat(-1));
    return v;
}

Vec ChevalleyAlgebra::compact_y(int pos_id) const {
    Vec v(dim());
    v[basis_e(pos_id)] = GaussRat::i();
    v[basis_e(pos_id + num_positive())] = GaussRat::i();
    return v;
}

Vec ChevalleyAlgebra::compact_h(int node) const {
    Vec v(dim());
    v[basis_h(node)] = GaussRat::i();
    return v;
}

Vec ChevalleyAlgebra::bracket(const Vec& x, const Vec& y) const {
    Vec out(dim());
    const int r = rank();
    auto add_to = [&out](int idx, const GaussRat& c) { out[idx] = out[idx] + c; };

    for (int i = 0; i < dim(); ++i) {
        if (x[i].zero()) continue;
        for (int j = 0; j < dim(); ++j) {
            if (y[j].zero()) continue;
            GaussRat c = x[i] * y[j];
            if (i < r && j < r) continue; // [h, h] = 0
            if (i < r && j >= r) {
                int s = j - r;
                auto coeffs = signed_root_coeffs(s);
                long long val = 0;
                for (int m = 0; m < r; ++m) val += sys_->cartan(i, m) * coeffs[m];
                add_to(j, c * GaussRat(Rat(val)));
            } else if (i >= r && j < r) {
                int s = i - r;
                auto coeffs = signed_root_coeffs(s);
                long long val = 0;
                for (int m = 0; m < r; ++m) val += sys_->cartan(j, m) * coeffs[m];
                add_to(i, c * GaussRat(Rat(-val)));
            } else {
                int s = i - r, t = j - r;
                if (t == negate(s)) {
                    int pos = std::min(s, t);
                    Rat sign = is_positive(s) ? Rat(1) : Rat(-1);
                    for (int m = 0; m < r; ++m)
                        add_to(basis_h(m), c * GaussRat(sign * Rat(coroot_of_pos_[pos][m])));
                } else {
                    auto sum = add_vec(signed_root_coeffs(s), signed_root_coeffs(t));
                    int u = find_signed(sum);
                    if (u >= 0) add_to(basis_e(u), c * GaussRat(Rat(n_[s][t])));
                }
            }
        }
    }
    return out;
}

namespace {

// Rank of a rational matrix by Gaussian elimination.
int matrix_rank(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && m[pivot][col] == Rat(0)) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[row]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == Rat(0)) continue;
            Rat f = m[i][col] / m[row][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Z = B^{-1} theta in the coroot basis: solve B_t z = w, (B_t)_ij = C_ij / d_j,
// w_k = theta(alpha_k^vee).
std::vector<Rat> contact_vector(const ChevalleyAlgebra& alg, const std::vector<Rat>& theta_coords) {
    const int r = alg.rank();
    if (static_cast<int>(theta_coords.size()) != r)
        throw Error(Errc::bad_argument, "theta coordinate count does not match rank");
    std::vector<std::vector<Rat>> bt(r, std::vector<Rat>(r));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            bt[i][j] = Rat(alg.system()->cartan(i, j)) / alg.system()->node_d(j);
    auto inv = rational_inverse(bt);
    std::vector<Rat> z(r, Rat(0));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) z[i] += inv[i][j] * theta_coords[j];
    return z;
}

} // namespace

int centralizer_dim(const ChevalleyAlgebra& alg, const std::vector<Rat>& theta_coords) {
    auto z = contact_vector(alg, theta_coords);
    Vec zvec(alg.dim());
    for (int k = 0; k < alg.rank(); ++k) zvec[alg.basis_h(k)] = GaussRat(z[k]);

    // ad_Z as a rational matrix; kernel dimension by rank computation.
    std::vector<std::vector<Rat>> ad(alg.dim(), std::vector<Rat>(alg.dim(), Rat(0)));
    for (int j = 0; j < alg.dim(); ++j) {
        Vec col = alg.bracket(zvec, alg.basis_vector(j));
        for (int i = 0; i < alg.dim(); ++i) {
            if (col[i].im != Rat(0)) throw Error(Errc::internal, "unexpected imaginary bracket");
            ad[i][j] = col[i].re;
        }
    }
    return alg.dim() - matrix_rank(std::move(ad));
}

int centralizer_dim_formula(const ChevalleyAlgebra& alg, const std::vector<Rat>& theta_coords) {
    int zeros = 0;
    for (int i = 0; i < alg.num_positive(); ++i) {
        Rat v(0);
        const auto& coroot = alg.system()->coroot(i);
        for (int k = 0; k < alg.rank(); ++k) v += theta_coords[k] * coroot[k];
        if (v == Rat(0)) zeros += 2; // both signs
    }
    return alg.rank() + zeros;
}

bool verify_integrability(const ChevalleyAlgebra& alg, const std::vector<int>& white_nodes,
                          const std::vector<int>& m10_signed) {
    std::set<int> white(white_nodes.begin(), white_nodes.end());
    std::set<int> rk; // signed roots of l
    for (int s = 0; s < alg.num_signed(); ++s) {
        auto coeffs = alg.signed_root_coeffs(s);
        bool supported = true;
        for (int k = 0; k < alg.rank(); ++k)
            if (coeffs[k] != 0 && !white.count(k)) supported = false;
        if (supported) rk.insert(s);
    }
    std::set<int> m10(m10_signed.begin(), m10_signed.end());
    if (m10.size() != m10_signed.size())
        throw Error(Errc::invalid_span, "duplicate root in m10");
    for (int s : m10) {
        if (rk.count(s)) throw Error(Errc::invalid_span, "m10 meets the isotropy root set");
        if (m10.count(alg.negate(s)))
            throw Error(Errc::invalid_span, "m10 meets its conjugate");
    }
    if (2 * m10.size() + rk.size() != static_cast<size_t>(alg.num_signed()))
        throw Error(Errc::invalid_span, "m10 + conjugate does not span the complement");

    std::set<int> span = rk;
    span.insert(m10.begin(), m10.end());
    // Bracket-closure of l^C + m10, by evaluating actual brackets.
    for (int a : span) {
        for (int b : span) {
            Vec br = alg.bracket(alg.basis_vector(alg.basis_e(a)), alg.basis_vector(alg.basis_e(b)));
            for (int s = 0; s < alg.num_signed(); ++s) {
                if (!br[alg.basis_e(s)].zero() && !span.count(s)) return false;
            }
        }
    }
    return true;
}

bool standardness_check(const ChevalleyAlgebra& alg, const std::vector<int>& black_nodes,
                        const std::vector<int>& m10_signed) {
    std::vector<Rat> theta(alg.rank(), Rat(0));
    for (int b : black_nodes) theta[b] = Rat(1);
    auto z = contact_vector(alg, theta);
    Vec zvec(alg.dim());
    for (int k = 0; k < alg.rank(); ++k) zvec[alg.basis_h(k)] = GaussRat(z[k]);
    std::set<int> m10(m10_signed.begin(), m10_signed.end());
    for (int s : m10) {
        Vec br = alg.bracket(zvec, alg.basis_vector(alg.basis_e(s)));
        for (int t = 0; t < alg.num_signed(); ++t)
            if (!br[alg.basis_e(t)].zero() && !m10.count(t)) return false;
        for (int k = 0; k < alg.rank(); ++k)
            if (!br[alg.basis_h(k)].zero()) return false;
    }
    return true;
}

MatrixSignature symmetric_signature(std::vector<std::vector<Rat>> m) {
    const size_t n = m.size();
    MatrixSignature sig;
    for (size_t k = 0; k < n; ++k) {
        // Symmetric pivoting: diagonal pivot, else symmetric row/col fixup.
        if (m[k][k] == Rat(0)) {
            size_t dj = k;
            for (size_t j = k + 1; j < n && dj == k; ++j)
                if (m[j][j] != Rat(0)) dj = j;
            if (dj != k) {
                std::swap(m[dj], m[k]);
                for (size_t i = 0; i < n; ++i) std::swap(m[i][dj], m[i][k]);
            } else {
                size_t oi = n, oj = n;
                for (size_t i = k; i < n && oi == n; ++i)
                    for (size_t j = i + 1; j < n; ++j)
                        if (m[i][j] != Rat(0)) {
                            oi = i;
                            oj = j;
                            break;
                        }
                if (oi == n) {
                    sig.zero += static_cast<int>(n - k);
                    return sig;
                }
                // add row/col oj into oi, making the (oi, oi) entry nonzero
                for (size_t t = 0; t < n; ++t) m[oi][t] += m[oj][t];
                for (size_t t = 0; t < n; ++t) m[t][oi] += m[t][oj];
                std::swap(m[oi], m[k]);
                for (size_t i = 0; i < n; ++i) std::swap(m[i][oi], m[i][k]);
            }
        }
        Rat p = m[k][k];
        if (p > Rat(0)) ++sig.plus;
        else ++sig.minus;
        std::vector<Rat> f(n, Rat(0));
        for (size_t i = k + 1; i < n; ++i) f[i] = m[i][k] / p;
        for (size_t i = k + 1; i < n; ++i) {
            if (f[i] == Rat(0)) continue;
            for (size_t j = k; j < n; ++j) m[i][j] -= f[i] * m[k][j];
        }
        for (size_t j = k + 1; j < n; ++j) {
            if (f[j] == Rat(0)) continue;
            for (size_t i = k; i < n; ++i) m[i][j] -= f[j] * m[i][k];
        }
    }
    return sig;
}

LeviSignature levi_form_oracle(const ChevalleyAlgebra& alg, const std::vector<int>& black_nodes,
                               const std::vector<long long>& tuple) {
    if (black_nodes.size() != tuple.size())
        throw Error(Errc::bad_argument, "tuple length does not match black node count");
    std::vector<Rat> theta(alg.rank(), Rat(0));
    for (size_t i = 0; i < black_nodes.size(); ++i) theta[black_nodes[i]] = Rat(tuple[i]);

    std::set<int> black(black_nodes.begin(), black_nodes.end());
    std::vector<int> compl_pos;
    for (int i = 0; i < alg.num_positive(); ++i) {
        const auto& coeffs = alg.system()->positive_root(i);
        for (int b : black)
            if (coeffs[b] != 0) {
                compl_pos.push_back(i);
                break;
            }
    }

    // Compact basis of m: X_a, Y_a per complementary positive root; J X = Y.
    std::vector<Vec> basis, jbasis;
    for (int a : compl_pos) {
        basis.push_back(alg.compact_x(a));
        jbasis.push_back(alg.compact_y(a));
        basis.push_back(alg.compact_y(a));
        Vec negx = alg.compact_x(a);
        for (auto& c : negx) c = -c;
        jbasis.push_back(negx);
    }

    const size_t n = basis.size();
    std::vector<std::vector<Rat>> levi(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            Vec br = alg.bracket(basis[i], jbasis[j]);
            // L(v, w) = -theta_c([v, Jw]); theta_c(iH) = -theta(H)
            Rat val(0);
            for (int k = 0; k < alg.rank(); ++k) {
                if (br[alg.basis_h(k)].re != Rat(0))
                    throw Error(Errc::internal, "compact bracket with real Cartan part");
                val += br[alg.basis_h(k)].im * theta[k];
            }
            levi[i][j] = val;
        }
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (levi[i][j] != levi[j][i]) throw Error(Errc::internal, "Levi matrix not symmetric");

    MatrixSignature sig = symmetric_signature(std::move(levi));
    if (sig.zero > 0)
        throw Error(Errc::degenerate_form, "Levi form is degenerate (theta vanishes on a coroot)");
    if (sig.plus % 2 || sig.minus % 2) throw Error(Errc::internal, "odd real signature count");
    return LeviSignature{sig.plus / 2, sig.minus / 2};
}

// --- matrix realizations ---

namespace {

using CMat = std::vector<std::vector<GaussRat>>;

CMat zeros(int n) { return CMat(n, std::vector<GaussRat>(n)); }

CMat mul(const CMat& a, const CMat& b) {
    const int n = static_cast<int>(a.size());
    CMat c = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].zero()) continue;
            for (int j = 0; j < n; ++j) c[i][j] = c[i][j] + a[i][k] * b[k][j];
        }
    return c;
}

Rat real_trace(const CMat& a) {
    GaussRat t;
    for (size_t i = 0; i < a.size(); ++i) t = t + a[i][i];
    if (t.im != Rat(0)) throw Error(Errc::internal, "trace not real");
    return t.re;
}

CMat scale(CMat a, const Rat& s) {
    for (auto& row : a)
        for (auto& v : row) v = v * GaussRat(s);
    return a;
}

CMat add(CMat a, const CMat& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a.size(); ++j) a[i][j] = a[i][j] + b[i][j];
    return a;
}

CMat diag_i(const std::vector<Rat>& entries) {
    CMat m = zeros(static_cast<int>(entries.size()));
    for (size_t k = 0; k < entries.size(); ++k) m[k][k] = GaussRat(Rat(0), entries[k]);
    return m;
}

// Rotation generator on the coordinate pair (2k, 2k+1) of R^n, 0-based k.
CMat so_block(int n, int k, const Rat& coeff) {
    CMat m = zeros(n);
    m[2 * k][2 * k + 1] = GaussRat(coeff);
    m[2 * k + 1][2 * k] = GaussRat(-coeff);
    return m;
}

struct Realization {
    CMat ek, ec, z;
    Rat bg_scale; // B_g = bg_scale * tr on the subalgebra image
};

// Row I: sp_ell inside su_2ell; torus diag(i t_1..i t_ell, -i t_1..-i t_ell).
// K = Sp_{ell-1}.T^1 leaves the first quaternionic coordinate; Z(k) is the
// t_1 circle. A-side C = U_{2ell-1}; E^c along i diag(2ell-1, -1, .., -1),
// rescaled to the quotient circle of C/C^ss (degree 2ell-1).
Realization row1_realization(int ell, long long p) {
    const int n = 2 * ell;
    std::vector<Rat> ek(n, Rat(0)), ec(n, Rat(0)), z(n, Rat(0));
    ek[0] = Rat(1);
    ek[ell] = Rat(-1);
    ec[0] = Rat(2 * ell - 1);
    for (int k = 1; k < n; ++k) ec[k] = Rat(-1);
    for (auto& v : ec) v /= Rat(2 * ell - 1);
    z[0] = Rat(p, 2);
    z[ell] = Rat(-p, 2);
    return Realization{diag_i(ek), diag_i(ec), diag_i(z), Rat(-1)};
}

// Row III: so_{2ell+1} in the upper-left block of so_{2ell+2}; Z(k) along
// J_1 + .. + J_ell, Z(c) along J_1 + .. + J_{ell+1} rescaled by the U_{ell+1}
// determinant-circle degree ell+1.
Realization row3_realization(int ell, long long p) {
    const int n = 2 * ell + 2;
    CMat ek = zeros(n), ec = zeros(n), z = zeros(n);
    for (int k = 0; k < ell; ++k) {
        ek = add(ek, so_block(n, k, Rat(1)));
        z = add(z, so_block(n, k, Rat(p, 2)));
    }
    for (int k = 0; k <= ell; ++k) ec = add(ec, so_block(n, k, Rat(1, static_cast<long long>(ell) + 1)));
    return Realization{ek, ec, z, Rat(-1, 2)};
}

// Row II: g_2 in so_7 through the 7-dimensional representation. The torus
// embeds as H(x, y) -> (2x+y, x, x+y) in the epsilon coordinates (x, y the
// values of the simple roots, alpha_2 long). Z(k) = ker(alpha_1) maps to the
// direction J_1 + J_3; its exp-primitive generator in G_2 is the coroot
// 3 alpha_1^vee + 2 alpha_2^vee, landing exactly on J_1 + J_3. Z(c) for
// C = SO_2.SO_5 is the J_1 circle (quotient degree 1).
Realization row2_realization(long long p) {
    const int n = 7;
    CMat ek = add(so_block(n, 0, Rat(1)), so_block(n, 2, Rat(1)));
    CMat ec = so_block(n, 0, Rat(1));
    CMat z = add(so_block(n, 0, Rat(p)), so_block(n, 2, Rat(p)));
    return Realization{ek, ec, z, Rat(-1, 2)};
}

Realization realize(OnishchikRow row, int ell, long long p) {
    switch (row) {
    case OnishchikRow::I:
        if (ell == 2 || ell == 3) return row1_realization(ell, p);
        break;
    case OnishchikRow::II: return row2_realization(p);
    case OnishchikRow::III:
        if (ell == 3) return row3_realization(ell, p);
        break;
    }
    throw Error(Errc::unsupported_instance,
                "matrix realization not built for this Onishchik instance");
}

} // namespace

EmbeddingReport embedding_report(OnishchikRow row, int ell, long long p) {
    Realization r = realize(row, ell, p);
    Rat tr_ecec = real_trace(mul(r.ec, r.ec));
    if (tr_ecec >= Rat(0)) throw Error(Errc::internal, "E^c trace form not negative");
    Rat sa = Rat(-1) / tr_ecec; // B_a(E^c, E^c) = -1
    EmbeddingReport rep;
    rep.index = sa * real_trace(mul(r.ek, r.ec));
    rep.bg_zz = r.bg_scale * real_trace(mul(r.z, r.z));
    rep.ba_z_ec = sa * real_trace(mul(r.z, r.ec));
    // lambda from the proportionality Z = lambda E^k
    Rat lambda(0);
    bool found = false;
    for (size_t i = 0; i < r.ek.size() && !found; ++i)
        for (size_t j = 0; j < r.ek.size() && !found; ++j) {
            if (r.ek[i][j].zero()) continue;
            GaussRat q = r.z[i][j] / r.ek[i][j];
            if (q.im != Rat(0)) throw Error(Errc::internal, "non-real lambda");
            lambda = q.re;
            found = true;
        }
    rep.lambda = lambda;
    return rep;
}

Rat matrix_embedding_index(OnishchikRow row, int ell) { return embedding_report(row, ell, 1).index; }

// --- epsilon realizations ---

namespace {

using EVec = std::vector<Rat>;

EVec unit(int dim, int k) {
    EVec v(dim, Rat(0));
    v[k] = Rat(1);
    return v;
}

EVec vsub(const EVec& a, const EVec& b) {
    EVec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

EVec vadd(const EVec& a, const EVec& b) {
    EVec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

EVec vscale(EVec a, const Rat& s) {
    for (auto& v : a) v *= s;
    return a;
}

Rat dot(const EVec& a, const EVec& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Solves sum c_k simple[k] = target; the c_k must come out integral.
std::vector<long long> solve_coeffs(const std::vector<EVec>& simple, const EVec& target) {
    const size_t rows = target.size(), cols = simple.size();
    std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1, Rat(0)));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) m[i][j] = simple[j][i];
        m[i][cols] = target[i];
    }
    size_t row = 0;
    std::vector<int> pivot_col(cols, -1);
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && m[p][col] == Rat(0)) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[row]);
        Rat pv = m[row][col];
        for (size_t j = 0; j <= cols; ++j) m[row][j] /= pv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || m[i][col] == Rat(0)) continue;
            Rat f = m[i][col];
            for (size_t j = 0; j <= cols; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col[col] = static_cast<int>(row);
        ++row;
    }
    std::vector<long long> out(cols, 0);
    for (size_t col = 0; col < cols; ++col) {
        if (pivot_col[col] < 0) throw Error(Errc::internal, "simple roots not independent");
        Rat v = m[pivot_col[col]][cols];
        if (v.denominator() != 1) throw Error(Errc::internal, "non-integral root coordinate");
        out[col] = v.numerator();
    }
    // consistency of the remaining rows
    for (size_t i = row; i < rows; ++i)
        if (m[i][cols] != Rat(0)) throw Error(Errc::internal, "root outside simple span");
    return out;
}

} // namespace

EpsilonTable epsilon_root_table(const SimpleLieType& type) {
    validate_type(type);
    if (type.rank > 4)
        throw Error(Errc::unsupported_rank, "epsilon tables are built for rank <= 4 only");
    const int n = type.rank;
    std::vector<EVec> pos;
    std::vector<EVec> simple;
    switch (type.family) {
    case Family::A: {
        const int d = n + 1;
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) pos.push_back(vsub(unit(d, i), unit(d, j)));
        for (int i = 0; i < n; ++i) simple.push_back(vsub(unit(d, i), unit(d, i + 1)));
        break;
    }
    case Family::B: {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                pos.push_back(vsub(unit(n, i), unit(n, j)));
                pos.push_back(vadd(unit(n, i), unit(n, j)));
            }
        for (int i = 0; i < n; ++i) pos.push_back(unit(n, i));
        for (int i = 0; i + 1 < n; ++i) simple.push_back(vsub(unit(n, i), unit(n, i + 1)));
        simple.push_back(unit(n, n - 1));
        break;
    }
    case Family::C: {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                pos.push_back(vsub(unit(n, i), unit(n, j)));
                pos.push_back(vadd(unit(n, i), unit(n, j)));
            }
        for (int i = 0; i < n; ++i) pos.push_back(vscale(unit(n, i), Rat(2)));
        for (int i = 0; i + 1 < n; ++i) simple.push_back(vsub(unit(n, i), unit(n, i + 1)));
        simple.push_back(vscale(unit(n, n - 1), Rat(2)));
        break;
    }
    case Family::D: {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                pos.push_back(vsub(unit(n, i), unit(n, j)));
                pos.push_back(vadd(unit(n, i), unit(n, j)));
            }
        for (int i = 0; i + 1 < n; ++i) simple.push_back(vsub(unit(n, i), unit(n, i + 1)));
        simple.push_back(vadd(unit(n, n - 2), unit(n, n - 1)));
        break;
    }
    case Family::G: {
        // alpha_1 = e1 - e2 (short), alpha_2 = -2e1 + e2 + e3 (long)
        EVec a1 = vsub(unit(3, 0), unit(3, 1));
        EVec a2 = vadd(vscale(unit(3, 0), Rat(-2)), vadd(unit(3, 1), unit(3, 2)));
        simple = {a1, a2};
        pos = {a1,
               a2,
               vadd(a1, a2),
               vadd(vscale(a1, Rat(2)), a2),
               vadd(vscale(a1, Rat(3)), a2),
               vadd(vscale(a1, Rat(3)), vscale(a2, Rat(2)))};
        break;
    }
    case Family::F: {
        for (int i = 0; i < 4; ++i) pos.push_back(unit(4, i));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                pos.push_back(vsub(unit(4, i), unit(4, j)));
                pos.push_back(vadd(unit(4, i), unit(4, j)));
            }
        for (int s2 : {1, -1})
            for (int s3 : {1, -1})
                for (int s4 : {1, -1}) {
                    EVec v = unit(4, 0);
                    v = vadd(v, vscale(unit(4, 1), Rat(s2)));
                    v = vadd(v, vscale(unit(4, 2), Rat(s3)));
                    v = vadd(v, vscale(unit(4, 3), Rat(s4)));
                    pos.push_back(vscale(v, Rat(1, 2)));
                }
        simple = {vsub(unit(4, 1), unit(4, 2)), vsub(unit(4, 2), unit(4, 3)), unit(4, 3),
                  vscale(vadd(vsub(unit(4, 0), unit(4, 1)), vsub(vscale(unit(4, 2), Rat(-1)), unit(4, 3))),
                         Rat(1, 2))};
        break;
    }
    case Family::E:
        throw Error(Errc::unsupported_rank, "epsilon tables are built for rank <= 4 only");
    }

    EpsilonTable t;
    for (const auto& r : pos) {
        t.positive_roots.push_back(solve_coeffs(simple, r));
        t.length2.push_back(dot(r, r));
    }
    t.cartan.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rat v = Rat(2) * dot(simple[i], simple[j]) / dot(simple[i], simple[i]);
            if (v.denominator() != 1) throw Error(Errc::internal, "non-integral Cartan entry");
            t.cartan[i][j] = v.numerator();
        }
    return t;
}

} // namespace cratlas::oracle
