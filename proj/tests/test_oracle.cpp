#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cratlas/oracle.hpp"

using namespace cratlas;
using namespace cratlas::oracle;

namespace {

const std::vector<SimpleLieType> kRank3Types = {
    {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2},
    {Family::C, 2}, {Family::B, 3}, {Family::C, 3}, {Family::G, 2},
};

bool vec_is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const GaussRat& c) { return c.zero(); });
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

Vec vec_add3(const Vec& a, const Vec& b, const Vec& c) {
    Vec d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] + b[i] + c[i];
    return d;
}

} // namespace

TEST_CASE("A1 Chevalley relations") {
    auto alg = build_chevalley({Family::A, 1});
    CHECK(alg.dim() == 3);
    Vec e = alg.basis_vector(alg.basis_e(0));
    Vec f = alg.basis_vector(alg.basis_e(1));
    Vec h = alg.basis_vector(alg.basis_h(0));
    Vec ef = alg.bracket(e, f);
    CHECK(ef[alg.basis_h(0)] == GaussRat(Rat(1)));
    Vec he = alg.bracket(h, e);
    CHECK(he[alg.basis_e(0)] == GaussRat(Rat(2)));
    Vec hf = alg.bracket(h, f);
    CHECK(hf[alg.basis_e(1)] == GaussRat(Rat(-2)));
}

TEST_CASE("A2 structure constants are +-1") {
    auto alg = build_chevalley({Family::A, 2});
    for (int a = 0; a < alg.num_signed(); ++a)
        for (int b = 0; b < alg.num_signed(); ++b) {
            long long n = alg.n_constant(a, b);
            if (n != 0) CHECK(std::llabs(n) == 1);
        }
}

TEST_CASE("B2 has dimension 10") {
    CHECK(build_chevalley({Family::B, 2}).dim() == 10);
}

TEST_CASE("rank above three is unsupported") {
    CHECK_THROWS_AS(build_chevalley({Family::B, 4}), Error);
    try {
        build_chevalley({Family::F, 4});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unsupported_rank);
    }
}

TEST_CASE("Jacobi identity on every basis triple") {
    for (const auto& type : kRank3Types) {
        auto alg = build_chevalley(type);
        std::vector<Vec> basis;
        for (int i = 0; i < alg.dim(); ++i) basis.push_back(alg.basis_vector(i));
        for (int i = 0; i < alg.dim(); ++i)
            for (int j = i + 1; j < alg.dim(); ++j)
                for (int k = j + 1; k < alg.dim(); ++k) {
                    Vec t1 = alg.bracket(alg.bracket(basis[i], basis[j]), basis[k]);
                    Vec t2 = alg.bracket(alg.bracket(basis[j], basis[k]), basis[i]);
                    Vec t3 = alg.bracket(alg.bracket(basis[k], basis[i]), basis[j]);
                    CHECK(vec_is_zero(vec_add3(t1, t2, t3)));
                }
    }
}

TEST_CASE("structure constants have the root-string magnitude") {
    for (const auto& type : kRank3Types) {
        auto alg = build_chevalley(type);
        for (int a = 0; a < alg.num_signed(); ++a) {
            for (int b = 0; b < alg.num_signed(); ++b) {
                auto ra = alg.signed_root_coeffs(a);
                auto rb = alg.signed_root_coeffs(b);
                std::vector<long long> sum(ra.size());
                for (size_t i = 0; i < ra.size(); ++i) sum[i] = ra[i] + rb[i];
                bool zero = std::all_of(sum.begin(), sum.end(), [](long long v) { return v == 0; });
                int id = alg.find_signed(sum);
                if (zero || id < 0) {
                    if (!zero) CHECK(alg.n_constant(a, b) == 0);
                    continue;
                }
                // p + 1 with p the length of the a-string below b
                long long p = 0;
                auto cur = rb;
                while (true) {
                    for (size_t i = 0; i < cur.size(); ++i) cur[i] -= ra[i];
                    if (alg.find_signed(cur) < 0) break;
                    ++p;
                }
                CHECK(std::llabs(alg.n_constant(a, b)) == p + 1);
                CHECK(alg.n_constant(a, b) == -alg.n_constant(b, a));
                CHECK(alg.n_constant(alg.negate(a), alg.negate(b)) == -alg.n_constant(a, b));
            }
        }
    }
}

TEST_CASE("compact form brackets") {
    auto alg = build_chevalley({Family::A, 2});
    // [X_a, Y_a] = 2 i H_a
    for (int a = 0; a < alg.num_positive(); ++a) {
        Vec br = alg.bracket(alg.compact_x(a), alg.compact_y(a));
        for (int k = 0; k < alg.rank(); ++k) {
            CHECK(br[alg.basis_h(k)].re == Rat(0));
            CHECK(br[alg.basis_h(k)].im == Rat(2 * alg.system()->coroot(a)[k]));
        }
        for (int s = 0; s < alg.num_signed(); ++s) CHECK(br[alg.basis_e(s)].zero());
    }
}

TEST_CASE("centralizer dimensions") {
    auto a2 = build_chevalley({Family::A, 2});
    CHECK(centralizer_dim(a2, {Rat(1), Rat(1)}) == 2);
    CHECK(centralizer_dim(a2, {Rat(1), Rat(-1)}) == 4);
    CHECK(centralizer_dim(a2, {Rat(0), Rat(0)}) == 8);
    auto a1 = build_chevalley({Family::A, 1});
    CHECK(centralizer_dim(a1, {Rat(1)}) == 1);
    auto g2 = build_chevalley({Family::G, 2});
    CHECK(centralizer_dim(g2, {Rat(0), Rat(1)}) == 4); // U_2 = centralizer of the long coroot
}

TEST_CASE("centralizer formula matches the kernel solve") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<long long> coeff(-3, 3);
    for (const auto& type : kRank3Types) {
        auto alg = build_chevalley(type);
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<Rat> theta;
            for (int k = 0; k < alg.rank(); ++k) theta.push_back(Rat(coeff(rng)));
            CHECK(centralizer_dim(alg, theta) == centralizer_dim_formula(alg, theta));
        }
    }
}

TEST_CASE("integrability oracle") {
    auto a2 = build_chevalley({Family::A, 2});
    int a1 = a2.system()->find_positive_root({1, 0});
    int a2r = a2.system()->find_positive_root({0, 1});
    int a12 = a2.system()->find_positive_root({1, 1});
    REQUIRE(a1 >= 0);
    REQUIRE(a2r >= 0);
    REQUIRE(a12 >= 0);
    int P = a2.num_positive();
    SUBCASE("parabolic nilradical is integrable") {
        CHECK(verify_integrability(a2, {}, {a1, a2r, a12}));
    }
    SUBCASE("adapted non-parabolic span is integrable") {
        // {E_{a1}, E_{-a2}, E_{a1+a2}}
        CHECK(verify_integrability(a2, {}, {a1, a2r + P, a12}));
    }
    SUBCASE("non-closed span fails") {
        CHECK_FALSE(verify_integrability(a2, {}, {a1, a2r, a12 + P}));
    }
    SUBCASE("white node gives a smaller complement") {
        // l = t + g_{+-a1}; m10 = {a2, a1+a2}
        CHECK(verify_integrability(a2, {0}, {a2r, a12}));
        CHECK_FALSE(verify_integrability(a2, {0}, {a2r, a12 + P}));
    }
    SUBCASE("invalid spans are rejected") {
        CHECK_THROWS_AS(verify_integrability(a2, {}, {a1, a1 + P, a12}), Error);
        CHECK_THROWS_AS(verify_integrability(a2, {}, {a1, a12}), Error);
        CHECK_THROWS_AS(verify_integrability(a2, {0}, {a1, a2r, a12}), Error);
        try {
            verify_integrability(a2, {}, {a1, a12});
        } catch (const Error& e) {
            CHECK(e.code() == Errc::invalid_span);
        }
    }
}

TEST_CASE("integrability and standardness hold on every painting, rank <= 3") {
    for (const auto& type : kRank3Types) {
        auto alg = build_chevalley(type);
        auto sys = build_root_system({type});
        for (const auto& d : enumerate_paintings(sys)) {
            std::vector<int> white;
            for (int n : d.white_nodes()) white.push_back(n);
            std::vector<int> m10 = complementary_positive_roots(d);
            CHECK(verify_integrability(alg, white, m10));
            std::vector<int> black(d.black.begin(), d.black.end());
            CHECK(standardness_check(alg, black, m10));
        }
    }
}

TEST_CASE("Levi form oracle examples") {
    auto a2 = build_chevalley({Family::A, 2});
    CHECK(levi_form_oracle(a2, {0, 1}, {1, 1}) == LeviSignature{3, 0});
    CHECK(levi_form_oracle(a2, {0, 1}, {2, -1}) == LeviSignature{2, 1});
    auto a1 = build_chevalley({Family::A, 1});
    CHECK(levi_form_oracle(a1, {0}, {1}) == LeviSignature{1, 0});
    CHECK_THROWS_AS(levi_form_oracle(a2, {0, 1}, {1, -1}), Error);
    try {
        levi_form_oracle(a2, {0, 1}, {1, -1});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::degenerate_form);
    }
}

TEST_CASE("Levi oracle agrees with the combinatorial signature") {
    for (const auto& type : kRank3Types) {
        auto alg = build_chevalley(type);
        auto sys = build_root_system({type});
        for (const auto& d : enumerate_paintings(sys)) {
            for (const auto& s : enumerate_standard(d, 2, false)) {
                std::vector<int> black(d.black.begin(), d.black.end());
                CHECK(levi_form_oracle(alg, black, s.tuple) == levi_signature(s));
            }
        }
    }
}

TEST_CASE("matrix embedding indices") {
    SUBCASE("row I at ell = 2: index -1") {
        Rat idx = matrix_embedding_index(OnishchikRow::I, 2);
        CHECK(idx == Rat(-1));
        CHECK(idx.denominator() == 1);
        CHECK(idx != Rat(0));
    }
    SUBCASE("row I at ell = 3") {
        CHECK(matrix_embedding_index(OnishchikRow::I, 3) == Rat(-1));
    }
    SUBCASE("row III at ell = 3: index -3") {
        Rat idx = matrix_embedding_index(OnishchikRow::III, 3);
        CHECK(idx == Rat(-3));
        CHECK(idx.denominator() == 1);
    }
    SUBCASE("row II: index -1") {
        CHECK(matrix_embedding_index(OnishchikRow::II, 2) == Rat(-1));
    }
    SUBCASE("unsupported instances") {
        CHECK_THROWS_AS(matrix_embedding_index(OnishchikRow::III, 2), Error);
        CHECK_THROWS_AS(matrix_embedding_index(OnishchikRow::I, 7), Error);
    }
}

TEST_CASE("matrix realizations agree with the core constants") {
    struct Case {
        OnishchikRow row;
        int ell;
        SimpleLieType type;
        std::vector<int> black;
    };
    for (const auto& c : {Case{OnishchikRow::I, 2, {Family::C, 2}, {0}},
                          Case{OnishchikRow::III, 3, {Family::B, 3}, {2}},
                          Case{OnishchikRow::II, 2, {Family::G, 2}, {1}}}) {
        for (long long p : {1LL, 2LL, 3LL}) {
            auto rep = embedding_report(c.row, c.ell, p);
            CHECK(rep.index == Rat(onishchik_embedding_index(c.row, c.ell)));
            CHECK(rep.lambda == onishchik_lambda(c.row, p));
            CHECK(rep.ba_z_ec == rep.lambda * rep.index);
            // B_g(Z, Z) from traces equals the root-side weight norm
            auto sys = build_root_system({c.type});
            std::vector<Rat> coords(sys->rank(), Rat(0));
            coords[c.black[0]] = Rat(p);
            Weight theta = make_weight(sys, coords);
            CHECK(rep.bg_zz == sys->weight_norm2(theta));
            // transfer consistency B_a(Z, Z') = B_g(Z, Z) with the core coefficient
            if (p == 1) {
                auto s = make_standard(make_painting(sys, {c.black[0]}), {p});
                auto tr = transfer_contact_element(s);
                REQUIRE(tr.size() == 1);
                CHECK(tr[0].ba_z_ec == rep.ba_z_ec);
                CHECK(tr[0].coefficient * rep.ba_z_ec == rep.bg_zz);
            }
        }
    }
}

TEST_CASE("epsilon tables match the core root systems, rank <= 4") {
    std::vector<SimpleLieType> types = {
        {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2},
        {Family::B, 3}, {Family::B, 4}, {Family::C, 2}, {Family::C, 3}, {Family::C, 4},
        {Family::D, 4}, {Family::F, 4}, {Family::G, 2},
    };
    for (const auto& type : types) {
        auto sys = build_root_system({type});
        auto table = epsilon_root_table(type);
        REQUIRE(static_cast<int>(table.positive_roots.size()) == sys->num_positive_roots());
        // same root sets in simple-root coordinates
        std::set<std::vector<long long>> core_roots, eps_roots;
        for (int i = 0; i < sys->num_positive_roots(); ++i) core_roots.insert(sys->positive_root(i));
        for (const auto& r : table.positive_roots) eps_roots.insert(r);
        CHECK(core_roots == eps_roots);
        // same Cartan matrix
        for (int i = 0; i < sys->rank(); ++i)
            for (int j = 0; j < sys->rank(); ++j) CHECK(table.cartan[i][j] == sys->cartan(i, j));
        // lengths agree up to one global scale; long/short partition matches
        Rat scale = table.length2[0] / sys->root_length2(sys->find_positive_root(table.positive_roots[0]));
        for (size_t k = 0; k < table.positive_roots.size(); ++k) {
            int idx = sys->find_positive_root(table.positive_roots[k]);
            CHECK(table.length2[k] == scale * sys->root_length2(idx));
        }
    }
    CHECK_THROWS_AS(epsilon_root_table({Family::B, 5}), Error);
    CHECK_THROWS_AS(epsilon_root_table({Family::E, 6}), Error);
}

TEST_CASE("oracle dimension counts cross-check the flag dimensions") {
    for (const auto& type : kRank3Types) {
        auto alg = build_chevalley(type);
        auto sys = build_root_system({type});
        for (const auto& d : enumerate_paintings(sys)) {
            // dim_R G - dim_R K = 2 |complementary roots|
            int dim_g = alg.dim();
            int rk_roots = 0;
            std::set<int> white(d.white_nodes().begin(), d.white_nodes().end());
            for (int s = 0; s < alg.num_signed(); ++s) {
                auto coeffs = alg.signed_root_coeffs(s);
                bool supported = true;
                for (int k = 0; k < alg.rank(); ++k)
                    if (coeffs[k] != 0 && !white.count(k)) supported = false;
                if (supported) ++rk_roots;
            }
            int dim_k = alg.rank() + rk_roots;
            CHECK(dim_g - dim_k == 2 * static_cast<int>(complementary_positive_roots(d).size()));
        }
    }
}
