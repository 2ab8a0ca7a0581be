#include <doctest.h>

#include <algorithm>
#include <set>

#include "cratlas/flag.hpp"

using namespace cratlas;

namespace {

PaintedDiagram paint(std::vector<SimpleLieType> types, std::vector<int> black) {
    return make_painting(build_root_system(std::move(types)), std::move(black));
}

} // namespace

TEST_CASE("painting validation") {
    CHECK_THROWS_AS(paint({{Family::A, 2}}, {}), Error);
    CHECK_THROWS_AS(paint({{Family::A, 2}}, {5}), Error);
    CHECK_THROWS_AS(paint({{Family::A, 1}, {Family::A, 1}}, {0}), Error); // second factor all white
    CHECK_NOTHROW(paint({{Family::A, 1}, {Family::A, 1}}, {0, 1}));
}

TEST_CASE("isotropy of painted diagrams") {
    SUBCASE("B3 black={1}: K = SO_2 . SO_5") {
        auto iso = isotropy(paint({{Family::B, 3}}, {0}));
        CHECK(iso.center_dim == 1);
        REQUIRE(iso.semisimple.size() == 1);
        CHECK(iso.semisimple[0] == SimpleLieType{Family::B, 2});
    }
    SUBCASE("G2 black={long root}: K = U_2 with short-root A1") {
        auto iso = isotropy(paint({{Family::G, 2}}, {1}));
        CHECK(iso.center_dim == 1);
        REQUIRE(iso.semisimple.size() == 1);
        CHECK(iso.semisimple[0] == SimpleLieType{Family::A, 1});
    }
    SUBCASE("A1 black: K = T^1") {
        auto iso = isotropy(paint({{Family::A, 1}}, {0}));
        CHECK(iso.center_dim == 1);
        CHECK(iso.semisimple.empty());
        CHECK(iso.str() == "T^1");
    }
    SUBCASE("full flag: K = maximal torus") {
        auto iso = isotropy(paint({{Family::A, 2}}, {0, 1}));
        CHECK(iso.center_dim == 2);
        CHECK(iso.semisimple.empty());
    }
    SUBCASE("D4 central node black: three A1 factors") {
        auto iso = isotropy(paint({{Family::D, 4}}, {1}));
        CHECK(iso.center_dim == 1);
        CHECK(iso.semisimple ==
              std::vector<SimpleLieType>{{Family::A, 1}, {Family::A, 1}, {Family::A, 1}});
    }
    SUBCASE("C3 black={1}: white double edge classifies as B2") {
        auto iso = isotropy(paint({{Family::C, 3}}, {0}));
        CHECK(iso.semisimple == std::vector<SimpleLieType>{{Family::B, 2}});
    }
    SUBCASE("F4 ends") {
        CHECK(isotropy(paint({{Family::F, 4}}, {3})).semisimple ==
              std::vector<SimpleLieType>{{Family::B, 3}});
        CHECK(isotropy(paint({{Family::F, 4}}, {0})).semisimple ==
              std::vector<SimpleLieType>{{Family::C, 3}});
    }
    SUBCASE("D5 black={1,2}: white chain is A3") {
        auto iso = isotropy(paint({{Family::D, 5}}, {0, 1}));
        CHECK(iso.center_dim == 2);
        CHECK(iso.semisimple == std::vector<SimpleLieType>{{Family::A, 3}});
    }
    SUBCASE("E6 black={1,6}: white is D4") {
        auto iso = isotropy(paint({{Family::E, 6}}, {0, 5}));
        CHECK(iso.center_dim == 2);
        CHECK(iso.semisimple == std::vector<SimpleLieType>{{Family::D, 4}});
    }
}

TEST_CASE("complementary positive roots") {
    CHECK(complementary_positive_roots(paint({{Family::A, 1}}, {0})).size() == 1);
    SUBCASE("A2 black={1}") {
        auto d = paint({{Family::A, 2}}, {0});
        auto compl_roots = complementary_positive_roots(d);
        REQUIRE(compl_roots.size() == 2);
        std::set<std::vector<long long>> got;
        for (int idx : compl_roots) got.insert(d.system->positive_root(idx));
        CHECK(got.count({1, 0}) == 1);
        CHECK(got.count({1, 1}) == 1);
    }
    SUBCASE("B3 black={3}") {
        CHECK(complementary_positive_roots(paint({{Family::B, 3}}, {2})).size() == 6);
    }
    SUBCASE("counts complement the white root system") {
        // |R+| - |R_K+|: B3 black={1} leaves a B2 inside
        CHECK(complementary_positive_roots(paint({{Family::B, 3}}, {0})).size() == 9 - 4);
    }
}

TEST_CASE("enumerate paintings") {
    auto a2 = build_root_system({{Family::A, 2}});
    CHECK(enumerate_paintings(a2).size() == 3);
    CHECK(enumerate_paintings(a2, true).size() == 2);
    auto a1 = build_root_system({{Family::A, 1}});
    CHECK(enumerate_paintings(a1).size() == 1);
    auto b2 = build_root_system({{Family::B, 2}});
    CHECK(enumerate_paintings(b2).size() == 3);
    CHECK(enumerate_paintings(b2, true).size() == 3);
    // products: at least one black per factor
    auto prod = build_root_system({{Family::A, 1}, {Family::A, 1}});
    CHECK(enumerate_paintings(prod).size() == 1);
}

TEST_CASE("orbit representatives are pairwise non-isomorphic") {
    for (auto types : {std::vector<SimpleLieType>{{Family::A, 3}}, {{Family::D, 4}},
                       {{Family::A, 1}, {Family::A, 1}}}) {
        auto sys = build_root_system(types);
        auto reps = enumerate_paintings(sys, true);
        for (size_t i = 0; i < reps.size(); ++i)
            for (size_t j = i + 1; j < reps.size(); ++j)
                CHECK(painted_isomorphisms(reps[i], reps[j]).empty());
        // and they cover every painting
        size_t covered = 0;
        for (const auto& p : enumerate_paintings(sys)) {
            for (const auto& r : reps)
                if (!painted_isomorphisms(p, r).empty()) {
                    ++covered;
                    break;
                }
        }
        CHECK(covered == enumerate_paintings(sys).size());
    }
}

TEST_CASE("painted isomorphisms") {
    SUBCASE("A2 flip carries {1} to {2}") {
        auto d1 = paint({{Family::A, 2}}, {0});
        auto d2 = paint({{Family::A, 2}}, {1});
        auto isos = painted_isomorphisms(d1, d2);
        REQUIRE(isos.size() == 1);
        CHECK(isos[0] == NodePerm{1, 0});
    }
    SUBCASE("identity is among self-isomorphisms") {
        auto d = paint({{Family::B, 3}}, {0, 2});
        auto isos = painted_isomorphisms(d, d);
        NodePerm id{0, 1, 2};
        CHECK(std::find(isos.begin(), isos.end(), id) != isos.end());
    }
    SUBCASE("B2 has no symmetry exchanging long and short") {
        auto d1 = paint({{Family::B, 2}}, {0});
        auto d2 = paint({{Family::B, 2}}, {1});
        CHECK(painted_isomorphisms(d1, d2).empty());
    }
    SUBCASE("factor swap") {
        auto d1 = paint({{Family::A, 2}, {Family::A, 2}}, {0, 2});
        auto d2 = paint({{Family::A, 2}, {Family::A, 2}}, {0, 3});
        CHECK_FALSE(painted_isomorphisms(d1, d2).empty());
    }
}

TEST_CASE("isotropy is invariant under painted isomorphisms") {
    for (auto types : {std::vector<SimpleLieType>{{Family::A, 3}}, {{Family::D, 4}}, {{Family::B, 3}}}) {
        auto sys = build_root_system(types);
        auto all = enumerate_paintings(sys);
        for (const auto& p : all)
            for (const auto& q : all) {
                if (painted_isomorphisms(p, q).empty()) continue;
                CHECK(isotropy(p) == isotropy(q));
                CHECK(complementary_positive_roots(p).size() == complementary_positive_roots(q).size());
            }
    }
}

TEST_CASE("diagram names") {
    CHECK(paint({{Family::B, 3}}, {0}).name() == "B3[1]");
    CHECK(paint({{Family::C, 2}, {Family::A, 1}}, {0, 2}).name() == "C2[1]xA1[1]");
    CHECK(paint({{Family::A, 2}}, {0, 1}).name() == "A2[1,2]");
}
