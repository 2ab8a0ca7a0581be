#include <doctest.h>

#include "cratlas/nonstandard_cr.hpp"

using namespace cratlas;

TEST_CASE("symbolic group parsing and normalization") {
    CHECK(parse_group("SU3").str() == "SU_3");
    CHECK(parse_group("SU_3") == parse_group("SU3"));
    CHECK(parse_group("T^1.SU_3") == parse_group("T1 . SU3"));
    CHECK(parse_group("U_4") == parse_group("T^1.SU_4"));
    CHECK(parse_group("U_1") == parse_group("T^1"));
    CHECK(parse_group("SO_2") == parse_group("T1"));
    CHECK(parse_group("(T^1.U_2).(T^1.U_3)") == parse_group("T^4.SU_2.SU_3"));
    CHECK(parse_group("{e}").trivial());
    CHECK(parse_group("e").trivial());
    CHECK(parse_group("SU_2 x SU_2'") == parse_group("SU2.SU2"));
    CHECK(parse_group("Spin_7").factors[0].kind == FactorKind::Spin);
    // labels are distinct at face value
    CHECK(parse_group("Spin_7") != parse_group("SO_7"));
    CHECK(parse_group("Sp_1") != parse_group("SU_2"));
    CHECK_THROWS_AS(parse_group("XYZ_3"), Error);
    CHECK_THROWS_AS(parse_group(""), Error);
    CHECK_THROWS_AS(parse_group("G_3"), Error);
    try {
        parse_group("Q5");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::unparseable_isotropy);
    }
}

TEST_CASE("group dimensions") {
    CHECK(parse_group("SU_3").dim() == 8);
    CHECK(parse_group("Spin_7").dim() == 21);
    CHECK(parse_group("SO_8").dim() == 28);
    CHECK(parse_group("Sp_2").dim() == 10);
    CHECK(parse_group("F4").dim() == 52);
    CHECK(parse_group("E6").dim() == 78);
    CHECK(parse_group("T^3").dim() == 3);
    CHECK(parse_group("T^1.SU_2.SU_2").dim() == 7);
}

TEST_CASE("catalog has the twelve rows") {
    const auto& rows = nonstandard_catalog();
    REQUIRE(rows.size() == 12);
    for (int i = 0; i < 12; ++i) CHECK(rows[i].row == i + 1);
    CHECK(rows[0].g_pattern == "SU_2 x SU_2'");
    CHECK(rows[0].l_pattern == "T^1");
    CHECK(rows[0].k_pattern == "T^1 x T^1'");
    CHECK(rows[10].g_pattern == "SO_10");
    CHECK(rows[10].l_pattern == "T^1.SO_6");
    CHECK(rows[10].k_pattern == "T^2.SO_6");
    CHECK(rows[4].constraint == "n>1");
    CHECK(rows[5].constraint == "n>2");
    CHECK(rows[8].constraint == "p+q>4");
    CHECK(rows[9].constraint == "n>4");
}

TEST_CASE("recognize examples") {
    SUBCASE("Spin_7 / SU_3 is row 2") {
        auto e = recognize("Spin7", "SU3");
        REQUIRE(e.has_value());
        CHECK(e->row == 2);
        CHECK(e->K == parse_group("T^1.SU_3"));
    }
    SUBCASE("SU_4 / T^1.SU_2 is row 8 at n = 4") {
        auto e = recognize("SU4", "T1.SU2");
        REQUIRE(e.has_value());
        CHECK(e->row == 8);
        CHECK(e->params.at("n") == 4);
        CHECK(e->K == parse_group("T^1.U_2"));
    }
    SUBCASE("no row with G = G_2") {
        CHECK_FALSE(recognize("G2", "U2").has_value());
        CHECK_FALSE(recognize("G2", "SU3").has_value());
        CHECK_FALSE(recognize("G2", "T1.SU2").has_value());
    }
    SUBCASE("row 9 parameters can come in either order") {
        auto e = recognize("SU_2 x SU_3", "T^1.U_1");
        REQUIRE(e.has_value());
        CHECK(e->row == 9);
        auto e2 = recognize("SU_3 x SU_2", "T^1.U_1");
        REQUIRE(e2.has_value());
        CHECK(e2->row == 9);
    }
    SUBCASE("SO_10 with the wrong L lands in row 6, with T^1.SO_6 in row 11") {
        auto e6 = recognize("SO_10", "SO_8");
        REQUIRE(e6.has_value());
        CHECK(e6->row == 6);
        CHECK(e6->params.at("n") == 5);
        auto e11 = recognize("SO_10", "T^1.SO_6");
        REQUIRE(e11.has_value());
        CHECK(e11->row == 11);
    }
    SUBCASE("near misses fail") {
        CHECK_FALSE(recognize("SU_4", "SU_2").has_value());
        CHECK_FALSE(recognize("Spin_7", "SO_5").has_value());
        CHECK_FALSE(recognize("Sp_2", "Sp_1.Sp_0").has_value());
    }
}

TEST_CASE("recognize round-trips every row at minimal parameters") {
    for (const auto& tmpl : nonstandard_catalog()) {
        NonstandardRow e = instantiate_row(tmpl.row, tmpl.minimal_params);
        auto back = recognize(e.G, e.L);
        REQUIRE(back.has_value());
        CHECK(back->row == e.row);
        CHECK(back->params == e.params);
        // printed strings parse back to the same normalized groups
        CHECK(parse_group(e.g_str) == e.G);
        CHECK(parse_group(e.l_str) == e.L);
        CHECK(parse_group(e.k_str) == e.K);
    }
}

TEST_CASE("dim M is odd; fibers are circles") {
    for (const auto& tmpl : nonstandard_catalog()) {
        NonstandardRow e = instantiate_row(tmpl.row, tmpl.minimal_params);
        CHECK(e.dim_M() % 2 == 1);
        CHECK(e.K.dim() - e.L.dim() == 1);
    }
    CHECK(instantiate_row(2, {}).dim_M() == 13);
    CHECK(instantiate_row(6, {{"n", 4}}).dim_M() == 13);
}

TEST_CASE("flag painting matches the table data") {
    for (const auto& tmpl : nonstandard_catalog()) {
        NonstandardRow e = instantiate_row(tmpl.row, tmpl.minimal_params);
        PaintedDiagram flag = e.flag_painting();
        // dim M = 2 dim_C F + 1
        CHECK(e.dim_M() == 2 * static_cast<long long>(complementary_positive_roots(flag).size()) + 1);
        // number of black nodes = center dimension of K
        CHECK(static_cast<int>(flag.black.size()) == e.K.torus_rank);
    }
}

TEST_CASE("modulus validation") {
    auto row = instantiate_row(2, {});
    CHECK_NOTHROW(make_nonstandard(row, Rat(1, 2), Rat(0)));
    CHECK_NOTHROW(make_nonstandard(row, Rat(3, 5), Rat(4, 10)));
    CHECK_THROWS_AS(make_nonstandard(row, Rat(0), Rat(0)), Error);
    CHECK_THROWS_AS(make_nonstandard(row, Rat(1), Rat(0)), Error);
    CHECK_THROWS_AS(make_nonstandard(row, Rat(4, 5), Rat(3, 5)), Error); // |t| = 1
    try {
        make_nonstandard(row, Rat(0), Rat(0));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::invalid_modulus);
    }
}

TEST_CASE("equivalence of non-standard structures") {
    auto row2 = instantiate_row(2, {});
    auto row6n4 = instantiate_row(6, {{"n", 4}});
    auto row6n3 = instantiate_row(6, {{"n", 3}});
    SUBCASE("same row, |t| = |t'|") {
        CHECK(equivalent_nonstandard(make_nonstandard(row2, Rat(1, 2), Rat(0)),
                                     make_nonstandard(row2, Rat(-1, 2), Rat(0))));
        CHECK(equivalent_nonstandard(make_nonstandard(row2, Rat(0), Rat(1, 2)),
                                     make_nonstandard(row2, Rat(1, 2), Rat(0))));
    }
    SUBCASE("rotating t keeps the class") {
        // |3/10 + (2/5)i| = |1/2| = 1/2
        CHECK(equivalent_nonstandard(make_nonstandard(row2, Rat(3, 10), Rat(2, 5)),
                                     make_nonstandard(row2, Rat(1, 2), Rat(0))));
    }
    SUBCASE("Spin_7/SU_3 = SO_8/SO_6") {
        CHECK(equivalent_nonstandard(make_nonstandard(row2, Rat(1, 2), Rat(0)),
                                     make_nonstandard(row6n4, Rat(1, 2), Rat(0))));
        CHECK_FALSE(equivalent_nonstandard(make_nonstandard(row2, Rat(1, 2), Rat(0)),
                                           make_nonstandard(row6n4, Rat(1, 3), Rat(0))));
        CHECK_FALSE(equivalent_nonstandard(make_nonstandard(row2, Rat(1, 2), Rat(0)),
                                           make_nonstandard(row6n3, Rat(1, 2), Rat(0))));
    }
    SUBCASE("different |t| are inequivalent") {
        CHECK_FALSE(equivalent_nonstandard(make_nonstandard(row2, Rat(3, 10), Rat(0)),
                                           make_nonstandard(row2, Rat(1, 2), Rat(0))));
    }
    SUBCASE("row 9 (p,q) is unordered") {
        auto a = instantiate_row(9, {{"p", 2}, {"q", 3}});
        auto b = instantiate_row(9, {{"p", 3}, {"q", 2}});
        CHECK(same_homogeneous_manifold(a, b));
        CHECK(equivalent_nonstandard(make_nonstandard(a, Rat(1, 2), Rat(0)),
                                     make_nonstandard(b, Rat(1, 2), Rat(0))));
    }
}

TEST_CASE("maximal semisimple groups of non-standard manifolds") {
    CHECK(maximal_semisimple_nonstandard_str(instantiate_row(3, {})) == "F_4");
    CHECK(maximal_semisimple_nonstandard_str(instantiate_row(2, {})) == "SO_8");
    CHECK(maximal_semisimple_nonstandard_str(instantiate_row(12, {})) == "E_6");
    CHECK(maximal_semisimple_nonstandard(instantiate_row(2, {})) == parse_group("SO_8"));
    // row 6 at n = 4 is already presented on SO_8
    CHECK(maximal_semisimple_nonstandard(instantiate_row(6, {{"n", 4}})) == parse_group("SO_8"));
}
