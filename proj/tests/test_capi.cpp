#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include "cratlas.h"

namespace {

struct Str {
    char* p = nullptr;
    ~Str() { cra_string_free(p); }
    std::string s() const { return p ? std::string(p) : std::string(); }
};

using nlohmann::json;

} // namespace

TEST_CASE("error names are stable") {
    CHECK(std::strcmp(cra_error_name(CRA_OK), "Ok") == 0);
    CHECK(std::strcmp(cra_error_name(CRA_ERR_NON_REGULAR), "NonRegular") == 0);
    CHECK(std::strcmp(cra_error_name(CRA_ERR_NON_PRIMITIVE), "NonPrimitive") == 0);
    CHECK(std::strcmp(cra_error_name(CRA_ERR_ZERO_ENTRY), "ZeroEntry") == 0);
    CHECK(std::strcmp(cra_error_name(CRA_ERR_UNPARSEABLE_ISOTROPY), "UnparseableIsotropy") == 0);
    CHECK(cra_version() != nullptr);
}

TEST_CASE("root system handle") {
    cra_root_system* sys = nullptr;
    REQUIRE(cra_root_system_parse("B3", &sys) == CRA_OK);
    int rank = 0, roots = 0;
    CHECK(cra_root_system_rank(sys, &rank) == CRA_OK);
    CHECK(rank == 3);
    CHECK(cra_root_system_num_positive_roots(sys, &roots) == CRA_OK);
    CHECK(roots == 9);
    Str json_text;
    CHECK(cra_root_system_to_json(sys, &json_text.p) == CRA_OK);
    auto j = json::parse(json_text.s());
    CHECK(j.at("name") == "B3");
    cra_root_system_free(sys);

    cra_root_system* bad = nullptr;
    CHECK(cra_root_system_parse("D3", &bad) == CRA_ERR_INVALID_RANK);
    CHECK(std::string(cra_last_error_message()).find("rank") != std::string::npos);

    cra_root_system* prod = nullptr;
    REQUIRE(cra_root_system_parse("A1xA1", &prod) == CRA_OK);
    long long autos = 0;
    CHECK(cra_root_system_num_diagram_automorphisms(prod, &autos) == CRA_OK);
    CHECK(autos == 2);
    cra_root_system_free(prod);
}

TEST_CASE("painting handle") {
    cra_painting* p = nullptr;
    REQUIRE(cra_painting_parse("B3[1]", &p) == CRA_OK);
    Str name;
    CHECK(cra_painting_name(p, &name.p) == CRA_OK);
    CHECK(name.s() == "B3[1]");
    Str iso;
    CHECK(cra_painting_isotropy_json(p, &iso.p) == CRA_OK);
    auto j = json::parse(iso.s());
    CHECK(j.at("center_dim") == 1);
    CHECK(j.at("semisimple")[0].at("family") == "B");
    int dim = 0;
    CHECK(cra_painting_complex_dimension(p, &dim) == CRA_OK);
    CHECK(dim == 5);
    cra_painting_free(p);

    cra_painting* bad = nullptr;
    CHECK(cra_painting_parse("B3[]", &bad) == CRA_ERR_INVALID_PAINTING);
    CHECK(cra_painting_parse("B3[7]", &bad) == CRA_ERR_PARSE);
}

TEST_CASE("standard handle and reports") {
    cra_painting* p = nullptr;
    REQUIRE(cra_painting_parse("C2[1]", &p) == CRA_OK);
    long long tuple[] = {1};
    cra_standard* s = nullptr;
    REQUIRE(cra_standard_make(p, tuple, 1, &s) == CRA_OK);
    int np = 0, nm = 0;
    CHECK(cra_standard_levi(s, &np, &nm) == CRA_OK);
    CHECK(np == 3);
    CHECK(nm == 0);
    Str rep;
    CHECK(cra_standard_report_json(s, &rep.p) == CRA_OK);
    auto j = json::parse(rep.s());
    CHECK(j.at("kind") == "standard");
    CHECK(j.at("maximal_group").at("a_ss") == "SU_4");
    CHECK(j.at("maximal_group").at("center_dim") == 1);
    cra_standard_free(s);

    long long bad_tuple[] = {2};
    cra_standard* bad = nullptr;
    CHECK(cra_standard_make(p, bad_tuple, 1, &bad) == CRA_ERR_NON_PRIMITIVE);
    cra_painting_free(p);
}

TEST_CASE("standard equivalence through the C surface") {
    cra_painting* p = nullptr;
    REQUIRE(cra_painting_parse("A2[1,2]", &p) == CRA_OK);
    long long t1[] = {2, -1};
    long long t2[] = {-1, 2};
    cra_standard *s1 = nullptr, *s2 = nullptr;
    REQUIRE(cra_standard_make(p, t1, 2, &s1) == CRA_OK);
    REQUIRE(cra_standard_make(p, t2, 2, &s2) == CRA_OK);
    int verdict = 0;
    Str witness;
    CHECK(cra_standard_equivalent(s1, s2, 0, &verdict, &witness.p) == CRA_OK);
    CHECK(verdict == 1);
    CHECK(json::parse(witness.s()).at("negated") == false);
    cra_standard_free(s1);
    cra_standard_free(s2);
    cra_painting_free(p);
}

TEST_CASE("nonstandard handles") {
    cra_nonstandard* m = nullptr;
    REQUIRE(cra_nonstandard_make("Spin7", "SU3", "1/2", "0", &m) == CRA_OK);
    int row = 0;
    CHECK(cra_nonstandard_row(m, &row) == CRA_OK);
    CHECK(row == 2);
    Str rep;
    CHECK(cra_nonstandard_report_json(m, &rep.p) == CRA_OK);
    auto j = json::parse(rep.s());
    CHECK(j.at("maximal_group").at("a_ss") == "SO_8");
    CHECK(j.at("dim_M") == 13);

    cra_nonstandard* m2 = nullptr;
    REQUIRE(cra_nonstandard_make("SO8", "SO6", "-1/2", "0", &m2) == CRA_OK);
    int verdict = 0;
    CHECK(cra_nonstandard_equivalent(m, m2, &verdict) == CRA_OK);
    CHECK(verdict == 1);
    cra_nonstandard_free(m2);
    cra_nonstandard_free(m);

    cra_nonstandard* bad = nullptr;
    CHECK(cra_nonstandard_make("G2", "U2", "1/2", "0", &bad) == CRA_ERR_UNPARSEABLE_ISOTROPY);
    CHECK(cra_nonstandard_make("Spin7", "SU3", "0", "0", &bad) == CRA_ERR_INVALID_MODULUS);
    CHECK(cra_nonstandard_make("Spin7", "SU3", "2", "0", &bad) == CRA_ERR_INVALID_MODULUS);

    Str rec;
    CHECK(cra_recognize_json("SU4", "T1.SU2", &rec.p) == CRA_OK);
    CHECK(json::parse(rec.s()).at("row") == 8);
}

TEST_CASE("spec-level calls") {
    Str rep;
    CHECK(cra_classify_spec("A1[1] p=(1)", &rep.p) == CRA_OK);
    auto j = json::parse(rep.s());
    CHECK(j.at("levi").at("n_plus") == 1);
    CHECK(j.at("maximal_group").at("a_full") == "SU_2 x T^1");

    CHECK(cra_classify_spec("A2[1,2] p=(1,-1)", &rep.p) == CRA_ERR_NON_REGULAR);

    int verdict = -1;
    Str witness;
    CHECK(cra_equivalent_specs("Spin7 / SU3 t=(1/2,0)", "SO8 / SO6 t=(0,1/2)", 1, &verdict,
                               &witness.p) == CRA_OK);
    CHECK(verdict == 1);
    CHECK(cra_equivalent_specs("A1[1] p=(1)", "Spin7 / SU3 t=(1/2,0)", 1, &verdict, &witness.p) ==
          CRA_OK);
    CHECK(verdict == 0);

    Str mg;
    CHECK(cra_maximal_group_spec("G2[2] p=(1)", &mg.p) == CRA_OK);
    CHECK(json::parse(mg.s()).at("a_ss") == "SO_7");
}

TEST_CASE("catalog round-trip") {
    Str cat;
    REQUIRE(cra_enumerate_catalog(2, 1, 1, &cat.p) == CRA_OK);
    auto j = json::parse(cat.s());
    CHECK(j.at("version") == "1");
    CHECK(j.at("standard").size() > 0);
    Str verdict;
    CHECK(cra_verify_catalog(cat.s().c_str(), &verdict.p) == CRA_OK);
    CHECK(json::parse(verdict.s()).at("ok") == true);

    Str text;
    CHECK(cra_render_text_report(j.at("standard")[0].dump().c_str(), &text.p) == CRA_OK);
    CHECK(text.s().find("standard CR manifold") != std::string::npos);
}
