// cr-atlas command line interface. Links the public C API only.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cratlas.h"

namespace {

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { cra_string_free(ptr); }
    std::string str() const { return ptr ? std::string(ptr) : std::string(); }
};

[[noreturn]] void fail(cra_error code) {
    std::string message = cra_last_error_message();
    std::ostringstream os;
    os << "{\"error\":\"" << cra_error_name(code) << "\",\"code\":" << code << ",\"message\":\"";
    for (char c : message) {
        if (c == '"' || c == '\\') os << '\\';
        if (c == '\n') {
            os << "\\n";
            continue;
        }
        os << c;
    }
    os << "\"}";
    std::cerr << os.str() << std::endl;
    std::exit(2);
}

void check(cra_error code) {
    if (code != CRA_OK) fail(code);
}

void print_report(const std::string& report_json, const std::string& format) {
    if (format == "json") {
        std::cout << report_json << std::endl;
        return;
    }
    OwnedString text;
    check(cra_render_text_report(report_json.c_str(), &text.ptr));
    std::cout << text.str();
}

std::string build_spec(const std::string& diagram, const std::string& tuple, const std::string& group,
                       const std::string& isotropy, const std::string& t) {
    if (!diagram.empty()) {
        if (tuple.empty()) {
            std::cerr << "{\"error\":\"BadArgument\",\"code\":13,\"message\":\"--diagram requires --tuple\"}"
                      << std::endl;
            std::exit(2);
        }
        return diagram + " p=(" + tuple + ")";
    }
    if (group.empty() || isotropy.empty()) {
        std::cerr << "{\"error\":\"BadArgument\",\"code\":13,\"message\":\"need --diagram/--tuple or "
                     "--group/--isotropy\"}"
                  << std::endl;
        std::exit(2);
    }
    return group + " / " + isotropy + " t=(" + (t.empty() ? "1/2,0" : t) + ")";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cr-atlas: exact classification of compact homogeneous CR manifolds"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format: text or json")->check(CLI::IsMember({"text", "json"}));

    // classify
    auto* classify = app.add_subcommand("classify", "Classify one homogeneous CR manifold");
    std::string diagram, tuple, group, isotropy, t;
    classify->add_option("--diagram", diagram, "Painted diagram, e.g. B3[1]");
    classify->add_option("--tuple", tuple, "Integer tuple on the black nodes, e.g. 1,-2");
    classify->add_option("--group", group, "Transitive group G, e.g. Spin7");
    classify->add_option("--isotropy", isotropy, "Isotropy L, e.g. SU3");
    classify->add_option("--t", t, "Disc modulus re,im (rationals), e.g. 1/2,0");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "Enumerate the classification catalog");
    int max_rank = 3;
    long long tuple_bound = 2;
    int threads = 0;
    std::string out_file;
    enumerate->add_option("--max-rank", max_rank, "Maximal rank of the simple types")->required();
    enumerate->add_option("--tuple-bound", tuple_bound, "Bound on |p_i|")->required();
    enumerate->add_option("--threads", threads, "Worker count (default: CR_ATLAS_THREADS or 1)");
    enumerate->add_option("--out", out_file, "Output file (default: stdout)");

    // equivalent
    auto* equivalent = app.add_subcommand("equivalent", "Decide CR equivalence of two manifolds");
    std::string spec_a, spec_b;
    bool no_conjugate = false;
    equivalent->add_option("--a", spec_a, "First manifold, e.g. \"A2[1,2] p=(2,-1)\"")->required();
    equivalent->add_option("--b", spec_b, "Second manifold, e.g. \"Spin7 / SU3 t=(1/2,0)\"")->required();
    equivalent->add_flag("--no-conjugate", no_conjugate, "Do not identify J with -J");

    // maximal-group
    auto* maxgroup = app.add_subcommand("maximal-group", "Maximal compact automorphism group");
    std::string mg_diagram, mg_tuple, mg_group, mg_isotropy, mg_t;
    maxgroup->add_option("--diagram", mg_diagram, "Painted diagram");
    maxgroup->add_option("--tuple", mg_tuple, "Integer tuple");
    maxgroup->add_option("--group", mg_group, "Transitive group G");
    maxgroup->add_option("--isotropy", mg_isotropy, "Isotropy L");
    maxgroup->add_option("--t", mg_t, "Disc modulus re,im");

    // catalog verify
    auto* catalog = app.add_subcommand("catalog", "Catalog file operations");
    auto* verify = catalog->add_subcommand("verify", "Recompute and check a catalog file");
    std::string in_file;
    verify->add_option("--in", in_file, "Catalog JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    if (*classify) {
        std::string spec = build_spec(diagram, tuple, group, isotropy, t);
        OwnedString report;
        check(cra_classify_spec(spec.c_str(), &report.ptr));
        print_report(report.str(), format);
        return 0;
    }

    if (*enumerate) {
        OwnedString json;
        check(cra_enumerate_catalog(max_rank, tuple_bound, threads, &json.ptr));
        if (out_file.empty()) {
            std::cout << json.str() << std::endl;
        } else {
            std::ofstream f(out_file, std::ios::binary);
            if (!f) {
                std::cerr << "{\"error\":\"IoError\",\"code\":15,\"message\":\"cannot open output file\"}"
                          << std::endl;
                return 2;
            }
            f << json.str() << "\n";
        }
        return 0;
    }

    if (*equivalent) {
        int verdict = 0;
        OwnedString witness;
        check(cra_equivalent_specs(spec_a.c_str(), spec_b.c_str(), no_conjugate ? 0 : 1, &verdict,
                                   &witness.ptr));
        if (format == "json") {
            std::cout << "{\"equivalent\":" << (verdict ? "true" : "false")
                      << ",\"witness\":" << witness.str() << "}" << std::endl;
        } else {
            std::cout << (verdict ? "equivalent" : "inequivalent") << std::endl;
            if (verdict && witness.str() != "null") std::cout << "witness: " << witness.str() << std::endl;
        }
        return verdict ? 0 : 1;
    }

    if (*maxgroup) {
        std::string spec = build_spec(mg_diagram, mg_tuple, mg_group, mg_isotropy, mg_t);
        OwnedString report;
        check(cra_maximal_group_spec(spec.c_str(), &report.ptr));
        std::cout << report.str() << std::endl;
        return 0;
    }

    if (*verify) {
        std::ifstream f(in_file, std::ios::binary);
        if (!f) {
            std::cerr << "{\"error\":\"IoError\",\"code\":15,\"message\":\"cannot open catalog file\"}"
                      << std::endl;
            return 2;
        }
        std::stringstream buffer;
        buffer << f.rdbuf();
        OwnedString report;
        check(cra_verify_catalog(buffer.str().c_str(), &report.ptr));
        std::cout << report.str() << std::endl;
        // ok field is at a fixed position in the compact report
        return report.str().find("\"ok\":true") != std::string::npos ? 0 : 1;
    }

    return 2;
}
