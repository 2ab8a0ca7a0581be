#include "cratlas.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <string>

#include "cratlas/catalog.hpp"

using namespace cratlas;

namespace {

thread_local std::string g_last_error;

cra_error code_of(Errc c) { return static_cast<cra_error>(c); }

template <typename Fn> cra_error guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        fn();
        return CRA_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return code_of(e.code());
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return CRA_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CRA_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return CRA_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cra_error require(bool cond, const char* what) {
    if (cond) return CRA_OK;
    g_last_error = what;
    return CRA_ERR_BAD_ARGUMENT;
}

} // namespace

struct cra_root_system {
    RootSystemPtr sys;
};
struct cra_painting {
    PaintedDiagram d;
};
struct cra_standard {
    StandardCR s;
};
struct cra_nonstandard {
    NonStandardCR m;
};

extern "C" {

const char* cra_error_name(cra_error code) {
    return errc_name(static_cast<Errc>(code));
}

const char* cra_version(void) { return "1.0.0"; }

const char* cra_last_error_message(void) { return g_last_error.c_str(); }

void cra_string_free(char* s) { std::free(s); }

cra_error cra_root_system_parse(const char* name, cra_root_system** out) {
    if (cra_error e = require(name && out, "null argument")) return e;
    return guarded([&] {
        // Reuse the diagram grammar with every node black, then keep the system.
        std::vector<SimpleLieType> types;
        std::string text(name);
        size_t pos = 0;
        while (pos < text.size()) {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos >= text.size()) break;
            char fam = text[pos++];
            size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (start == pos) throw Error(Errc::parse_error, "expected rank in '" + text + "'");
            SimpleLieType t{family_from_char(fam), std::stoi(text.substr(start, pos - start))};
            validate_type(t);
            types.push_back(t);
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos < text.size()) {
                if (text[pos] != 'x' && text[pos] != 'X')
                    throw Error(Errc::parse_error, "expected 'x' between components");
                ++pos;
            }
        }
        *out = new cra_root_system{build_root_system(types)};
    });
}

void cra_root_system_free(cra_root_system* sys) { delete sys; }

cra_error cra_root_system_to_json(const cra_root_system* sys, char** json_out) {
    if (cra_error e = require(sys && json_out, "null argument")) return e;
    return guarded([&] { *json_out = dup_string(sys->sys->to_json().dump()); });
}

cra_error cra_root_system_rank(const cra_root_system* sys, int* rank_out) {
    if (cra_error e = require(sys && rank_out, "null argument")) return e;
    *rank_out = sys->sys->rank();
    return CRA_OK;
}

cra_error cra_root_system_num_positive_roots(const cra_root_system* sys, int* count_out) {
    if (cra_error e = require(sys && count_out, "null argument")) return e;
    *count_out = sys->sys->num_positive_roots();
    return CRA_OK;
}

cra_error cra_root_system_num_diagram_automorphisms(const cra_root_system* sys, long long* count_out) {
    if (cra_error e = require(sys && count_out, "null argument")) return e;
    return guarded([&] { *count_out = static_cast<long long>(sys->sys->diagram_automorphisms().size()); });
}

cra_error cra_painting_parse(const char* name, cra_painting** out) {
    if (cra_error e = require(name && out, "null argument")) return e;
    return guarded([&] { *out = new cra_painting{parse_diagram_name(name)}; });
}

void cra_painting_free(cra_painting* p) { delete p; }

cra_error cra_painting_to_json(const cra_painting* p, char** json_out) {
    if (cra_error e = require(p && json_out, "null argument")) return e;
    return guarded([&] { *json_out = dup_string(p->d.to_json().dump()); });
}

cra_error cra_painting_name(const cra_painting* p, char** name_out) {
    if (cra_error e = require(p && name_out, "null argument")) return e;
    return guarded([&] { *name_out = dup_string(p->d.name()); });
}

cra_error cra_painting_isotropy_json(const cra_painting* p, char** json_out) {
    if (cra_error e = require(p && json_out, "null argument")) return e;
    return guarded([&] { *json_out = dup_string(isotropy(p->d).to_json().dump()); });
}

cra_error cra_painting_complex_dimension(const cra_painting* p, int* dim_out) {
    if (cra_error e = require(p && dim_out, "null argument")) return e;
    return guarded(
        [&] { *dim_out = static_cast<int>(complementary_positive_roots(p->d).size()); });
}

cra_error cra_standard_make(const cra_painting* p, const long long* tuple, size_t tuple_len,
                            cra_standard** out) {
    if (cra_error e = require(p && tuple && out, "null argument")) return e;
    return guarded([&] {
        std::vector<long long> t(tuple, tuple + tuple_len);
        *out = new cra_standard{make_standard(p->d, std::move(t))};
    });
}

void cra_standard_free(cra_standard* s) { delete s; }

cra_error cra_standard_report_json(const cra_standard* s, char** json_out) {
    if (cra_error e = require(s && json_out, "null argument")) return e;
    return guarded([&] { *json_out = dup_string(classify_report(s->s).dump()); });
}

cra_error cra_standard_levi(const cra_standard* s, int* n_plus, int* n_minus) {
    if (cra_error e = require(s && n_plus && n_minus, "null argument")) return e;
    return guarded([&] {
        LeviSignature sig = levi_signature(s->s);
        *n_plus = sig.n_plus;
        *n_minus = sig.n_minus;
    });
}

cra_error cra_standard_equivalent(const cra_standard* a, const cra_standard* b, int allow_conjugate,
                                  int* verdict, char** witness_json) {
    if (cra_error e = require(a && b && verdict, "null argument")) return e;
    return guarded([&] {
        auto w = equivalent_standard(a->s, b->s, allow_conjugate != 0);
        *verdict = w ? 1 : 0;
        if (witness_json) *witness_json = dup_string(w ? w->to_json().dump() : "null");
    });
}

cra_error cra_nonstandard_make(const char* group, const char* isotropy, const char* t_re,
                               const char* t_im, cra_nonstandard** out) {
    if (cra_error e = require(group && isotropy && t_re && t_im && out, "null argument")) return e;
    return guarded([&] {
        auto row = recognize(group, isotropy);
        if (!row)
            throw Error(Errc::unparseable_isotropy, std::string("(") + group + ", " + isotropy +
                                                        ") does not match any non-standard row");
        *out = new cra_nonstandard{make_nonstandard(*row, parse_rat(t_re), parse_rat(t_im))};
    });
}

void cra_nonstandard_free(cra_nonstandard* m) { delete m; }

cra_error cra_nonstandard_report_json(const cra_nonstandard* m, char** json_out) {
    if (cra_error e = require(m && json_out, "null argument")) return e;
    return guarded([&] { *json_out = dup_string(classify_report(m->m).dump()); });
}

cra_error cra_nonstandard_row(const cra_nonstandard* m, int* row_out) {
    if (cra_error e = require(m && row_out, "null argument")) return e;
    *row_out = m->m.entry.row;
    return CRA_OK;
}

cra_error cra_nonstandard_equivalent(const cra_nonstandard* a, const cra_nonstandard* b, int* verdict) {
    if (cra_error e = require(a && b && verdict, "null argument")) return e;
    return guarded([&] { *verdict = equivalent_nonstandard(a->m, b->m) ? 1 : 0; });
}

cra_error cra_recognize_json(const char* group, const char* isotropy, char** json_out) {
    if (cra_error e = require(group && isotropy && json_out, "null argument")) return e;
    return guarded([&] {
        auto row = recognize(group, isotropy);
        if (!row)
            throw Error(Errc::unparseable_isotropy, std::string("(") + group + ", " + isotropy +
                                                        ") does not match any non-standard row");
        *json_out = dup_string(row->to_json().dump());
    });
}

cra_error cra_classify_spec(const char* spec, char** report_json_out) {
    if (cra_error e = require(spec && report_json_out, "null argument")) return e;
    return guarded(
        [&] { *report_json_out = dup_string(classify_report(parse_manifold_spec(spec)).dump()); });
}

cra_error cra_equivalent_specs(const char* spec_a, const char* spec_b, int allow_conjugate,
                               int* verdict, char** witness_json) {
    if (cra_error e = require(spec_a && spec_b && verdict, "null argument")) return e;
    return guarded([&] {
        auto a = parse_manifold_spec(spec_a);
        auto b = parse_manifold_spec(spec_b);
        auto v = decide_equivalent(a, b, allow_conjugate != 0);
        *verdict = v.equivalent ? 1 : 0;
        if (witness_json) *witness_json = dup_string(v.witness.dump());
    });
}

cra_error cra_maximal_group_spec(const char* spec, char** report_json_out) {
    if (cra_error e = require(spec && report_json_out, "null argument")) return e;
    return guarded([&] {
        auto m = parse_manifold_spec(spec);
        Json j = std::visit([](const auto& v) { return maximal_cr_group(v).to_json(); }, m);
        *report_json_out = dup_string(j.dump());
    });
}

cra_error cra_enumerate_catalog(int max_rank, long long tuple_bound, int threads, char** json_out) {
    if (cra_error e = require(json_out != nullptr, "null argument")) return e;
    return guarded([&] {
        CatalogOptions opts{max_rank, tuple_bound, threads};
        *json_out = dup_string(enumerate_catalog(opts).dump(1));
    });
}

cra_error cra_verify_catalog(const char* catalog_json, char** report_json_out) {
    if (cra_error e = require(catalog_json && report_json_out, "null argument")) return e;
    return guarded([&] {
        Json parsed = Json::parse(catalog_json);
        *report_json_out = dup_string(verify_catalog(parsed).dump());
    });
}

cra_error cra_render_text_report(const char* report_json, char** text_out) {
    if (cra_error e = require(report_json && text_out, "null argument")) return e;
    return guarded([&] { *text_out = dup_string(render_text_report(Json::parse(report_json))); });
}

} // extern "C"
