#include "cratlas/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace cratlas {

namespace {

void skip_spaces(const std::string& s, size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

long long read_int(const std::string& s, size_t& pos) {
    skip_spaces(s, pos);
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw Error(Errc::parse_error, "expected integer in '" + s + "'");
    return std::stoll(s.substr(start, pos - start));
}

} // namespace

PaintedDiagram parse_diagram_name(const std::string& name) {
    std::vector<SimpleLieType> types;
    std::vector<std::vector<int>> local_black;
    size_t pos = 0;
    while (true) {
        skip_spaces(name, pos);
        if (pos >= name.size()) throw Error(Errc::parse_error, "expected component in '" + name + "'");
        char fam = name[pos++];
        SimpleLieType t{family_from_char(fam), static_cast<int>(read_int(name, pos))};
        validate_type(t);
        skip_spaces(name, pos);
        if (pos >= name.size() || name[pos] != '[')
            throw Error(Errc::parse_error, "expected '[' after type in '" + name + "'");
        ++pos;
        std::vector<int> black;
        skip_spaces(name, pos);
        if (pos < name.size() && name[pos] == ']') {
            ++pos;
        } else {
            while (true) {
                long long id = read_int(name, pos);
                if (id < 1 || id > t.rank)
                    throw Error(Errc::parse_error, "node id " + std::to_string(id) + " out of range for " + t.str());
                black.push_back(static_cast<int>(id) - 1);
                skip_spaces(name, pos);
                if (pos < name.size() && name[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < name.size() && name[pos] == ']') {
                    ++pos;
                    break;
                }
                throw Error(Errc::parse_error, "expected ',' or ']' in '" + name + "'");
            }
        }
        types.push_back(t);
        local_black.push_back(std::move(black));
        skip_spaces(name, pos);
        if (pos < name.size() && (name[pos] == 'x' || name[pos] == 'X')) {
            ++pos;
            continue;
        }
        if (pos == name.size()) break;
        throw Error(Errc::parse_error, "trailing input in diagram name '" + name + "'");
    }
    auto sys = build_root_system(types);
    std::vector<int> black;
    for (size_t c = 0; c < types.size(); ++c)
        for (int b : local_black[c]) black.push_back(sys->component_first_node(static_cast<int>(c)) + b);
    return make_painting(std::move(sys), std::move(black));
}

std::vector<long long> parse_tuple(const std::string& text) {
    std::vector<long long> out;
    size_t pos = 0;
    skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == '(') ++pos;
    while (pos < text.size()) {
        out.push_back(read_int(text, pos));
        skip_spaces(text, pos);
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        if (pos < text.size() && text[pos] == ')') {
            ++pos;
            skip_spaces(text, pos);
        }
        break;
    }
    if (pos != text.size()) throw Error(Errc::parse_error, "trailing input in tuple '" + text + "'");
    if (out.empty()) throw Error(Errc::parse_error, "empty tuple");
    return out;
}

ManifoldSpec parse_manifold_spec(const std::string& text) {
    auto tpos = text.find("t=(");
    auto ppos = text.find("p=(");
    if (ppos != std::string::npos && tpos == std::string::npos) {
        std::string diagram = text.substr(0, ppos);
        while (!diagram.empty() && std::isspace(static_cast<unsigned char>(diagram.back()))) diagram.pop_back();
        auto close = text.find(')', ppos);
        if (close == std::string::npos) throw Error(Errc::parse_error, "missing ')' in '" + text + "'");
        auto tuple = parse_tuple(text.substr(ppos + 3, close - ppos - 3));
        return make_standard(parse_diagram_name(diagram), tuple);
    }
    if (tpos != std::string::npos) {
        std::string groups = text.substr(0, tpos);
        auto slash = groups.find('/');
        if (slash == std::string::npos)
            throw Error(Errc::parse_error, "expected 'G / L t=(re,im)' in '" + text + "'");
        std::string g = groups.substr(0, slash);
        std::string l = groups.substr(slash + 1);
        auto close = text.find(')', tpos);
        if (close == std::string::npos) throw Error(Errc::parse_error, "missing ')' in '" + text + "'");
        std::string t = text.substr(tpos + 3, close - tpos - 3);
        auto comma = t.find(',');
        Rat re = parse_rat(comma == std::string::npos ? t : t.substr(0, comma));
        Rat im = comma == std::string::npos ? Rat(0) : parse_rat(t.substr(comma + 1));
        auto row = recognize(g, l);
        if (!row)
            throw Error(Errc::unparseable_isotropy,
                        "(" + g + ", " + l + ") does not match any non-standard row");
        return make_nonstandard(*row, re, im);
    }
    throw Error(Errc::parse_error,
                "manifold spec must contain 'p=(...)' (standard) or 't=(...)' (non-standard)");
}

Json classify_report(const StandardCR& s) {
    ContactData cd = contact_data(s);
    LeviSignature sig = levi_signature(s);
    MaxGroupReport mg = maximal_cr_group(s);
    IsotropyDescription k = isotropy(s.diagram);
    Json j;
    j["kind"] = "standard";
    j["name"] = s.name();
    j["diagram"] = s.diagram.to_json();
    j["tuple"] = s.tuple;
    j["theta"] = cd.theta.to_json();
    j["contact_element"] = cd.contact_element_note;
    j["isotropy_L"] = cd.isotropy_L.to_json();
    j["isotropy_L_name"] = cd.isotropy_L.str();
    j["flag_isotropy_K"] = k.to_json();
    j["flag_isotropy_K_name"] = k.str();
    j["levi"] = sig.to_json();
    j["cr_dimension"] = sig.n_plus + sig.n_minus;
    j["maximal_group"] = mg.to_json();
    return j;
}

Json classify_report(const NonStandardCR& m) {
    MaxGroupReport mg = maximal_cr_group(m);
    Json j;
    j["kind"] = "nonstandard";
    j["name"] = m.name();
    j["row"] = m.entry.row;
    Json params = Json::object();
    for (const auto& [k, v] : m.entry.params) params[k] = v;
    j["params"] = params;
    j["G"] = m.entry.g_str;
    j["L"] = m.entry.l_str;
    j["K"] = m.entry.k_str;
    j["t"] = Json{{"re", rat_to_json(m.t_re)}, {"im", rat_to_json(m.t_im)}};
    j["modulus2"] = rat_to_json(m.modulus2());
    j["dim_M"] = m.entry.dim_M();
    j["flag"] = m.entry.flag_painting().name();
    j["maximal_group"] = mg.to_json();
    return j;
}

Json classify_report(const ManifoldSpec& spec) {
    return std::visit([](const auto& v) { return classify_report(v); }, spec);
}

EquivalenceVerdict decide_equivalent(const ManifoldSpec& a, const ManifoldSpec& b,
                                     bool allow_conjugate_J) {
    EquivalenceVerdict v;
    if (a.index() != b.index()) {
        // A non-standard manifold is never CR equivalent to a standard one.
        v.equivalent = false;
        v.witness = nullptr;
        return v;
    }
    if (std::holds_alternative<StandardCR>(a)) {
        auto w = equivalent_standard(std::get<StandardCR>(a), std::get<StandardCR>(b), allow_conjugate_J);
        v.equivalent = w.has_value();
        v.witness = w ? w->to_json() : Json(nullptr);
        return v;
    }
    const auto& ma = std::get<NonStandardCR>(a);
    const auto& mb = std::get<NonStandardCR>(b);
    v.equivalent = equivalent_nonstandard(ma, mb);
    if (v.equivalent)
        v.witness = Json{{"same_manifold", same_homogeneous_manifold(ma.entry, mb.entry)},
                         {"modulus2", rat_to_json(ma.modulus2())}};
    else
        v.witness = nullptr;
    return v;
}

std::vector<SimpleLieType> simple_types_up_to_rank(int max_rank) {
    std::vector<SimpleLieType> types;
    for (int r = 1; r <= max_rank; ++r)
        for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G}) {
            SimpleLieType t{f, r};
            try {
                validate_type(t);
            } catch (const Error&) {
                continue;
            }
            types.push_back(t);
        }
    return types;
}

namespace {

int resolve_threads(int requested) {
    if (requested > 0) return std::min(requested, 64);
    if (const char* env = std::getenv("CR_ATLAS_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return std::min(v, 64);
    }
    return 1;
}

std::vector<NonstandardRow> nonstandard_rows_up_to_rank(int max_rank) {
    std::vector<NonstandardRow> rows;
    auto push = [&](int row, std::map<std::string, long long> params) {
        NonstandardRow e = instantiate_row(row, params);
        if (e.rank_G() <= max_rank) rows.push_back(std::move(e));
    };
    if (max_rank >= 2) push(1, {});
    if (max_rank >= 3) push(2, {});
    if (max_rank >= 4) push(3, {});
    if (max_rank >= 1) push(4, {});
    for (long long n = 2; n <= max_rank; ++n) push(5, {{"n", n}});
    for (long long n = 3; n <= max_rank; ++n) push(6, {{"n", n}});
    for (long long n = 3; n <= max_rank; ++n) push(7, {{"n", n}});
    for (long long n = 3; n - 1 <= max_rank; ++n) push(8, {{"n", n}});
    for (long long p = 2; p - 1 <= max_rank; ++p)
        for (long long q = p; (p - 1) + (q - 1) <= max_rank; ++q)
            if (p + q > 4) push(9, {{"p", p}, {"q", q}});
    for (long long n = 5; n - 1 <= max_rank; ++n) push(10, {{"n", n}});
    if (max_rank >= 5) push(11, {});
    if (max_rank >= 6) push(12, {});
    std::sort(rows.begin(), rows.end(), [](const NonstandardRow& a, const NonstandardRow& b) {
        if (a.row != b.row) return a.row < b.row;
        return a.params < b.params;
    });
    return rows;
}

} // namespace

Json enumerate_catalog(const CatalogOptions& opts) {
    if (opts.max_rank < 1) throw Error(Errc::bad_argument, "max rank must be >= 1");
    if (opts.tuple_bound < 1) throw Error(Errc::bad_argument, "tuple bound must be >= 1");

    // Task list: one per (type, painting orbit representative).
    struct Task {
        PaintedDiagram painting;
    };
    std::vector<Task> tasks;
    for (const auto& t : simple_types_up_to_rank(opts.max_rank)) {
        auto sys = build_root_system({t});
        for (auto& p : enumerate_paintings(sys, /*orbit_representatives=*/true))
            tasks.push_back(Task{std::move(p)});
    }

    std::vector<Json> results(tasks.size());
    const int nthreads = resolve_threads(opts.threads);
    auto worker = [&](int tid) {
        for (size_t i = tid; i < tasks.size(); i += nthreads) {
            Json entries = Json::array();
            for (const auto& s : enumerate_standard(tasks[i].painting, opts.tuple_bound, true))
                entries.push_back(classify_report(s));
            results[i] = std::move(entries);
        }
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    Json standard = Json::array();
    for (auto& r : results)
        for (auto& e : r) standard.push_back(std::move(e));

    Json families = Json::array();
    for (const auto& row : nonstandard_rows_up_to_rank(opts.max_rank)) {
        Json j;
        j["kind"] = "nonstandard_family";
        j["row"] = row.row;
        Json params = Json::object();
        for (const auto& [k, v] : row.params) params[k] = v;
        j["params"] = params;
        j["G"] = row.g_str;
        j["L"] = row.l_str;
        j["K"] = row.k_str;
        j["dim_M"] = row.dim_M();
        j["flag"] = row.flag_painting().name();
        j["moduli"] = "one CR structure per |t|, t in the punctured unit disc";
        j["maximal_group"] = Json{{"a_ss", maximal_semisimple_nonstandard_str(row)}, {"center_dim", 0}};
        families.push_back(std::move(j));
    }

    return Json{{"version", "1"},
                {"generator", Json{{"max_rank", opts.max_rank}, {"tuple_bound", opts.tuple_bound}}},
                {"standard", standard},
                {"nonstandard_families", families}};
}

Json verify_catalog(const Json& catalog) {
    Json report;
    std::vector<std::string> problems;
    if (!catalog.contains("version") || catalog.at("version") != "1")
        problems.push_back("unsupported catalog version");
    if (problems.empty()) {
        CatalogOptions opts;
        opts.max_rank = catalog.at("generator").at("max_rank").get<int>();
        opts.tuple_bound = catalog.at("generator").at("tuple_bound").get<long long>();
        opts.threads = 1;
        Json fresh = enumerate_catalog(opts);
        if (fresh != catalog) {
            if (fresh.at("standard") != catalog.at("standard"))
                problems.push_back("standard entries differ from recomputation");
            if (fresh.at("nonstandard_families") != catalog.at("nonstandard_families"))
                problems.push_back("non-standard families differ from recomputation");
            if (problems.empty()) problems.push_back("catalog differs from recomputation");
        }
        report["entries_standard"] = catalog.contains("standard") ? catalog.at("standard").size() : 0;
        report["entries_nonstandard"] =
            catalog.contains("nonstandard_families") ? catalog.at("nonstandard_families").size() : 0;
    }
    report["ok"] = problems.empty();
    report["problems"] = problems;
    return report;
}

namespace {

std::string rat_str(const Json& j) {
    long long num = j.at("num").get<long long>();
    long long den = j.at("den").get<long long>();
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

} // namespace

std::string render_text_report(const Json& report) {
    std::ostringstream os;
    if (report.contains("kind") && report.at("kind") == "standard") {
        os << "standard CR manifold " << report.at("name").get<std::string>() << "\n";
        os << "  L = " << report.at("isotropy_L_name").get<std::string>()
           << "   K = " << report.at("flag_isotropy_K_name").get<std::string>() << "\n";
        os << "  Levi signature (" << report.at("levi").at("n_plus").get<int>() << ", "
           << report.at("levi").at("n_minus").get<int>() << ")\n";
        const auto& mg = report.at("maximal_group");
        os << "  maximal group A = " << mg.at("a_full").get<std::string>()
           << "  (A^ss = " << mg.at("a_ss").get<std::string>()
           << ", center dim " << mg.at("center_dim").get<int>() << ")\n";
        if (mg.contains("a_side_flag"))
            os << "  A-side flag " << mg.at("a_side_flag").get<std::string>() << ", B = "
               << mg.at("a_side_isotropy_B").get<std::string>() << "\n";
        for (const auto& tr : mg.at("transfer")) {
            os << "  factor " << tr.at("component").get<int>();
            if (tr.at("onishchik").get<bool>()) {
                os << ": Z' = " << rat_str(tr.at("coefficient")) << " E^c"
                   << "  (B_g(Z,Z) = " << rat_str(tr.at("bg_zz"))
                   << ", B_a(Z,E^c) = " << rat_str(tr.at("ba_z_ec")) << ")";
            } else {
                os << ": Z' = Z";
            }
            os << "\n";
        }
    } else if (report.contains("kind") && report.at("kind") == "nonstandard") {
        os << "non-standard CR manifold " << report.at("name").get<std::string>() << "\n";
        os << "  row " << report.at("row").get<int>() << ": G = " << report.at("G").get<std::string>()
           << ", L = " << report.at("L").get<std::string>() << ", K = "
           << report.at("K").get<std::string>() << "\n";
        os << "  |t|^2 = " << rat_str(report.at("modulus2")) << ", dim M = "
           << report.at("dim_M").get<long long>() << "\n";
        const auto& mg = report.at("maximal_group");
        os << "  maximal group A = " << mg.at("a_full").get<std::string>() << "  (semisimple, center dim 0)\n";
    } else {
        os << report.dump(2) << "\n";
    }
    return os.str();
}

} // namespace cratlas
