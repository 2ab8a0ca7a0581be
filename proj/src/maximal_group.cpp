#include "cratlas/maximal_group.hpp"

#include <algorithm>
#include <sstream>

namespace cratlas {

const char* onishchik_row_name(OnishchikRow r) {
    switch (r) {
    case OnishchikRow::I: return "I";
    case OnishchikRow::II: return "II";
    case OnishchikRow::III: return "III";
    }
    return "?";
}

Json OnishchikPair::to_json() const {
    return Json{{"row", onishchik_row_name(row)},
                {"ell", ell},
                {"g_side", g_side.name()},
                {"a_side", a_side.name()},
                {"g_space", g_space},
                {"a_space", a_space}};
}

std::string simple_group_name(const SimpleLieType& t) { return simple_group_factor(t).str(); }

GroupFactor simple_group_factor(const SimpleLieType& t) {
    switch (t.family) {
    case Family::A: return {FactorKind::SU, t.rank + 1};
    case Family::B: return {FactorKind::SO, 2 * t.rank + 1};
    case Family::C: return {FactorKind::Sp, t.rank};
    case Family::D: return {FactorKind::SO, 2 * t.rank};
    case Family::E:
        return {t.rank == 6 ? FactorKind::E6 : t.rank == 7 ? FactorKind::E7 : FactorKind::E8, 0};
    case Family::F: return {FactorKind::F4, 0};
    case Family::G: return {FactorKind::G2, 0};
    }
    throw Error(Errc::internal, "bad family");
}

std::optional<OnishchikPair> onishchik_extension(const PaintedDiagram& factor) {
    if (factor.system->components().size() != 1)
        throw Error(Errc::bad_argument, "onishchik_extension takes a single painted simple component");
    const SimpleLieType t = factor.system->components()[0];
    const int ell = t.rank;

    auto paint = [](Family fam, int rank, std::vector<int> black) {
        return make_painting(build_root_system({{fam, rank}}), std::move(black));
    };

    if (t.family == Family::C && ell >= 2 && factor.black == std::vector<int>{0}) {
        OnishchikPair p{OnishchikRow::I, ell, factor, paint(Family::A, 2 * ell - 1, {0}),
                        "Sp_" + std::to_string(ell) + "/Sp_" + std::to_string(ell - 1) + ".T^1",
                        "SU_" + std::to_string(2 * ell) + "/U_" + std::to_string(2 * ell - 1)};
        return p;
    }
    if (t.family == Family::G && factor.black == std::vector<int>{1}) {
        // Black node is the long simple root; F = G_2/U_2 = Gr_2(R^7).
        OnishchikPair p{OnishchikRow::II, 2, factor, paint(Family::B, 3, {0}), "G_2/U_2",
                        "SO_7/SO_5.SO_2"};
        return p;
    }
    if (t.family == Family::B && ell >= 3 && factor.black == std::vector<int>{ell - 1}) {
        OnishchikPair p{OnishchikRow::III, ell, factor, paint(Family::D, ell + 1, {ell}),
                        "SO_" + std::to_string(2 * ell + 1) + "/U_" + std::to_string(ell),
                        "SO_" + std::to_string(2 * ell + 2) + "/U_" + std::to_string(ell + 1)};
        return p;
    }
    return std::nullopt;
}

namespace {

PaintedDiagram component_painting(const PaintedDiagram& d, int comp) {
    const SimpleLieType t = d.system->components()[comp];
    int base = d.system->component_first_node(comp);
    std::vector<int> black;
    for (int n : d.black_in_component(comp)) black.push_back(n - base);
    return make_painting(build_root_system({t}), std::move(black));
}

} // namespace

HolomorphicGroup maximal_holomorphic_group(const PaintedDiagram& flag) {
    HolomorphicGroup out;
    std::vector<SimpleLieType> a_types;
    std::vector<int> a_black;
    std::vector<std::string> names;
    int base = 0;
    for (size_t c = 0; c < flag.system->components().size(); ++c) {
        PaintedDiagram factor = component_painting(flag, static_cast<int>(c));
        auto pair = onishchik_extension(factor);
        out.factor_pairs.push_back(pair);
        const PaintedDiagram& target = pair ? pair->a_side : factor;
        const SimpleLieType at = target.system->components()[0];
        a_types.push_back(at);
        for (int n : target.black) a_black.push_back(base + n);
        base += at.rank;
        GroupFactor f = simple_group_factor(at);
        out.a.add(f.kind, f.n);
        names.push_back(f.str());
    }
    out.a.normalize();
    std::ostringstream os;
    for (size_t i = 0; i < names.size(); ++i) {
        if (i) os << " x ";
        os << names[i];
    }
    out.a_str = os.str();
    out.a_flag = make_painting(build_root_system(a_types), a_black);
    return out;
}

long long onishchik_embedding_index(OnishchikRow row, int ell) {
    switch (row) {
    case OnishchikRow::I: return -1;
    case OnishchikRow::II: return -1;
    case OnishchikRow::III: return -ell;
    }
    throw Error(Errc::internal, "bad row");
}

Rat onishchik_lambda(OnishchikRow row, long long p) {
    switch (row) {
    case OnishchikRow::I: return Rat(p, 2);
    case OnishchikRow::II: return Rat(p);
    case OnishchikRow::III: return Rat(p, 2);
    }
    throw Error(Errc::internal, "bad row");
}

Json FactorTransfer::to_json() const {
    Json j{{"component", component}, {"onishchik", onishchik}, {"bg_zz", rat_to_json(bg_zz)}};
    if (onishchik) {
        j["lambda"] = rat_to_json(lambda);
        j["embedding_index"] = embedding_index;
        j["ba_z_ec"] = rat_to_json(ba_z_ec);
        j["coefficient"] = rat_to_json(coefficient);
        j["ba_z_zprime"] = rat_to_json(ba_z_zprime);
    }
    j["note"] = note;
    return j;
}

std::vector<FactorTransfer> transfer_contact_element(const StandardCR& s) {
    std::vector<FactorTransfer> out;
    const auto& sys = *s.diagram.system;
    for (size_t c = 0; c < sys.components().size(); ++c) {
        FactorTransfer ft;
        ft.component = static_cast<int>(c);
        // B_g(Z_i, Z_i) restricted to this factor.
        Rat bg(0);
        std::vector<int> black = s.diagram.black_in_component(static_cast<int>(c));
        for (int a : black)
            for (int b : black) {
                long long pa = 0, pb = 0;
                for (size_t i = 0; i < s.diagram.black.size(); ++i) {
                    if (s.diagram.black[i] == a) pa = s.tuple[i];
                    if (s.diagram.black[i] == b) pb = s.tuple[i];
                }
                bg += Rat(pa) * sys.weight_form(a, b) * Rat(pb);
            }
        ft.bg_zz = bg;

        auto pair = onishchik_extension(component_painting(s.diagram, static_cast<int>(c)));
        if (!pair) {
            ft.onishchik = false;
            ft.note = "Z' = Z";
            out.push_back(std::move(ft));
            continue;
        }
        ft.onishchik = true;
        long long p = 0;
        for (size_t i = 0; i < s.diagram.black.size(); ++i)
            if (s.diagram.black[i] == black[0]) p = s.tuple[i];
        ft.lambda = onishchik_lambda(pair->row, p);
        ft.embedding_index = onishchik_embedding_index(pair->row, pair->ell);
        ft.ba_z_ec = ft.lambda * Rat(ft.embedding_index);
        ft.coefficient = ft.bg_zz / ft.ba_z_ec;
        ft.ba_z_zprime = ft.coefficient * ft.ba_z_ec;
        ft.note = "Z' = (B_g(Z,Z)/B_a(Z,E^c)) E^c on the " + pair->a_space + " side";
        out.push_back(std::move(ft));
    }
    return out;
}

Json MaxGroupReport::to_json() const {
    Json j{{"a_ss", a_ss_str}, {"center_dim", center_dim}, {"a_full", a_full_str}};
    if (a_side_flag) j["a_side_flag"] = a_side_flag->name();
    j["a_side_isotropy_B"] = a_side_isotropy;
    Json tr = Json::array();
    for (const auto& t : transfer) tr.push_back(t.to_json());
    j["transfer"] = tr;
    return j;
}

MaxGroupReport maximal_cr_group(const StandardCR& s) {
    MaxGroupReport r;
    HolomorphicGroup hg = maximal_holomorphic_group(s.diagram);
    r.a_ss = hg.a;
    r.a_ss_str = hg.a_str;
    r.center_dim = 1;
    r.a_full_str = hg.a_str + " x T^1";
    r.a_side_flag = hg.a_flag;
    // B = C^ss + (Z(C) n ker theta'): white subdiagram of the A-side flag plus
    // an (m-1)-torus.
    IsotropyDescription b;
    for (const auto& comp : subdiagram_components(*hg.a_flag.system, hg.a_flag.white_nodes()))
        b.semisimple.push_back(classify_subdiagram(*hg.a_flag.system, comp));
    std::sort(b.semisimple.begin(), b.semisimple.end());
    b.center_dim = static_cast<int>(hg.a_flag.black.size()) - 1;
    r.a_side_isotropy = b.str();
    r.transfer = transfer_contact_element(s);
    return r;
}

MaxGroupReport maximal_cr_group(const NonStandardCR& m) {
    MaxGroupReport r;
    r.a_ss = maximal_semisimple_nonstandard(m.entry);
    r.a_ss_str = maximal_semisimple_nonstandard_str(m.entry);
    r.center_dim = 0;
    r.a_full_str = r.a_ss_str;
    if (m.entry.row == 2) {
        // M = SO_8/SO_6; the A-side flag is SO_8/T^1.SO_6.
        r.a_side_flag = make_painting(build_root_system({{Family::D, 4}}), {0});
        r.a_side_isotropy = "SO_6";
    } else {
        r.a_side_flag = m.entry.flag_painting();
        r.a_side_isotropy = m.entry.l_str;
    }
    return r;
}

} // namespace cratlas
