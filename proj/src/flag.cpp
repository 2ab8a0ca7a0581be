#include "cratlas/flag.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cratlas {

bool PaintedDiagram::is_black(int node) const {
    return std::binary_search(black.begin(), black.end(), node);
}

std::vector<int> PaintedDiagram::white_nodes() const {
    std::vector<int> w;
    for (int i = 0; i < system->rank(); ++i)
        if (!is_black(i)) w.push_back(i);
    return w;
}

std::vector<int> PaintedDiagram::black_in_component(int comp) const {
    std::vector<int> b;
    for (int n : black)
        if (system->component_of_node(n) == comp) b.push_back(n);
    return b;
}

std::string PaintedDiagram::name() const {
    std::string s;
    for (size_t c = 0; c < system->components().size(); ++c) {
        if (c) s += 'x';
        s += system->components()[c].str();
        s += '[';
        auto b = black_in_component(static_cast<int>(c));
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(b[i] - system->component_first_node(static_cast<int>(c)) + 1);
        }
        s += ']';
    }
    return s;
}

Json PaintedDiagram::to_json() const {
    Json comps = Json::array();
    for (const auto& t : system->components())
        comps.push_back(Json{{"family", std::string(1, static_cast<char>(t.family))}, {"rank", t.rank}});
    Json blk = Json::array();
    for (int n : black) blk.push_back(n + 1);
    return Json{{"name", name()}, {"components", comps}, {"black", blk}};
}

PaintedDiagram make_painting(RootSystemPtr sys, std::vector<int> black) {
    std::sort(black.begin(), black.end());
    black.erase(std::unique(black.begin(), black.end()), black.end());
    for (int n : black)
        if (n < 0 || n >= sys->rank())
            throw Error(Errc::invalid_painting, "black node id out of range");
    std::vector<bool> has(sys->components().size(), false);
    for (int n : black) has[sys->component_of_node(n)] = true;
    for (size_t c = 0; c < has.size(); ++c)
        if (!has[c])
            throw Error(Errc::invalid_painting,
                        "component " + sys->components()[c].str() + " has no black node");
    return PaintedDiagram{std::move(sys), std::move(black)};
}

std::vector<std::vector<int>> subdiagram_components(const RootSystem& sys, const std::vector<int>& nodes) {
    std::vector<std::vector<int>> comps;
    std::set<int> pending(nodes.begin(), nodes.end());
    while (!pending.empty()) {
        std::vector<int> comp{*pending.begin()};
        pending.erase(pending.begin());
        for (size_t k = 0; k < comp.size(); ++k) {
            for (auto it = pending.begin(); it != pending.end();) {
                if (sys.cartan(comp[k], *it) != 0) {
                    comp.push_back(*it);
                    it = pending.erase(it);
                } else {
                    ++it;
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

SimpleLieType classify_subdiagram(const RootSystem& sys, const std::vector<int>& nodes) {
    const int n = static_cast<int>(nodes.size());
    if (n == 0) throw Error(Errc::internal, "empty subdiagram");
    // Low-rank coincidences are normalized: a single node is A1, a rank-2
    // double edge is B2.
    if (n == 1) return {Family::A, 1};

    int max_mult = 1;
    std::pair<int, int> multi_edge{-1, -1};
    std::vector<int> degree(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            long long m = sys.cartan(nodes[i], nodes[j]) * sys.cartan(nodes[j], nodes[i]);
            if (m > 0) {
                ++degree[i];
                ++degree[j];
                if (m > max_mult) {
                    max_mult = static_cast<int>(m);
                    multi_edge = {i, j};
                }
            }
        }

    if (max_mult == 3) return {Family::G, 2};
    if (max_mult == 2) {
        if (n == 2) return {Family::B, 2};
        auto [i, j] = multi_edge;
        int short_end = sys.node_d(nodes[i]) < sys.node_d(nodes[j]) ? i : j;
        int long_end = short_end == i ? j : i;
        if (degree[short_end] == 1 && degree[long_end] == 1)
            throw Error(Errc::internal, "disconnected double edge in subdiagram");
        if (degree[short_end] == 1) return {Family::B, n};
        if (degree[long_end] == 1) return {Family::C, n};
        return {Family::F, 4};
    }

    // Simply laced: chain or one branch node.
    int branch = -1;
    for (int i = 0; i < n; ++i)
        if (degree[i] >= 3) branch = i;
    if (branch < 0) return {Family::A, n};
    // Arm lengths from the branch node, sorted ascending.
    std::vector<int> arms;
    std::vector<bool> seen(n, false);
    seen[branch] = true;
    for (int i = 0; i < n; ++i) {
        if (i == branch || seen[i] || sys.cartan(nodes[branch], nodes[i]) == 0) continue;
        int len = 0;
        int cur = i;
        int prev = branch;
        while (true) {
            seen[cur] = true;
            ++len;
            int next = -1;
            for (int k = 0; k < n; ++k)
                if (k != prev && k != cur && !seen[k] && sys.cartan(nodes[cur], nodes[k]) != 0) next = k;
            if (next < 0) break;
            prev = cur;
            cur = next;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) return {Family::D, n};
    if (arms == std::vector<int>{1, 2, 2}) return {Family::E, 6};
    if (arms == std::vector<int>{1, 2, 3}) return {Family::E, 7};
    if (arms == std::vector<int>{1, 2, 4}) return {Family::E, 8};
    throw Error(Errc::internal, "unrecognized subdiagram shape");
}

std::string IsotropyDescription::str() const {
    std::ostringstream os;
    bool first = true;
    if (center_dim > 0) {
        os << "T^" << center_dim;
        first = false;
    }
    for (const auto& t : semisimple) {
        if (!first) os << ".";
        os << t.str();
        first = false;
    }
    if (first) os << "{e}";
    return os.str();
}

Json IsotropyDescription::to_json() const {
    Json ss = Json::array();
    for (const auto& t : semisimple)
        ss.push_back(Json{{"family", std::string(1, static_cast<char>(t.family))}, {"rank", t.rank}});
    return Json{{"semisimple", ss}, {"center_dim", center_dim}};
}

IsotropyDescription isotropy(const PaintedDiagram& d) {
    IsotropyDescription out;
    out.center_dim = static_cast<int>(d.black.size());
    for (const auto& comp : subdiagram_components(*d.system, d.white_nodes()))
        out.semisimple.push_back(classify_subdiagram(*d.system, comp));
    std::sort(out.semisimple.begin(), out.semisimple.end());
    return out;
}

std::vector<int> complementary_positive_roots(const PaintedDiagram& d) {
    std::vector<int> out;
    for (int i = 0; i < d.system->num_positive_roots(); ++i) {
        const auto& r = d.system->positive_root(i);
        for (int b : d.black)
            if (r[b] != 0) {
                out.push_back(i);
                break;
            }
    }
    return out;
}

std::vector<PaintedDiagram> enumerate_paintings(RootSystemPtr sys, bool orbit_representatives) {
    const int r = sys->rank();
    std::vector<NodePerm> autos;
    if (orbit_representatives) autos = sys->diagram_automorphisms();

    std::vector<PaintedDiagram> out;
    for (unsigned long long mask = 1; mask < (1ull << r); ++mask) {
        std::vector<int> black;
        for (int i = 0; i < r; ++i)
            if (mask & (1ull << i)) black.push_back(i);
        std::vector<bool> has(sys->components().size(), false);
        for (int n : black) has[sys->component_of_node(n)] = true;
        if (!std::all_of(has.begin(), has.end(), [](bool b) { return b; })) continue;
        if (orbit_representatives) {
            bool minimal = true;
            for (const auto& perm : autos) {
                std::vector<int> image;
                for (int n : black) image.push_back(perm[n]);
                std::sort(image.begin(), image.end());
                if (image < black) {
                    minimal = false;
                    break;
                }
            }
            if (!minimal) continue;
        }
        out.push_back(PaintedDiagram{sys, std::move(black)});
    }
    return out;
}

std::vector<NodePerm> painted_isomorphisms(const PaintedDiagram& d1, const PaintedDiagram& d2) {
    std::vector<NodePerm> out;
    for (const auto& perm : d1.system->isomorphisms_to(*d2.system)) {
        std::vector<int> image;
        for (int n : d1.black) image.push_back(perm[n]);
        std::sort(image.begin(), image.end());
        if (image == d2.black) out.push_back(perm);
    }
    return out;
}

} // namespace cratlas
