#include "cratlas/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cratlas {

const char* errc_name(Errc c) {
    switch (c) {
    case Errc::ok: return "Ok";
    case Errc::invalid_rank: return "InvalidRank";
    case Errc::mismatched_system: return "MismatchedSystem";
    case Errc::invalid_painting: return "InvalidPainting";
    case Errc::zero_entry: return "ZeroEntry";
    case Errc::non_primitive: return "NonPrimitive";
    case Errc::non_regular: return "NonRegular";
    case Errc::unparseable_isotropy: return "UnparseableIsotropy";
    case Errc::invalid_modulus: return "InvalidModulus";
    case Errc::unsupported_rank: return "UnsupportedRank";
    case Errc::invalid_span: return "InvalidSpan";
    case Errc::degenerate_form: return "DegenerateForm";
    case Errc::unsupported_instance: return "UnsupportedInstance";
    case Errc::bad_argument: return "BadArgument";
    case Errc::parse_error: return "ParseError";
    case Errc::io_error: return "IoError";
    case Errc::internal: return "InternalError";
    }
    return "UnknownError";
}

Rat rat_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw Error(Errc::parse_error, "rational must be a {num, den} object");
    long long num = j.at("num").get<long long>();
    long long den = j.at("den").get<long long>();
    if (den == 0) throw Error(Errc::parse_error, "rational with zero denominator");
    return Rat(num, den);
}

Rat parse_rat(const std::string& s) {
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw Error(Errc::parse_error, "zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(Errc::parse_error, "cannot parse rational '" + s + "'");
    }
}

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r.numerator();
    if (r.denominator() != 1) os << '/' << r.denominator();
    return os.str();
}

Family family_from_char(char c) {
    switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    }
    throw Error(Errc::parse_error, std::string("unknown family letter '") + c + "'");
}

std::string SimpleLieType::str() const {
    return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

void validate_type(const SimpleLieType& t) {
    const int n = t.rank;
    bool ok = false;
    switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n == 6 || n == 7 || n == 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
    }
    if (!ok)
        throw Error(Errc::invalid_rank, "rank " + std::to_string(n) + " out of bounds for family " +
                                            std::string(1, static_cast<char>(t.family)));
}

namespace {

// Local Bourbaki edges of one component, as (i, j) with 0-based local ids.
std::vector<std::pair<int, int>> component_edges(const SimpleLieType& t) {
    std::vector<std::pair<int, int>> e;
    const int n = t.rank;
    switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
        for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        break;
    case Family::D:
        for (int i = 0; i + 1 < n - 1; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(n - 3, n - 1);
        break;
    case Family::E:
        // chain 1-3-4-5-6(-7-8), branch 2-4
        e.emplace_back(0, 2);
        for (int i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(1, 3);
        break;
    }
    return e;
}

Rat node_length_half(const SimpleLieType& t, int local) {
    // d_i = |alpha_i|^2/2, long roots at squared length 2.
    switch (t.family) {
    case Family::A:
    case Family::D:
    case Family::E: return Rat(1);
    case Family::B: return local == t.rank - 1 ? Rat(1, 2) : Rat(1);
    case Family::C: return local == t.rank - 1 ? Rat(1) : Rat(1, 2);
    case Family::F: return local >= 2 ? Rat(1, 2) : Rat(1);
    case Family::G: return local == 0 ? Rat(1, 3) : Rat(1);
    }
    return Rat(1);
}

} // namespace

std::vector<std::vector<Rat>> rational_inverse(std::vector<std::vector<Rat>> m) {
    const size_t n = m.size();
    std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == Rat(0)) ++pivot;
        if (pivot == n) throw Error(Errc::internal, "singular matrix");
        std::swap(m[pivot], m[col]);
        std::swap(inv[pivot], inv[col]);
        Rat p = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == Rat(0)) continue;
            Rat f = m[r][col];
            for (size_t j = 0; j < n; ++j) {
                m[r][j] -= f * m[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

Weight::Weight(RootSystemPtr sys, std::vector<Rat> coords) : sys_(std::move(sys)), coords_(std::move(coords)) {
    if (static_cast<int>(coords_.size()) != sys_->rank())
        throw Error(Errc::bad_argument, "weight coordinate count does not match system rank");
}

Json Weight::to_json() const {
    Json coords = Json::array();
    for (const auto& c : coords_) coords.push_back(rat_to_json(c));
    return Json{{"coords", coords}};
}

RootSystemPtr RootSystem::build(std::vector<SimpleLieType> types) {
    if (types.empty()) throw Error(Errc::bad_argument, "empty type list");
    for (const auto& t : types) validate_type(t);

    auto sys = std::shared_ptr<RootSystem>(new RootSystem());
    sys->components_ = std::move(types);
    for (size_t c = 0; c < sys->components_.size(); ++c) {
        sys->comp_first_.push_back(sys->rank_);
        for (int i = 0; i < sys->components_[c].rank; ++i) {
            sys->comp_of_node_.push_back(static_cast<int>(c));
            sys->node_d_.push_back(node_length_half(sys->components_[c], i));
        }
        sys->rank_ += sys->components_[c].rank;
    }

    // Symmetric form S_ij = (alpha_i, alpha_j), then C_ij = S_ij / d_i.
    std::vector<std::vector<Rat>> form(sys->rank_, std::vector<Rat>(sys->rank_, Rat(0)));
    for (int i = 0; i < sys->rank_; ++i) form[i][i] = Rat(2) * sys->node_d_[i];
    for (size_t c = 0; c < sys->components_.size(); ++c) {
        int base = sys->comp_first_[c];
        for (auto [a, b] : component_edges(sys->components_[c])) {
            Rat v = -std::max(sys->node_d_[base + a], sys->node_d_[base + b]);
            form[base + a][base + b] = v;
            form[base + b][base + a] = v;
        }
    }
    sys->cartan_.assign(sys->rank_, std::vector<long long>(sys->rank_, 0));
    for (int i = 0; i < sys->rank_; ++i)
        for (int j = 0; j < sys->rank_; ++j) {
            Rat q = form[i][j] / sys->node_d_[i];
            if (q.denominator() != 1) throw Error(Errc::internal, "non-integral Cartan entry");
            sys->cartan_[i][j] = q.numerator();
        }

    for (size_t c = 0; c < sys->components_.size(); ++c) sys->build_component_roots(static_cast<int>(c));
    sys->build_weight_form();
    return sys;
}

void RootSystem::build_component_roots(int comp) {
    const int base = comp_first_[comp];
    const int n = components_[comp].rank;

    // Root-string closure from the simple roots: for a positive root a and a
    // simple root i, q = p - <a, alpha_i^vee> further steps exist upward.
    std::set<std::vector<long long>> seen;
    std::vector<std::vector<long long>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<long long> e(n, 0);
        e[i] = 1;
        seen.insert(e);
        frontier.push_back(e);
    }
    auto is_root = [&seen](const std::vector<long long>& a) { return seen.count(a) > 0; };
    std::vector<std::vector<long long>> all(frontier);
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& a : frontier) {
            for (int i = 0; i < n; ++i) {
                long long pairing = 0;
                for (int j = 0; j < n; ++j) pairing += cartan_[base + i][base + j] * a[j];
                long long p = 0;
                std::vector<long long> down = a;
                while (true) {
                    down[i] -= 1;
                    bool nonneg = std::all_of(down.begin(), down.end(), [](long long x) { return x >= 0; });
                    if (nonneg && is_root(down)) ++p;
                    else break;
                }
                if (p - pairing > 0) {
                    std::vector<long long> up = a;
                    up[i] += 1;
                    if (seen.insert(up).second) next.push_back(up);
                }
            }
        }
        for (const auto& r : next) all.push_back(r);
        frontier = std::move(next);
    }

    // Deterministic order: height, then coefficient vector.
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
        long long hx = std::accumulate(x.begin(), x.end(), 0LL);
        long long hy = std::accumulate(y.begin(), y.end(), 0LL);
        if (hx != hy) return hx < hy;
        return x < y;
    });

    for (const auto& local : all) {
        std::vector<long long> global(rank_, 0);
        for (int i = 0; i < n; ++i) global[base + i] = local[i];
        Rat len2(0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                len2 += Rat(local[i] * local[j]) * node_d_[base + i] * cartan_[base + i][base + j];
        Rat d_alpha = len2 / 2;
        std::vector<long long> coroot(rank_, 0);
        for (int i = 0; i < n; ++i) {
            Rat ci = Rat(local[i]) * node_d_[base + i] / d_alpha;
            if (ci.denominator() != 1) throw Error(Errc::internal, "non-integral coroot coefficient");
            coroot[base + i] = ci.numerator();
        }
        pos_roots_.push_back(std::move(global));
        pos_coroots_.push_back(std::move(coroot));
        root_comp_.push_back(comp);
        root_len2_.push_back(len2);
    }
}

void RootSystem::build_weight_form() {
    // (pi_i, pi_j) = d_j (C^{-1})_{ji}, block diagonal over components.
    weight_form_.assign(rank_, std::vector<Rat>(rank_, Rat(0)));
    for (size_t c = 0; c < components_.size(); ++c) {
        int base = comp_first_[c];
        int n = components_[c].rank;
        std::vector<std::vector<Rat>> cart(n, std::vector<Rat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) cart[i][j] = Rat(cartan_[base + i][base + j]);
        auto inv = rational_inverse(cart);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) weight_form_[base + i][base + j] = node_d_[base + j] * inv[j][i];
    }
}

bool RootSystem::root_is_long(int idx) const {
    Rat longest(0);
    int comp = root_comp_[idx];
    for (int i = 0; i < num_positive_roots(); ++i)
        if (root_comp_[i] == comp) longest = std::max(longest, root_len2_[i]);
    return root_len2_[idx] == longest;
}

int RootSystem::find_positive_root(const std::vector<long long>& coeffs) const {
    for (int i = 0; i < num_positive_roots(); ++i)
        if (pos_roots_[i] == coeffs) return i;
    return -1;
}

Weight make_weight(RootSystemPtr sys, std::vector<Rat> coords) {
    return Weight(std::move(sys), std::move(coords));
}

Rat RootSystem::pairing(const Weight& w, int root_idx) const {
    if (!w.system()->same_structure(*this))
        throw Error(Errc::mismatched_system, "weight belongs to a different root system");
    if (root_idx < 0 || root_idx >= num_positive_roots())
        throw Error(Errc::bad_argument, "root index out of range");
    return pairing_coroot(w, pos_coroots_[root_idx]);
}

Rat RootSystem::pairing_coroot(const Weight& w, const std::vector<long long>& coroot_coeffs) const {
    if (!w.system()->same_structure(*this))
        throw Error(Errc::mismatched_system, "weight belongs to a different root system");
    Rat v(0);
    for (int i = 0; i < rank_; ++i) v += w.coords()[i] * coroot_coeffs[i];
    return v;
}

Rat RootSystem::weight_product(const Weight& a, const Weight& b) const {
    if (!a.system()->same_structure(*this) || !b.system()->same_structure(*this))
        throw Error(Errc::mismatched_system, "weight belongs to a different root system");
    Rat v(0);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) v += a.coords()[i] * weight_form_[i][j] * b.coords()[j];
    return v;
}

namespace {

// All bijections nodes(a) -> nodes(b) with Cb[f(i)][f(j)] == Ca[i][j],
// found by incremental backtracking.
void match_nodes(const RootSystem& a, const RootSystem& b, const std::vector<int>& nodes_a,
                 const std::vector<int>& nodes_b, std::vector<int>& image, std::vector<bool>& used,
                 size_t depth, std::vector<NodePerm>& out, const NodePerm& full_image_base) {
    if (depth == nodes_a.size()) {
        NodePerm perm = full_image_base;
        for (size_t i = 0; i < nodes_a.size(); ++i) perm[nodes_a[i]] = image[i];
        out.push_back(std::move(perm));
        return;
    }
    int na = nodes_a[depth];
    for (size_t cand = 0; cand < nodes_b.size(); ++cand) {
        if (used[cand]) continue;
        int nb = nodes_b[cand];
        bool ok = true;
        for (size_t prev = 0; prev < depth && ok; ++prev) {
            int pa = nodes_a[prev], pb = image[prev];
            ok = a.cartan(na, pa) == b.cartan(nb, pb) && a.cartan(pa, na) == b.cartan(pb, nb);
        }
        if (a.cartan(na, na) != b.cartan(nb, nb)) ok = false;
        if (!ok) continue;
        image.push_back(nb);
        used[cand] = true;
        match_nodes(a, b, nodes_a, nodes_b, image, used, depth + 1, out, full_image_base);
        used[cand] = false;
        image.pop_back();
    }
}

} // namespace

std::vector<NodePerm> RootSystem::isomorphisms_to(const RootSystem& other) const {
    std::vector<NodePerm> result;
    // Component multisets must agree.
    auto mine = components_;
    auto theirs = other.components_;
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    if (mine != theirs || rank_ != other.rank_) return result;

    const size_t nc = components_.size();
    // Enumerate type-preserving component assignments, then per-component
    // node bijections (handles low-rank label coincidences not at all: B2 and
    // C2 stay distinct labels by design).
    std::vector<int> assign(nc, -1);
    std::vector<bool> taken(nc, false);
    std::vector<NodePerm> partial;

    std::function<void(size_t)> rec = [&](size_t ci) {
        if (ci == nc) {
            // Within the chosen assignment, enumerate node bijections factorwise.
            std::vector<std::vector<NodePerm>> factor_maps(nc);
            for (size_t i = 0; i < nc; ++i) {
                std::vector<int> na, nb;
                for (int k = 0; k < components_[i].rank; ++k) na.push_back(comp_first_[i] + k);
                for (int k = 0; k < other.components_[assign[i]].rank; ++k)
                    nb.push_back(other.comp_first_[assign[i]] + k);
                std::vector<int> image;
                std::vector<bool> used(nb.size(), false);
                NodePerm base(rank_, -1);
                match_nodes(*this, other, na, nb, image, used, 0, factor_maps[i], base);
                if (factor_maps[i].empty()) return;
            }
            // Cartesian product of factor maps.
            std::vector<size_t> pick(nc, 0);
            while (true) {
                NodePerm perm(rank_, -1);
                for (size_t i = 0; i < nc; ++i)
                    for (int k = 0; k < components_[i].rank; ++k) {
                        int node = comp_first_[i] + k;
                        perm[node] = factor_maps[i][pick[i]][node];
                    }
                result.push_back(std::move(perm));
                size_t j = 0;
                while (j < nc && ++pick[j] == factor_maps[j].size()) pick[j++] = 0;
                if (j == nc) break;
            }
            return;
        }
        for (size_t cj = 0; cj < nc; ++cj) {
            if (taken[cj] || components_[ci] != other.components_[cj]) continue;
            assign[ci] = static_cast<int>(cj);
            taken[cj] = true;
            rec(ci + 1);
            taken[cj] = false;
        }
    };
    rec(0);

    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::vector<NodePerm> RootSystem::diagram_automorphisms() const { return isomorphisms_to(*this); }

bool RootSystem::same_structure(const RootSystem& other) const {
    return components_ == other.components_;
}

std::string RootSystem::name() const {
    std::string s;
    for (size_t c = 0; c < components_.size(); ++c) {
        if (c) s += 'x';
        s += components_[c].str();
    }
    return s;
}

Json RootSystem::to_json() const {
    Json comps = Json::array();
    for (const auto& t : components_)
        comps.push_back(Json{{"family", std::string(1, static_cast<char>(t.family))}, {"rank", t.rank}});
    Json nodes = Json::array();
    for (int i = 0; i < rank_; ++i)
        nodes.push_back(Json{{"node", i + 1},
                             {"component", comp_of_node_[i]},
                             {"d", rat_to_json(node_d_[i])}});
    Json cart = Json::array();
    for (int i = 0; i < rank_; ++i) {
        Json row = Json::array();
        for (int j = 0; j < rank_; ++j) row.push_back(cartan_[i][j]);
        cart.push_back(row);
    }
    Json roots = Json::array();
    for (int i = 0; i < num_positive_roots(); ++i) {
        Json r{{"root", pos_roots_[i]},
               {"coroot", pos_coroots_[i]},
               {"length2", rat_to_json(root_len2_[i])},
               {"long", root_is_long(i)}};
        roots.push_back(r);
    }
    return Json{{"name", name()},
                {"components", comps},
                {"simple_roots", nodes},
                {"cartan_matrix", cart},
                {"positive_roots", roots}};
}

RootSystemPtr build_root_system(std::vector<SimpleLieType> types) { return RootSystem::build(std::move(types)); }

} // namespace cratlas
