#include "cratlas/standard_cr.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cratlas {

std::string StandardCR::name() const {
    std::ostringstream os;
    os << diagram.name() << " p=(";
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) os << ',';
        os << tuple[i];
    }
    os << ')';
    return os.str();
}

Json StandardCR::to_json() const {
    return Json{{"diagram", diagram.to_json()}, {"tuple", tuple}};
}

Json StandardWitness::to_json() const {
    Json p = Json::array();
    for (int v : perm) p.push_back(v + 1);
    return Json{{"node_map", p}, {"negated", negated}};
}

Weight theta_weight(const StandardCR& s) {
    std::vector<Rat> coords(s.diagram.system->rank(), Rat(0));
    for (size_t i = 0; i < s.diagram.black.size(); ++i) coords[s.diagram.black[i]] = Rat(s.tuple[i]);
    return make_weight(s.diagram.system, std::move(coords));
}

StandardCR make_standard(PaintedDiagram d, std::vector<long long> tuple) {
    if (tuple.size() != d.black.size())
        throw Error(Errc::bad_argument, "tuple length " + std::to_string(tuple.size()) +
                                            " does not match number of black nodes " +
                                            std::to_string(d.black.size()));
    for (long long p : tuple)
        if (p == 0) throw Error(Errc::zero_entry, "tuple entries must be nonzero");
    long long g = 0;
    for (long long p : tuple) g = std::gcd(g, std::llabs(p));
    if (g != 1)
        throw Error(Errc::non_primitive, "tuple entries have common divisor " + std::to_string(g));

    StandardCR s{std::move(d), std::move(tuple)};
    Weight theta = theta_weight(s);
    for (int idx : complementary_positive_roots(s.diagram)) {
        if (s.diagram.system->pairing(theta, idx) == Rat(0))
            throw Error(Errc::non_regular,
                        "theta vanishes on the coroot of a complementary positive root; the "
                        "contact element is not k-regular");
    }
    return s;
}

ContactData contact_data(const StandardCR& s) {
    IsotropyDescription l;
    for (const auto& comp : subdiagram_components(*s.diagram.system, s.diagram.white_nodes()))
        l.semisimple.push_back(classify_subdiagram(*s.diagram.system, comp));
    std::sort(l.semisimple.begin(), l.semisimple.end());
    l.center_dim = static_cast<int>(s.diagram.black.size()) - 1;
    return ContactData{theta_weight(s), std::move(l),
                       "Z = B^-1(theta), represented by theta over the black fundamental weights"};
}

LeviSignature levi_signature(const StandardCR& s) {
    LeviSignature sig;
    Weight theta = theta_weight(s);
    for (int idx : complementary_positive_roots(s.diagram)) {
        Rat v = s.diagram.system->pairing(theta, idx);
        if (v > Rat(0))
            ++sig.n_plus;
        else
            ++sig.n_minus;
    }
    return sig;
}

std::vector<long long> transport_tuple(const PaintedDiagram& d, const std::vector<long long>& tuple,
                                       const NodePerm& perm, const PaintedDiagram& target) {
    std::vector<long long> out(target.black.size(), 0);
    for (size_t i = 0; i < d.black.size(); ++i) {
        int image = perm[d.black[i]];
        auto it = std::lower_bound(target.black.begin(), target.black.end(), image);
        if (it == target.black.end() || *it != image)
            throw Error(Errc::internal, "isomorphism does not preserve black nodes");
        out[static_cast<size_t>(it - target.black.begin())] = tuple[i];
    }
    return out;
}

namespace {

// Entry order 1 < 2 < ... < -1 < -2 < ...
bool tuple_less(const std::vector<long long>& a, const std::vector<long long>& b) {
    auto key = [](long long v) { return std::make_pair(v < 0 ? 1 : 0, std::llabs(v)); };
    for (size_t i = 0; i < a.size(); ++i) {
        auto ka = key(a[i]), kb = key(b[i]);
        if (ka != kb) return ka < kb;
    }
    return false;
}

} // namespace

std::vector<long long> canonical_tuple(const PaintedDiagram& d, const std::vector<long long>& tuple,
                                       bool allow_conjugate_J) {
    std::vector<long long> best = tuple;
    for (const auto& perm : painted_isomorphisms(d, d)) {
        auto moved = transport_tuple(d, tuple, perm, d);
        if (tuple_less(moved, best)) best = moved;
        if (allow_conjugate_J) {
            auto neg = moved;
            for (auto& v : neg) v = -v;
            if (tuple_less(neg, best)) best = neg;
        }
    }
    return best;
}

std::optional<StandardWitness> equivalent_standard(const StandardCR& s1, const StandardCR& s2,
                                                   bool allow_conjugate_J) {
    for (const auto& perm : painted_isomorphisms(s1.diagram, s2.diagram)) {
        auto moved = transport_tuple(s1.diagram, s1.tuple, perm, s2.diagram);
        if (moved == s2.tuple) return StandardWitness{perm, false};
        if (allow_conjugate_J) {
            bool neg_match = true;
            for (size_t i = 0; i < moved.size(); ++i)
                if (moved[i] != -s2.tuple[i]) {
                    neg_match = false;
                    break;
                }
            if (neg_match) return StandardWitness{perm, true};
        }
    }
    return std::nullopt;
}

std::vector<StandardCR> enumerate_standard(const PaintedDiagram& d, long long bound,
                                           bool allow_conjugate_J) {
    if (bound < 1) throw Error(Errc::bad_argument, "tuple bound must be >= 1");
    const size_t m = d.black.size();

    // Entry values in canonical order.
    std::vector<long long> values;
    for (long long v = 1; v <= bound; ++v) values.push_back(v);
    for (long long v = 1; v <= bound; ++v) values.push_back(-v);

    auto complementary = complementary_positive_roots(d);

    std::set<std::vector<long long>> canonicals;
    std::vector<size_t> odo(m, 0);
    while (true) {
        std::vector<long long> tuple(m);
        for (size_t i = 0; i < m; ++i) tuple[i] = values[odo[i]];

        long long g = 0;
        for (long long p : tuple) g = std::gcd(g, std::llabs(p));
        if (g == 1) {
            std::vector<Rat> coords(d.system->rank(), Rat(0));
            for (size_t i = 0; i < m; ++i) coords[d.black[i]] = Rat(tuple[i]);
            Weight theta = make_weight(d.system, coords);
            bool regular = true;
            for (int idx : complementary)
                if (d.system->pairing(theta, idx) == Rat(0)) {
                    regular = false;
                    break;
                }
            if (regular) canonicals.insert(canonical_tuple(d, tuple, allow_conjugate_J));
        }

        size_t j = 0;
        while (j < m && ++odo[j] == values.size()) odo[j++] = 0;
        if (j == m) break;
    }

    std::vector<std::vector<long long>> sorted(canonicals.begin(), canonicals.end());
    std::sort(sorted.begin(), sorted.end(), tuple_less);
    std::vector<StandardCR> out;
    out.reserve(sorted.size());
    for (auto& t : sorted) out.push_back(StandardCR{d, std::move(t)});
    return out;
}

} // namespace cratlas
