#include "cratlas/nonstandard_cr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cratlas {

std::string GroupFactor::str() const {
    switch (kind) {
    case FactorKind::SU: return "SU_" + std::to_string(n);
    case FactorKind::SO: return "SO_" + std::to_string(n);
    case FactorKind::Sp: return "Sp_" + std::to_string(n);
    case FactorKind::Spin: return "Spin_" + std::to_string(n);
    case FactorKind::G2: return "G_2";
    case FactorKind::F4: return "F_4";
    case FactorKind::E6: return "E_6";
    case FactorKind::E7: return "E_7";
    case FactorKind::E8: return "E_8";
    }
    return "?";
}

long long GroupFactor::dim() const {
    switch (kind) {
    case FactorKind::SU: return static_cast<long long>(n) * n - 1;
    case FactorKind::SO:
    case FactorKind::Spin: return static_cast<long long>(n) * (n - 1) / 2;
    case FactorKind::Sp: return static_cast<long long>(n) * (2 * n + 1);
    case FactorKind::G2: return 14;
    case FactorKind::F4: return 52;
    case FactorKind::E6: return 78;
    case FactorKind::E7: return 133;
    case FactorKind::E8: return 248;
    }
    return 0;
}

int GroupFactor::rank() const {
    switch (kind) {
    case FactorKind::SU: return n - 1;
    case FactorKind::SO:
    case FactorKind::Spin: return n / 2;
    case FactorKind::Sp: return n;
    case FactorKind::G2: return 2;
    case FactorKind::F4: return 4;
    case FactorKind::E6: return 6;
    case FactorKind::E7: return 7;
    case FactorKind::E8: return 8;
    }
    return 0;
}

void SymbolicGroup::add(FactorKind kind, int n) {
    switch (kind) {
    case FactorKind::SU:
        if (n >= 2) factors.push_back({kind, n});
        break;
    case FactorKind::SO:
    case FactorKind::Spin:
        if (n == 2)
            torus_rank += 1;
        else if (n >= 3)
            factors.push_back({kind, n});
        break;
    case FactorKind::Sp:
        if (n >= 1) factors.push_back({kind, n});
        break;
    default:
        factors.push_back({kind, 0});
        break;
    }
}

void SymbolicGroup::normalize() { std::sort(factors.begin(), factors.end()); }

long long SymbolicGroup::dim() const {
    long long d = torus_rank;
    for (const auto& f : factors) d += f.dim();
    return d;
}

int SymbolicGroup::semisimple_rank() const {
    int r = 0;
    for (const auto& f : factors) r += f.rank();
    return r;
}

std::string SymbolicGroup::str() const {
    if (trivial()) return "{e}";
    std::ostringstream os;
    bool first = true;
    if (torus_rank > 0) {
        os << "T^" << torus_rank;
        first = false;
    }
    for (const auto& f : factors) {
        if (!first) os << ".";
        os << f.str();
        first = false;
    }
    return os.str();
}

namespace {

struct GroupParser {
    const std::string& s;
    size_t pos = 0;

    explicit GroupParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size()) {
            unsigned char c = s[pos];
            if (std::isspace(c)) {
                ++pos;
            } else if (c == 0xC2 && pos + 1 < s.size() && static_cast<unsigned char>(s[pos + 1]) == 0xB7) {
                break; // middle dot handled as separator
            } else {
                break;
            }
        }
    }

    bool eat_separator() {
        skip_ws();
        if (pos >= s.size()) return false;
        unsigned char c = s[pos];
        if (c == '.' || c == 'x' || c == '*') {
            ++pos;
            return true;
        }
        if (c == 0xC2 && pos + 1 < s.size() && static_cast<unsigned char>(s[pos + 1]) == 0xB7) {
            pos += 2; // U+00B7 middle dot
            return true;
        }
        if (c == 0xC3 && pos + 1 < s.size() && static_cast<unsigned char>(s[pos + 1]) == 0x97) {
            pos += 2; // U+00D7 multiplication sign
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& why) {
        throw Error(Errc::unparseable_isotropy, "cannot parse group expression '" + s + "': " + why);
    }

    long long read_number() {
        skip_ws();
        if (pos < s.size() && s[pos] == '_') ++pos;
        if (pos < s.size() && s[pos] == '^') ++pos;
        if (pos < s.size() && s[pos] == '{') {
            size_t close = s.find('}', pos);
            if (close == std::string::npos) fail("unbalanced brace");
            std::string inner = s.substr(pos + 1, close - pos - 1);
            pos = close + 1;
            try {
                return std::stoll(inner);
            } catch (...) {
                fail("bad subscript '" + inner + "'");
            }
        }
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return std::stoll(s.substr(start, pos - start));
    }

    void skip_primes() {
        while (pos < s.size() &&
               (s[pos] == '\'' ||
                (static_cast<unsigned char>(s[pos]) == 0xE2 && pos + 2 < s.size()))) {
            if (s[pos] == '\'') {
                ++pos;
            } else if (s.compare(pos, 3, "\xE2\x80\xB2") == 0) {
                pos += 3; // U+2032 prime
            } else {
                break;
            }
        }
    }

    void parse_factor(SymbolicGroup& g) {
        skip_ws();
        if (pos >= s.size()) fail("expected a factor");
        if (s[pos] == '(') {
            ++pos;
            parse_expr(g);
            skip_ws();
            if (pos >= s.size() || s[pos] != ')') fail("unbalanced parenthesis");
            ++pos;
            skip_primes();
            return;
        }
        if (s[pos] == '{') {
            if (s.compare(pos, 3, "{e}") == 0) {
                pos += 3;
                return;
            }
            fail("unexpected '{'");
        }
        if (s[pos] == '1') {
            ++pos;
            return;
        }
        if (s[pos] == 'e' && (pos + 1 == s.size() || !std::isalnum(static_cast<unsigned char>(s[pos + 1])))) {
            ++pos;
            return;
        }
        // Alphabetic token.
        size_t start = pos;
        while (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) ++pos;
        std::string word = s.substr(start, pos - start);
        if (word == "SU") {
            g.add(FactorKind::SU, static_cast<int>(read_number()));
        } else if (word == "SO") {
            g.add(FactorKind::SO, static_cast<int>(read_number()));
        } else if (word == "Sp") {
            g.add(FactorKind::Sp, static_cast<int>(read_number()));
        } else if (word == "Spin") {
            g.add(FactorKind::Spin, static_cast<int>(read_number()));
        } else if (word == "U") {
            long long n = read_number();
            g.torus_rank += 1;
            if (n >= 2) g.add(FactorKind::SU, static_cast<int>(n));
            else if (n == 0) g.torus_rank -= 1; // U_0 is trivial
        } else if (word == "T") {
            g.torus_rank += static_cast<int>(read_number());
        } else if (word == "G") {
            if (read_number() != 2) fail("only G2 exists");
            g.add(FactorKind::G2, 0);
        } else if (word == "F") {
            if (read_number() != 4) fail("only F4 exists");
            g.add(FactorKind::F4, 0);
        } else if (word == "E") {
            long long n = read_number();
            if (n == 6) g.add(FactorKind::E6, 0);
            else if (n == 7) g.add(FactorKind::E7, 0);
            else if (n == 8) g.add(FactorKind::E8, 0);
            else fail("only E6, E7, E8 exist");
        } else {
            fail("unknown token '" + word + "'");
        }
        skip_primes();
    }

    void parse_expr(SymbolicGroup& g) {
        parse_factor(g);
        while (eat_separator()) parse_factor(g);
    }
};

} // namespace

SymbolicGroup parse_group(const std::string& text) {
    SymbolicGroup g;
    GroupParser p(text);
    p.skip_ws();
    if (p.pos == text.size()) throw Error(Errc::unparseable_isotropy, "empty group expression");
    p.parse_expr(g);
    p.skip_ws();
    if (p.pos != text.size())
        throw Error(Errc::unparseable_isotropy,
                    "trailing input in group expression '" + text + "' at offset " + std::to_string(p.pos));
    g.normalize();
    return g;
}

namespace {

SymbolicGroup make_group(std::initializer_list<GroupFactor> factors, int torus = 0) {
    SymbolicGroup g;
    g.torus_rank = torus;
    for (const auto& f : factors) g.add(f.kind, f.n);
    g.normalize();
    return g;
}

std::string subscript(const std::string& head, long long n) { return head + "_" + std::to_string(n); }

} // namespace

const std::vector<NonstandardRowTemplate>& nonstandard_catalog() {
    static const std::vector<NonstandardRowTemplate> rows = {
        {1, "SU_2 x SU_2'", "T^1", "T^1 x T^1'", "", {}},
        {2, "Spin_7", "SU_3", "T^1.SU_3", "", {}},
        {3, "F_4", "Spin_7", "T^1.SO_7", "", {}},
        {4, "SU_2", "{e}", "T^1", "", {}},
        {5, "SO_{2n+1}", "SO_{2n-1}", "T^1.SO_{2n-1}", "n>1", {{"n", 2}}},
        {6, "SO_{2n}", "SO_{2n-2}", "T^1.SO_{2n-2}", "n>2", {{"n", 3}}},
        {7, "Sp_n", "Sp_1.Sp_{n-2}", "T^1.Sp_1.Sp_{n-2}", "n>2", {{"n", 3}}},
        {8, "SU_n", "T^1.SU_{n-2}", "T^1.U_{n-2}", "n>2", {{"n", 3}}},
        {9, "SU_p x SU_q'", "T^1.U_{p-2}.U_{q-2}'", "(T^1.U_{p-2}).(T^1'.U_{q-2}')", "p+q>4",
         {{"p", 2}, {"q", 3}}},
        {10, "SU_n", "T^1.(SU_2 x SU_2).SU_{n-4}", "T^1.(SU_2 x SU_2).U_{n-4}", "n>4", {{"n", 5}}},
        {11, "SO_10", "T^1.SO_6", "T^2.SO_6", "", {}},
        {12, "E_6", "T^1.SO_8", "T^2.SO_8", "", {}},
    };
    return rows;
}

NonstandardRow instantiate_row(int row, const std::map<std::string, long long>& params) {
    auto need = [&](const std::string& key) {
        auto it = params.find(key);
        if (it == params.end())
            throw Error(Errc::bad_argument, "row " + std::to_string(row) + " needs parameter " + key);
        return it->second;
    };
    NonstandardRow e;
    e.row = row;
    switch (row) {
    case 1:
        e.g_str = "SU_2 x SU_2";
        e.l_str = "T^1";
        e.k_str = "T^1 x T^1";
        e.G = make_group({{FactorKind::SU, 2}, {FactorKind::SU, 2}});
        e.L = make_group({}, 1);
        e.K = make_group({}, 2);
        break;
    case 2:
        e.g_str = "Spin_7";
        e.l_str = "SU_3";
        e.k_str = "T^1.SU_3";
        e.G = make_group({{FactorKind::Spin, 7}});
        e.L = make_group({{FactorKind::SU, 3}});
        e.K = make_group({{FactorKind::SU, 3}}, 1);
        break;
    case 3:
        e.g_str = "F_4";
        e.l_str = "Spin_7";
        e.k_str = "T^1.SO_7";
        e.G = make_group({{FactorKind::F4, 0}});
        e.L = make_group({{FactorKind::Spin, 7}});
        e.K = make_group({{FactorKind::SO, 7}}, 1);
        break;
    case 4:
        e.g_str = "SU_2";
        e.l_str = "{e}";
        e.k_str = "T^1";
        e.G = make_group({{FactorKind::SU, 2}});
        e.L = make_group({});
        e.K = make_group({}, 1);
        break;
    case 5: {
        long long n = need("n");
        if (n <= 1) throw Error(Errc::bad_argument, "row 5 requires n > 1");
        e.params = {{"n", n}};
        e.g_str = subscript("SO", 2 * n + 1);
        e.l_str = subscript("SO", 2 * n - 1);
        e.k_str = "T^1." + subscript("SO", 2 * n - 1);
        e.G = make_group({{FactorKind::SO, static_cast<int>(2 * n + 1)}});
        e.L = make_group({{FactorKind::SO, static_cast<int>(2 * n - 1)}});
        e.K = make_group({{FactorKind::SO, static_cast<int>(2 * n - 1)}}, 1);
        break;
    }
    case 6: {
        long long n = need("n");
        if (n <= 2) throw Error(Errc::bad_argument, "row 6 requires n > 2");
        e.params = {{"n", n}};
        e.g_str = subscript("SO", 2 * n);
        e.l_str = subscript("SO", 2 * n - 2);
        e.k_str = "T^1." + subscript("SO", 2 * n - 2);
        e.G = make_group({{FactorKind::SO, static_cast<int>(2 * n)}});
        e.L = make_group({{FactorKind::SO, static_cast<int>(2 * n - 2)}});
        e.K = make_group({{FactorKind::SO, static_cast<int>(2 * n - 2)}}, 1);
        break;
    }
    case 7: {
        long long n = need("n");
        if (n <= 2) throw Error(Errc::bad_argument, "row 7 requires n > 2");
        e.params = {{"n", n}};
        e.g_str = subscript("Sp", n);
        e.l_str = "Sp_1." + subscript("Sp", n - 2);
        e.k_str = "T^1.Sp_1." + subscript("Sp", n - 2);
        e.G = make_group({{FactorKind::Sp, static_cast<int>(n)}});
        e.L = make_group({{FactorKind::Sp, 1}, {FactorKind::Sp, static_cast<int>(n - 2)}});
        e.K = make_group({{FactorKind::Sp, 1}, {FactorKind::Sp, static_cast<int>(n - 2)}}, 1);
        break;
    }
    case 8: {
        long long n = need("n");
        if (n <= 2) throw Error(Errc::bad_argument, "row 8 requires n > 2");
        e.params = {{"n", n}};
        e.g_str = subscript("SU", n);
        e.l_str = "T^1." + subscript("SU", n - 2);
        e.k_str = "T^1." + subscript("U", n - 2);
        e.G = make_group({{FactorKind::SU, static_cast<int>(n)}});
        e.L = make_group({{FactorKind::SU, static_cast<int>(n - 2)}}, 1);
        SymbolicGroup k = make_group({}, 1);
        k.torus_rank += 1; // U_{n-2} center
        if (n - 2 >= 2) k.add(FactorKind::SU, static_cast<int>(n - 2));
        if (n - 2 == 0) k.torus_rank -= 1;
        k.normalize();
        e.K = k;
        break;
    }
    case 9: {
        long long p = need("p"), q = need("q");
        if (p + q <= 4 || p < 2 || q < 2)
            throw Error(Errc::bad_argument, "row 9 requires p, q >= 2 and p + q > 4");
        e.params = {{"p", p}, {"q", q}};
        e.g_str = subscript("SU", p) + " x " + subscript("SU", q);
        e.l_str = "T^1." + subscript("U", p - 2) + "." + subscript("U", q - 2);
        e.k_str = "(T^1." + subscript("U", p - 2) + ").(T^1." + subscript("U", q - 2) + ")";
        e.G = make_group({{FactorKind::SU, static_cast<int>(p)}, {FactorKind::SU, static_cast<int>(q)}});
        SymbolicGroup l = make_group({}, 1);
        for (long long v : {p, q}) {
            if (v - 2 >= 1) l.torus_rank += 1;
            if (v - 2 >= 2) l.add(FactorKind::SU, static_cast<int>(v - 2));
        }
        l.normalize();
        e.L = l;
        SymbolicGroup k = make_group({}, 2);
        for (long long v : {p, q}) {
            if (v - 2 >= 1) k.torus_rank += 1;
            if (v - 2 >= 2) k.add(FactorKind::SU, static_cast<int>(v - 2));
        }
        k.normalize();
        e.K = k;
        break;
    }
    case 10: {
        long long n = need("n");
        if (n <= 4) throw Error(Errc::bad_argument, "row 10 requires n > 4");
        e.params = {{"n", n}};
        e.g_str = subscript("SU", n);
        e.l_str = "T^1.(SU_2 x SU_2)." + subscript("SU", n - 4);
        e.k_str = "T^1.(SU_2 x SU_2)." + subscript("U", n - 4);
        e.G = make_group({{FactorKind::SU, static_cast<int>(n)}});
        SymbolicGroup l = make_group({{FactorKind::SU, 2}, {FactorKind::SU, 2}}, 1);
        if (n - 4 >= 2) l.add(FactorKind::SU, static_cast<int>(n - 4));
        l.normalize();
        e.L = l;
        SymbolicGroup k = make_group({{FactorKind::SU, 2}, {FactorKind::SU, 2}}, 1);
        if (n - 4 >= 1) k.torus_rank += 1;
        if (n - 4 >= 2) k.add(FactorKind::SU, static_cast<int>(n - 4));
        k.normalize();
        e.K = k;
        break;
    }
    case 11:
        e.g_str = "SO_10";
        e.l_str = "T^1.SO_6";
        e.k_str = "T^2.SO_6";
        e.G = make_group({{FactorKind::SO, 10}});
        e.L = make_group({{FactorKind::SO, 6}}, 1);
        e.K = make_group({{FactorKind::SO, 6}}, 2);
        break;
    case 12:
        e.g_str = "E_6";
        e.l_str = "T^1.SO_8";
        e.k_str = "T^2.SO_8";
        e.G = make_group({{FactorKind::E6, 0}});
        e.L = make_group({{FactorKind::SO, 8}}, 1);
        e.K = make_group({{FactorKind::SO, 8}}, 2);
        break;
    default:
        throw Error(Errc::bad_argument, "row must be 1..12");
    }
    return e;
}

PaintedDiagram NonstandardRow::flag_painting() const {
    auto paint = [](std::vector<SimpleLieType> types, std::vector<int> black) {
        return make_painting(build_root_system(std::move(types)), std::move(black));
    };
    auto get = [&](const char* k) { return params.at(k); };
    switch (row) {
    case 1: return paint({{Family::A, 1}, {Family::A, 1}}, {0, 1});
    case 2: return paint({{Family::B, 3}}, {2});
    case 3: return paint({{Family::F, 4}}, {3});
    case 4: return paint({{Family::A, 1}}, {0});
    case 5: return paint({{Family::B, static_cast<int>(get("n"))}}, {0});
    case 6: return paint({{Family::D, static_cast<int>(get("n"))}}, {0});
    case 7: return paint({{Family::C, static_cast<int>(get("n"))}}, {1});
    case 8: {
        int n = static_cast<int>(get("n"));
        std::vector<int> black = n == 3 ? std::vector<int>{0, 1} : std::vector<int>{0, n - 2};
        return paint({{Family::A, n - 1}}, black);
    }
    case 9: {
        int p = static_cast<int>(get("p")), q = static_cast<int>(get("q"));
        std::vector<int> black;
        if (p == 2) black = {0};
        else black = {0, p - 2};
        int base = p - 1;
        if (q == 2) black.push_back(base);
        else {
            black.push_back(base);
            black.push_back(base + q - 2);
        }
        return paint({{Family::A, p - 1}, {Family::A, q - 1}}, black);
    }
    case 10: {
        int n = static_cast<int>(get("n"));
        return paint({{Family::A, n - 1}}, {1, n - 3});
    }
    case 11: return paint({{Family::D, 5}}, {0, 1});
    case 12: return paint({{Family::E, 6}}, {0, 5});
    default: throw Error(Errc::internal, "bad row");
    }
}

Json NonstandardRow::to_json() const {
    Json p = Json::object();
    for (const auto& [k, v] : params) p[k] = v;
    return Json{{"row", row}, {"params", p}, {"G", g_str}, {"L", l_str}, {"K", k_str}};
}

namespace {

bool factors_equal(const SymbolicGroup& a, const SymbolicGroup& b) { return a == b; }

std::optional<NonstandardRow> try_row(int row, std::map<std::string, long long> params,
                                      const SymbolicGroup& G, const SymbolicGroup& L) {
    NonstandardRow e;
    try {
        e = instantiate_row(row, params);
    } catch (const Error&) {
        return std::nullopt;
    }
    if (factors_equal(e.G, G) && factors_equal(e.L, L)) return e;
    return std::nullopt;
}

} // namespace

std::optional<NonstandardRow> recognize(const SymbolicGroup& G, const SymbolicGroup& L) {
    // Fixed rows first, then parametric rows with parameters read off G.
    for (int row : {1, 2, 3, 4}) {
        if (auto e = try_row(row, {}, G, L)) return e;
    }
    if (G.factors.size() == 1 && G.torus_rank == 0) {
        const auto& f = G.factors[0];
        if (f.kind == FactorKind::SO && f.n % 2 == 1) {
            if (auto e = try_row(5, {{"n", (f.n - 1) / 2}}, G, L)) return e;
        }
        if (f.kind == FactorKind::SO && f.n % 2 == 0) {
            if (auto e = try_row(6, {{"n", f.n / 2}}, G, L)) return e;
            if (f.n == 10) {
                if (auto e = try_row(11, {}, G, L)) return e;
            }
        }
        if (f.kind == FactorKind::Sp) {
            if (auto e = try_row(7, {{"n", f.n}}, G, L)) return e;
        }
        if (f.kind == FactorKind::SU) {
            if (auto e = try_row(8, {{"n", f.n}}, G, L)) return e;
            if (auto e = try_row(10, {{"n", f.n}}, G, L)) return e;
        }
        if (f.kind == FactorKind::E6) {
            if (auto e = try_row(12, {}, G, L)) return e;
        }
    }
    if (G.factors.size() == 2 && G.torus_rank == 0 && G.factors[0].kind == FactorKind::SU &&
        G.factors[1].kind == FactorKind::SU) {
        long long a = G.factors[0].n, b = G.factors[1].n;
        if (auto e = try_row(9, {{"p", a}, {"q", b}}, G, L)) return e;
        if (a != b) {
            if (auto e = try_row(9, {{"p", b}, {"q", a}}, G, L)) return e;
        }
    }
    return std::nullopt;
}

std::optional<NonstandardRow> recognize(const std::string& group, const std::string& isotropy) {
    return recognize(parse_group(group), parse_group(isotropy));
}

std::string NonStandardCR::name() const {
    return entry.g_str + " / " + entry.l_str + " t=(" + rat_to_string(t_re) + "," + rat_to_string(t_im) + ")";
}

Json NonStandardCR::to_json() const {
    Json j = entry.to_json();
    j["t"] = Json{{"re", rat_to_json(t_re)}, {"im", rat_to_json(t_im)}};
    return j;
}

NonStandardCR make_nonstandard(NonstandardRow entry, Rat t_re, Rat t_im) {
    Rat m2 = t_re * t_re + t_im * t_im;
    if (m2 == Rat(0))
        throw Error(Errc::invalid_modulus, "t = 0 is outside the non-standard family (punctured disc)");
    if (m2 >= Rat(1))
        throw Error(Errc::invalid_modulus, "|t| must be < 1");
    return NonStandardCR{std::move(entry), std::move(t_re), std::move(t_im)};
}

bool same_homogeneous_manifold(const NonstandardRow& a, const NonstandardRow& b) {
    if (a.row == b.row) {
        if (a.row != 9) return a.params == b.params;
        // (p, q) is unordered.
        auto pa = std::minmax(a.params.at("p"), a.params.at("q"));
        auto pb = std::minmax(b.params.at("p"), b.params.at("q"));
        return pa == pb;
    }
    // Spin_7/SU_3 = SO_8/SO_6.
    auto is_spin7 = [](const NonstandardRow& r) { return r.row == 2; };
    auto is_so8 = [](const NonstandardRow& r) { return r.row == 6 && r.params.at("n") == 4; };
    return (is_spin7(a) && is_so8(b)) || (is_so8(a) && is_spin7(b));
}

bool equivalent_nonstandard(const NonStandardCR& a, const NonStandardCR& b) {
    return same_homogeneous_manifold(a.entry, b.entry) && a.modulus2() == b.modulus2();
}

SymbolicGroup maximal_semisimple_nonstandard(const NonstandardRow& entry) {
    if (entry.row == 2) {
        SymbolicGroup g;
        g.add(FactorKind::SO, 8);
        g.normalize();
        return g;
    }
    return entry.G;
}

std::string maximal_semisimple_nonstandard_str(const NonstandardRow& entry) {
    return entry.row == 2 ? "SO_8" : entry.g_str;
}

} // namespace cratlas
