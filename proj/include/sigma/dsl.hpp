#pragma once

#include <fstream>
#include <random>

#include <json.hpp>

#include "sigma/structure.hpp"

namespace sigma {

struct BuildConfig {
    int max_order = kDefaultDenseBound;
    int lattice_bound = kDefaultLatticeBound;
};

namespace detail {

struct SpecParser {
    const std::string& text;
    size_t pos = 0;
    BuildConfig cfg;

    void skip_ws() {
        while (pos < text.size() && isspace(text[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw parse_error(std::string("expected '") + c + "' at offset " +
                              std::to_string(pos) + " in: " + text);
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && (isalnum(text[pos]) || text[pos] == '_'))
            ++pos;
        if (start == pos)
            throw parse_error("expected name at offset " + std::to_string(pos) +
                              " in: " + text);
        return text.substr(start, pos - start);
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && isdigit(text[pos])) ++pos;
        if (start == pos)
            throw parse_error("expected integer at offset " +
                              std::to_string(pos) + " in: " + text);
        return std::stoll(text.substr(start, pos - start));
    }
    std::string quoted() {
        skip_ws();
        if (pos >= text.size() || text[pos] != '"')
            throw parse_error("expected quoted string in: " + text);
        ++pos;
        std::string out;
        while (pos < text.size() && text[pos] != '"') out += text[pos++];
        if (pos >= text.size()) throw parse_error("unterminated string: " + text);
        ++pos;
        return out;
    }

    GroupTable parse_spec();
};

inline GroupTable table_from_json_file(const std::string& path,
                                       const BuildConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open table file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw parse_error("bad JSON in " + path + ": " + e.what());
    }
    if (!j.contains("order") || !j.contains("mul"))
        throw invalid_table("table file needs 'order' and 'mul'");
    int n = j["order"].get<int>();
    if (n < 1 || n > cfg.max_order)
        throw order_bound_exceeded("table order " + std::to_string(n) +
                                   " outside (0, " +
                                   std::to_string(cfg.max_order) + "]");
    auto flat = j["mul"].get<std::vector<int>>();
    if (Int(flat.size()) != Int(n) * Int(n))
        throw invalid_table("mul must be a row-major n*n array");
    std::vector<uint16_t> mul(flat.size());
    for (size_t i = 0; i < flat.size(); ++i) {
        if (flat[i] < 0 || flat[i] >= n)
            throw invalid_table("mul entry out of range");
        mul[i] = uint16_t(flat[i]);
    }
    // Latin square + identity checks
    for (int a = 0; a < n; ++a) {
        std::vector<char> row(size_t(n), 0), col(size_t(n), 0);
        for (int b = 0; b < n; ++b) {
            int r = mul[size_t(a) * size_t(n) + size_t(b)];
            int c = mul[size_t(b) * size_t(n) + size_t(a)];
            if (row[size_t(r)]++ || col[size_t(c)]++)
                throw invalid_table("mul is not a Latin square");
        }
        if (mul[size_t(a) * size_t(n)] != a || mul[size_t(a)] != a)
            throw invalid_table("element 0 is not the identity");
    }
    // sampled associativity
    std::mt19937_64 rng(0xABCDEF);
    int samples = std::max(128, 3 * n);
    for (int s = 0; s < samples; ++s) {
        int a = int(rng() % uint64_t(n)), b = int(rng() % uint64_t(n)),
            c = int(rng() % uint64_t(n));
        int ab = mul[size_t(a) * size_t(n) + size_t(b)];
        int bc = mul[size_t(b) * size_t(n) + size_t(c)];
        if (mul[size_t(ab) * size_t(n) + size_t(c)] !=
            mul[size_t(a) * size_t(n) + size_t(bc)])
            throw invalid_table("associativity fails at sampled triple");
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        labels = j["labels"].get<std::vector<std::string>>();
        if (int(labels.size()) != n)
            throw invalid_table("labels length mismatch");
    } else {
        for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    }
    // generators: greedy
    GroupTable g = finish_table(n, std::move(mul), std::move(labels), {});
    std::vector<int> gens;
    Bitset span(g.n);
    span.set(0);
    for (int x = 1; x < n; ++x) {
        if (span.test(x)) continue;
        gens.push_back(x);
        std::vector<int> queue = span.to_vector();
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (int t : gens) {
                int v = g.mul(queue[qi], t);
                if (!span.test(v)) {
                    span.set(v);
                    queue.push_back(v);
                }
            }
    }
    g.gens = gens;
    return g;
}

inline GroupTable SpecParser::parse_spec() {
    std::string name = ident();
    expect('(');
    GroupTable out;
    if (name == "cyclic") {
        Int m = integer();
        if (m > cfg.max_order) throw order_bound_exceeded("cyclic(" + std::to_string(m) + ")");
        out = cyclic_group(int(m));
    } else if (name == "dihedral") {
        Int m = integer();
        if (m > cfg.max_order) throw order_bound_exceeded("dihedral order");
        out = dihedral_group(int(m));
    } else if (name == "sym") {
        Int m = integer();
        Int ord = 1;
        for (Int i = 2; i <= m; ++i) {
            ord *= i;
            if (ord > cfg.max_order)
                throw order_bound_exceeded("sym(" + std::to_string(m) + ")");
        }
        out = symmetric_group(int(m));
    } else if (name == "alt") {
        Int m = integer();
        Int ord = 1;
        for (Int i = 2; i <= m; ++i) {
            ord *= i;
            if (ord / 2 > cfg.max_order)
                throw order_bound_exceeded("alt(" + std::to_string(m) + ")");
        }
        out = alternating_group(int(m));
    } else if (name == "quaternion") {
        out = quaternion_group(int(integer()));
    } else if (name == "frobenius") {
        Int p = integer();
        expect(',');
        Int q = integer();
        expect(',');
        Int k = integer();
        if (p * q > cfg.max_order) throw order_bound_exceeded("frobenius order");
        out = frobenius_group(p, q, k);
    } else if (name == "direct") {
        GroupTable a = parse_spec();
        expect(',');
        GroupTable b = parse_spec();
        out = direct_product(a, b, cfg.max_order);
    } else if (name == "semidirect") {
        GroupTable nt = parse_spec();
        expect(',');
        GroupTable ht = parse_spec();
        expect(',');
        Int k = integer();
        // power action x -> x^k assigned to a generator of cyclic h
        if (!is_abelian(nt))
            throw not_an_automorphism(
                "semidirect power action needs an abelian kernel");
        int hgen = -1;
        {
            const auto& ord = ht.element_orders();
            for (int x = 0; x < ht.n; ++x)
                if (ord[size_t(x)] == ht.n) {
                    hgen = x;
                    break;
                }
        }
        if (hgen < 0)
            throw not_a_homomorphism(
                "semidirect power action needs a cyclic acting group");
        auto pow_map = [&](Int e) {
            std::vector<int> f(static_cast<size_t>(nt.n));
            for (int x = 0; x < nt.n; ++x) {
                int y = 0;
                for (Int i = 0; i < e; ++i) y = nt.mul(y, x);
                f[size_t(x)] = y;
            }
            return f;
        };
        // exponents reduce mod |N| since every element order divides |N|
        Int modn = Int(nt.n);
        Int kk = ((k % modn) + modn) % modn;
        std::vector<Int> exp_of(size_t(ht.n), -1);
        {
            int x = 0;
            Int cur = 1 % modn;
            for (int j = 0; j < ht.n; ++j) {
                exp_of[size_t(x)] = cur;
                x = ht.mul(x, hgen);
                cur = (cur * kk) % modn;
            }
        }
        std::vector<std::vector<int>> action(size_t(ht.n));
        for (int x = 0; x < ht.n; ++x) action[size_t(x)] = pow_map(exp_of[size_t(x)]);
        out = semidirect_product(nt, ht, action, cfg.max_order);
    } else if (name == "perm") {
        std::string body = quoted();
        // "[(0 1),(0 1 2)]": list of permutations
        std::string inner = body;
        if (!inner.empty() && inner.front() == '[') inner = inner.substr(1);
        if (!inner.empty() && inner.back() == ']') inner.pop_back();
        std::vector<std::string> parts;
        int depth = 0;
        std::string cur;
        for (char c : inner) {
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (c == ',' && depth == 0) {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) parts.push_back(cur);
        std::vector<Permutation> perms;
        int degree = 0;
        for (const std::string& p : parts) {
            Permutation perm = parse_cycles(p);
            degree = std::max(degree, perm.degree());
            perms.push_back(std::move(perm));
        }
        for (Permutation& p : perms) p = pad(p, degree);
        out = group_from_generators(perms, cfg.max_order);
    } else if (name == "table") {
        out = table_from_json_file(quoted(), cfg);
    } else {
        throw parse_error("unknown construction: " + name);
    }
    expect(')');
    out.lattice_bound = cfg.lattice_bound;
    return out;
}

} // namespace detail

/// Parses the group-construction DSL: cyclic(n), dihedral(2n), sym(n),
/// alt(n), quaternion(8), frobenius(p,q,k), direct(a,b),
/// semidirect(n,h,k), perm("[(0 1),(0 1 2)]"), table("file.json").
inline GroupTable parse_group_spec(const std::string& text,
                                   const BuildConfig& cfg = {}) {
    detail::SpecParser p{text, 0, cfg};
    GroupTable g = p.parse_spec();
    p.skip_ws();
    if (p.pos != text.size())
        throw parse_error("trailing input after group spec: " + text);
    return g;
}

} // namespace sigma
