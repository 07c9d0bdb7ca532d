#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <vector>

#include "sigma/arith.hpp"
#include "sigma/bitset.hpp"
#include "sigma/errors.hpp"
#include "sigma/perm.hpp"

namespace sigma {

inline constexpr int kDefaultDenseBound = 1500;
inline constexpr int kDefaultLatticeBound = 1500;

struct GroupTable;

/// A subgroup of a GroupTable: membership bitset plus a (small) generator
/// list. `gens` always generates exactly `members`.
struct Subgroup {
    const GroupTable* parent = nullptr;
    Bitset members;
    std::vector<int> gens;
    Int order = 0;

    bool contains(int i) const { return members.test(i); }
    bool contains(const Subgroup& other) const {
        return other.members.subset_of(members);
    }
    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.members == b.members;
    }
};

/// Canonical order on subgroups of one group: ascending order, then
/// earliest-element-first on the membership bitset.
inline bool canonical_less(const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return Bitset::lex_less(a.members, b.members);
}

namespace detail {

struct SigmaContextBase {
    virtual ~SigmaContextBase() = default;
};

/// Memoized per-table data. Concurrent readers are safe once a field has
/// been published; construction happens under the mutex.
struct TableCaches {
    std::mutex m;
    std::vector<int> elem_order;
    std::vector<std::vector<int>> conj_classes;
    bool lattice_done = false;
    std::vector<Subgroup> lattice;
    bool normals_done = false;
    std::vector<Subgroup> normal_subs;
    std::unordered_map<Bitset, std::vector<Subgroup>, BitsetHash> overgroup_memo;

    std::mutex ctx_m;
    std::map<std::string, std::shared_ptr<const SigmaContextBase>> sigma_ctxs;
};

} // namespace detail

/// A fully materialized finite group: elements indexed 0..n-1 with element 0
/// the identity, dense multiplication and inverse tables. Immutable after
/// construction and safe to share across threads.
struct GroupTable {
    int n = 0;
    std::vector<uint16_t> mul_table; // row-major n*n
    std::vector<uint16_t> inv_table;
    std::vector<std::string> labels;
    std::vector<int> gens; // generating set recorded at construction
    int lattice_bound = kDefaultLatticeBound;

    mutable std::shared_ptr<detail::TableCaches> caches =
        std::make_shared<detail::TableCaches>();

    int mul(int a, int b) const { return mul_table[size_t(a) * size_t(n) + size_t(b)]; }
    int inv(int a) const { return inv_table[size_t(a)]; }
    int conj(int a, int x) const { return mul(mul(inv(x), a), x); } // a^x
    int comm(int a, int b) const { // [a,b] = a^-1 b^-1 a b
        return mul(mul(inv(a), inv(b)), mul(a, b));
    }
    Int order() const { return n; }
    const std::string& label(int i) const { return labels[size_t(i)]; }

    Bitset full_bitset() const {
        Bitset b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }
    Bitset trivial_bitset() const { return Bitset::singleton(n, 0); }

    const std::vector<int>& element_orders() const {
        std::lock_guard<std::mutex> lock(caches->m);
        if (caches->elem_order.empty()) {
            caches->elem_order.resize(size_t(n));
            for (int i = 0; i < n; ++i) {
                int k = 1, x = i;
                while (x != 0) {
                    x = mul(x, i);
                    ++k;
                }
                caches->elem_order[size_t(i)] = k;
            }
        }
        return caches->elem_order;
    }

    const std::vector<std::vector<int>>& conjugacy_classes() const {
        std::lock_guard<std::mutex> lock(caches->m);
        if (caches->conj_classes.empty()) {
            std::vector<char> seen(size_t(n), 0);
            for (int i = 0; i < n; ++i) {
                if (seen[size_t(i)]) continue;
                std::vector<int> cls;
                for (int x = 0; x < n; ++x) {
                    int c = conj(i, x);
                    if (!seen[size_t(c)]) {
                        seen[size_t(c)] = 1;
                        cls.push_back(c);
                    }
                }
                caches->conj_classes.push_back(std::move(cls));
            }
        }
        return caches->conj_classes;
    }
};

namespace detail {

inline GroupTable finish_table(int n, std::vector<uint16_t> mul,
                               std::vector<std::string> labels,
                               std::vector<int> gens) {
    GroupTable g;
    g.n = n;
    g.mul_table = std::move(mul);
    g.labels = std::move(labels);
    g.gens = std::move(gens);
    g.inv_table.assign(size_t(n), 0);
    for (int a = 0; a < n; ++a) {
        bool found = false;
        for (int b = 0; b < n; ++b) {
            if (g.mul(a, b) == 0) {
                if (g.mul(b, a) != 0)
                    throw invalid_table("one-sided inverse at element " +
                                        std::to_string(a));
                g.inv_table[size_t(a)] = uint16_t(b);
                found = true;
                break;
            }
        }
        if (!found)
            throw invalid_table("element " + std::to_string(a) +
                                " has no inverse");
    }
    return g;
}

} // namespace detail

/// Breadth-first closure of a permutation generating set into a full Cayley
/// table. Element 0 is the identity.
inline GroupTable group_from_generators(const std::vector<Permutation>& gens,
                                        int max_order = kDefaultDenseBound) {
    if (gens.empty())
        throw invalid_permutation("empty generator list");
    int degree = 0;
    for (const auto& p : gens) degree = std::max(degree, p.degree());
    std::vector<Permutation> padded;
    for (const auto& p : gens) {
        validate_permutation(p);
        padded.push_back(pad(p, degree));
    }

    std::vector<Permutation> elems{Permutation::identity(degree)};
    std::unordered_map<Permutation, int, PermutationHash> index;
    index.emplace(elems[0], 0);
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
        int u = todo.front();
        todo.pop();
        for (const auto& s : padded) {
            Permutation v = compose(elems[size_t(u)], s);
            auto it = index.find(v);
            if (it == index.end()) {
                if (int(elems.size()) >= max_order)
                    throw order_bound_exceeded(
                        "closure exceeds bound " + std::to_string(max_order));
                int id = int(elems.size());
                index.emplace(v, id);
                elems.push_back(std::move(v));
                todo.push(id);
            }
        }
    }

    int n = int(elems.size());
    if (n > 65535) throw order_bound_exceeded("table limited to 65535 elements");
    std::vector<uint16_t> mul(size_t(n) * size_t(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mul[size_t(a) * size_t(n) + size_t(b)] =
                uint16_t(index.at(compose(elems[size_t(a)], elems[size_t(b)])));
    std::vector<std::string> labels;
    labels.reserve(size_t(n));
    for (const auto& p : elems) labels.push_back(format_cycles(p));
    std::vector<int> gen_ids;
    for (const auto& p : padded) {
        int id = index.at(p);
        if (id != 0) gen_ids.push_back(id);
    }
    return detail::finish_table(n, std::move(mul), std::move(labels),
                                std::move(gen_ids));
}

inline GroupTable cyclic_group(int m) {
    if (m < 1) throw parse_error("cyclic order must be positive");
    if (m > 65535) throw order_bound_exceeded("table limited to 65535 elements");
    int n = m;
    std::vector<uint16_t> mul(size_t(n) * size_t(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mul[size_t(a) * size_t(n) + size_t(b)] = uint16_t((a + b) % n);
    std::vector<std::string> labels;
    labels.reserve(size_t(n));
    labels.emplace_back("e");
    for (int i = 1; i < n; ++i)
        labels.push_back(i == 1 ? "x" : "x^" + std::to_string(i));
    std::vector<int> gens;
    if (n > 1) gens.push_back(1);
    return detail::finish_table(n, std::move(mul), std::move(labels),
                                std::move(gens));
}

/// Dihedral group of order 2m (m >= 1): r of order m, s of order 2.
inline GroupTable dihedral_group(int order) {
    if (order < 2 || order % 2 != 0)
        throw parse_error("dihedral order must be even and >= 2");
    int m = order / 2;
    int n = order;
    auto idx = [m](int i, int j) { return i + m * j; };
    std::vector<uint16_t> mul(size_t(n) * size_t(n));
    for (int i1 = 0; i1 < m; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < m; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    // (r^i1 s^j1)(r^i2 s^j2): s r^i = r^-i s
                    int i = j1 == 0 ? (i1 + i2) % m : ((i1 - i2) % m + m) % m;
                    int j = j1 ^ j2;
                    mul[size_t(idx(i1, j1)) * size_t(n) + size_t(idx(i2, j2))] =
                        uint16_t(idx(i, j));
                }
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < 2; ++j) {
            std::string s;
            if (i == 1) s += "r";
            else if (i > 1) s += "r^" + std::to_string(i);
            if (j) s += "s";
            labels[size_t(idx(i, j))] = s.empty() ? "e" : s;
        }
    std::vector<int> gens;
    if (m > 1) gens.push_back(idx(1, 0));
    gens.push_back(idx(0, 1));
    return detail::finish_table(n, std::move(mul), std::move(labels),
                                std::move(gens));
}

inline GroupTable symmetric_group(int pts) {
    if (pts < 1) throw parse_error("sym(n) needs n >= 1");
    if (pts == 1) return cyclic_group(1);
    std::vector<Permutation> gens;
    Permutation t = Permutation::identity(pts);
    std::swap(t.images[0], t.images[1]);
    gens.push_back(t);
    if (pts > 2) {
        Permutation c = Permutation::identity(pts);
        for (int i = 0; i < pts; ++i) c.images[size_t(i)] = (i + 1) % pts;
        gens.push_back(c);
    }
    Int ord = 1;
    for (int i = 2; i <= pts; ++i) ord *= i;
    return group_from_generators(gens, int(std::min<Int>(ord, 65535)));
}

inline GroupTable alternating_group(int pts) {
    if (pts < 3) return cyclic_group(1);
    std::vector<Permutation> gens;
    Permutation three = Permutation::identity(pts);
    three.images[0] = 1;
    three.images[1] = 2;
    three.images[2] = 0;
    gens.push_back(three);
    if (pts > 3) {
        Permutation c = Permutation::identity(pts);
        if (pts % 2 == 1) {
            for (int i = 0; i < pts; ++i) c.images[size_t(i)] = (i + 1) % pts;
        } else {
            for (int i = 1; i < pts; ++i)
                c.images[size_t(i)] = (i % (pts - 1)) + 1;
        }
        gens.push_back(c);
    }
    Int ord = 1;
    for (int i = 2; i <= pts; ++i) ord *= i;
    ord /= 2;
    return group_from_generators(gens, int(std::min<Int>(ord, 65535)));
}

/// The quaternion group of order 8 ({±1, ±i, ±j, ±k}).
inline GroupTable quaternion_group(int order) {
    if (order != 8) throw parse_error("only quaternion(8) is supported");
    // index = 2*basis + sign, basis in {1,i,j,k}
    static const int bas_mul[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn_mul[4][4] = {
        {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    int n = 8;
    std::vector<uint16_t> mul(size_t(n) * size_t(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int ba = a / 2, sa = a % 2, bb = b / 2, sb = b % 2;
            int bc = bas_mul[ba][bb];
            int sc = (sa + sb + sgn_mul[ba][bb]) % 2;
            mul[size_t(a) * size_t(n) + size_t(b)] = uint16_t(2 * bc + sc);
        }
    std::vector<std::string> labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return detail::finish_table(n, std::move(mul), std::move(labels), {2, 4});
}

/// C_p ⋊ C_q with the action x -> kx (mod p). Requires k^q = 1 (mod p).
inline GroupTable frobenius_group(Int p, Int q, Int k) {
    if (!is_prime(p)) throw parse_error("frobenius(p,q,k): p must be prime");
    if (q < 1 || p * q > 65535) throw order_bound_exceeded("frobenius order");
    k %= p;
    if (k <= 0 || std::gcd(k, p) != 1)
        throw parse_error("frobenius(p,q,k): k must be a unit mod p");
    Int kq = 1;
    for (Int i = 0; i < q; ++i) kq = (kq * k) % p;
    if (kq != 1)
        throw not_a_homomorphism("k^q != 1 (mod p), action does not define C_q");
    int n = int(p * q);
    auto idx = [p](Int a, Int b) { return int(a + p * b); };
    std::vector<uint16_t> mul(size_t(n) * size_t(n));
    std::vector<Int> kpow(static_cast<size_t>(q));
    kpow[0] = 1;
    for (Int b = 1; b < q; ++b) kpow[size_t(b)] = (kpow[size_t(b - 1)] * k) % p;
    for (Int a1 = 0; a1 < p; ++a1)
        for (Int b1 = 0; b1 < q; ++b1)
            for (Int a2 = 0; a2 < p; ++a2)
                for (Int b2 = 0; b2 < q; ++b2) {
                    Int a = (a1 + a2 * kpow[size_t(b1)]) % p;
                    Int b = (b1 + b2) % q;
                    mul[size_t(idx(a1, b1)) * size_t(n) + size_t(idx(a2, b2))] =
                        uint16_t(idx(a, b));
                }
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (Int a = 0; a < p; ++a)
        for (Int b = 0; b < q; ++b) {
            std::string s;
            if (a == 1) s += "a";
            else if (a > 1) s += "a^" + std::to_string(a);
            if (b == 1) s += "b";
            else if (b > 1) s += "b^" + std::to_string(b);
            labels[size_t(idx(a, b))] = s.empty() ? "e" : s;
        }
    std::vector<int> gens{idx(1, 0)};
    if (q > 1) gens.push_back(idx(0, 1));
    return detail::finish_table(n, std::move(mul), std::move(labels),
                                std::move(gens));
}

/// Componentwise product; both factors embed as commuting normal subgroups.
inline GroupTable direct_product(const GroupTable& g, const GroupTable& h,
                                 int max_order = kDefaultDenseBound) {
    Int prod = Int(g.n) * Int(h.n);
    if (prod > max_order)
        throw order_bound_exceeded("direct product of order " +
                                   std::to_string(prod) + " exceeds bound " +
                                   std::to_string(max_order));
    int n = int(prod);
    auto idx = [&](int a, int b) { return a + g.n * b; };
    std::vector<uint16_t> mul(size_t(n) * size_t(n));
    for (int a1 = 0; a1 < g.n; ++a1)
        for (int b1 = 0; b1 < h.n; ++b1)
            for (int a2 = 0; a2 < g.n; ++a2)
                for (int b2 = 0; b2 < h.n; ++b2)
                    mul[size_t(idx(a1, b1)) * size_t(n) + size_t(idx(a2, b2))] =
                        uint16_t(idx(g.mul(a1, a2), h.mul(b1, b2)));
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < h.n; ++b)
            labels[size_t(idx(a, b))] = "(" + g.label(a) + "|" + h.label(b) + ")";
    std::vector<int> gens;
    for (int x : g.gens) gens.push_back(idx(x, 0));
    for (int x : h.gens) gens.push_back(idx(0, x));
    return detail::finish_table(n, std::move(mul), std::move(labels),
                                std::move(gens));
}

/// n ⋊ h for an explicit action: per h-element, an automorphism of n given
/// as an image array. Verifies that every image is an automorphism and that
/// the assignment is a homomorphism h -> Aut(n).
inline GroupTable semidirect_product(const GroupTable& nt, const GroupTable& ht,
                                     const std::vector<std::vector<int>>& action,
                                     int max_order = kDefaultDenseBound) {
    if (int(action.size()) != ht.n)
        throw not_a_homomorphism("action must assign one map per h-element");
    for (int x = 0; x < ht.n; ++x) {
        const auto& f = action[size_t(x)];
        if (int(f.size()) != nt.n)
            throw not_an_automorphism("map for h-element " + std::to_string(x) +
                                      " has wrong domain");
        std::vector<char> seen(size_t(nt.n), 0);
        for (int v : f) {
            if (v < 0 || v >= nt.n || seen[size_t(v)])
                throw not_an_automorphism("map for h-element " +
                                          std::to_string(x) +
                                          " is not a bijection");
            seen[size_t(v)] = 1;
        }
        if (f[0] != 0)
            throw not_an_automorphism("map for h-element " + std::to_string(x) +
                                      " does not fix the identity");
        for (int a = 0; a < nt.n; ++a)
            for (int b = 0; b < nt.n; ++b)
                if (f[size_t(nt.mul(a, b))] != nt.mul(f[size_t(a)], f[size_t(b)]))
                    throw not_an_automorphism(
                        "map for h-element " + std::to_string(x) +
                        " fails phi(ab)=phi(a)phi(b) at (" + std::to_string(a) +
                        "," + std::to_string(b) + ")");
    }
    for (int x = 0; x < ht.n; ++x)
        for (int y = 0; y < ht.n; ++y) {
            const auto& fx = action[size_t(x)];
            const auto& fy = action[size_t(y)];
            const auto& fxy = action[size_t(ht.mul(x, y))];
            for (int a = 0; a < nt.n; ++a)
                if (fx[size_t(fy[size_t(a)])] != fxy[size_t(a)])
                    throw not_a_homomorphism(
                        "action(x)action(y) != action(xy) at x=" +
                        std::to_string(x) + " y=" + std::to_string(y) +
                        " a=" + std::to_string(a));
        }

    Int prod = Int(nt.n) * Int(ht.n);
    if (prod > max_order)
        throw order_bound_exceeded("semidirect product exceeds bound");
    int n = int(prod);
    auto idx = [&](int a, int x) { return a + nt.n * x; };
    std::vector<uint16_t> mul(size_t(n) * size_t(n));
    for (int a = 0; a < nt.n; ++a)
        for (int x = 0; x < ht.n; ++x)
            for (int b = 0; b < nt.n; ++b)
                for (int y = 0; y < ht.n; ++y) {
                    int nb = action[size_t(x)][size_t(b)];
                    mul[size_t(idx(a, x)) * size_t(n) + size_t(idx(b, y))] =
                        uint16_t(idx(nt.mul(a, nb), ht.mul(x, y)));
                }
    std::vector<std::string> labels(static_cast<size_t>(n));
    for (int a = 0; a < nt.n; ++a)
        for (int x = 0; x < ht.n; ++x)
            labels[size_t(idx(a, x))] =
                "(" + nt.label(a) + "|" + ht.label(x) + ")";
    std::vector<int> gens;
    for (int a : nt.gens) gens.push_back(idx(a, 0));
    for (int x : ht.gens) gens.push_back(idx(0, x));
    return detail::finish_table(n, std::move(mul), std::move(labels),
                                std::move(gens));
}

} // namespace sigma
