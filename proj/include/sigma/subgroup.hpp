#pragma once

#include <algorithm>
#include <atomic>
#include <vector>

#include "sigma/group.hpp"

namespace sigma {

namespace detail {

/// Test hook: when set, normal_core_in() lies and reports every subgroup as
/// already normal. Used only by the fault-injection self-test.
inline std::atomic<bool>& corrupt_normal_core_flag() {
    static std::atomic<bool> flag{false};
    return flag;
}

} // namespace detail

/// RAII guard enabling the deliberately corrupted normal-core computation.
class FaultInjectionGuard {
public:
    FaultInjectionGuard() { detail::corrupt_normal_core_flag() = true; }
    ~FaultInjectionGuard() { detail::corrupt_normal_core_flag() = false; }
    FaultInjectionGuard(const FaultInjectionGuard&) = delete;
    FaultInjectionGuard& operator=(const FaultInjectionGuard&) = delete;
};

/// Closure of a generator list under multiplication (= the generated
/// subgroup, since the group is finite).
inline Bitset closure_bitset(const GroupTable& g, const std::vector<int>& gens) {
    Bitset members(g.n);
    members.set(0);
    std::vector<int> queue{0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int t : gens) {
            int v = g.mul(u, t);
            if (!members.test(v)) {
                members.set(v);
                queue.push_back(v);
            }
        }
    }
    return members;
}

inline Subgroup make_subgroup(const GroupTable& g, Bitset members,
                              std::vector<int> gens) {
    Subgroup s;
    s.parent = &g;
    s.order = members.count();
    s.members = std::move(members);
    s.gens = std::move(gens);
    return s;
}

inline Subgroup trivial_subgroup(const GroupTable& g) {
    return make_subgroup(g, g.trivial_bitset(), {});
}

inline Subgroup whole_group(const GroupTable& g) {
    return make_subgroup(g, g.full_bitset(), g.gens);
}

/// Smallest subgroup containing the given elements.
inline Subgroup subgroup_generated(const GroupTable& g,
                                   const std::vector<int>& elems) {
    // Keep only generators that enlarge the running closure, so the stored
    // generating set stays small.
    std::vector<int> kept;
    Bitset members = g.trivial_bitset();
    for (int e : elems) {
        if (!members.test(e)) {
            kept.push_back(e);
            members = closure_bitset(g, kept);
        }
    }
    return make_subgroup(g, std::move(members), std::move(kept));
}

inline Subgroup subgroup_generated(const GroupTable& g, const Bitset& elems) {
    return subgroup_generated(g, elems.to_vector());
}

/// <S, x>
inline Subgroup extend_subgroup(const GroupTable& g, const Subgroup& s, int x) {
    std::vector<int> gens = s.gens;
    gens.push_back(x);
    Bitset members = closure_bitset(g, gens);
    return make_subgroup(g, std::move(members), std::move(gens));
}

inline Subgroup cyclic_subgroup(const GroupTable& g, int x) {
    Bitset members(g.n);
    int y = 0;
    do {
        members.set(y);
        y = g.mul(y, x);
    } while (y != 0);
    return make_subgroup(g, std::move(members),
                         x == 0 ? std::vector<int>{} : std::vector<int>{x});
}

/// A^x = x^-1 A x
inline Subgroup conjugate_subgroup(const GroupTable& g, const Subgroup& a,
                                   int x) {
    Bitset members(g.n);
    a.members.for_each([&](int m) { members.set(g.conj(m, x)); });
    std::vector<int> gens;
    gens.reserve(a.gens.size());
    for (int t : a.gens) gens.push_back(g.conj(t, x));
    return make_subgroup(g, std::move(members), std::move(gens));
}

/// True iff a is normalized by every listed element.
inline bool normalized_by(const GroupTable& g, const Subgroup& a,
                          const std::vector<int>& xs) {
    for (int x : xs)
        for (int t : a.gens)
            if (!a.members.test(g.conj(t, x))) return false;
    return true;
}

/// True iff a ⊴ <top>; `top` must contain a.
inline bool is_normal_in(const GroupTable& g, const Subgroup& top,
                         const Subgroup& a) {
    return normalized_by(g, a, top.gens);
}

inline bool is_normal(const GroupTable& g, const Subgroup& a) {
    return normalized_by(g, a, g.gens);
}

/// All distinct conjugates of a under the subgroup generated by `unit`,
/// in deterministic BFS discovery order.
inline std::vector<Subgroup> conjugates_under(const GroupTable& g,
                                              const Subgroup& a,
                                              const std::vector<int>& conjugators) {
    std::vector<Subgroup> orbit{a};
    std::unordered_map<Bitset, char, BitsetHash> seen;
    seen.emplace(a.members, 1);
    for (size_t i = 0; i < orbit.size(); ++i) {
        for (int x : conjugators) {
            Subgroup c = conjugate_subgroup(g, orbit[i], x);
            if (seen.emplace(c.members, 1).second) orbit.push_back(std::move(c));
        }
    }
    return orbit;
}

inline std::vector<Subgroup> conjugates(const GroupTable& g, const Subgroup& a) {
    return conjugates_under(g, a, g.gens);
}

/// N_<top>(a) — elements of top normalizing a.
inline Subgroup normalizer_in(const GroupTable& g, const Subgroup& top,
                              const Subgroup& a) {
    Bitset members(g.n);
    top.members.for_each([&](int x) {
        for (int t : a.gens)
            if (!a.members.test(g.conj(t, x))) return;
        members.set(x);
    });
    return subgroup_generated(g, members);
}

inline Subgroup normalizer(const GroupTable& g, const Subgroup& a) {
    return normalizer_in(g, whole_group(g), a);
}

/// Largest subgroup of a that is normal in <top>: the intersection of the
/// <top>-conjugates of a.
inline Subgroup normal_core_in(const GroupTable& g, const Subgroup& top,
                               const Subgroup& a) {
    if (detail::corrupt_normal_core_flag().load(std::memory_order_relaxed))
        return a; // fault injection: pretend a is already normal
    if (is_normal_in(g, top, a)) return a;
    Bitset core = a.members;
    for (const Subgroup& c : conjugates_under(g, a, top.gens)) {
        core &= c.members;
        if (core.count() == 1) break;
    }
    return subgroup_generated(g, core);
}

inline Subgroup normal_core(const GroupTable& g, const Subgroup& a) {
    return normal_core_in(g, whole_group(g), a);
}

/// Smallest subgroup of <top> containing a and normal in <top>.
inline Subgroup normal_closure_in(const GroupTable& g, const Subgroup& top,
                                  const Subgroup& a) {
    std::vector<int> gens;
    for (const Subgroup& c : conjugates_under(g, a, top.gens))
        for (int t : c.gens) gens.push_back(t);
    return subgroup_generated(g, gens);
}

inline Subgroup intersect(const GroupTable& g, const Subgroup& a,
                          const Subgroup& b) {
    Bitset m = a.members;
    m &= b.members;
    return subgroup_generated(g, m);
}

/// Product set A·B as a bitset (not necessarily a subgroup).
inline Bitset product_bitset(const GroupTable& g, const Bitset& a,
                             const Bitset& b) {
    Bitset prod(g.n);
    a.for_each([&](int x) { b.for_each([&](int y) { prod.set(g.mul(x, y)); }); });
    return prod;
}

inline bool sets_permute(const GroupTable& g, const Bitset& a, const Bitset& b) {
    return product_bitset(g, a, b) == product_bitset(g, b, a);
}

/// |A·B| without materializing the product, valid whenever A·B is a group
/// (and as a cardinality bound in general).
inline Int product_order(const Subgroup& a, const Subgroup& b) {
    Bitset m = a.members;
    m &= b.members;
    return a.order * b.order / m.count();
}

/// Right-coset representatives of s inside `within` (ascending by index).
inline std::vector<int> transversal(const GroupTable& g, const Subgroup& s,
                                    const Bitset& within) {
    std::vector<int> reps;
    Bitset covered(g.n);
    within.for_each([&](int x) {
        if (covered.test(x)) return;
        reps.push_back(x);
        s.members.for_each([&](int m) { covered.set(g.mul(m, x)); });
    });
    return reps;
}

/// C_<top>(S): elements of top commuting with every generator of s.
inline Subgroup centralizer_in(const GroupTable& g, const Subgroup& top,
                               const Subgroup& s) {
    Bitset members(g.n);
    top.members.for_each([&](int x) {
        for (int t : s.gens)
            if (g.mul(x, t) != g.mul(t, x)) return;
        members.set(x);
    });
    return subgroup_generated(g, members);
}

inline Subgroup center(const GroupTable& g) {
    return centralizer_in(g, whole_group(g), whole_group(g));
}

inline bool is_abelian(const GroupTable& g) {
    for (int a : g.gens)
        for (int b : g.gens)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

} // namespace sigma
