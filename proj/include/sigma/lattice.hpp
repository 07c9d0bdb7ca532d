#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "sigma/subgroup.hpp"

namespace sigma {

namespace detail {

/// Worklist closure: repeatedly extend known subgroups by coset
/// representatives, deduplicating by membership bitset.
inline std::vector<Subgroup> grow_subgroups(const GroupTable& g,
                                            std::vector<Subgroup> seeds,
                                            const Bitset& within) {
    std::vector<Subgroup> found;
    std::unordered_map<Bitset, char, BitsetHash> seen;
    for (Subgroup& s : seeds)
        if (seen.emplace(s.members, 1).second) found.push_back(std::move(s));
    for (size_t i = 0; i < found.size(); ++i) {
        Subgroup s = found[i]; // copy: found may reallocate
        if (s.members == within) continue;
        for (int x : transversal(g, s, within)) {
            if (s.members.test(x)) continue;
            Subgroup t = extend_subgroup(g, s, x);
            if (seen.emplace(t.members, 1).second) found.push_back(std::move(t));
        }
    }
    std::sort(found.begin(), found.end(), canonical_less);
    return found;
}

} // namespace detail

/// Every subgroup of g exactly once, sorted by (order, bitset). Cached.
inline const std::vector<Subgroup>& all_subgroups(const GroupTable& g) {
    {
        std::lock_guard<std::mutex> lock(g.caches->m);
        if (g.caches->lattice_done) return g.caches->lattice;
    }
    if (g.n > g.lattice_bound)
        throw lattice_bound_exceeded("group of order " + std::to_string(g.n) +
                                     " exceeds lattice bound " +
                                     std::to_string(g.lattice_bound));
    std::vector<Subgroup> seeds{trivial_subgroup(g)};
    for (int x = 1; x < g.n; ++x) seeds.push_back(cyclic_subgroup(g, x));
    auto lattice = detail::grow_subgroups(g, std::move(seeds), g.full_bitset());
    std::lock_guard<std::mutex> lock(g.caches->m);
    if (!g.caches->lattice_done) {
        g.caches->lattice = std::move(lattice);
        g.caches->lattice_done = true;
    }
    return g.caches->lattice;
}

inline bool lattice_cached(const GroupTable& g) {
    std::lock_guard<std::mutex> lock(g.caches->m);
    return g.caches->lattice_done;
}

/// All subgroups between a and `within` (inclusive). Does not require the
/// full lattice; results for within == G are memoized.
inline std::vector<Subgroup> overgroups_in(const GroupTable& g,
                                           const Subgroup& a,
                                           const Bitset& within) {
    bool whole = within == g.full_bitset();
    if (whole) {
        std::lock_guard<std::mutex> lock(g.caches->m);
        if (g.caches->lattice_done) {
            std::vector<Subgroup> out;
            for (const Subgroup& s : g.caches->lattice)
                if (a.members.subset_of(s.members)) out.push_back(s);
            return out;
        }
        auto it = g.caches->overgroup_memo.find(a.members);
        if (it != g.caches->overgroup_memo.end()) return it->second;
    }
    auto out = detail::grow_subgroups(g, {a}, within);
    if (whole) {
        std::lock_guard<std::mutex> lock(g.caches->m);
        g.caches->overgroup_memo.emplace(a.members, out);
    }
    return out;
}

inline std::vector<Subgroup> overgroups(const GroupTable& g, const Subgroup& a) {
    return overgroups_in(g, a, g.full_bitset());
}

/// All normal subgroups of g, computed without the subgroup lattice:
/// normal closures of cyclic subgroups (one per conjugacy class), closed
/// under joins. Cached.
inline const std::vector<Subgroup>& normal_subgroups(const GroupTable& g) {
    {
        std::lock_guard<std::mutex> lock(g.caches->m);
        if (g.caches->normals_done) return g.caches->normal_subs;
    }
    std::vector<Subgroup> seeds;
    std::unordered_map<Bitset, char, BitsetHash> seen;
    {
        Subgroup triv = trivial_subgroup(g);
        seen.emplace(triv.members, 1);
        seeds.push_back(std::move(triv));
    }
    for (const auto& cls : g.conjugacy_classes()) {
        Subgroup s = subgroup_generated(g, cls);
        if (seen.emplace(s.members, 1).second) seeds.push_back(std::move(s));
    }
    // join-closure: the join of two normal subgroups is generated by both
    std::vector<Subgroup> normals = seeds;
    for (size_t i = 0; i < normals.size(); ++i) {
        for (size_t j = 1; j < seeds.size(); ++j) {
            if (seeds[j].members.subset_of(normals[i].members)) continue;
            std::vector<int> gens = normals[i].gens;
            gens.insert(gens.end(), seeds[j].gens.begin(), seeds[j].gens.end());
            Subgroup join = subgroup_generated(g, gens);
            if (seen.emplace(join.members, 1).second)
                normals.push_back(std::move(join));
        }
    }
    std::sort(normals.begin(), normals.end(), canonical_less);
    std::lock_guard<std::mutex> lock(g.caches->m);
    if (!g.caches->normals_done) {
        g.caches->normal_subs = std::move(normals);
        g.caches->normals_done = true;
    }
    return g.caches->normal_subs;
}

/// Minimal elements of the poset of nontrivial normal subgroups.
inline std::vector<Subgroup> minimal_normal_subgroups(const GroupTable& g) {
    if (g.n <= 1) throw trivial_group("trivial group has no minimal normals");
    const auto& normals = normal_subgroups(g);
    std::vector<Subgroup> mins;
    for (const Subgroup& n : normals) {
        if (n.order == 1) continue;
        bool minimal = true;
        for (const Subgroup& m : normals) {
            if (m.order == 1 || m.order >= n.order) continue;
            if (m.members.subset_of(n.members)) {
                minimal = false;
                break;
            }
        }
        if (minimal) mins.push_back(n);
    }
    return mins;
}

inline std::vector<Subgroup> maximal_subgroups(const GroupTable& g) {
    const auto& lattice = all_subgroups(g);
    std::vector<Subgroup> maxes;
    for (const Subgroup& s : lattice) {
        if (s.order == g.n) continue;
        bool maximal = true;
        for (const Subgroup& t : lattice) {
            if (t.order == g.n || t.order <= s.order) continue;
            if (s.members.subset_of(t.members)) {
                maximal = false;
                break;
            }
        }
        if (maximal) maxes.push_back(s);
    }
    return maxes;
}

/// Intersection of all maximal subgroups.
inline Subgroup frattini_subgroup(const GroupTable& g) {
    Bitset phi = g.full_bitset();
    for (const Subgroup& m : maximal_subgroups(g)) phi &= m.members;
    return subgroup_generated(g, phi);
}

/// All complements of a normal subgroup n: subgroups m with m ∩ n = 1 and
/// |m|·|n| = |G|.
inline std::vector<Subgroup> complements(const GroupTable& g,
                                         const Subgroup& n) {
    if (!is_normal(g, n)) throw not_normal("complements: subgroup not normal");
    std::vector<Subgroup> out;
    for (const Subgroup& m : all_subgroups(g)) {
        if (m.order * n.order != Int(g.n)) continue;
        Bitset meet = m.members;
        meet &= n.members;
        if (meet.count() == 1) out.push_back(m);
    }
    return out;
}

/// True iff every subgroup of g is normal.
inline bool is_dedekind(const GroupTable& g) {
    for (const Subgroup& s : all_subgroups(g))
        if (!is_normal(g, s)) return false;
    return true;
}

} // namespace sigma
