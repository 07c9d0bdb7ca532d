#pragma once

#include <algorithm>
#include <memory>
#include <vector>

#include "sigma/lattice.hpp"

namespace sigma {

/// Canonical quotient G/N: cosets numbered by smallest member index.
/// `target` is held by shared_ptr so the map can be moved freely while
/// subgroups of the quotient stay valid.
struct QuotientMap {
    Subgroup kernel;
    std::shared_ptr<const GroupTable> target;
    std::vector<int> element_map; // source index -> target index

    Bitset push_forward(const Bitset& src) const {
        Bitset out(target->n);
        src.for_each([&](int x) { out.set(element_map[size_t(x)]); });
        return out;
    }
    Subgroup push_forward_subgroup(const Subgroup& src) const {
        return subgroup_generated(*target, push_forward(src.members));
    }
    Bitset pull_back(const Bitset& tgt) const {
        Bitset out(kernel.members.capacity());
        for (size_t i = 0; i < element_map.size(); ++i)
            if (tgt.test(element_map[i])) out.set(int(i));
        return out;
    }
    Subgroup pull_back_subgroup(const GroupTable& g, const Subgroup& tgt) const {
        return subgroup_generated(g, pull_back(tgt.members));
    }
};

inline QuotientMap quotient(const GroupTable& g, const Subgroup& n) {
    if (!is_normal(g, n)) throw not_normal("quotient: subgroup not normal");
    std::vector<int> coset_id(size_t(g.n), -1);
    std::vector<int> reps;
    for (int x = 0; x < g.n; ++x) {
        if (coset_id[size_t(x)] >= 0) continue;
        int cid = int(reps.size());
        reps.push_back(x);
        n.members.for_each([&](int v) { coset_id[size_t(g.mul(v, x))] = cid; });
    }
    int q = int(reps.size());
    std::vector<uint16_t> mul(size_t(q) * size_t(q));
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            mul[size_t(a) * size_t(q) + size_t(b)] =
                uint16_t(coset_id[size_t(g.mul(reps[size_t(a)], reps[size_t(b)]))]);
    std::vector<std::string> labels;
    labels.reserve(size_t(q));
    for (int r : reps) labels.push_back("[" + g.label(r) + "]");
    std::vector<int> gens;
    for (int x : g.gens) {
        int c = coset_id[size_t(x)];
        if (c != 0 && std::find(gens.begin(), gens.end(), c) == gens.end())
            gens.push_back(c);
    }
    QuotientMap qm;
    qm.kernel = n;
    auto table = std::make_shared<GroupTable>(
        detail::finish_table(q, std::move(mul), std::move(labels), std::move(gens)));
    table->lattice_bound = g.lattice_bound;
    qm.target = std::move(table);
    qm.element_map = std::move(coset_id);
    return qm;
}

/// A subgroup re-indexed as a standalone group table. If the parent lattice
/// is already cached, the sub-table's lattice is seeded from it.
struct Materialized {
    std::shared_ptr<const GroupTable> table;
    std::vector<int> to_parent;            // sub index -> parent index
    std::vector<int> from_parent;          // parent index -> sub index or -1

    Bitset push_down(const Bitset& parent_bits) const {
        Bitset out(table->n);
        parent_bits.for_each([&](int x) {
            if (from_parent[size_t(x)] >= 0) out.set(from_parent[size_t(x)]);
        });
        return out;
    }
    Subgroup push_down_subgroup(const Subgroup& s) const {
        return subgroup_generated(*table, push_down(s.members));
    }
    Bitset lift(const Bitset& sub_bits, int parent_n) const {
        Bitset out(parent_n);
        sub_bits.for_each([&](int x) { out.set(to_parent[size_t(x)]); });
        return out;
    }
};

inline Materialized materialize(const GroupTable& g, const Subgroup& s) {
    Materialized m;
    m.to_parent = s.members.to_vector();
    m.from_parent.assign(size_t(g.n), -1);
    for (size_t i = 0; i < m.to_parent.size(); ++i)
        m.from_parent[size_t(m.to_parent[i])] = int(i);
    int n = int(m.to_parent.size());
    std::vector<uint16_t> mul(size_t(n) * size_t(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mul[size_t(a) * size_t(n) + size_t(b)] = uint16_t(
                m.from_parent[size_t(g.mul(m.to_parent[size_t(a)],
                                           m.to_parent[size_t(b)]))]);
    std::vector<std::string> labels;
    labels.reserve(size_t(n));
    for (int x : m.to_parent) labels.push_back(g.label(x));
    std::vector<int> gens;
    for (int t : s.gens) gens.push_back(m.from_parent[size_t(t)]);
    auto table = std::make_shared<GroupTable>(
        detail::finish_table(n, std::move(mul), std::move(labels), std::move(gens)));
    table->lattice_bound = g.lattice_bound;
    if (lattice_cached(g)) {
        std::vector<Subgroup> sub_lattice;
        for (const Subgroup& t : all_subgroups(g))
            if (t.members.subset_of(s.members)) {
                Bitset bits(n);
                t.members.for_each(
                    [&](int x) { bits.set(m.from_parent[size_t(x)]); });
                std::vector<int> sg;
                for (int u : t.gens) sg.push_back(m.from_parent[size_t(u)]);
                sub_lattice.push_back(make_subgroup(*table, std::move(bits), sg));
            }
        std::sort(sub_lattice.begin(), sub_lattice.end(), canonical_less);
        std::lock_guard<std::mutex> lock(table->caches->m);
        table->caches->lattice = std::move(sub_lattice);
        table->caches->lattice_done = true;
    }
    m.table = std::move(table);
    return m;
}

/// All Sylow p-subgroups. For p not dividing |G| this is the trivial
/// subgroup. Asserts the Sylow counting congruence.
inline std::vector<Subgroup> sylow_subgroups(const GroupTable& g, Int p) {
    Int pk = p_part(g.n, p);
    if (pk == 1) return {trivial_subgroup(g)};
    const auto& ord = g.element_orders();
    // greedy ascent: any p-element normalizing a p-subgroup extends it
    Subgroup pgrp = trivial_subgroup(g);
    for (int x = 1; x < g.n; ++x)
        if (ord[size_t(x)] == int(p)) {
            pgrp = cyclic_subgroup(g, x);
            break;
        }
    while (pgrp.order < pk) {
        Subgroup nz = normalizer(g, pgrp);
        bool extended = false;
        for (int y : nz.members.to_vector()) {
            if (pgrp.members.test(y)) continue;
            if (p_part(ord[size_t(y)], p) != Int(ord[size_t(y)])) continue;
            Subgroup bigger = extend_subgroup(g, pgrp, y);
            if (p_part(bigger.order, p) == bigger.order) {
                pgrp = std::move(bigger);
                extended = true;
                break;
            }
        }
        if (!extended)
            throw invalid_table("Sylow ascent stalled; table is not a group");
    }
    auto sylows = conjugates(g, pgrp);
    std::sort(sylows.begin(), sylows.end(), canonical_less);
    if (Int(sylows.size()) % p != 1)
        throw invalid_table("Sylow count violates n_p = 1 (mod p)");
    return sylows;
}

/// All Hall subgroups for the given prime set: subgroups whose order is
/// exactly the primes-part of |G|. May be empty.
inline std::vector<Subgroup> hall_subgroups(const GroupTable& g,
                                            const std::vector<Int>& primes) {
    Int m = part_for_primes(Int(g.n), primes);
    if (m == 1) return {trivial_subgroup(g)};
    if (m == Int(g.n)) return {whole_group(g)};
    if (primes_of(m).size() == 1) return sylow_subgroups(g, primes_of(m)[0]);
    std::vector<Subgroup> out;
    for (const Subgroup& s : all_subgroups(g))
        if (s.order == m) out.push_back(s);
    return out;
}

inline bool is_nilpotent(const GroupTable& g) {
    for (Int p : primes_of(g.n))
        if (sylow_subgroups(g, p).size() != 1) return false;
    return true;
}

inline bool is_cyclic(const GroupTable& g) {
    const auto& ord = g.element_orders();
    for (int x = 0; x < g.n; ++x)
        if (ord[size_t(x)] == g.n) return true;
    return g.n == 1;
}

inline bool is_cyclic_squarefree(const GroupTable& g) {
    return is_cyclic(g) && is_squarefree(g.n);
}

/// A chief factor top/bottom of g together with its centralizer
/// C_G(top/bottom).
struct ChiefFactor {
    Subgroup top;
    Subgroup bottom;
    Subgroup centralizer;
    Int factor_order = 0;
};

/// C_G(H/K) = {x : [x,h] in K for all h in H}. Requires K ⊴ G, H ⊴ G.
inline Subgroup centralizer_of_factor(const GroupTable& g, const Subgroup& h,
                                      const Subgroup& k) {
    if (!k.members.subset_of(h.members))
        throw not_normal("centralizer_of_factor: K not contained in H");
    if (!is_normal(g, h) || !is_normal(g, k))
        throw not_normal("centralizer_of_factor: factor terms must be normal");
    // x centralizes H/K iff conjugation by x fixes every generator coset hK
    std::vector<Bitset> gen_cosets;
    gen_cosets.reserve(h.gens.size());
    for (int t : h.gens) {
        Bitset coset(g.n);
        k.members.for_each([&](int v) { coset.set(g.mul(t, v)); });
        gen_cosets.push_back(std::move(coset));
    }
    Bitset members(g.n);
    for (int x = 0; x < g.n; ++x) {
        bool ok = true;
        for (size_t i = 0; i < gen_cosets.size(); ++i)
            if (!gen_cosets[i].test(g.conj(h.gens[i], x))) {
                ok = false;
                break;
            }
        if (ok) members.set(x);
    }
    return subgroup_generated(g, members);
}

/// Relative variant: centralizer taken inside `ambient`, with normality of
/// h and k relative to ambient assumed checked by the caller.
inline Subgroup centralizer_of_factor_in(const GroupTable& g,
                                         const Subgroup& ambient,
                                         const Subgroup& h, const Subgroup& k) {
    std::vector<Bitset> gen_cosets;
    for (int t : h.gens) {
        Bitset coset(g.n);
        k.members.for_each([&](int v) { coset.set(g.mul(t, v)); });
        gen_cosets.push_back(std::move(coset));
    }
    Bitset members(g.n);
    ambient.members.for_each([&](int x) {
        for (size_t i = 0; i < gen_cosets.size(); ++i)
            if (!gen_cosets[i].test(g.conj(h.gens[i], x))) return;
        members.set(x);
    });
    return subgroup_generated(g, members);
}

/// One chief series 1 = N0 < N1 < ... < Nk = G, built by repeatedly lifting
/// the canonically-least minimal normal subgroup of the current quotient.
/// When `through` is given (a normal subgroup), the series passes through it.
inline std::vector<ChiefFactor> chief_series(
    const GroupTable& g, const Subgroup* through = nullptr) {
    std::vector<ChiefFactor> factors;
    Subgroup current = trivial_subgroup(g);
    while (current.order < Int(g.n)) {
        QuotientMap qm = quotient(g, current);
        auto mins = minimal_normal_subgroups(*qm.target);
        const Subgroup* chosen = nullptr;
        if (through && current.order < through->order) {
            Bitset img = qm.push_forward(through->members);
            for (const Subgroup& m : mins)
                if (m.members.subset_of(img)) {
                    chosen = &m;
                    break;
                }
        } else {
            chosen = &mins.front();
        }
        Subgroup next = qm.pull_back_subgroup(g, *chosen);
        ChiefFactor f;
        f.factor_order = next.order / current.order;
        f.centralizer = centralizer_of_factor(g, next, current);
        f.top = std::move(next);
        f.bottom = std::move(current);
        current = f.top;
        factors.push_back(std::move(f));
    }
    return factors;
}

/// Sylow tower: a chain of subgroups, each normal in g, whose successive
/// factor orders are full Sylow orders of g.
inline bool has_sylow_tower(const GroupTable& g) {
    if (g.n == 1) return true;
    for (Int p : primes_of(g.n)) {
        auto syl = sylow_subgroups(g, p);
        if (syl.size() != 1) continue;
        QuotientMap qm = quotient(g, syl.front());
        if (has_sylow_tower(*qm.target)) return true;
    }
    return false;
}

/// Iterated normal closure test for classical subnormality. Independent of
/// the chain-search machinery; used as an oracle and by the degeneration
/// checks.
inline bool is_subnormal_classical(const GroupTable& g, const Subgroup& a) {
    Subgroup level = whole_group(g);
    while (true) {
        if (level.members == a.members) return true;
        Subgroup next = normal_closure_in(g, level, a);
        if (next.members == level.members) return false;
        level = std::move(next);
    }
}

/// Brute-force isomorphism test for small groups (generator backtracking).
inline bool is_isomorphic(const GroupTable& a, const GroupTable& b) {
    if (a.n != b.n) return false;
    if (a.n == 1) return true;
    auto orders_a = a.element_orders();
    auto orders_b = b.element_orders();
    {
        auto sa = orders_a, sb = orders_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    // small generating sequence for a, greedily
    std::vector<int> gens;
    Subgroup span = trivial_subgroup(a);
    while (span.order < Int(a.n)) {
        for (int x = 1; x < a.n; ++x)
            if (!span.members.test(x)) {
                gens.push_back(x);
                span = extend_subgroup(a, span, x);
                break;
            }
    }
    // express every element of a as (previous element, generator index)
    std::vector<std::pair<int, int>> word(size_t(a.n), {-1, -1});
    std::vector<int> bfs{0};
    std::vector<char> seen(size_t(a.n), 0);
    seen[0] = 1;
    for (size_t i = 0; i < bfs.size(); ++i)
        for (size_t gi = 0; gi < gens.size(); ++gi) {
            int v = a.mul(bfs[i], gens[gi]);
            if (!seen[size_t(v)]) {
                seen[size_t(v)] = 1;
                word[size_t(v)] = {bfs[i], int(gi)};
                bfs.push_back(v);
            }
        }

    std::vector<int> image(gens.size(), -1);
    std::vector<int> phi(size_t(a.n), -1);
    auto try_assign = [&](auto&& self, size_t gi) -> bool {
        if (gi == gens.size()) {
            // build phi from generator images along BFS words
            std::fill(phi.begin(), phi.end(), -1);
            phi[0] = 0;
            std::vector<char> used(size_t(b.n), 0);
            used[0] = 1;
            for (int v : bfs) {
                if (v == 0) continue;
                auto [prev, g_idx] = word[size_t(v)];
                int img = b.mul(phi[size_t(prev)], image[size_t(g_idx)]);
                if (phi[size_t(v)] == -1) {
                    if (used[size_t(img)]) return false;
                    used[size_t(img)] = 1;
                    phi[size_t(v)] = img;
                } else if (phi[size_t(v)] != img) {
                    return false;
                }
            }
            for (int x = 0; x < a.n; ++x)
                for (int y = 0; y < a.n; ++y)
                    if (phi[size_t(a.mul(x, y))] !=
                        b.mul(phi[size_t(x)], phi[size_t(y)]))
                        return false;
            return true;
        }
        for (int cand = 0; cand < b.n; ++cand) {
            if (orders_b[size_t(cand)] != orders_a[size_t(gens[gi])]) continue;
            image[gi] = cand;
            if (self(self, gi + 1)) return true;
        }
        return false;
    };
    return try_assign(try_assign, 0);
}

} // namespace sigma
