#pragma once

// Independent oracles used by the test suites. These deliberately avoid the
// library's search machinery: subgroup enumeration goes through subset
// closure, residuals through explicit quotient tables, and so on.

#include "sigma/sigma.hpp"

namespace oracle {

using namespace sigma;

/// All subgroups by brute force: power-set scan for tiny groups, closure of
/// all <=4-element generator subsets otherwise (every group of order <= 32
/// needs at most 4 generators... elementary abelian 2-groups are the worst
/// case and C2^5 has order 32, so cap use at order 24 corpora).
inline std::vector<Bitset> brute_force_subgroups(const GroupTable& g) {
    std::vector<Bitset> out;
    std::unordered_map<Bitset, char, BitsetHash> seen;
    auto add = [&](const Bitset& b) {
        if (seen.emplace(b, 1).second) out.push_back(b);
    };
    if (g.n <= 16) {
        // subsets containing the identity, tested for closure
        for (uint64_t mask = 0; mask < (uint64_t(1) << (g.n - 1)); ++mask) {
            Bitset b(g.n);
            b.set(0);
            for (int i = 1; i < g.n; ++i)
                if (mask & (uint64_t(1) << (i - 1))) b.set(i);
            bool closed = true;
            std::vector<int> mem = b.to_vector();
            for (int x : mem) {
                if (!b.test(g.inv(x))) {
                    closed = false;
                    break;
                }
                for (int y : mem)
                    if (!b.test(g.mul(x, y))) {
                        closed = false;
                        break;
                    }
                if (!closed) break;
            }
            if (closed) add(b);
        }
        return out;
    }
    // generator-subset closure
    std::vector<int> elems(size_t(g.n));
    for (int i = 0; i < g.n; ++i) elems[size_t(i)] = i;
    add(g.trivial_bitset());
    for (int a = 1; a < g.n; ++a) {
        add(closure_bitset(g, {a}));
        for (int b = a + 1; b < g.n; ++b) {
            add(closure_bitset(g, {a, b}));
            for (int c = b + 1; c < g.n; ++c) {
                add(closure_bitset(g, {a, b, c}));
                for (int d = c + 1; d < g.n; ++d)
                    add(closure_bitset(g, {a, b, c, d}));
            }
        }
    }
    return out;
}

/// σ-nilpotent residual by definition: intersect all normal subgroups whose
/// quotient table is σ-nilpotent.
inline Bitset residual_by_quotients(const PrimePartition& sigma,
                                    const GroupTable& g) {
    Bitset res = g.full_bitset();
    for (const Subgroup& n : normal_subgroups(g)) {
        QuotientMap qm = quotient(g, n);
        if (is_sigma_nilpotent(sigma, *qm.target)) res &= n.members;
    }
    return res;
}

/// σ-nilpotency by the definition: a direct decomposition into σ-primary
/// normal subgroups covering G (searched recursively over normal subgroups).
inline bool sigma_nilpotent_by_decomposition(const PrimePartition& sigma,
                                             const GroupTable& g) {
    if (g.n == 1) return true;
    const auto& normals = normal_subgroups(g);
    // collect σ-primary normal subgroups with pairwise coprime-block orders
    std::vector<const Subgroup*> primary;
    for (const Subgroup& n : normals)
        if (n.order > 1 && is_sigma_primary_order(sigma, n.order))
            primary.push_back(&n);
    // greedy: one factor per block of σ(G), orders must multiply to |G| and
    // intersections must be trivial
    SigmaSignature blocks = sigma_of_int(sigma, g.n);
    std::vector<const Subgroup*> chosen;
    for (BlockId b : blocks) {
        Int want = block_part(sigma, b, g.n);
        const Subgroup* found = nullptr;
        for (const Subgroup* p : primary)
            if (p->order == want &&
                signature_contains(sigma_of_int(sigma, p->order), b))
                found = p;
        if (!found) return false;
        chosen.push_back(found);
    }
    Int prod = 1;
    for (const Subgroup* p : chosen) prod *= p->order;
    if (prod != Int(g.n)) return false;
    for (size_t i = 0; i < chosen.size(); ++i)
        for (size_t j = i + 1; j < chosen.size(); ++j) {
            Bitset meet = chosen[i]->members;
            meet &= chosen[j]->members;
            if (meet.count() != 1) return false;
        }
    return true;
}

inline const GroupTable& shared_group(const std::string& spec) {
    static std::map<std::string, std::shared_ptr<const GroupTable>> cache;
    static std::mutex m;
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(spec);
    if (it == cache.end()) {
        BuildConfig cfg;
        it = cache
                 .emplace(spec, std::make_shared<const GroupTable>(
                                    parse_group_spec(spec, cfg)))
                 .first;
    }
    return *it->second;
}

} // namespace oracle
