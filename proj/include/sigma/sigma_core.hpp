#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "sigma/partition.hpp"
#include "sigma/structure.hpp"

namespace sigma {

inline SigmaSignature sigma_of_group(const PrimePartition& sigma,
                                     const GroupTable& g) {
    return sigma_of_int(sigma, g.n);
}

inline bool is_sigma_primary(const PrimePartition& sigma, const GroupTable& g) {
    return is_sigma_primary_order(sigma, g.n);
}
inline bool is_sigma_primary(const PrimePartition& sigma, const Subgroup& a) {
    return is_sigma_primary_order(sigma, a.order);
}

/// σ(|A|) ∩ σ(|G:A|) = ∅.
inline bool is_sigma_hall(const PrimePartition& sigma, const GroupTable& g,
                          const Subgroup& a) {
    return !signatures_intersect(sigma_of_int(sigma, a.order),
                                 sigma_of_int(sigma, Int(g.n) / a.order));
}

/// Relative form: A a σ-Hall subgroup of V (orders only).
inline bool is_sigma_hall_in(const PrimePartition& sigma, const Subgroup& v,
                             const Subgroup& a) {
    return !signatures_intersect(sigma_of_int(sigma, a.order),
                                 sigma_of_int(sigma, v.order / a.order));
}

/// All Hall σ_i-subgroups of g for one block of σ(G).
inline std::vector<Subgroup> hall_block_subgroups(const PrimePartition& sigma,
                                                  const GroupTable& g,
                                                  BlockId block) {
    SigmaSignature sig = sigma_of_group(sigma, g);
    if (!signature_contains(sig, block))
        throw unknown_block("block " + sigma.render_block(block) +
                            " does not meet pi(G)");
    return hall_subgroups(g, sigma.block_primes_in(block, primes_of(g.n)));
}

/// One complete Hall σ-set: exactly one Hall σ_i-subgroup per block of
/// σ(G). The implicit trivial member is not stored.
struct HallSigmaSet {
    std::vector<std::pair<BlockId, Subgroup>> members; // sorted by block
};

/// Hall σ_i-subgroups per block, in canonical block order. The Cartesian
/// product of these lists is exactly the family of complete Hall σ-sets.
inline std::vector<std::pair<BlockId, std::vector<Subgroup>>>
hall_subgroups_by_block(const PrimePartition& sigma, const GroupTable& g) {
    std::vector<std::pair<BlockId, std::vector<Subgroup>>> out;
    for (BlockId b : sigma_of_group(sigma, g))
        out.emplace_back(b, hall_block_subgroups(sigma, g, b));
    return out;
}

inline std::vector<HallSigmaSet> complete_hall_sigma_sets(
    const PrimePartition& sigma, const GroupTable& g) {
    auto by_block = hall_subgroups_by_block(sigma, g);
    for (auto& [b, list] : by_block)
        if (list.empty()) return {};
    std::vector<HallSigmaSet> out;
    HallSigmaSet current;
    auto rec = [&](auto&& self, size_t i) -> void {
        if (i == by_block.size()) {
            out.push_back(current);
            return;
        }
        for (const Subgroup& h : by_block[i].second) {
            current.members.emplace_back(by_block[i].first, h);
            self(self, i + 1);
            current.members.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline bool is_sigma_full(const PrimePartition& sigma, const GroupTable& g) {
    for (auto& [b, list] : hall_subgroups_by_block(sigma, g))
        if (list.empty()) return false;
    return true;
}

/// σ-nilpotency via normal Hall subgroups: for each block of σ(G) the set
/// of σ_i-elements must form a subgroup of full block order. Equivalent to
/// G being a direct product of σ-primary groups.
inline bool is_sigma_nilpotent(const PrimePartition& sigma,
                               const GroupTable& g) {
    const auto& ord = g.element_orders();
    for (BlockId b : sigma_of_group(sigma, g)) {
        Int target = block_part(sigma, b, g.n);
        std::vector<int> members;
        for (int x = 0; x < g.n; ++x) {
            Int o = ord[size_t(x)];
            if (block_part(sigma, b, o) == o) members.push_back(x);
        }
        if (Int(members.size()) != target) return false;
        Bitset bits(g.n);
        for (int x : members) bits.set(x);
        for (int x : members)
            for (int y : members)
                if (!bits.test(g.mul(x, y))) return false;
    }
    return true;
}

/// Same criterion evaluated inside a subgroup, without re-indexing.
inline bool is_sigma_nilpotent_rel(const PrimePartition& sigma,
                                   const GroupTable& g, const Subgroup& h) {
    const auto& ord = g.element_orders();
    for (BlockId b : sigma_of_int(sigma, h.order)) {
        Int target = block_part(sigma, b, h.order);
        std::vector<int> members;
        h.members.for_each([&](int x) {
            Int o = ord[size_t(x)];
            if (block_part(sigma, b, o) == o) members.push_back(x);
        });
        if (Int(members.size()) != target) return false;
        Bitset bits(g.n);
        for (int x : members) bits.set(x);
        for (int x : members)
            for (int y : members)
                if (!bits.test(g.mul(x, y))) return false;
    }
    return true;
}

/// Every chief factor σ-primary.
inline bool is_sigma_soluble(const PrimePartition& sigma, const GroupTable& g) {
    for (const ChiefFactor& f : chief_series(g))
        if (!is_sigma_primary_order(sigma, f.factor_order)) return false;
    return true;
}

/// A complete Hall σ-set whose members pairwise permute, if any enumerated
/// set qualifies.
inline std::optional<std::vector<Subgroup>> sigma_basis(
    const PrimePartition& sigma, const GroupTable& g) {
    for (const HallSigmaSet& hs : complete_hall_sigma_sets(sigma, g)) {
        bool ok = true;
        for (size_t i = 0; i < hs.members.size() && ok; ++i)
            for (size_t j = i + 1; j < hs.members.size() && ok; ++j)
                if (!sets_permute(g, hs.members[i].second.members,
                                  hs.members[j].second.members))
                    ok = false;
        if (ok) {
            std::vector<Subgroup> basis;
            for (auto& [b, h] : hs.members) basis.push_back(h);
            return basis;
        }
    }
    return std::nullopt;
}

} // namespace sigma
