#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "sigma/arith.hpp"
#include "sigma/errors.hpp"

namespace sigma {

/// Identifies one block of a prime partition. For the finest partition the
/// id is the prime itself; otherwise ids are explicit-block indices with -1
/// reserved for the residual block. Ids are only meaningful relative to the
/// partition that produced them.
struct BlockId {
    Int v = -1;
    friend bool operator==(BlockId a, BlockId b) { return a.v == b.v; }
    friend bool operator!=(BlockId a, BlockId b) { return a.v != b.v; }
    friend bool operator<(BlockId a, BlockId b) {
        // residual sorts last
        if ((a.v < 0) != (b.v < 0)) return b.v < 0;
        return a.v < b.v;
    }
};

inline constexpr BlockId kResidualBlock{-1};

/// A partition of the primes: either the finest partition (every prime its
/// own block) or finitely many explicit blocks plus one residual block
/// holding every other prime. The coarsest partition has zero explicit
/// blocks.
struct PrimePartition {
    bool finest = false;
    std::vector<std::vector<Int>> blocks; // disjoint, each sorted

    BlockId block_of(Int p) const {
        if (finest) return BlockId{p};
        for (size_t i = 0; i < blocks.size(); ++i)
            if (std::binary_search(blocks[i].begin(), blocks[i].end(), p))
                return BlockId{Int(i)};
        return kResidualBlock;
    }

    std::string render_block(BlockId b) const {
        if (finest) return "{" + std::to_string(b.v) + "}";
        if (b == kResidualBlock) return "rest";
        std::string s = "{";
        const auto& blk = blocks[size_t(b.v)];
        for (size_t i = 0; i < blk.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(blk[i]);
        }
        return s + "}";
    }

    /// Primes of the block restricted to a concrete prime set pi.
    std::vector<Int> block_primes_in(BlockId b,
                                     const std::vector<Int>& pi) const {
        std::vector<Int> out;
        for (Int p : pi)
            if (block_of(p) == b) out.push_back(p);
        return out;
    }

    std::string render() const {
        if (finest) return "finest";
        if (blocks.empty()) return "coarsest";
        std::string s;
        for (size_t i = 0; i < blocks.size(); ++i)
            s += render_block(BlockId{Int(i)}) + "|";
        return s + "rest";
    }
};

/// σ(n): the set of block ids meeting pi(n). σ(1) is empty.
using SigmaSignature = std::vector<BlockId>; // sorted, unique

inline SigmaSignature sigma_of_int(const PrimePartition& sigma, Int n) {
    std::set<Int> raw;
    SigmaSignature sig;
    for (Int p : primes_of(n)) {
        BlockId b = sigma.block_of(p);
        if (raw.insert(b.v).second) sig.push_back(b);
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

inline bool signatures_intersect(const SigmaSignature& a,
                                 const SigmaSignature& b) {
    for (BlockId x : a)
        for (BlockId y : b)
            if (x == y) return true;
    return false;
}

inline bool signature_contains(const SigmaSignature& sig, BlockId b) {
    return std::find(sig.begin(), sig.end(), b) != sig.end();
}

/// |σ(n)| <= 1.
inline bool is_sigma_primary_order(const PrimePartition& sigma, Int n) {
    return sigma_of_int(sigma, n).size() <= 1;
}

/// The σ_i-part of n for one block: the largest divisor supported on the
/// block's primes.
inline Int block_part(const PrimePartition& sigma, BlockId b, Int n) {
    Int m = 1;
    for (Int p : primes_of(n))
        if (sigma.block_of(p) == b) m *= p_part(n, p);
    return m;
}

/// Part of n supported on a set Pi of blocks.
inline Int pi_part(const PrimePartition& sigma, const std::vector<BlockId>& Pi,
                   Int n) {
    Int m = 1;
    for (Int p : primes_of(n))
        if (signature_contains(Pi, sigma.block_of(p))) m *= p_part(n, p);
    return m;
}

inline PrimePartition finest_partition() {
    PrimePartition s;
    s.finest = true;
    return s;
}

inline PrimePartition coarsest_partition() { return PrimePartition{}; }

/// Grammar: `finest | coarsest | "{p,..}" ("|" "{p,..}")* "|rest"`.
inline PrimePartition parse_partition(const std::string& text) {
    std::string t;
    for (char c : text)
        if (c != ' ' && c != '\t') t += c;
    if (t == "finest") return finest_partition();
    if (t == "coarsest") return coarsest_partition();
    PrimePartition out;
    std::set<Int> used;
    size_t i = 0;
    while (i < t.size()) {
        if (t[i] != '{') {
            if (t.compare(i, 4, "rest") == 0 && i + 4 == t.size()) {
                if (out.blocks.empty())
                    throw parse_error("partition needs at least one explicit "
                                      "block before |rest");
                return out;
            }
            throw parse_error("expected '{' or 'rest' in partition: " + text);
        }
        ++i;
        std::vector<Int> block;
        while (true) {
            size_t start = i;
            while (i < t.size() && isdigit(t[i])) ++i;
            if (start == i)
                throw parse_error("expected prime in partition: " + text);
            Int p = std::stoll(t.substr(start, i - start));
            if (!is_prime(p))
                throw parse_error(std::to_string(p) + " is not prime");
            if (!used.insert(p).second)
                throw overlapping_blocks("prime " + std::to_string(p) +
                                         " appears in two blocks");
            block.push_back(p);
            if (i < t.size() && t[i] == ',') {
                ++i;
                continue;
            }
            if (i < t.size() && t[i] == '}') {
                ++i;
                break;
            }
            throw parse_error("expected ',' or '}' in partition: " + text);
        }
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
        if (i >= t.size() || t[i] != '|')
            throw parse_error("explicit blocks must end with |rest: " + text);
        ++i;
    }
    throw parse_error("partition must end with rest: " + text);
}

} // namespace sigma
