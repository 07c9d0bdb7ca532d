#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sigma/sigma_core.hpp"

namespace sigma {

// ---------------------------------------------------------------------------
// σ-subnormal chains

struct SubnormalStep {
    enum Kind { normal_step, primary_step } kind = normal_step;
    BlockId block{}; // quotient block for primary steps
};

struct SubnormalChain {
    std::vector<Subgroup> chain; // ascending, from A to the top group
    std::vector<SubnormalStep> steps;
};

/// One admissible chain step from b up to c (b < c): either b ⊴ c or
/// c/(b_c) is σ-primary.
inline std::optional<SubnormalStep> chain_step(const PrimePartition& sigma,
                                               const GroupTable& g,
                                               const Subgroup& b,
                                               const Subgroup& c) {
    if (is_normal_in(g, c, b)) return SubnormalStep{SubnormalStep::normal_step, {}};
    Subgroup core = normal_core_in(g, c, b);
    SigmaSignature sig = sigma_of_int(sigma, c.order / core.order);
    if (sig.size() <= 1)
        return SubnormalStep{SubnormalStep::primary_step,
                             sig.empty() ? BlockId{} : sig.front()};
    return std::nullopt;
}

namespace detail {

struct SsnScan {
    std::vector<char> reachable;
    std::vector<int> parent;
    std::vector<SubnormalStep> step;
};

/// Reachability of `top` from below through admissible chain steps, over an
/// arbitrary poset of subgroups that is closed upwards (contains every
/// subgroup between each member and top that the search may need).
inline SsnScan ssn_scan(const PrimePartition& sigma, const GroupTable& g,
                        const std::vector<Subgroup>& poset, const Bitset& top) {
    size_t n = poset.size();
    SsnScan out;
    out.reachable.assign(n, 0);
    out.parent.assign(n, -1);
    out.step.assign(n, {});
    std::vector<size_t> by_order(n);
    for (size_t i = 0; i < n; ++i) by_order[i] = i;
    std::sort(by_order.begin(), by_order.end(), [&](size_t a, size_t b) {
        return canonical_less(poset[b], poset[a]); // descending
    });
    for (size_t oi = 0; oi < n; ++oi) {
        size_t i = by_order[oi];
        if (poset[i].members == top) {
            out.reachable[i] = 1;
            continue;
        }
        for (size_t j = 0; j < n; ++j) {
            if (!out.reachable[j] || poset[j].order <= poset[i].order) continue;
            if (!poset[i].members.subset_of(poset[j].members)) continue;
            if (auto st = chain_step(sigma, g, poset[i], poset[j])) {
                out.reachable[i] = 1;
                out.parent[i] = int(j);
                out.step[i] = *st;
                break;
            }
        }
    }
    return out;
}

inline SubnormalChain reconstruct_chain(const std::vector<Subgroup>& poset,
                                        const SsnScan& scan, size_t start) {
    SubnormalChain w;
    size_t i = start;
    w.chain.push_back(poset[i]);
    while (scan.parent[i] >= 0) {
        w.steps.push_back(scan.step[i]);
        i = size_t(scan.parent[i]);
        w.chain.push_back(poset[i]);
    }
    return w;
}

} // namespace detail

/// σ-subnormality of a in `within` (default: the whole group), decided by
/// graph search over the overgroup poset. Returns a witness chain.
inline std::optional<SubnormalChain> is_sigma_subnormal_in(
    const PrimePartition& sigma, const GroupTable& g, const Subgroup& a,
    const Subgroup& within) {
    auto poset = overgroups_in(g, a, within.members);
    auto scan = detail::ssn_scan(sigma, g, poset, within.members);
    for (size_t i = 0; i < poset.size(); ++i)
        if (poset[i].members == a.members)
            return scan.reachable[i]
                       ? std::optional<SubnormalChain>(
                             detail::reconstruct_chain(poset, scan, i))
                       : std::nullopt;
    return std::nullopt; // a not inside `within`
}

inline std::optional<SubnormalChain> is_sigma_subnormal(
    const PrimePartition& sigma, const GroupTable& g, const Subgroup& a) {
    return is_sigma_subnormal_in(sigma, g, a, whole_group(g));
}

/// Honest re-validation of a witness chain straight from the definition:
/// full elementwise normality / normal-core computations, no memoization.
inline bool validate_subnormal_chain(const PrimePartition& sigma,
                                     const GroupTable& g,
                                     const SubnormalChain& w) {
    if (w.chain.empty()) return false;
    if (w.steps.size() + 1 != w.chain.size()) return false;
    for (size_t i = 0; i + 1 < w.chain.size(); ++i) {
        const Subgroup& b = w.chain[i];
        const Subgroup& c = w.chain[i + 1];
        if (!b.members.subset_of(c.members)) return false;
        bool normal = true;
        std::vector<int> cs = c.members.to_vector();
        for (int x : cs) {
            Bitset conj(g.n);
            b.members.for_each([&](int m) { conj.set(g.conj(m, x)); });
            if (conj != b.members) {
                normal = false;
                break;
            }
        }
        if (normal) continue;
        Bitset core = b.members;
        for (int x : cs) {
            Bitset conj(g.n);
            b.members.for_each([&](int m) { conj.set(g.conj(m, x)); });
            core &= conj;
        }
        if (sigma_of_int(sigma, c.order / core.count()).size() > 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// S-permutability and σ-permutability

/// AP = PA for every Sylow subgroup P of g.
inline bool is_s_permutable(const GroupTable& g, const Subgroup& a) {
    for (Int p : primes_of(g.n))
        for (const Subgroup& syl : sylow_subgroups(g, p))
            if (!sets_permute(g, a.members, syl.members)) return false;
    return true;
}

namespace detail {

/// Hall σ_i-subgroups of one block grouped into conjugacy classes
/// (deterministic order).
inline std::vector<std::vector<Subgroup>> hall_classes_of(
    const GroupTable& g, std::vector<Subgroup> halls) {
    std::vector<std::vector<Subgroup>> classes;
    std::unordered_map<Bitset, char, BitsetHash> assigned;
    for (const Subgroup& h : halls) {
        if (assigned.count(h.members)) continue;
        std::vector<Subgroup> cls = conjugates(g, h);
        std::sort(cls.begin(), cls.end(), canonical_less);
        for (const Subgroup& c : cls) assigned.emplace(c.members, 1);
        classes.push_back(std::move(cls));
    }
    return classes;
}

} // namespace detail

/// σ-permutability: some complete Hall σ-set H with A·Hˣ = Hˣ·A for every
/// member H and every x. Because a complete Hall σ-set picks one Hall
/// subgroup per block independently, the existential over sets factorizes
/// into one existential per block over Hall-subgroup conjugacy classes;
/// the returned witness is an explicit set assembled from the chosen
/// classes. Requires g to be σ-full.
inline std::optional<HallSigmaSet> is_sigma_permutable(
    const PrimePartition& sigma, const GroupTable& g, const Subgroup& a) {
    HallSigmaSet witness;
    for (auto& [block, halls] : hall_subgroups_by_block(sigma, g)) {
        if (halls.empty())
            throw not_sigma_full("no Hall " + sigma.render_block(block) +
                                 "-subgroup");
        bool found = false;
        for (const auto& cls : detail::hall_classes_of(g, halls)) {
            bool all = true;
            for (const Subgroup& h : cls)
                if (!sets_permute(g, a.members, h.members)) {
                    all = false;
                    break;
                }
            if (all) {
                witness.members.emplace_back(block, cls.front());
                found = true;
                break;
            }
        }
        if (!found) return std::nullopt;
    }
    return witness;
}

/// Honest validation: every member really is a Hall block subgroup and a
/// permutes with each conjugate under every x in G.
inline bool validate_permutability_witness(const PrimePartition& sigma,
                                           const GroupTable& g,
                                           const Subgroup& a,
                                           const HallSigmaSet& hs) {
    SigmaSignature sig = sigma_of_group(sigma, g);
    if (hs.members.size() != sig.size()) return false;
    for (auto& [block, h] : hs.members) {
        if (!signature_contains(sig, block)) return false;
        if (h.order != block_part(sigma, block, g.n)) return false;
        for (int x = 0; x < g.n; ++x) {
            Subgroup hx = conjugate_subgroup(g, h, x);
            if (!sets_permute(g, a.members, hx.members)) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Residuals

namespace detail {

/// G/N σ-nilpotent, decided from a list of normal subgroups of the ambient
/// group E by the normal-Hall-per-block criterion in the quotient.
inline bool quotient_sigma_nilpotent(const PrimePartition& sigma, Int e_order,
                                     const Subgroup& n,
                                     const std::vector<Subgroup>& normals_in_e) {
    Int q = e_order / n.order;
    for (BlockId b : sigma_of_int(sigma, q)) {
        Int want = n.order * block_part(sigma, b, q);
        bool found = false;
        for (const Subgroup& w : normals_in_e)
            if (w.order == want && n.members.subset_of(w.members)) {
                found = true;
                break;
            }
        if (!found) return false;
    }
    return true;
}

} // namespace detail

/// G^{N_σ}: the intersection of all normal subgroups with σ-nilpotent
/// quotient. Uses the normal-subgroup enumeration only (no lattice).
inline Subgroup sigma_nilpotent_residual(const PrimePartition& sigma,
                                         const GroupTable& g) {
    const auto& normals = normal_subgroups(g);
    Bitset res = g.full_bitset();
    for (const Subgroup& n : normals)
        if (detail::quotient_sigma_nilpotent(sigma, g.n, n, normals)) res &= n.members;
    Subgroup residual = subgroup_generated(g, res);
    if (!detail::quotient_sigma_nilpotent(sigma, g.n, residual, normals))
        throw std::logic_error("sigma-nilpotent residual fails its own "
                               "quotient test; formation invariant broken");
    return residual;
}

inline Subgroup nilpotent_residual(const GroupTable& g) {
    return sigma_nilpotent_residual(finest_partition(), g);
}

/// O^{σ_i}(G): the smallest normal subgroup with σ_i-group quotient,
/// generated by all elements of σ_i'-order.
inline Subgroup block_residual(const PrimePartition& sigma, const GroupTable& g,
                               BlockId block) {
    const auto& ord = g.element_orders();
    std::vector<int> gens;
    for (int x = 1; x < g.n; ++x)
        if (block_part(sigma, block, ord[size_t(x)]) == 1) gens.push_back(x);
    return subgroup_generated(g, gens);
}

/// Same, inside a subgroup.
inline Subgroup block_residual_rel(const PrimePartition& sigma,
                                   const GroupTable& g, const Subgroup& h,
                                   BlockId block) {
    const auto& ord = g.element_orders();
    std::vector<int> gens;
    h.members.for_each([&](int x) {
        if (x != 0 && block_part(sigma, block, ord[size_t(x)]) == 1)
            gens.push_back(x);
    });
    return subgroup_generated(g, gens);
}

// ---------------------------------------------------------------------------
// Per-(group, σ) analysis context over the full subgroup lattice.

class SigmaContext : public detail::SigmaContextBase {
public:
    const GroupTable& g;
    PrimePartition sigma;
    std::vector<Subgroup> lattice;
    SigmaSignature blocks;                       // σ(G)
    bool sigma_full = false;
    int whole = -1, trivial = -1;
    std::vector<char> normal_in_g;
    std::vector<char> ssn; // σ-subnormal in G
    std::vector<int> ssn_parent;
    std::vector<SubnormalStep> ssn_step;
    std::vector<char> sperm;                     // valid iff sigma_full
    std::vector<std::vector<int>> normals_in;    // per subgroup: normal subgroups of it
    std::vector<int> residual_in;                // per subgroup: index of its σ-nilpotent residual
    std::vector<char> sigma_nilp;                // residual trivial
    // Hall σ_i-subgroup conjugacy classes per block, as lattice indices.
    std::vector<std::pair<BlockId, std::vector<std::vector<int>>>> hall_classes;

    static std::shared_ptr<const SigmaContext> get(const GroupTable& g,
                                                   const PrimePartition& sigma);

    int index_of(const Bitset& members) const {
        auto it = index_.find(members);
        return it == index_.end() ? -1 : it->second;
    }
    const Subgroup& at(int i) const { return lattice[size_t(i)]; }
    bool contains(int big, int small) const {
        return lattice[size_t(small)].members.subset_of(lattice[size_t(big)].members);
    }

    bool quo_sigma_nilpotent(int e, int n) const {
        std::vector<Subgroup> norms;
        for (int i : normals_in[size_t(e)]) norms.push_back(lattice[size_t(i)]);
        return detail::quotient_sigma_nilpotent(sigma, lattice[size_t(e)].order,
                                                lattice[size_t(n)], norms);
    }

    /// The lexicographically first complete Hall σ-set.
    HallSigmaSet first_hall_set() const {
        if (!sigma_full) throw not_sigma_full("group admits no complete Hall σ-set");
        HallSigmaSet hs;
        for (auto& [b, classes] : hall_classes) {
            int best = -1;
            for (const auto& cls : classes)
                for (int i : cls)
                    if (best < 0 || canonical_less(at(i), at(best))) best = i;
            hs.members.emplace_back(b, at(best));
        }
        return hs;
    }

    explicit SigmaContext(const GroupTable& g_, const PrimePartition& sigma_)
        : g(g_), sigma(sigma_) {
        lattice = all_subgroups(g);
        for (size_t i = 0; i < lattice.size(); ++i) {
            index_.emplace(lattice[i].members, int(i));
            if (lattice[i].order == Int(g.n)) whole = int(i);
            if (lattice[i].order == 1) trivial = int(i);
        }
        blocks = sigma_of_group(sigma, g);
        normal_in_g.resize(lattice.size());
        for (size_t i = 0; i < lattice.size(); ++i)
            normal_in_g[i] = is_normal(g, lattice[i]) ? 1 : 0;

        // Hall classes per block
        sigma_full = true;
        for (BlockId b : blocks) {
            Int part = block_part(sigma, b, g.n);
            std::vector<Subgroup> halls;
            for (const Subgroup& s : lattice)
                if (s.order == part) halls.push_back(s);
            if (halls.empty()) sigma_full = false;
            std::vector<std::vector<int>> classes;
            for (auto& cls : detail::hall_classes_of(g, halls)) {
                std::vector<int> ids;
                for (const Subgroup& c : cls) ids.push_back(index_of(c.members));
                classes.push_back(std::move(ids));
            }
            hall_classes.emplace_back(b, std::move(classes));
        }

        // σ-subnormal set
        auto scan = detail::ssn_scan(sigma, g, lattice, g.full_bitset());
        ssn = std::move(scan.reachable);
        ssn_parent = std::move(scan.parent);
        ssn_step = std::move(scan.step);

        // σ-permutable set
        sperm.assign(lattice.size(), 0);
        if (sigma_full) {
            for (size_t i = 0; i < lattice.size(); ++i) {
                bool ok = true;
                for (auto& [b, classes] : hall_classes) {
                    bool block_ok = false;
                    for (const auto& cls : classes) {
                        bool all = true;
                        for (int hid : cls)
                            if (!sets_permute(g, lattice[i].members,
                                              at(hid).members)) {
                                all = false;
                                break;
                            }
                        if (all) {
                            block_ok = true;
                            break;
                        }
                    }
                    if (!block_ok) {
                        ok = false;
                        break;
                    }
                }
                sperm[i] = ok ? 1 : 0;
            }
        }

        // normal subgroups of each subgroup, then residuals
        normals_in.resize(lattice.size());
        for (size_t e = 0; e < lattice.size(); ++e)
            for (size_t s = 0; s < lattice.size(); ++s)
                if (lattice[s].members.subset_of(lattice[e].members) &&
                    is_normal_in(g, lattice[e], lattice[s]))
                    normals_in[e].push_back(int(s));

        residual_in.resize(lattice.size());
        sigma_nilp.resize(lattice.size());
        for (size_t e = 0; e < lattice.size(); ++e) {
            std::vector<Subgroup> norms;
            for (int i : normals_in[e]) norms.push_back(lattice[size_t(i)]);
            Bitset res = lattice[e].members;
            for (const Subgroup& n : norms)
                if (detail::quotient_sigma_nilpotent(sigma, lattice[e].order, n,
                                                     norms))
                    res &= n.members;
            int idx = index_of(subgroup_generated(g, res).members);
            if (idx < 0)
                throw std::logic_error("residual not found in lattice");
            residual_in[e] = idx;
            sigma_nilp[e] = lattice[size_t(idx)].order == 1 ? 1 : 0;
            if (!quo_sigma_nilpotent(int(e), idx))
                throw std::logic_error("relative residual fails quotient test");
        }
    }

private:
    std::unordered_map<Bitset, int, BitsetHash> index_;
};

inline std::shared_ptr<const SigmaContext> SigmaContext::get(
    const GroupTable& g, const PrimePartition& sigma) {
    std::string key = sigma.render();
    {
        std::lock_guard<std::mutex> lock(g.caches->ctx_m);
        auto it = g.caches->sigma_ctxs.find(key);
        if (it != g.caches->sigma_ctxs.end())
            return std::static_pointer_cast<const SigmaContext>(it->second);
    }
    auto ctx = std::make_shared<const SigmaContext>(g, sigma);
    std::lock_guard<std::mutex> lock(g.caches->ctx_m);
    auto [it, inserted] = g.caches->sigma_ctxs.emplace(key, ctx);
    return std::static_pointer_cast<const SigmaContext>(it->second);
}

// ---------------------------------------------------------------------------
// H_σ-embeddings

struct EmbeddingWitness {
    enum Kind { subnormal, permutable, normal } kind = normal;
    Subgroup container;
    std::optional<SubnormalChain> chain;  // for kind == subnormal
    std::optional<HallSigmaSet> hall_set; // for kind == permutable
};

/// A is H_σ-subnormally (permutably, normally) embedded in G if A is a
/// σ-Hall subgroup of some σ-subnormal (σ-permutable, normal) subgroup.
/// Returns the first witness in canonical container order.
inline std::optional<EmbeddingWitness> is_h_sigma_embedded(
    const PrimePartition& sigma, const GroupTable& g, const Subgroup& a,
    EmbeddingWitness::Kind kind) {
    if (kind == EmbeddingWitness::normal) {
        for (const Subgroup& v : normal_subgroups(g)) {
            if (!a.members.subset_of(v.members)) continue;
            if (!is_sigma_hall_in(sigma, v, a)) continue;
            EmbeddingWitness w;
            w.kind = kind;
            w.container = v;
            return w;
        }
        return std::nullopt;
    }
    if (kind == EmbeddingWitness::permutable && !is_sigma_full(sigma, g))
        throw not_sigma_full("H_σ-permutable embedding needs a σ-full group");
    for (const Subgroup& v : overgroups(g, a)) {
        if (!is_sigma_hall_in(sigma, v, a)) continue;
        EmbeddingWitness w;
        w.kind = kind;
        w.container = v;
        if (kind == EmbeddingWitness::subnormal) {
            w.chain = is_sigma_subnormal(sigma, g, v);
            if (w.chain) return w;
        } else {
            w.hall_set = is_sigma_permutable(sigma, g, v);
            if (w.hall_set) return w;
        }
    }
    return std::nullopt;
}

/// Honest re-validation of an embedding witness: containment, the σ-Hall
/// arithmetic, and the container property (normality elementwise, the chain
/// from its own validator, or the Hall-set witness against every conjugate).
inline bool validate_embedding_witness(const PrimePartition& sigma,
                                       const GroupTable& g, const Subgroup& a,
                                       const EmbeddingWitness& w) {
    if (!a.members.subset_of(w.container.members)) return false;
    if (!is_sigma_hall_in(sigma, w.container, a)) return false;
    switch (w.kind) {
    case EmbeddingWitness::normal:
        for (int x = 0; x < g.n; ++x) {
            Bitset conj(g.n);
            w.container.members.for_each(
                [&](int m) { conj.set(g.conj(m, x)); });
            if (conj != w.container.members) return false;
        }
        return true;
    case EmbeddingWitness::subnormal:
        if (!w.chain || w.chain->chain.empty()) return false;
        if (w.chain->chain.front().members != w.container.members)
            return false;
        if (w.chain->chain.back().members != g.full_bitset()) return false;
        return validate_subnormal_chain(sigma, g, *w.chain);
    case EmbeddingWitness::permutable:
        if (!w.hall_set) return false;
        return validate_permutability_witness(sigma, g, w.container,
                                              *w.hall_set);
    }
    return false;
}

// ---------------------------------------------------------------------------
// σ-Carter subgroups (N_σ-covering subgroups)

/// All σ-Carter subgroups: σ-nilpotent H such that E = NH for every
/// H <= E <= G and every N ⊴ E with E/N σ-nilpotent.
inline std::vector<Subgroup> sigma_carter_subgroups(const SigmaContext& ctx) {
    std::vector<Subgroup> out;
    for (size_t h = 0; h < ctx.lattice.size(); ++h) {
        if (!ctx.sigma_nilp[h]) continue;
        bool covering = true;
        for (size_t e = 0; e < ctx.lattice.size() && covering; ++e) {
            if (!ctx.contains(int(e), int(h))) continue;
            for (int n : ctx.normals_in[e]) {
                if (!ctx.contains(n, ctx.residual_in[e])) continue;
                if (product_order(ctx.at(n), ctx.at(int(h))) !=
                    ctx.at(int(e)).order) {
                    covering = false;
                    break;
                }
            }
        }
        if (covering) out.push_back(ctx.at(int(h)));
    }
    return out;
}

inline std::vector<Subgroup> sigma_carter_subgroups(const PrimePartition& sigma,
                                                    const GroupTable& g) {
    return sigma_carter_subgroups(*SigmaContext::get(g, sigma));
}

// ---------------------------------------------------------------------------
// Chief-factor classification and HσE recognition

/// σ-central iff the semidirect product (H/K) ⋊ (G/C_G(H/K)) is σ-primary,
/// decided by order arithmetic on the displayed product.
inline bool is_sigma_central(const PrimePartition& sigma, const GroupTable& g,
                             const ChiefFactor& f) {
    SigmaSignature s1 = sigma_of_int(sigma, f.factor_order);
    SigmaSignature s2 =
        sigma_of_int(sigma, Int(g.n) / f.centralizer.order);
    std::set<Int> all;
    for (BlockId b : s1) all.insert(b.v);
    for (BlockId b : s2) all.insert(b.v);
    return all.size() <= 1;
}

enum class FactorClass { central, eccentric };

inline FactorClass classify_chief_factor(const PrimePartition& sigma,
                                         const GroupTable& g,
                                         const ChiefFactor& f) {
    return is_sigma_central(sigma, g, f) ? FactorClass::central
                                         : FactorClass::eccentric;
}

struct HsigmaEReport {
    bool is_hsigmae = false;
    std::string failed_clause; // empty iff is_hsigmae
    Subgroup d;                // σ-nilpotent residual
    std::vector<Subgroup> complements;
    std::vector<Subgroup> good_complements; // complements passing clause (iii)
    // Alternate reading of "acts irreducibly": on P/Φ(P) rather than on P.
    std::vector<Subgroup> good_complements_frattini_reading;
};

namespace detail {

/// Sylow tower of the subgroup d, with all terms normal in d, over the
/// ambient lattice.
inline bool sylow_tower_rel(const SigmaContext& ctx, int d) {
    const Subgroup& dd = ctx.at(d);
    auto rec = [&](auto&& self, Int have_order, int bottom) -> bool {
        if (have_order == dd.order) return true;
        for (Int p : primes_of(dd.order)) {
            if (have_order % p == 0) continue;
            Int want = have_order * p_part(dd.order, p);
            for (int w : ctx.normals_in[size_t(d)]) {
                if (ctx.at(w).order != want) continue;
                if (!ctx.contains(w, bottom)) continue;
                if (self(self, want, w)) return true;
            }
        }
        return false;
    };
    return rec(rec, 1, ctx.trivial);
}

/// Chief factors of the subgroup h below d: one chief series of h passing
/// through d, truncated at d. Entries are (top, bottom) lattice indices.
inline std::vector<std::pair<int, int>> chief_factors_below_rel(
    const SigmaContext& ctx, int h, int d) {
    std::vector<std::pair<int, int>> out;
    int cur = ctx.trivial;
    while (ctx.at(cur).order < ctx.at(d).order) {
        int best = -1;
        for (int w : ctx.normals_in[size_t(h)]) {
            if (ctx.at(w).order <= ctx.at(cur).order) continue;
            if (!ctx.contains(d, w) || !ctx.contains(w, cur)) continue;
            // minimal normal-in-h over cur: no normal-in-h strictly between
            bool minimal = true;
            for (int v : ctx.normals_in[size_t(h)])
                if (ctx.at(v).order > ctx.at(cur).order &&
                    ctx.at(v).order < ctx.at(w).order && ctx.contains(w, v) &&
                    ctx.contains(v, cur)) {
                    minimal = false;
                    break;
                }
            if (!minimal) continue;
            if (best < 0 || canonical_less(ctx.at(w), ctx.at(best))) best = w;
        }
        if (best < 0) throw std::logic_error("chief series through d stalled");
        out.emplace_back(best, cur);
        cur = best;
    }
    return out;
}

} // namespace detail

/// HσE recognition for the subgroup h of the context group (h = G for the
/// group-level predicate). Clauses are evaluated in a fixed order and the
/// first failure is recorded.
inline HsigmaEReport hsigmae_report(const SigmaContext& ctx, int h) {
    const GroupTable& g = ctx.g;
    HsigmaEReport rep;
    int d = ctx.residual_in[size_t(h)];
    rep.d = ctx.at(d);
    const Subgroup& hh = ctx.at(h);

    if (!is_sigma_hall_in(ctx.sigma, hh, rep.d)) {
        rep.failed_clause = "residual-not-hall";
        return rep;
    }
    if (sigma_of_int(ctx.sigma, rep.d.order).size() !=
        primes_of(rep.d.order).size()) {
        rep.failed_clause = "sigma-pi-mismatch";
        return rep;
    }
    for (const Subgroup& m : ctx.lattice) {
        if (!m.members.subset_of(hh.members)) continue;
        if (m.order * rep.d.order != hh.order) continue;
        Bitset meet = m.members;
        meet &= rep.d.members;
        if (meet.count() == 1) rep.complements.push_back(m);
    }
    if (rep.complements.empty()) {
        rep.failed_clause = "no-complement";
        return rep;
    }
    if (!detail::sylow_tower_rel(ctx, d)) {
        rep.failed_clause = "no-sylow-tower";
        return rep;
    }
    for (auto [top, bottom] : detail::chief_factors_below_rel(ctx, h, d)) {
        Subgroup cent = centralizer_of_factor_in(g, hh, ctx.at(top), ctx.at(bottom));
        Int factor = ctx.at(top).order / ctx.at(bottom).order;
        SigmaSignature s1 = sigma_of_int(ctx.sigma, factor);
        SigmaSignature s2 = sigma_of_int(ctx.sigma, hh.order / cent.order);
        std::set<Int> all;
        for (BlockId b : s1) all.insert(b.v);
        for (BlockId b : s2) all.insert(b.v);
        if (all.size() <= 1) { // σ-central factor below D
            rep.failed_clause = "central-factor-below-D";
            return rep;
        }
    }
    // clause (iii): M acts irreducibly on every M-invariant Sylow subgroup
    // of D; M is quantified existentially over the complements. The primary
    // reading treats invariant subgroups of P; the alternate reading works
    // modulo the Frattini subgroup of P.
    for (const Subgroup& m : rep.complements) {
        bool good = true, good_frattini = true;
        for (Int p : primes_of(rep.d.order)) {
            Int syl_order = p_part(rep.d.order, p);
            for (const Subgroup& pgrp : ctx.lattice) {
                if (pgrp.order != syl_order ||
                    !pgrp.members.subset_of(rep.d.members))
                    continue;
                if (!normalized_by(g, pgrp, m.gens)) continue;
                // Frattini subgroup of pgrp over the ambient lattice
                Bitset frat = pgrp.members;
                for (const Subgroup& mx : ctx.lattice) {
                    if (mx.order >= pgrp.order ||
                        !mx.members.subset_of(pgrp.members))
                        continue;
                    bool maximal = true;
                    for (const Subgroup& t : ctx.lattice)
                        if (t.order > mx.order && t.order < pgrp.order &&
                            mx.members.subset_of(t.members) &&
                            t.members.subset_of(pgrp.members)) {
                            maximal = false;
                            break;
                        }
                    if (maximal) frat &= mx.members;
                }
                for (const Subgroup& w : ctx.lattice) {
                    if (w.order <= 1 || w.order >= pgrp.order) continue;
                    if (!w.members.subset_of(pgrp.members)) continue;
                    if (!normalized_by(g, w, m.gens)) continue;
                    good = false;
                    if (frat.subset_of(w.members) && w.members != frat)
                        good_frattini = false;
                }
            }
        }
        if (good) rep.good_complements.push_back(m);
        if (good_frattini) rep.good_complements_frattini_reading.push_back(m);
    }
    if (rep.good_complements.empty()) {
        rep.failed_clause = "reducible-sylow-action";
        return rep;
    }
    rep.is_hsigmae = true;
    return rep;
}

/// Group-level HσE predicate.
inline HsigmaEReport is_hsigmae(const PrimePartition& sigma,
                                const GroupTable& g) {
    auto ctx = SigmaContext::get(g, sigma);
    return hsigmae_report(*ctx, ctx->whole);
}

} // namespace sigma
