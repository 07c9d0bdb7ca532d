#pragma once

#include <random>

#include "sigma/theorems.hpp"

namespace sigma {

struct SuiteReport {
    std::vector<Json> violations;
    long long instantiations = 0;
    bool ok() const { return violations.empty(); }
};

struct LemmaBudget {
    int samples = 30; // per clause family
    uint64_t seed = 0; // 0: derive from (|G|, σ)
};

namespace detail {

inline void record(SuiteReport& rep, const std::string& lemma,
                   const GroupTable& g, const PrimePartition& sigma,
                   Json data) {
    data["lemma"] = lemma;
    data["group_order"] = g.n;
    data["sigma"] = sigma.render();
    rep.violations.push_back(std::move(data));
}

/// σ-permutability of a inside the subgroup k, over the ambient lattice.
inline bool sigma_permutable_rel(const SigmaContext& ctx, const Subgroup& k,
                                 const Subgroup& a) {
    const GroupTable& g = ctx.g;
    for (BlockId b : sigma_of_int(ctx.sigma, k.order)) {
        Int part = block_part(ctx.sigma, b, k.order);
        std::vector<Subgroup> halls;
        for (const Subgroup& s : ctx.lattice)
            if (s.order == part && s.members.subset_of(k.members))
                halls.push_back(s);
        if (halls.empty()) return false; // k not σ-full
        bool block_ok = false;
        std::unordered_map<Bitset, char, BitsetHash> assigned;
        for (const Subgroup& h : halls) {
            if (assigned.count(h.members)) continue;
            auto cls = conjugates_under(g, h, k.gens);
            for (const Subgroup& c : cls) assigned.emplace(c.members, 1);
            bool all = true;
            for (const Subgroup& c : cls)
                if (!sets_permute(g, a.members, c.members)) {
                    all = false;
                    break;
                }
            if (all) {
                block_ok = true;
                break;
            }
        }
        if (!block_ok) return false;
    }
    return true;
}

} // namespace detail

/// Statement-level property suite for the basic lemmas. Samples subgroup
/// tuples within the budget, checks every clause whose hypotheses hold and
/// returns the violations (empty on success).
inline SuiteReport lemma_suite(const GroupTable& g, const PrimePartition& sigma,
                               LemmaBudget budget = {},
                               bool inject_fault = false) {
    SuiteReport rep;
    uint64_t seed = budget.seed ? budget.seed
                                : (uint64_t(g.n) * 1000003u) ^
                                      std::hash<std::string>{}(sigma.render());
    std::mt19937_64 rng(seed);

    // A corrupted context must never enter the shared cache.
    std::shared_ptr<const SigmaContext> ctx_holder;
    std::optional<FaultInjectionGuard> guard;
    if (inject_fault) {
        guard.emplace();
        ctx_holder = std::make_shared<const SigmaContext>(g, sigma);
    } else {
        ctx_holder = SigmaContext::get(g, sigma);
    }
    const SigmaContext& ctx = *ctx_holder;

    auto pick = [&](size_t n) { return size_t(rng() % n); };

    std::vector<int> ssn_idx, sperm_idx, normal_idx;
    for (size_t i = 0; i < ctx.lattice.size(); ++i) {
        if (ctx.ssn[i]) ssn_idx.push_back(int(i));
        if (ctx.sigma_full && ctx.sperm[i]) sperm_idx.push_back(int(i));
        if (ctx.normal_in_g[i]) normal_idx.push_back(int(i));
    }
    bool soluble = is_sigma_soluble(sigma, g);

    std::map<int, QuotientMap> quotients; // by normal subgroup index
    auto quotient_by = [&](int n) -> const QuotientMap& {
        auto it = quotients.find(n);
        if (it == quotients.end())
            it = quotients.emplace(n, quotient(g, ctx.at(n))).first;
        return it->second;
    };

    auto random_blocks = [&]() {
        std::vector<BlockId> pi;
        for (BlockId b : ctx.blocks)
            if (rng() & 1) pi.push_back(b);
        if (pi.empty() && !ctx.blocks.empty())
            pi.push_back(ctx.blocks[pick(ctx.blocks.size())]);
        return pi;
    };

    // ---- Lemma family 2.1 -------------------------------------------------
    for (int it = 0; it < budget.samples; ++it) {
        const Subgroup& a = ctx.at(ssn_idx[pick(ssn_idx.size())]);
        const Subgroup& k = ctx.at(int(pick(ctx.lattice.size())));
        const Subgroup& n = ctx.at(normal_idx[pick(normal_idx.size())]);

        { // (1) A ∩ K σ-subnormal in K
            Subgroup meet = intersect(g, a, k);
            ++rep.instantiations;
            if (!is_sigma_subnormal_in(sigma, g, meet, k))
                detail::record(rep, "2.1(1)", g, sigma,
                               Json{{"a_order", a.order}, {"k_order", k.order}});
        }
        { // (2) K σ-subnormal: A ∩ K and <A, K> σ-subnormal in G
            int ki = ctx.index_of(k.members);
            if (ctx.ssn[size_t(ki)]) {
                ++rep.instantiations;
                Subgroup meet = intersect(g, a, k);
                std::vector<int> joint = a.gens;
                joint.insert(joint.end(), k.gens.begin(), k.gens.end());
                Subgroup join = subgroup_generated(g, joint);
                int mi = ctx.index_of(meet.members);
                int ji = ctx.index_of(join.members);
                if (!ctx.ssn[size_t(mi)] || !ctx.ssn[size_t(ji)])
                    detail::record(rep, "2.1(2)", g, sigma,
                                   Json{{"a_order", a.order},
                                        {"k_order", k.order}});
            }
        }
        { // (3) AN/N σ-subnormal in G/N
            ++rep.instantiations;
            const QuotientMap& qm = quotient_by(ctx.index_of(n.members));
            Subgroup img = qm.push_forward_subgroup(a);
            if (!is_sigma_subnormal(sigma, *qm.target, img))
                detail::record(rep, "2.1(3)", g, sigma,
                               Json{{"a_order", a.order}, {"n_order", n.order}});
        }
        { // (4) Hall Π-subgroup meets A in a Hall Π-subgroup of A
            auto pi = random_blocks();
            Int part = pi_part(sigma, pi, g.n);
            std::vector<int> hall_ids;
            for (size_t s = 0; s < ctx.lattice.size(); ++s)
                if (ctx.at(int(s)).order == part) hall_ids.push_back(int(s));
            if (part > 1 && !hall_ids.empty()) {
                const Subgroup& h = ctx.at(hall_ids[pick(hall_ids.size())]);
                bool a_meets_pi = false;
                for (BlockId b : sigma_of_int(sigma, a.order))
                    if (signature_contains(pi, b)) a_meets_pi = true;
                if (a_meets_pi) {
                    ++rep.instantiations;
                    Subgroup meet = intersect(g, a, h);
                    if (meet.order == 1 ||
                        meet.order != pi_part(sigma, pi, a.order))
                        detail::record(rep, "2.1(4)", g, sigma,
                                       Json{{"a_order", a.order},
                                            {"h_order", h.order},
                                            {"meet_order", meet.order}});
                }
            }
        }
        { // (5) |G:A| a σ_i-number: O^{σ_i}(A) = O^{σ_i}(G)
            SigmaSignature idx_sig = sigma_of_int(sigma, Int(g.n) / a.order);
            if (idx_sig.size() == 1) {
                ++rep.instantiations;
                BlockId b = idx_sig.front();
                Subgroup oa = block_residual_rel(sigma, g, a, b);
                Subgroup og = block_residual(sigma, g, b);
                if (oa.members != og.members)
                    detail::record(rep, "2.1(5)", g, sigma,
                                   Json{{"a_order", a.order},
                                        {"block", sigma.render_block(b)}});
            }
        }
        { // (6) V/N σ-subnormal in G/N lifts to V σ-subnormal in G
            const Subgroup& v = ctx.at(int(pick(ctx.lattice.size())));
            if (n.members.subset_of(v.members)) {
                const QuotientMap& qm = quotient_by(ctx.index_of(n.members));
                Subgroup img = qm.push_forward_subgroup(v);
                if (is_sigma_subnormal(sigma, *qm.target, img)) {
                    ++rep.instantiations;
                    if (!ctx.ssn[size_t(ctx.index_of(v.members))])
                        detail::record(rep, "2.1(6)", g, sigma,
                                       Json{{"v_order", v.order},
                                            {"n_order", n.order}});
                }
            }
        }
        { // (7) σ-subnormal in σ-subnormal is σ-subnormal
            const Subgroup& k2 = ctx.at(int(pick(ctx.lattice.size())));
            if (k2.members.subset_of(a.members) &&
                is_sigma_subnormal_in(sigma, g, k2, a)) {
                ++rep.instantiations;
                if (!ctx.ssn[size_t(ctx.index_of(k2.members))])
                    detail::record(rep, "2.1(7)", g, sigma,
                                   Json{{"k_order", k2.order},
                                        {"a_order", a.order}});
            }
        }
    }

    // ---- Lemma family 2.2 -------------------------------------------------
    if (ctx.sigma_full && !sperm_idx.empty()) {
        for (int it = 0; it < budget.samples; ++it) {
            const Subgroup& a = ctx.at(sperm_idx[pick(sperm_idx.size())]);
            const Subgroup& k = ctx.at(int(pick(ctx.lattice.size())));
            const Subgroup& n = ctx.at(normal_idx[pick(normal_idx.size())]);

            { // (1) AN/N σ-permutable in G/N
                ++rep.instantiations;
                const QuotientMap& qm = quotient_by(ctx.index_of(n.members));
                Subgroup img = qm.push_forward_subgroup(a);
                bool ok = false;
                try {
                    ok = is_sigma_permutable(sigma, *qm.target, img).has_value();
                } catch (const not_sigma_full&) {
                    ok = false;
                }
                if (!ok)
                    detail::record(rep, "2.2(1)", g, sigma,
                                   Json{{"a_order", a.order},
                                        {"n_order", n.order}});
            }
            if (soluble) { // (2) A ∩ K σ-permutable in K
                ++rep.instantiations;
                Subgroup meet = intersect(g, a, k);
                if (!detail::sigma_permutable_rel(ctx, k, meet))
                    detail::record(rep, "2.2(2)", g, sigma,
                                   Json{{"a_order", a.order},
                                        {"k_order", k.order}});
            }
            if (soluble) { // (3) K/N σ-permutable in G/N lifts
                const Subgroup& kk = ctx.at(int(pick(ctx.lattice.size())));
                if (n.members.subset_of(kk.members)) {
                    const QuotientMap& qm = quotient_by(ctx.index_of(n.members));
                    Subgroup img = qm.push_forward_subgroup(kk);
                    bool hyp = false;
                    try {
                        hyp = is_sigma_permutable(sigma, *qm.target, img)
                                  .has_value();
                    } catch (const not_sigma_full&) {
                    }
                    if (hyp) {
                        ++rep.instantiations;
                        if (!ctx.sperm[size_t(ctx.index_of(kk.members))])
                            detail::record(rep, "2.2(3)", g, sigma,
                                           Json{{"k_order", kk.order},
                                                {"n_order", n.order}});
                    }
                }
            }
            { // (4) σ-permutable implies σ-subnormal
                ++rep.instantiations;
                if (!ctx.ssn[size_t(ctx.index_of(a.members))])
                    detail::record(rep, "2.2(4)", g, sigma,
                                   Json{{"a_order", a.order}});
            }
            if (soluble) { // (5) intersection of σ-permutables σ-permutable
                const Subgroup& k2 = ctx.at(sperm_idx[pick(sperm_idx.size())]);
                ++rep.instantiations;
                Subgroup meet = intersect(g, k2, a);
                if (!ctx.sperm[size_t(ctx.index_of(meet.members))])
                    detail::record(rep, "2.2(5)", g, sigma,
                                   Json{{"a_order", a.order},
                                        {"k_order", k2.order}});
            }
        }
    }

    // ---- Lemma 2.3 --------------------------------------------------------
    {
        Subgroup phi = frattini_subgroup(g);
        for (int it = 0; it < budget.samples; ++it) {
            const Subgroup& h = ctx.at(normal_idx[pick(normal_idx.size())]);
            Subgroup hphi = intersect(g, h, phi);
            auto pi = random_blocks();
            SigmaSignature upper = sigma_of_int(sigma, h.order / hphi.order);
            bool pi_group = true;
            for (BlockId b : upper)
                if (!signature_contains(pi, b)) pi_group = false;
            if (pi_group) {
                ++rep.instantiations;
                Int want = pi_part(sigma, pi, h.order);
                bool found = false;
                for (size_t e = 0; e < ctx.lattice.size(); ++e)
                    if (ctx.at(int(e)).order == want && ctx.normal_in_g[e] &&
                        ctx.at(int(e)).members.subset_of(h.members))
                        found = true;
                if (!found)
                    detail::record(rep, "2.3", g, sigma,
                                   Json{{"h_order", h.order},
                                        {"pi_part", want}});
            }
            // σ-nilpotent addendum
            int hi = ctx.index_of(h.members);
            int pi_idx = ctx.index_of(hphi.members);
            if (pi_idx >= 0 && ctx.quo_sigma_nilpotent(hi, pi_idx)) {
                ++rep.instantiations;
                if (!ctx.sigma_nilp[size_t(hi)])
                    detail::record(rep, "2.3-nilpotent", g, sigma,
                                   Json{{"h_order", h.order}});
            }
        }
    }

    // ---- Lemma 2.4 --------------------------------------------------------
    {
        int d = ctx.residual_in[size_t(ctx.whole)];
        bool all_prime = true;
        for (auto [top, bottom] :
             detail::chief_factors_below_rel(ctx, ctx.whole, d))
            if (!is_prime(ctx.at(top).order / ctx.at(bottom).order))
                all_prime = false;
        if (all_prime) {
            ++rep.instantiations;
            if (!detail::nilpotent_rel(ctx, d))
                detail::record(rep, "2.4", g, sigma,
                               Json{{"residual_order", ctx.at(d).order}});
        }
    }

    // ---- Lemma 2.6 --------------------------------------------------------
    if (soluble) {
        { // (i) σ-basis whose members' Sylows pairwise G-permute
            ++rep.instantiations;
            bool found = false;
            for (const HallSigmaSet& hs : complete_hall_sigma_sets(sigma, g)) {
                bool basis = true;
                for (size_t i = 0; i < hs.members.size() && basis; ++i)
                    for (size_t j = i + 1; j < hs.members.size() && basis; ++j)
                        if (!sets_permute(g, hs.members[i].second.members,
                                          hs.members[j].second.members))
                            basis = false;
                if (!basis) continue;
                bool strong = true;
                for (size_t i = 0; i < hs.members.size() && strong; ++i)
                    for (size_t j = 0; j < hs.members.size() && strong; ++j) {
                        if (i == j) continue;
                        for (Int p : primes_of(hs.members[i].second.order)) {
                            Int part = p_part(hs.members[i].second.order, p);
                            for (const Subgroup& syl : ctx.lattice) {
                                if (syl.order != part ||
                                    !syl.members.subset_of(
                                        hs.members[i].second.members))
                                    continue;
                                for (Int q :
                                     primes_of(hs.members[j].second.order)) {
                                    Int qpart =
                                        p_part(hs.members[j].second.order, q);
                                    for (const Subgroup& syl2 : ctx.lattice) {
                                        if (syl2.order != qpart ||
                                            !syl2.members.subset_of(
                                                hs.members[j].second.members))
                                            continue;
                                        bool permutes = false;
                                        for (int x = 0; x < g.n && !permutes;
                                             ++x) {
                                            Subgroup cx = conjugate_subgroup(
                                                g, syl2, x);
                                            if (sets_permute(g, syl.members,
                                                             cx.members))
                                                permutes = true;
                                        }
                                        if (!permutes) strong = false;
                                    }
                                }
                            }
                        }
                    }
                if (strong) {
                    found = true;
                    break;
                }
            }
            if (!found)
                detail::record(rep, "2.6(i)", g, sigma, Json::object());
        }
        for (int it = 0; it < budget.samples; ++it) { // (ii)
            auto pi = random_blocks();
            Int part = pi_part(sigma, pi, g.n);
            std::vector<int> halls;
            for (size_t s = 0; s < ctx.lattice.size(); ++s)
                if (ctx.at(int(s)).order == part) halls.push_back(int(s));
            ++rep.instantiations;
            if (halls.empty()) {
                detail::record(rep, "2.6(ii)", g, sigma,
                               Json{{"missing_hall_part", part}});
                continue;
            }
            const Subgroup& e = ctx.at(halls.front());
            auto e_conjugates = conjugates(g, e);
            bool ok = true;
            for (const Subgroup& a : ctx.lattice) {
                bool pi_sub = true;
                for (BlockId b : sigma_of_int(sigma, a.order))
                    if (!signature_contains(pi, b)) pi_sub = false;
                if (!pi_sub) continue;
                bool inside = false;
                for (const Subgroup& c : e_conjugates)
                    if (a.members.subset_of(c.members)) inside = true;
                if (!inside) ok = false;
            }
            for (Int p : primes_of(g.n))
                for (const Subgroup& syl : sylow_subgroups(g, p)) {
                    bool permutes = false;
                    for (int x = 0; x < g.n && !permutes; ++x) {
                        Subgroup cx = conjugate_subgroup(g, syl, x);
                        if (sets_permute(g, e.members, cx.members))
                            permutes = true;
                    }
                    if (!permutes) ok = false;
                }
            if (!ok)
                detail::record(rep, "2.6(ii)", g, sigma,
                               Json{{"hall_part", part}});
        }
    }

    // ---- Lemma 2.7 --------------------------------------------------------
    {
        // subgroups that are H_σ-subnormally embedded in G, with a container
        std::vector<std::pair<int, int>> embedded; // (subgroup, container)
        for (size_t h = 0; h < ctx.lattice.size(); ++h)
            for (size_t v = 0; v < ctx.lattice.size(); ++v)
                if (ctx.ssn[v] && ctx.contains(int(v), int(h)) &&
                    is_sigma_hall_in(sigma, ctx.at(int(v)), ctx.at(int(h)))) {
                    embedded.emplace_back(int(h), int(v));
                    break;
                }
        auto embedded_in = [&](const Subgroup& top, const Subgroup& h) {
            for (const Subgroup& v : ctx.lattice) {
                if (!h.members.subset_of(v.members) ||
                    !v.members.subset_of(top.members))
                    continue;
                if (!is_sigma_hall_in(sigma, v, h)) continue;
                if (is_sigma_subnormal_in(sigma, g, v, top)) return true;
            }
            return false;
        };
        for (int it = 0; it < budget.samples && !embedded.empty(); ++it) {
            auto [hi, vi] = embedded[pick(embedded.size())];
            const Subgroup& h = ctx.at(hi);
            { // (1) embedding restricts to intermediate subgroups
                const Subgroup& e = ctx.at(int(pick(ctx.lattice.size())));
                if (h.members.subset_of(e.members)) {
                    ++rep.instantiations;
                    if (!embedded_in(e, h))
                        detail::record(rep, "2.7(1)", g, sigma,
                                       Json{{"h_order", h.order},
                                            {"e_order", e.order}});
                }
            }
            { // (2) embedding passes to quotients
                const Subgroup& r = ctx.at(normal_idx[pick(normal_idx.size())]);
                ++rep.instantiations;
                const QuotientMap& qm = quotient_by(ctx.index_of(r.members));
                Subgroup img = qm.push_forward_subgroup(h);
                if (!is_h_sigma_embedded(sigma, *qm.target, img,
                                         EmbeddingWitness::subnormal))
                    detail::record(rep, "2.7(2)", g, sigma,
                                   Json{{"h_order", h.order},
                                        {"r_order", r.order}});
            }
            { // (3) meet with a σ-subnormal subgroup stays embedded
                const Subgroup& s = ctx.at(ssn_idx[pick(ssn_idx.size())]);
                ++rep.instantiations;
                Subgroup meet = intersect(g, h, s);
                if (!embedded_in(ctx.at(ctx.whole), meet))
                    detail::record(rep, "2.7(3)", g, sigma,
                                   Json{{"h_order", h.order},
                                        {"s_order", s.order}});
            }
            { // (4) σ-primary index forces σ-Hall or σ-subnormal
                if (sigma_of_int(sigma, Int(g.n) / h.order).size() <= 1) {
                    ++rep.instantiations;
                    bool hall = is_sigma_hall(sigma, g, h);
                    bool ssn_h = ctx.ssn[size_t(hi)];
                    if (!hall && !ssn_h)
                        detail::record(rep, "2.7(4)", g, sigma,
                                       Json{{"h_order", h.order}});
                }
            }
        }
    }

    // ---- Lemma 2.8 --------------------------------------------------------
    if (soluble) {
        for (int it = 0; it < budget.samples; ++it) {
            const Subgroup& h = ctx.at(ssn_idx[pick(ssn_idx.size())]);
            SigmaSignature idx_sig = sigma_of_int(sigma, Int(g.n) / h.order);
            if (idx_sig.size() != 1) continue;
            BlockId b = idx_sig.front();
            Int comp_order = h.order / block_part(sigma, b, h.order);
            std::vector<int> comps;
            for (size_t s = 0; s < ctx.lattice.size(); ++s)
                if (ctx.at(int(s)).order == comp_order &&
                    ctx.at(int(s)).members.subset_of(h.members))
                    comps.push_back(int(s));
            if (comps.empty()) continue;
            const Subgroup& bb = ctx.at(comps[pick(comps.size())]);
            ++rep.instantiations;
            Subgroup nz = normalizer(g, bb);
            Bitset prod = product_bitset(g, h.members, nz.members);
            if (prod != g.full_bitset())
                detail::record(rep, "2.8", g, sigma,
                               Json{{"h_order", h.order},
                                    {"b_order", bb.order}});
        }
    }

    // ---- Lemma 2.9 --------------------------------------------------------
    {
        auto series = chief_series(g);
        for (const ChiefFactor& f : series) {
            // abelian factor?
            bool abelian = true;
            std::vector<int> hm = f.top.members.to_vector();
            for (size_t i = 0; i < hm.size() && abelian; ++i)
                for (size_t j = i + 1; j < hm.size(); ++j)
                    if (!f.bottom.members.test(g.comm(hm[i], hm[j]))) {
                        abelian = false;
                        break;
                    }
            if (!abelian) continue;
            for (const Subgroup& v : maximal_subgroups(g)) {
                if (!f.bottom.members.subset_of(v.members)) continue;
                if (product_order(f.top, v) != Int(g.n)) continue;
                ++rep.instantiations;
                Subgroup vg = normal_core(g, v);
                Int lhs = Int(g.n) / vg.order;
                Int rhs = f.factor_order * (Int(g.n) / f.centralizer.order);
                bool ok = lhs == rhs;
                if (ok && lhs <= 120) {
                    // constructed isomorphism G/V_G = (H/K) ⋊ (G/C)
                    QuotientMap lq = quotient(g, vg);
                    Materialized mh = materialize(g, f.top);
                    Subgroup k_in_h = mh.push_down_subgroup(f.bottom);
                    QuotientMap fq = quotient(*mh.table, k_in_h);
                    QuotientMap cq = quotient(g, f.centralizer);
                    // representatives of the centralizer quotient
                    std::vector<int> creps(size_t(cq.target->n), -1);
                    for (int x = 0; x < g.n; ++x)
                        if (creps[size_t(cq.element_map[size_t(x)])] < 0)
                            creps[size_t(cq.element_map[size_t(x)])] = x;
                    std::vector<std::vector<int>> action(
                        size_t(cq.target->n),
                        std::vector<int>(size_t(fq.target->n)));
                    std::vector<int> freps(size_t(fq.target->n), -1);
                    for (int y = 0; y < mh.table->n; ++y)
                        if (freps[size_t(fq.element_map[size_t(y)])] < 0)
                            freps[size_t(fq.element_map[size_t(y)])] = y;
                    bool built = true;
                    for (int r = 0; r < cq.target->n && built; ++r) {
                        int rep_g = creps[size_t(r)];
                        for (int e = 0; e < fq.target->n; ++e) {
                            int h_parent = mh.to_parent[size_t(freps[size_t(e)])];
                            int conj =
                                g.mul(g.mul(rep_g, h_parent), g.inv(rep_g));
                            int down = mh.from_parent[size_t(conj)];
                            if (down < 0) {
                                built = false;
                                break;
                            }
                            action[size_t(r)][size_t(e)] =
                                fq.element_map[size_t(down)];
                        }
                    }
                    if (!built) {
                        ok = false;
                    } else {
                        try {
                            GroupTable sd = semidirect_product(
                                *fq.target, *cq.target, action, 1 << 20);
                            ok = is_isomorphic(*lq.target, sd);
                        } catch (const error&) {
                            ok = false;
                        }
                    }
                }
                if (!ok)
                    detail::record(rep, "2.9", g, sigma,
                                   Json{{"factor_order", f.factor_order},
                                        {"v_order", v.order}});
            }
        }
    }

    return rep;
}

/// Classical degenerations at the finest partition.
inline SuiteReport degeneration_suite(const GroupTable& g) {
    SuiteReport rep;
    PrimePartition finest = finest_partition();
    auto ctx_ptr = SigmaContext::get(g, finest);
    const SigmaContext& ctx = *ctx_ptr;

    // σ-nilpotent <=> nilpotent
    ++rep.instantiations;
    if (is_sigma_nilpotent(finest, g) != is_nilpotent(g))
        detail::record(rep, "degeneration:nilpotent", g, finest, Json::object());

    bool soluble = true;
    for (const ChiefFactor& f : chief_series(g))
        if (!is_prime(f.factor_order)) soluble = false;

    for (size_t i = 0; i < ctx.lattice.size(); ++i) {
        const Subgroup& s = ctx.at(int(i));
        { // σ-permutable <=> S-permutable
            ++rep.instantiations;
            if ((ctx.sigma_full && ctx.sperm[i] == 1) != is_s_permutable(g, s))
                detail::record(rep, "degeneration:s-permutable", g, finest,
                               Json{{"order", s.order}});
        }
        { // σ-subnormal <=> subnormal
            ++rep.instantiations;
            if ((ctx.ssn[i] == 1) != is_subnormal_classical(g, s))
                detail::record(rep, "degeneration:subnormal", g, finest,
                               Json{{"order", s.order}});
        }
        { // H_σ-normally embedded <=> Hall normally embedded (gcd route)
            ++rep.instantiations;
            bool lhs = false, rhs = false;
            for (size_t v = 0; v < ctx.lattice.size(); ++v) {
                if (!ctx.normal_in_g[v] || !ctx.contains(int(v), int(i)))
                    continue;
                if (is_sigma_hall_in(finest, ctx.at(int(v)), s)) lhs = true;
                if (std::gcd(s.order, ctx.at(int(v)).order / s.order) == 1)
                    rhs = true;
            }
            if (lhs != rhs)
                detail::record(rep, "degeneration:hall-normally-embedded", g,
                               finest, Json{{"order", s.order}});
        }
    }

    if (soluble) { // σ-Carter <=> self-normalizing nilpotent
        auto carter = sigma_carter_subgroups(ctx);
        std::vector<Bitset> classical;
        for (const Subgroup& s : ctx.lattice) {
            if (!detail::nilpotent_rel(ctx, ctx.index_of(s.members))) continue;
            Subgroup nz = normalizer(g, s);
            if (nz.members == s.members) classical.push_back(s.members);
        }
        ++rep.instantiations;
        bool same = carter.size() == classical.size();
        if (same)
            for (const Subgroup& c : carter) {
                bool found = false;
                for (const Bitset& b : classical)
                    if (b == c.members) found = true;
                if (!found) same = false;
            }
        if (!same)
            detail::record(rep, "degeneration:carter", g, finest,
                           Json{{"sigma_carter", carter.size()},
                                {"classical", classical.size()}});
    }

    return rep;
}

} // namespace sigma
