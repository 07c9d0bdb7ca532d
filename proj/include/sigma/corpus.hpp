#pragma once

#include <map>

#include "sigma/dsl.hpp"
#include "sigma/embedding.hpp"

namespace sigma {

struct Expectation {
    std::string op;
    nlohmann::json args = nlohmann::json::object();
    nlohmann::json result;
    std::string provenance; // construction | classical | worked-example
};

struct CorpusEntry {
    std::string name;
    std::string spec; // group DSL, or "arithmetic:<name>" for order-only entries
    std::vector<std::string> sigma_specs;
    std::vector<Expectation> expected;
    bool arithmetic_only = false;
};

struct BuiltEntry {
    std::shared_ptr<const GroupTable> table;
    std::map<std::string, Subgroup> named;
};

namespace detail {

inline Subgroup first_sylow(const GroupTable& g, Int p) {
    return sylow_subgroups(g, p).front();
}

inline Subgroup join_of(const GroupTable& g, const Subgroup& a,
                        const Subgroup& b) {
    std::vector<int> gens = a.gens;
    gens.insert(gens.end(), b.gens.begin(), b.gens.end());
    return subgroup_generated(g, gens);
}

} // namespace detail

/// Builds a catalog group together with the labeled subgroups its
/// expectations refer to.
inline BuiltEntry build_entry(const std::string& name, const std::string& spec,
                              const BuildConfig& cfg = {}) {
    if (spec.rfind("arithmetic:", 0) == 0)
        throw unknown_entry(name + " is an arithmetic-only entry");
    BuiltEntry out;
    out.table = std::make_shared<const GroupTable>(parse_group_spec(spec, cfg));
    const GroupTable& g = *out.table;

    auto named_subgroup = [&](const std::string& label, Subgroup s) {
        out.named.emplace(label, std::move(s));
    };

    if (name == "s3") {
        named_subgroup("C3", detail::first_sylow(g, 3));
        named_subgroup("C2", detail::first_sylow(g, 2));
    } else if (name == "s4") {
        named_subgroup("D8", detail::first_sylow(g, 2));
        named_subgroup("C3", detail::first_sylow(g, 3));
        for (const Subgroup& n : normal_subgroups(g)) {
            if (n.order == 4) named_subgroup("V4", n);
            if (n.order == 12) named_subgroup("A4", n);
        }
    } else if (name == "a4") {
        named_subgroup("V4", detail::first_sylow(g, 2));
        named_subgroup("C3", detail::first_sylow(g, 3));
    } else if (name == "a5") {
        named_subgroup("V4", detail::first_sylow(g, 2));
        named_subgroup("C5", detail::first_sylow(g, 5));
    } else if (name == "q8") {
        named_subgroup("Z", center(g));
    } else if (name == "ex1.2i") {
        // direct(frobenius(7,3,2), alt(5)): first factor on indices a+21*0,
        // second on 21*b
        Bitset f21_bits(g.n), a5_bits(g.n);
        for (int a = 0; a < 21; ++a) f21_bits.set(a);
        for (int b = 0; b < 60; ++b) a5_bits.set(21 * b);
        Subgroup f21 = subgroup_generated(g, f21_bits);
        Subgroup a5f = subgroup_generated(g, a5_bits);
        if (f21.order != 21 || a5f.order != 60)
            throw std::logic_error("factor embedding broke");
        Subgroup syl2 = detail::first_sylow(g, 2); // inside the A5 factor
        const auto& ord = g.element_orders();
        Subgroup c3 = trivial_subgroup(g);
        for (int x : f21.members.to_vector())
            if (ord[size_t(x)] == 3) {
                c3 = cyclic_subgroup(g, x);
                break;
            }
        Subgroup h = detail::join_of(g, f21, syl2);
        Subgroup c3a = detail::join_of(g, c3, syl2);
        Subgroup c3a5 = detail::join_of(g, c3, a5f);
        Subgroup b12 = trivial_subgroup(g);
        for (int x : a5f.members.to_vector()) {
            if (ord[size_t(x)] != 3) continue;
            Subgroup cand = extend_subgroup(g, syl2, x);
            if (cand.order == 12) {
                b12 = cand;
                break;
            }
        }
        if (h.order != 84 || c3a.order != 12 || c3a5.order != 180 ||
            b12.order != 12)
            throw std::logic_error("labeled subgroup orders broke");
        named_subgroup("C7C3", f21);
        named_subgroup("A5", a5f);
        named_subgroup("A", syl2);
        named_subgroup("C3", c3);
        named_subgroup("H", h);
        named_subgroup("C3A", c3a);
        named_subgroup("C3A5", c3a5);
        named_subgroup("B12", b12);
    }
    return out;
}

/// Arithmetic-level witness checks for the two large worked examples whose
/// groups exceed the dense bound. Only order and σ-signature consequences
/// of the constructions are verified; group-theoretic clauses are not
/// re-derived. Returns violations (empty = pass).
inline std::vector<nlohmann::json> arithmetic_witness_checks(
    const std::string& name) {
    std::vector<nlohmann::json> violations;
    auto fail = [&](const std::string& what, nlohmann::json data) {
        data["check"] = what;
        data["entry"] = name;
        violations.push_back(std::move(data));
    };

    if (name == "ex1.2ii") {
        // parameters (p, q, r) = (7, 5, 2): r^2 | q - 1, p > q > r
        Int p = 7, q = 5, r = 2;
        if ((q - 1) % (r * r) != 0 || !(p > q && q > r))
            fail("parameter-constraints", {});
        Int d = multiplicative_order(p, q); // module dimension
        Int P = pow_int(p, int(d));
        Int H = q * r * r;
        Int G = P * H;
        if (d != 4 || P != 2401 || G != 48020)
            fail("order-derivation", {{"d", d}, {"P", P}, {"G", G}});
        PrimePartition sig = parse_partition("{2,5}|rest"); // {q, r} block
        Int V = P * r; // V = P R1
        if (G % V != 0) fail("v-divides", {{"V", V}});
        // |G:V| = q*r is a σ1-number
        if (sigma_of_int(sig, G / V) !=
            SigmaSignature{sig.block_of(2)})
            fail("v-index-signature", {{"index", G / V}});
        // R1 (order r) is a σ-Hall subgroup of V
        if (signatures_intersect(sigma_of_int(sig, r),
                                 sigma_of_int(sig, V / r)))
            fail("r1-sigma-hall-in-v", {{"V", V}});
        // expected negative: no normal-subgroup order admits R1 as a σ-Hall
        // subgroup; normal orders come from the construction
        std::vector<Int> normal_orders{1, P, P * q, P * q * r, G};
        for (Int v : normal_orders) {
            if (v % r != 0) continue;
            if (!signatures_intersect(sigma_of_int(sig, r),
                                      sigma_of_int(sig, v / r)))
                fail("r1-normally-embedded-unexpectedly", {{"v", v}});
        }
    } else if (name == "ex1.2iii") {
        Int d = multiplicative_order(11, 7);
        Int P = pow_int(11, int(d));
        Int G = P * 21 * 60;
        Int M = P * 7 * 60;
        Int B = 12;
        if (d != 3 || P != 1331 || G != 1677060 || M != 559020)
            fail("order-derivation", {{"d", d}, {"P", P}, {"G", G}});
        // normal subgroups of G = (P ⋊ (C7⋊C3)) × A5 have orders
        // {1, P, 7P, 21P} × {1, 60}; B sits inside the A5 factor, so the
        // candidates containing B are those with the 60-part present.
        std::vector<Int> candidates{60, P * 60, M, G};
        {
            PrimePartition sig = parse_partition("{5,7,11}|rest");
            // B is a σ-Hall subgroup of the normal subgroup M
            if (signatures_intersect(sigma_of_int(sig, B),
                                     sigma_of_int(sig, M / B)))
                fail("b-sigma-hall-in-m", {{"M", M}});
        }
        {
            PrimePartition sig = parse_partition("{7}|rest");
            // expected negative: no candidate admits B as a σ-Hall subgroup
            for (Int v : candidates)
                if (!signatures_intersect(sigma_of_int(sig, B),
                                          sigma_of_int(sig, v / B)))
                    fail("b-normally-embedded-unexpectedly", {{"v", v}});
        }
    } else {
        fail("unknown-arithmetic-entry", {});
    }
    return violations;
}

namespace detail {

inline std::vector<std::string> sampled_partitions(const std::vector<Int>& pi) {
    std::vector<std::string> out{"finest", "coarsest"};
    size_t k = pi.size();
    if (k >= 2) {
        for (size_t mask = 1; mask + 1 < (size_t(1) << k); ++mask) {
            std::string s = "{";
            bool first = true;
            for (size_t i = 0; i < k; ++i)
                if (mask & (size_t(1) << i)) {
                    if (!first) s += ",";
                    s += std::to_string(pi[i]);
                    first = false;
                }
            s += "}|rest";
            out.push_back(std::move(s));
        }
    }
    return out;
}

inline Expectation expect(const std::string& op, nlohmann::json args,
                          nlohmann::json result, const std::string& prov) {
    Expectation e;
    e.op = op;
    e.args = std::move(args);
    e.result = std::move(result);
    e.provenance = prov;
    return e;
}

} // namespace detail

/// The default corpus: small DSL-constructible groups plus the worked
/// examples. Partition samples are finest, coarsest, and every 2-block
/// split of pi(G) rendered as an explicit block against the residual.
inline std::vector<CorpusEntry> corpus_manifest(const BuildConfig& cfg = {}) {
    std::vector<CorpusEntry> entries;
    using J = nlohmann::json;

    auto add = [&](const std::string& name, const std::string& spec,
                   std::vector<Expectation> expected = {}) {
        CorpusEntry e;
        e.name = name;
        e.spec = spec;
        GroupTable g = parse_group_spec(spec, cfg);
        e.sigma_specs = detail::sampled_partitions(primes_of(g.n));
        e.expected = std::move(expected);
        entries.push_back(std::move(e));
    };

    for (int n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 16, 18, 20, 21,
                  22, 24})
        add("c" + std::to_string(n), "cyclic(" + std::to_string(n) + ")");
    add("v4", "direct(cyclic(2),cyclic(2))");
    add("c2xc4", "direct(cyclic(2),cyclic(4))");
    add("c2xc2xc2", "direct(cyclic(2),direct(cyclic(2),cyclic(2)))");
    add("c3xc3", "direct(cyclic(3),cyclic(3))");
    add("c2xc6", "direct(cyclic(2),cyclic(6))");
    add("c3xc6", "direct(cyclic(3),cyclic(6))");
    add("c2xc10", "direct(cyclic(2),cyclic(10))");
    add("c2xc12", "direct(cyclic(2),cyclic(12))");
    for (int n : {8, 10, 12, 14, 16, 18, 20, 22, 24})
        add("d" + std::to_string(n), "dihedral(" + std::to_string(n) + ")");
    add("q8", "quaternion(8)",
        {detail::expect("subgroup_count", {}, 6, "classical"),
         detail::expect("is_dedekind", {}, true, "classical")});
    add("c2xq8", "direct(cyclic(2),quaternion(8))");
    add("c2xd8", "direct(cyclic(2),dihedral(8))");
    add("s3", "sym(3)",
        {detail::expect("subgroup_count", {}, 6, "classical"),
         detail::expect("residual_order", {{"sigma", "finest"}}, 3,
                        "classical")});
    add("s4", "sym(4)",
        {detail::expect("subgroup_count", {}, 30, "classical"),
         detail::expect("residual_order", {{"sigma", "finest"}}, 12,
                        "classical"),
         detail::expect("sigma_carter_count", {{"sigma", "finest"}}, 3,
                        "classical")});
    add("a4", "alt(4)",
        {detail::expect("subgroup_count", {}, 10, "classical")});
    add("dic12", "semidirect(cyclic(3),cyclic(4),2)");
    add("c2xa4", "direct(cyclic(2),alt(4))");
    add("c3xs3", "direct(cyclic(3),sym(3))");
    add("f20", "frobenius(5,4,2)",
        {detail::expect("center_order", {}, 1, "construction")});
    add("f21", "frobenius(7,3,2)",
        {detail::expect("order", {}, 21, "construction")});
    add("f42", "frobenius(7,6,3)");
    add("d10", "dihedral(10)");
    add("a5", "alt(5)",
        {detail::expect("subgroup_count", {}, 59, "classical"),
         detail::expect("sylow_count", {{"p", 5}}, 6, "classical"),
         detail::expect("hall_count", {{"primes", J::array({2, 3})}}, 5,
                        "classical"),
         detail::expect("is_sigma_full", {{"sigma", "{2,5}|rest"}}, false,
                        "classical")});
    add("s5", "sym(5)");

    { // the order-1260 worked example, sampled only at {7}|rest
        CorpusEntry e;
        e.name = "ex1.2i";
        e.spec = "direct(frobenius(7,3,2),alt(5))";
        e.sigma_specs = {"{7}|rest"};
        e.expected = {
            detail::expect("order", {}, 1260, "worked-example"),
            detail::expect("is_sigma_subnormal",
                           {{"sigma", "{7}|rest"}, {"subgroup", "H"}}, true,
                           "worked-example"),
            detail::expect("is_sigma_subnormal",
                           {{"sigma", "{7}|rest"}, {"subgroup", "C3A"}}, false,
                           "worked-example"),
            detail::expect("is_sigma_hall",
                           {{"sigma", "{7}|rest"}, {"subgroup", "C3A5"}}, true,
                           "worked-example"),
            detail::expect("is_h_sigma_embedded",
                           {{"sigma", "{7}|rest"},
                            {"subgroup", "C3A"},
                            {"kind", "normal"}},
                           false, "worked-example"),
            detail::expect("is_h_sigma_embedded",
                           {{"sigma", "{7}|rest"},
                            {"subgroup", "B12"},
                            {"kind", "normal"}},
                           false, "worked-example"),
        };
        entries.push_back(std::move(e));
    }
    { // arithmetic-only worked examples
        CorpusEntry e;
        e.name = "ex1.2ii";
        e.spec = "arithmetic:ex1.2ii";
        e.arithmetic_only = true;
        e.sigma_specs = {"{2,5}|rest"};
        e.expected = {detail::expect("arithmetic_witness", {}, true,
                                     "worked-example")};
        entries.push_back(std::move(e));
        CorpusEntry e2;
        e2.name = "ex1.2iii";
        e2.spec = "arithmetic:ex1.2iii";
        e2.arithmetic_only = true;
        e2.sigma_specs = {"{5,7,11}|rest", "{7}|rest"};
        e2.expected = {detail::expect("arithmetic_witness", {}, true,
                                      "worked-example")};
        entries.push_back(std::move(e2));
    }
    return entries;
}

inline nlohmann::json manifest_to_json(const std::vector<CorpusEntry>& entries) {
    nlohmann::json out = nlohmann::json::array();
    for (const CorpusEntry& e : entries) {
        nlohmann::json je;
        je["name"] = e.name;
        je["spec"] = e.spec;
        je["sigma"] = e.sigma_specs;
        nlohmann::json ex = nlohmann::json::array();
        for (const Expectation& x : e.expected)
            ex.push_back(nlohmann::json{{"op", x.op},
                                        {"args", x.args},
                                        {"result", x.result},
                                        {"provenance", x.provenance}});
        je["expected"] = ex;
        out.push_back(std::move(je));
    }
    return out;
}

inline std::vector<CorpusEntry> manifest_from_json(const nlohmann::json& j) {
    std::vector<CorpusEntry> out;
    for (const auto& je : j) {
        CorpusEntry e;
        e.name = je.at("name").get<std::string>();
        e.spec = je.at("spec").get<std::string>();
        e.arithmetic_only = e.spec.rfind("arithmetic:", 0) == 0;
        if (je.contains("sigma"))
            e.sigma_specs = je["sigma"].get<std::vector<std::string>>();
        if (je.contains("expected"))
            for (const auto& jx : je["expected"]) {
                Expectation x;
                x.op = jx.at("op").get<std::string>();
                if (jx.contains("args")) x.args = jx["args"];
                x.result = jx.at("result");
                if (jx.contains("provenance"))
                    x.provenance = jx["provenance"].get<std::string>();
                e.expected.push_back(std::move(x));
            }
        out.push_back(std::move(e));
    }
    return out;
}

/// Evaluates one manifest expectation against the real implementation.
/// Returns a violation description, or null on match.
inline nlohmann::json evaluate_expectation(const CorpusEntry& entry,
                                           const BuiltEntry* built,
                                           const Expectation& x) {
    using J = nlohmann::json;
    auto violation = [&](const J& actual) {
        return J{{"entry", entry.name},
                 {"op", x.op},
                 {"args", x.args},
                 {"expected", x.result},
                 {"actual", actual}};
    };
    auto sigma_arg = [&]() {
        return parse_partition(x.args.at("sigma").get<std::string>());
    };
    auto named = [&]() -> const Subgroup& {
        const std::string label = x.args.at("subgroup").get<std::string>();
        auto it = built->named.find(label);
        if (it == built->named.end())
            throw unknown_entry("no labeled subgroup " + label + " in " +
                                entry.name);
        return it->second;
    };

    if (x.op == "arithmetic_witness") {
        auto v = arithmetic_witness_checks(entry.name);
        bool pass = v.empty();
        if (pass != x.result.get<bool>()) return violation(J(pass));
        return nullptr;
    }
    if (!built) return violation("entry-not-built");
    const GroupTable& g = *built->table;
    J actual;
    if (x.op == "order") {
        actual = g.n;
    } else if (x.op == "subgroup_count") {
        actual = all_subgroups(g).size();
    } else if (x.op == "is_dedekind") {
        actual = is_dedekind(g);
    } else if (x.op == "center_order") {
        actual = center(g).order;
    } else if (x.op == "sylow_count") {
        actual = sylow_subgroups(g, x.args.at("p").get<Int>()).size();
    } else if (x.op == "hall_count") {
        actual = hall_subgroups(g, x.args.at("primes").get<std::vector<Int>>())
                     .size();
    } else if (x.op == "is_sigma_full") {
        actual = is_sigma_full(sigma_arg(), g);
    } else if (x.op == "is_sigma_nilpotent") {
        actual = is_sigma_nilpotent(sigma_arg(), g);
    } else if (x.op == "residual_order") {
        actual = sigma_nilpotent_residual(sigma_arg(), g).order;
    } else if (x.op == "sigma_carter_count") {
        actual = sigma_carter_subgroups(sigma_arg(), g).size();
    } else if (x.op == "is_sigma_subnormal") {
        actual = is_sigma_subnormal(sigma_arg(), g, named()).has_value();
    } else if (x.op == "is_sigma_hall") {
        actual = is_sigma_hall(sigma_arg(), g, named());
    } else if (x.op == "is_h_sigma_embedded") {
        const std::string kind = x.args.at("kind").get<std::string>();
        EmbeddingWitness::Kind k = kind == "normal" ? EmbeddingWitness::normal
                                   : kind == "subnormal"
                                       ? EmbeddingWitness::subnormal
                                       : EmbeddingWitness::permutable;
        actual = is_h_sigma_embedded(sigma_arg(), g, named(), k).has_value();
    } else {
        return violation("unknown-op");
    }
    if (actual != x.result) return violation(actual);
    return nullptr;
}

} // namespace sigma
