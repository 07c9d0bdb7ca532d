#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace sigma;
using oracle::shared_group;

TEST_CASE("partition parsing and rendering") {
    PrimePartition p = parse_partition("{7}|rest");
    CHECK(p.blocks.size() == 1);
    CHECK(p.block_of(7) == BlockId{0});
    CHECK(p.block_of(2) == kResidualBlock);
    CHECK(p.render() == "{7}|rest");

    PrimePartition fin = parse_partition("finest");
    CHECK(fin.finest);
    CHECK(fin.block_of(5) == BlockId{5});
    CHECK(fin.render() == "finest");

    PrimePartition coarse = parse_partition("coarsest");
    CHECK(coarse.blocks.empty());
    CHECK(coarse.block_of(2) == kResidualBlock);

    PrimePartition two = parse_partition("{2,3}|{5}|rest");
    CHECK(two.blocks.size() == 2);
    CHECK(two.block_of(3) == BlockId{0});
    CHECK(two.block_of(5) == BlockId{1});
    CHECK(two.render() == "{2,3}|{5}|rest");

    CHECK_THROWS_AS(parse_partition("{2,3}|{3}|rest"), overlapping_blocks);
    CHECK_THROWS_AS(parse_partition("xyz"), parse_error);
    CHECK_THROWS_AS(parse_partition("{2,3}"), parse_error);
    CHECK_THROWS_AS(parse_partition("{4}|rest"), parse_error);
}

TEST_CASE("sigma of integers") {
    PrimePartition p = parse_partition("{2,3}|{5}|rest");
    SigmaSignature s45 = sigma_of_int(p, 45); // 3^2 * 5
    REQUIRE(s45.size() == 2);
    CHECK(s45[0] == BlockId{0});
    CHECK(s45[1] == BlockId{1});
    CHECK(sigma_of_int(p, 1).empty());

    PrimePartition p7 = parse_partition("{7}|rest");
    SigmaSignature s1260 = sigma_of_int(p7, 1260);
    REQUIRE(s1260.size() == 2);
    CHECK(s1260[0] == BlockId{0});
    CHECK(s1260[1] == kResidualBlock);
}

TEST_CASE("sigma(mn) = sigma(m) union sigma(n)") {
    std::mt19937_64 rng(7);
    std::vector<PrimePartition> parts = {
        finest_partition(), coarsest_partition(),
        parse_partition("{2,3}|{5}|rest"), parse_partition("{7}|rest")};
    for (const PrimePartition& p : parts)
        for (int i = 0; i < 200; ++i) {
            Int m = 1 + Int(rng() % 400), n = 1 + Int(rng() % 400);
            SigmaSignature sm = sigma_of_int(p, m), sn = sigma_of_int(p, n);
            SigmaSignature un = sm;
            for (BlockId b : sn)
                if (!signature_contains(un, b)) un.push_back(b);
            std::sort(un.begin(), un.end());
            CHECK(sigma_of_int(p, m * n) == un);
        }
}

TEST_CASE("sigma-primary") {
    PrimePartition p = parse_partition("{2,3,5}|rest");
    CHECK(is_sigma_primary(p, shared_group("alt(5)")));
    CHECK(!is_sigma_primary(finest_partition(), shared_group("alt(5)")));
    CHECK(is_sigma_primary(finest_partition(), shared_group("cyclic(1)")));
}

TEST_CASE("sigma-Hall subgroups") {
    const GroupTable& big = shared_group("direct(frobenius(7,3,2),alt(5))");
    PrimePartition p7 = parse_partition("{7}|rest");
    BuiltEntry entry = build_entry("ex1.2i", "direct(frobenius(7,3,2),alt(5))");
    CHECK(is_sigma_hall(p7, *entry.table, entry.named.at("C3A5")));
    CHECK(is_sigma_hall(p7, *entry.table, entry.named.at("A5")) == false);
    CHECK(is_sigma_hall(p7, big, whole_group(big)));
    CHECK(is_sigma_hall(p7, big, trivial_subgroup(big)));
}

TEST_CASE("sigma-Hall block-closed-order cross-check") {
    // a is σ-Hall in g iff |a| equals the full σ(|a|)-part of |G|
    for (const char* spec : {"sym(4)", "alt(5)", "dihedral(12)"}) {
        const GroupTable& g = shared_group(spec);
        for (const PrimePartition& p :
             {finest_partition(), parse_partition("{2,3}|rest")}) {
            for (const Subgroup& a : all_subgroups(g)) {
                bool lhs = is_sigma_hall(p, g, a);
                Int part = 1;
                for (BlockId b : sigma_of_int(p, a.order))
                    part *= block_part(p, b, g.n);
                CHECK(lhs == (a.order == part));
            }
        }
    }
}

TEST_CASE("hall block subgroups") {
    const GroupTable& s3 = shared_group("sym(3)");
    auto blocks3 = hall_block_subgroups(finest_partition(), s3, BlockId{3});
    REQUIRE(blocks3.size() == 1);
    CHECK(blocks3.front().order == 3);

    const GroupTable& a5 = shared_group("alt(5)");
    PrimePartition p23 = parse_partition("{2,3}|rest");
    CHECK(hall_block_subgroups(p23, a5, BlockId{0}).size() == 5);
    PrimePartition p25 = parse_partition("{2,5}|rest");
    CHECK(hall_block_subgroups(p25, a5, BlockId{0}).empty());
    CHECK_THROWS_AS(
        hall_block_subgroups(parse_partition("{7}|rest"), a5, BlockId{0}),
        unknown_block);
}

TEST_CASE("complete hall sigma sets") {
    const GroupTable& s3 = shared_group("sym(3)");
    CHECK(complete_hall_sigma_sets(finest_partition(), s3).size() == 3);

    const GroupTable& a5 = shared_group("alt(5)");
    CHECK(complete_hall_sigma_sets(parse_partition("{2,3}|{5}|rest"), a5)
              .size() == 30);
    CHECK(complete_hall_sigma_sets(parse_partition("{2,5}|rest"), a5).empty());

    // trivial group: exactly one (empty) set
    CHECK(
        complete_hall_sigma_sets(finest_partition(), shared_group("cyclic(1)"))
            .size() == 1);
}

TEST_CASE("sigma-full") {
    const GroupTable& a5 = shared_group("alt(5)");
    CHECK(!is_sigma_full(parse_partition("{2,5}|rest"), a5));
    CHECK(is_sigma_full(coarsest_partition(), a5));
    CHECK(is_sigma_full(finest_partition(), a5));
    // soluble corpus groups are σ-full at every sampled partition
    for (const char* spec :
         {"sym(4)", "cyclic(12)", "dihedral(20)", "frobenius(5,4,2)"}) {
        const GroupTable& g = shared_group(spec);
        for (const std::string& sp :
             {std::string("finest"), std::string("coarsest"),
              std::string("{2}|rest"), std::string("{2,3}|rest")})
            CHECK(is_sigma_full(parse_partition(sp), g));
    }
}

TEST_CASE("sigma-nilpotent") {
    CHECK(is_sigma_nilpotent(finest_partition(), shared_group("cyclic(6)")));
    CHECK(is_sigma_nilpotent(parse_partition("{2,3}|rest"),
                             shared_group("sym(3)")));
    CHECK(!is_sigma_nilpotent(finest_partition(), shared_group("sym(3)")));

    // equivalence with the direct-decomposition definition, by oracle
    for (const char* spec :
         {"sym(3)", "sym(4)", "cyclic(12)", "quaternion(8)", "dihedral(12)",
          "frobenius(7,3,2)", "direct(cyclic(2),cyclic(6))"}) {
        const GroupTable& g = shared_group(spec);
        for (const std::string& sp :
             {std::string("finest"), std::string("coarsest"),
              std::string("{2}|rest"), std::string("{3}|rest"),
              std::string("{2,3}|rest"), std::string("{2,7}|rest")}) {
            PrimePartition p = parse_partition(sp);
            CHECK(is_sigma_nilpotent(p, g) ==
                  oracle::sigma_nilpotent_by_decomposition(p, g));
        }
    }

    // finest degeneration
    for (const char* spec : {"sym(3)", "sym(4)", "cyclic(12)", "quaternion(8)",
                             "frobenius(5,4,2)", "alt(4)"})
        CHECK(is_sigma_nilpotent(finest_partition(), shared_group(spec)) ==
              is_nilpotent(shared_group(spec)));

    // coarsest: everything is σ-primary hence σ-nilpotent
    for (const char* spec : {"sym(4)", "alt(5)", "quaternion(8)"})
        CHECK(is_sigma_nilpotent(coarsest_partition(), shared_group(spec)));
}

TEST_CASE("sigma-soluble") {
    CHECK(is_sigma_soluble(parse_partition("{2,3,5}|rest"),
                           shared_group("alt(5)")));
    CHECK(!is_sigma_soluble(finest_partition(), shared_group("alt(5)")));
    for (const std::string& sp : {std::string("finest"), std::string("coarsest"),
                                  std::string("{2}|rest")})
        CHECK(is_sigma_soluble(parse_partition(sp), shared_group("sym(4)")));
}

TEST_CASE("sigma-solubility closure properties") {
    // closed under subgroups, quotients, direct products (spot checks)
    PrimePartition p = parse_partition("{2,3}|rest");
    const GroupTable& s4 = shared_group("sym(4)");
    REQUIRE(is_sigma_soluble(p, s4));
    for (const Subgroup& s : all_subgroups(s4)) {
        if (s.order == 1 || s.order == Int(s4.n)) continue;
        Materialized m = materialize(s4, s);
        CHECK(is_sigma_soluble(p, *m.table));
    }
    for (const Subgroup& n : normal_subgroups(s4)) {
        QuotientMap q = quotient(s4, n);
        CHECK(is_sigma_soluble(p, *q.target));
    }
    GroupTable prod =
        direct_product(shared_group("sym(3)"), shared_group("cyclic(4)"));
    CHECK(is_sigma_soluble(p, prod));

    PrimePartition pa5 = parse_partition("{2,3,5}|rest");
    GroupTable prod2 =
        direct_product(shared_group("alt(5)"), shared_group("cyclic(2)"), 200);
    CHECK(is_sigma_soluble(pa5, prod2));
    CHECK(!is_sigma_soluble(finest_partition(), prod2));
}

TEST_CASE("sigma basis") {
    const GroupTable& s3 = shared_group("sym(3)");
    auto basis = sigma_basis(finest_partition(), s3);
    REQUIRE(basis.has_value());
    CHECK(basis->size() == 2);

    const GroupTable& c12 = shared_group("cyclic(12)");
    auto b12 = sigma_basis(finest_partition(), c12);
    REQUIRE(b12.has_value());
    std::vector<Int> orders;
    for (const Subgroup& s : *b12) orders.push_back(s.order);
    std::sort(orders.begin(), orders.end());
    CHECK(orders == std::vector<Int>{3, 4});

    // σ-soluble corpus members always have one
    for (const char* spec :
         {"sym(4)", "dihedral(20)", "frobenius(5,4,2)", "frobenius(7,6,3)"})
        for (const std::string& sp :
             {std::string("finest"), std::string("{2}|rest")})
            CHECK(
                sigma_basis(parse_partition(sp), shared_group(spec)).has_value());
}

TEST_CASE("hall sigma set members have exact block part orders") {
    const GroupTable& a5 = shared_group("alt(5)");
    PrimePartition p = parse_partition("{2,3}|{5}|rest");
    for (const HallSigmaSet& hs : complete_hall_sigma_sets(p, a5)) {
        REQUIRE(hs.members.size() == 2);
        for (auto& [b, h] : hs.members)
            CHECK(h.order == block_part(p, b, a5.n));
    }
}
