#include <catch2/catch_amalgamated.hpp>

#include <hindman/decoders.hpp>

#include "support.hpp"

using hindman::decodable_bound;
using hindman::decode_delta2;
using hindman::decode_range_membership;
using hindman::decode_range_table;
using hindman::Freshness;
using hindman::nat;
using hindman::SolutionCandidate;

namespace {

SolutionCandidate heptary_chain() { return {{7, 49, 2401, 16807}, 3}; }

}  // namespace

TEST_CASE("range membership picks the least adequate element") {
    auto f = fixtures::reference_f();
    auto chain = heptary_chain();

    auto v1 = decode_range_membership(chain, f, 1, 7);
    CHECK_FALSE(v1.member);
    CHECK(v1.evidence.element == 7);
    CHECK(v1.evidence.successor == 49);
    CHECK(v1.evidence.bound == 2);

    auto v2 = decode_range_membership(chain, f, 2, 7);
    CHECK(v2.member);
    CHECK(v2.evidence.element == 49);
    CHECK(v2.evidence.successor == 2401);
    CHECK(v2.evidence.bound == 4);

    auto v3 = decode_range_membership(chain, f, 3, 7);
    CHECK_FALSE(v3.member);
    CHECK(v3.evidence.element == 2401);
    CHECK(v3.evidence.successor == 16807);
    CHECK(v3.evidence.bound == 5);

    auto v4 = decode_range_membership(chain, f, 4, 7);
    CHECK(v4.member);
    CHECK(v4.evidence.bound == 5);
}

TEST_CASE("range membership validates query and chain") {
    auto f = fixtures::reference_f();
    auto chain = heptary_chain();
    CHECK(decodable_bound(chain.elements, 7) == 4);
    CHECK_THROWS_AS(decode_range_membership(chain, f, 5, 7), std::domain_error);
    CHECK_THROWS_AS(decode_range_membership(chain, f, 0, 7), std::domain_error);

    SolutionCandidate singleton{{7}, 2};
    CHECK(decodable_bound(singleton.elements, 7) == 0);
    for (nat y = 1; y <= 3; ++y)
        CHECK_THROWS_AS(decode_range_membership(singleton, f, y, 7), std::domain_error);

    SolutionCandidate overlapping{{3, 4}, 2};
    CHECK_THROWS_AS(decode_range_membership(overlapping, f, 1, 3), std::domain_error);
}

TEST_CASE("range tables cover exactly the decodable range") {
    auto f = fixtures::reference_f();
    auto table = decode_range_table(heptary_chain(), f, 7);
    REQUIRE(table.size() == 4);
    CHECK_FALSE(table[0].member);
    CHECK(table[1].member);
    CHECK_FALSE(table[2].member);
    CHECK(table[3].member);
    for (const auto& v : table) {
        CHECK_FALSE(v.certified);
        // Replaying the recorded evidence reproduces the verdict.
        CHECK(hindman::bounded_range_query(f, v.query, v.evidence.bound) == v.member);
    }

    auto short_chain = decode_range_table(SolutionCandidate{{3, 81}, 2}, f, 3);
    REQUIRE(short_chain.size() == 1);
    CHECK_FALSE(short_chain[0].member);
    CHECK(short_chain[0].evidence.bound == 4);

    CHECK(decode_range_table(SolutionCandidate{{7}, 2}, f, 7).empty());
}

TEST_CASE("verified freshness flows into the certificate") {
    auto f = fixtures::reference_f();
    auto table = decode_range_table(heptary_chain(), f, 7, Freshness::verified);
    for (const auto& v : table) CHECK(v.certified);
}

TEST_CASE("fresh chains decode the true range, stale ones may not") {
    auto f = fixtures::reference_f();
    CHECK(hindman::chain_is_fresh(f, heptary_chain().elements, 7));

    for (const auto& g : fixtures::function_corpus()) {
        for (nat base : {nat{3}, nat{7}}) {
            auto chain = hindman::synthesize_power_solution(g, base, 5, 2);
            REQUIRE(hindman::chain_is_fresh(g, chain.elements, base));
            for (const auto& v : decode_range_table(chain, g, base))
                REQUIRE(v.member == hindman::range_oracle(g, v.query));
        }
    }

    // {9, 27} satisfies the chain condition, but the witness for the value
    // 2 sits at 4 > 3, so the cut is stale and the verdict for y=2 flips.
    SolutionCandidate stale{{9, 27}, 2};
    CHECK(hindman::satisfies_chain_condition(stale.elements, 3));
    CHECK_FALSE(hindman::chain_is_fresh(f, stale.elements, 3));
    auto v = decode_range_membership(stale, f, 2, 3);
    CHECK_FALSE(v.member);
    CHECK(hindman::range_oracle(f, 2));
}

TEST_CASE("range decoding stays within its query bound") {
    auto f = fixtures::reference_f();
    auto chain = heptary_chain();
    hindman::QueryRecorder<hindman::EnumeratedFunction> recorder{f};
    for (nat y = 1; y <= decodable_bound(chain.elements, 7); ++y) {
        recorder.reset();
        auto v = decode_range_membership(chain, recorder, y, 7);
        CHECK(recorder.max_argument <= v.evidence.bound);
        CHECK(recorder.calls <= v.evidence.bound);
    }
}

TEST_CASE("delta2 decoding reads bits from colored residues") {
    auto a = fixtures::reference_a();
    auto c = hindman::delta2_coloring(a);

    auto lit = decode_delta2(std::vector<nat>{10}, c, 1);
    CHECK(lit.b1 == std::set<nat>{0});
    CHECK(lit.b0.empty());
    CHECK(lit.witness1.at(0) == 10);

    // 2 sits in the digit-2 class at level 0 before the mind change at
    // stage 5, so it reports the wrong bit; exactly this failure mode.
    auto misled = decode_delta2(std::vector<nat>{2}, c, 1);
    CHECK(misled.b0 == std::set<nat>{0});
    CHECK(misled.b1.empty());

    // 81 sits at level 4, visible only when the horizon reaches it.
    auto deep = decode_delta2(std::vector<nat>{81}, c, 4);
    CHECK(deep.b0 == std::set<nat>{4});
    auto shallow = decode_delta2(std::vector<nat>{81}, c, 1);
    CHECK(shallow.b0.empty());
    CHECK(shallow.b1.empty());

    CHECK_THROWS_AS(decode_delta2(std::vector<nat>{0}, c, 1), std::domain_error);
    auto three = hindman::three_coloring(fixtures::reference_f());
    CHECK_THROWS_AS(decode_delta2(std::vector<nat>{10}, three, 1), std::domain_error);
}

TEST_CASE("delta2 decoding on synthesized solutions recovers true limits") {
    for (const auto& a : fixtures::approximation_corpus()) {
        auto w = hindman::synthesize_delta2_solution(a, 4);
        auto c = hindman::delta2_coloring(a);
        auto sets = decode_delta2(w.elements, c, a.horizon());

        for (nat k : sets.b1) REQUIRE(a.limit_value(k) == 1);
        for (nat k : sets.b0) REQUIRE(a.limit_value(k) == 0);

        std::vector<nat> both;
        std::set_intersection(sets.b0.begin(), sets.b0.end(), sets.b1.begin(), sets.b1.end(),
                              std::back_inserter(both));
        REQUIRE(both.empty());

        for (nat n : w.elements) {
            hindman::ResidueClass rc = hindman::residue_class(n, 3);
            if (rc.level > a.horizon()) continue;
            REQUIRE((sets.b0.count(rc.level) || sets.b1.count(rc.level)));
        }

        for (auto [k, n] : sets.witness1) REQUIRE(hindman::residue_class(n, 3).level == k);
        for (auto [k, n] : sets.witness0) REQUIRE(hindman::residue_class(n, 3).level == k);
    }
}
