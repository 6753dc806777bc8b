#include <catch2/catch_amalgamated.hpp>

#include <hindman/colorings.hpp>

#include "support.hpp"

using hindman::color_blue;
using hindman::color_green;
using hindman::color_red;
using hindman::eval_color;
using hindman::nat;

TEST_CASE("delta2 coloring reads the stage-s guess through the class digit") {
    auto c = hindman::delta2_coloring(fixtures::reference_a());
    REQUIRE(c.color_count == 2);

    // 1 and 10 sit in the digit-1 class at level 0, on either side of the
    // mind change at stage 5.
    CHECK(eval_color(c, 1) == 0);
    CHECK(eval_color(c, 10) == 1);
    // 2 sits in the digit-2 class at level 0 and gets the complement.
    CHECK(eval_color(c, 2) == 1);
    CHECK(eval_color(c, 11) == 0);
    // Level 1 is constant 0, so digit 1 reads 0 and digit 2 reads 1.
    CHECK(eval_color(c, 3) == 0);
    CHECK(eval_color(c, 6) == 1);
    CHECK_THROWS_AS(eval_color(c, 0), std::domain_error);
}

TEST_CASE("four coloring splits by first digit and very-short parity") {
    auto c = hindman::four_coloring(fixtures::reference_f());
    REQUIRE(c.color_count == 4);
    CHECK(eval_color(c, 36) == 0);    // first digit 1, even count
    CHECK(eval_color(c, 279) == 1);   // first digit 1, odd count
    CHECK(eval_color(c, 18) == 2);    // first digit 2, even count
    CHECK(eval_color(c, 288) == 3);   // first digit 2, odd count
}

TEST_CASE("three coloring picks from the class palette by parity") {
    auto c = hindman::three_coloring(fixtures::reference_f());
    REQUIRE(c.color_count == 3);
    CHECK(eval_color(c, 7) == color_red);        // pm class 1, even
    CHECK(eval_color(c, 17199) == color_green);  // pm class 1, odd
    CHECK(eval_color(c, 2) == color_green);      // pm class 2, even
    CHECK(eval_color(c, 3) == color_blue);       // pm class 3, even
    CHECK(eval_color(c, 4) == color_blue);       // pm class 3, even
    CHECK(eval_color(c, 6) == color_red);        // pm class 1, even

    // 2*49 + 343 + 16807: the gap (2,3) is very short (witness 4 <= 5 but
    // > 3), odd parity, first digit 2, so pm class 2 flips to blue.
    CHECK(eval_color(c, 2 * 49 + 343 + 16807) == color_blue);
}

TEST_CASE("three coloring letters follow the wire encoding") {
    CHECK(hindman::color_letter(color_red) == 'R');
    CHECK(hindman::color_letter(color_green) == 'G');
    CHECK(hindman::color_letter(color_blue) == 'B');
    CHECK_THROWS_AS(hindman::color_letter(3), std::domain_error);
}

TEST_CASE("colorings stay within their advertised palettes") {
    auto corpus = fixtures::function_corpus();
    auto three = hindman::three_coloring(corpus[0]);
    auto four = hindman::four_coloring(corpus[1]);
    auto delta = hindman::delta2_coloring(fixtures::approx_a1());
    for (nat n = 1; n <= 5000; ++n) {
        int c3 = eval_color(three, n);
        int c4 = eval_color(four, n);
        int c2 = eval_color(delta, n);
        REQUIRE((c3 >= 0 && c3 < 3));
        REQUIRE((c4 >= 0 && c4 < 4));
        REQUIRE((c2 == 0 || c2 == 1));
    }
}

TEST_CASE("builtin colorings behave") {
    auto p = hindman::parity_coloring();
    CHECK(eval_color(p, 7) == 1);
    CHECK(eval_color(p, 8) == 0);
    CHECK(p.descriptor == "parity");

    auto k = hindman::constant_coloring(3, 2);
    CHECK(eval_color(k, 1) == 2);
    CHECK(eval_color(k, 999) == 2);
    CHECK_THROWS_AS(hindman::constant_coloring(1, 0), std::domain_error);
    CHECK_THROWS_AS(hindman::constant_coloring(2, 5), std::domain_error);
}

TEST_CASE("descriptors pin the construction") {
    auto c = hindman::three_coloring(fixtures::reference_f());
    CHECK(c.descriptor == "three{1->4,2->6,3->8,4->2|tail+6,T=4}");
    auto d = hindman::delta2_coloring(fixtures::reference_a());
    CHECK(d.descriptor == "delta2{0:0=0,5=1;1:0=0;default=0,K=1}");
}
