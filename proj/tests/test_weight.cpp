#include <doctest.h>

#include <random>

#include "ola/weight.hpp"
#include "test_util.hpp"

using namespace ola;

TEST_CASE("weight parsing round trips and rejects malformed input") {
    Weight w = parse_weight(LieFlavor::SL, "1:3,2:1,-1:-2");
    CHECK(w.at(1) == Rat(3));
    CHECK(w.at(-1) == Rat(-2));
    CHECK(parse_weight(LieFlavor::SL, to_string(w)) == w);

    CHECK(parse_weight(LieFlavor::O, "").is_zero());
    CHECK(parse_weight(LieFlavor::SL, "1:1/2").at(1) == Rat(1, 2));

    CHECK_THROWS_AS(parse_weight(LieFlavor::SL, "0:1"), parse_error);
    CHECK_THROWS_AS(parse_weight(LieFlavor::O, "-1:1"), parse_error);
    CHECK_THROWS_AS(parse_weight(LieFlavor::SL, "1:1,1:2"), parse_error);
    CHECK_THROWS_AS(parse_weight(LieFlavor::SL, "1:1/0"), parse_error);
    CHECK_THROWS_AS(parse_weight(LieFlavor::SL, "junk"), parse_error);
}

TEST_CASE("zero coefficients are dropped so equality is canonical") {
    Weight a(LieFlavor::SP);
    a.set(1, Rat(2));
    a.set(2, Rat(1));
    a.set(2, Rat(0));
    Weight b(LieFlavor::SP);
    b.set(1, Rat(2));
    CHECK(a == b);
}

TEST_CASE("rho pairs to 1 with every simple coroot") {
    // Simple roots are eps_p - eps_{p+1} in chain order; on the SL R side
    // the chain runs ... < -2 < -1 with negated coefficients, so the
    // simple root eps_{-p-1} - eps_{-p} pairs rho to
    // rho(-p-1) - rho(-p) = (p+1) - p = 1.
    for (int p = 1; p <= 50; ++p) {
        CHECK(rho(LieFlavor::O, p) - rho(LieFlavor::O, p + 1) == Rat(1));
        CHECK(rho(LieFlavor::SP, p) - rho(LieFlavor::SP, p + 1) == Rat(1));
        CHECK(rho(LieFlavor::SL, p) - rho(LieFlavor::SL, p + 1) == Rat(1));
        CHECK(rho(LieFlavor::SL, -p - 1) - rho(LieFlavor::SL, -p) == Rat(1));
    }
    CHECK(rho(LieFlavor::SL, -2) == Rat(2));
    CHECK_THROWS_AS(rho(LieFlavor::O, -1), precondition_error);
}

TEST_CASE("degree is half the signed coefficient sum and additive") {
    Weight w = parse_weight(LieFlavor::SL, "1:3,2:1,-1:-2");
    CHECK(degree(w) == Rat(3));  // (3 + 1 - (-2)) / 2
    CHECK(degree(parse_weight(LieFlavor::O, "1:3")) == Rat(3, 2));

    std::mt19937 rng(7);
    for (int i = 0; i < 30; ++i) {
        Weight a = ola_tests::random_integral_weight(LieFlavor::SL, rng);
        Weight b = ola_tests::random_integral_weight(LieFlavor::SL, rng);
        CHECK(degree(a + b) == degree(a) + degree(b));
    }
}

TEST_CASE("b-dominance per chain") {
    CHECK(is_b_dominant(parse_weight(LieFlavor::SL, "")));
    CHECK(is_b_dominant(parse_weight(LieFlavor::SL, "1:2,2:1,-1:-1")));
    CHECK_FALSE(is_b_dominant(parse_weight(LieFlavor::SL, "1:1,2:2")));
    CHECK_FALSE(is_b_dominant(parse_weight(LieFlavor::SL, "-1:1")));
    CHECK_FALSE(is_b_dominant(parse_weight(LieFlavor::O, "1:-1")));
    CHECK_FALSE(is_b_dominant(parse_weight(LieFlavor::O, "2:1")));
    CHECK(is_b_dominant(parse_weight(LieFlavor::O, "1:1,2:1")));
    CHECK_FALSE(is_b_dominant(parse_weight(LieFlavor::O, "1:1/2")));
}

TEST_CASE("nonnegative simple-combination test") {
    // alpha_1 on the L chain.
    CHECK(is_nonneg_simple_combination(parse_weight(LieFlavor::SL, "1:1,2:-1")));
    // R-side simple root in chain order: eps_{-2} - eps_{-1}.
    CHECK(is_nonneg_simple_combination(parse_weight(LieFlavor::SL, "-2:1,-1:-1")));
    CHECK_FALSE(
        is_nonneg_simple_combination(parse_weight(LieFlavor::SL, "-1:1,-2:-1")));
    CHECK_FALSE(is_nonneg_simple_combination(parse_weight(LieFlavor::SL, "1:1")));
    CHECK_FALSE(
        is_nonneg_simple_combination(parse_weight(LieFlavor::SL, "1:-1,2:1")));
    CHECK(is_nonneg_simple_combination(parse_weight(LieFlavor::O, "1:2,3:-2")));
    CHECK_FALSE(
        is_nonneg_simple_combination(parse_weight(LieFlavor::O, "1:1/2,2:-1/2")));
}

TEST_CASE("block labels separate root-lattice cosets") {
    // SL: Q = {integer vectors with total sum 0}.
    Weight a = parse_weight(LieFlavor::SL, "1:1");
    Weight b = parse_weight(LieFlavor::SL, "-1:1");
    Weight c = parse_weight(LieFlavor::SL, "2:3,-2:2");
    CHECK(same_block(a, b));
    CHECK_FALSE(same_block(a, c));

    // Fractional parts must match pointwise, not as a multiset.
    Weight h1 = parse_weight(LieFlavor::SL, "1:1/2");
    Weight h2 = parse_weight(LieFlavor::SL, "2:1/2");
    CHECK_FALSE(same_block(h1, h2));
    CHECK(same_block(h1, parse_weight(LieFlavor::SL, "1:3/2,2:-1")));

    // O/SP: Q = {integer vectors with even sum}.
    CHECK(same_block(parse_weight(LieFlavor::O, "1:2"),
                     parse_weight(LieFlavor::O, "")));
    CHECK_FALSE(same_block(parse_weight(LieFlavor::O, "1:1"),
                           parse_weight(LieFlavor::O, "")));
    CHECK(same_block(parse_weight(LieFlavor::SP, "1:1,2:1"),
                     parse_weight(LieFlavor::SP, "3:2")));
}

TEST_CASE("block label difference criterion on random integral pairs") {
    std::mt19937 rng(11);
    for (LieFlavor f : {LieFlavor::SL, LieFlavor::O, LieFlavor::SP}) {
        for (int i = 0; i < 50; ++i) {
            Weight a = ola_tests::random_integral_weight(f, rng);
            Weight b = ola_tests::random_integral_weight(f, rng);
            Weight d = a - b;
            Rat sum(0);
            for (const auto& [idx, c] : d.entries()) sum += c;
            bool in_q = f == LieFlavor::SL
                            ? sum == 0
                            : is_integer(sum / 2);
            CHECK(same_block(a, b) == in_q);
        }
    }
}
