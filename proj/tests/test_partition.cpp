#include <doctest.h>

#include <algorithm>
#include <random>

#include "ola/oracle.hpp"
#include "ola/partition.hpp"

using namespace ola;

TEST_CASE("partition parsing, conjugation, evenness") {
    Partition p = parse_partition("[3,1,1]");
    CHECK(p.size() == 5);
    CHECK(to_string(p) == "[3,1,1]");
    CHECK(conjugate(p) == Partition{3, 1, 1});
    CHECK(conjugate(Partition{4, 2}) == Partition({2, 2, 1, 1}));
    CHECK(conjugate(conjugate(Partition{5, 3, 2})) == Partition({5, 3, 2}));
    CHECK(is_even(Partition{4, 2}));
    CHECK_FALSE(is_even(Partition{3, 1}));
    CHECK(is_even(Partition{}));
    CHECK(parse_partition("[]").empty());
    CHECK_THROWS_AS(parse_partition("[1,2]"), parse_error);
    CHECK_THROWS_AS(parse_partition("3,1"), parse_error);
    CHECK_THROWS_AS(Partition({2, -1}), precondition_error);
}

TEST_CASE("partitions_of counts match the partition function") {
    const long long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (long long n = 0; n <= 8; ++n)
        CHECK(static_cast<long long>(partitions_of(n).size()) == expected[n]);
}

TEST_CASE("kostka frozen values") {
    CHECK(kostka(Partition{2, 1}, {1, 1, 1}) == 2);
    CHECK(kostka(Partition{1, 1}, {2}) == 0);
    CHECK(kostka(Partition{2}, {1, 1}) == 1);
    CHECK(kostka(Partition{3, 2, 1}, {2, 2, 2}) == 2);
    CHECK(kostka(Partition{2, 2}, {1, 1, 1, 1}) == 2);
    for (const Partition& mu : partitions_of(6))
        CHECK(kostka(mu, CompositionVector(mu.parts().begin(),
                                           mu.parts().end())) == 1);
}

TEST_CASE("kostka is invariant under content permutation") {
    std::mt19937 rng(3);
    CompositionVector base{2, 1, 0, 3};
    Partition mu{3, 2, 1};
    Int reference = kostka(mu, base);
    for (int i = 0; i < 10; ++i) {
        CompositionVector c = base;
        std::shuffle(c.begin(), c.end(), rng);
        CHECK(kostka(mu, c) == reference);
    }
}

TEST_CASE("kostka agrees with tableau enumeration on a spot sample") {
    for (const Partition& mu : partitions_of(5)) {
        CompositionVector ones(5, 1);
        CHECK(kostka(mu, ones) == kostka_oracle(mu, ones));
    }
}

TEST_CASE("c_coeff layer-one values") {
    // SL: gamma = -eps_i + eps_{-j} always has multiplicity 1.
    CHECK(c_coeff(LieFlavor::SL, 1, parse_weight(LieFlavor::SL, "1:-1,-1:1")) == 1);
    CHECK(c_coeff(LieFlavor::SL, 1, parse_weight(LieFlavor::SL, "2:-1,-3:1")) == 1);
    CHECK(c_coeff(LieFlavor::SL, 1, parse_weight(LieFlavor::SL, "1:-1")) == 0);
    // O admits both -2eps_i and -eps_i - eps_j; SP only the strict pairs.
    CHECK(c_coeff(LieFlavor::O, 1, parse_weight(LieFlavor::O, "1:-2")) == 1);
    CHECK(c_coeff(LieFlavor::O, 1, parse_weight(LieFlavor::O, "1:-1,2:-1")) == 1);
    CHECK(c_coeff(LieFlavor::SP, 1, parse_weight(LieFlavor::SP, "1:-2")) == 0);
    CHECK(c_coeff(LieFlavor::SP, 1, parse_weight(LieFlavor::SP, "1:-1,2:-1")) == 1);
    // Wrong sign or sum: zero.
    CHECK(c_coeff(LieFlavor::O, 1, parse_weight(LieFlavor::O, "1:2")) == 0);
    CHECK(c_coeff(LieFlavor::O, 2, parse_weight(LieFlavor::O, "1:-2")) == 0);
    // k = 0 is the trivial layer.
    CHECK(c_coeff(LieFlavor::SL, 0, parse_weight(LieFlavor::SL, "")) == 1);
}

TEST_CASE("layer weight enumeration matches the expected window sets") {
    auto o1 = enumerate_R_k_in_window(LieFlavor::O, 1, 2);
    std::vector<Weight> expected{parse_weight(LieFlavor::O, "1:-2"),
                                 parse_weight(LieFlavor::O, "2:-2"),
                                 parse_weight(LieFlavor::O, "1:-1,2:-1")};
    std::sort(expected.begin(), expected.end());
    CHECK(o1 == expected);

    auto sp1 = enumerate_R_k_in_window(LieFlavor::SP, 1, 2);
    CHECK(sp1 == std::vector<Weight>{parse_weight(LieFlavor::SP, "1:-1,2:-1")});

    CHECK(enumerate_R_k_in_window(LieFlavor::SL, 1, 2).size() == 4);
    CHECK(enumerate_R_k_in_window(LieFlavor::SL, 0, 2) ==
          std::vector<Weight>{parse_weight(LieFlavor::SL, "")});
}

TEST_CASE("c_coeff agrees with the tensor-model oracle") {
    const int window = 3;
    for (LieFlavor f : {LieFlavor::SL, LieFlavor::O, LieFlavor::SP})
        for (long long k = 1; k <= 2; ++k)
            for (const Weight& g : enumerate_R_k_in_window(f, k, window))
                CHECK(c_coeff(f, k, g) == c_coeff_oracle(f, k, g, window));
}
