#include <doctest.h>

#include <algorithm>
#include <random>

#include "ola/order.hpp"
#include "ola/partition.hpp"
#include "test_util.hpp"

using namespace ola;

namespace {

bool contains(const std::vector<Weight>& ws, const Weight& w) {
    return std::binary_search(ws.begin(), ws.end(), w);
}

}  // namespace

TEST_CASE("leq_fin basic comparisons") {
    Weight zero = parse_weight(LieFlavor::SL, "");
    Weight neg_alpha = parse_weight(LieFlavor::SL, "1:-1,2:1");
    CHECK(leq_fin(zero, zero));
    CHECK(leq_fin(neg_alpha, zero));
    CHECK_FALSE(leq_fin(zero, neg_alpha));
    CHECK_FALSE(leq_fin(parse_weight(LieFlavor::SL, "1:1"), zero));
    // Simple-combination holds but the linkage multisets differ.
    CHECK_FALSE(leq_fin(parse_weight(LieFlavor::SL, "1:-1,3:1"), zero));
    // Non-integral difference compares false.
    CHECK_FALSE(leq_fin(parse_weight(LieFlavor::SL, "1:1/2"), zero));
    // R chain comparison uses the chain order ... < -2 < -1, so
    // eps_{-2} - eps_{-1} is a positive simple root alpha. The linkage
    // class of zero contains -alpha (dot-reflection of zero), not +alpha.
    Weight r = parse_weight(LieFlavor::SL, "-2:1,-1:-1");
    CHECK_FALSE(leq_fin(zero, r));
    CHECK_FALSE(leq_fin(r, zero));
    Weight nr = parse_weight(LieFlavor::SL, "-1:1,-2:-1");
    CHECK(leq_fin(nr, zero));
    CHECK_FALSE(leq_fin(zero, nr));
}

TEST_CASE("leq_fin implies equal degree, antisymmetry on samples") {
    std::mt19937 rng(23);
    for (LieFlavor f : {LieFlavor::SL, LieFlavor::O, LieFlavor::SP})
        for (int i = 0; i < 40; ++i) {
            Weight mu = ola_tests::random_integral_weight(f, rng, 3);
            for (const Weight& lam : fin_up_set(mu)) {
                CHECK(degree(lam) == degree(mu));
                if (!(lam == mu)) CHECK_FALSE(leq_fin(lam, mu));
            }
        }
}

TEST_CASE("fin_up_set matches hand-computed sets") {
    Weight zero_sl = parse_weight(LieFlavor::SL, "");
    CHECK(fin_up_set(zero_sl) == std::vector<Weight>{zero_sl});

    Weight neg_alpha = parse_weight(LieFlavor::SL, "1:-1,2:1");
    auto up = fin_up_set(neg_alpha);
    CHECK(up.size() == 2);
    CHECK(contains(up, zero_sl));
    CHECK(contains(up, neg_alpha));

    // Strictly dominant: strictly decreasing shifted entries per chain.
    Weight dom = parse_weight(LieFlavor::SL, "1:3,2:1,-1:-2");
    CHECK(fin_up_set(dom) == std::vector<Weight>{dom});
}

TEST_CASE("fin_up_set reaches beyond the support of mu when needed") {
    // mu = -5 eps_1 lies below -(eps_1+...+eps_5), whose support is wider.
    Weight mu = parse_weight(LieFlavor::O, "1:-5");
    Weight wide = parse_weight(LieFlavor::O, "1:-1,2:-1,3:-1,4:-1,5:-1");
    auto up = fin_up_set(mu);
    CHECK(leq_fin(mu, wide));
    CHECK(contains(up, wide));
}

TEST_CASE("fin_up_set is closed under the order and contains its base") {
    std::mt19937 rng(5);
    for (LieFlavor f : {LieFlavor::SL, LieFlavor::O}) {
        for (int i = 0; i < 15; ++i) {
            Weight mu = ola_tests::random_integral_weight(f, rng, 3);
            auto up = fin_up_set(mu);
            CHECK(contains(up, mu));
            for (const Weight& lam : up) {
                CHECK(leq_fin(mu, lam));
                for (const Weight& kappa : fin_up_set(lam))
                    CHECK(contains(up, kappa));
            }
        }
    }
}

TEST_CASE("leq_inf examples") {
    Weight zero = parse_weight(LieFlavor::SL, "");
    Weight mu = parse_weight(LieFlavor::SL, "1:-1,-1:1");
    CHECK(leq_inf(mu, mu));
    OrderCert cert;
    CHECK(leq_inf(mu, zero, -1, &cert));
    CHECK(cert.start == mu);
    CHECK(!cert.steps.empty());
    CHECK(cert.steps.back().to == zero);
    long long gamma_steps = 0;
    for (const auto& s : cert.steps) gamma_steps += s.gamma_step ? 1 : 0;
    CHECK(gamma_steps == 1);

    // Degree must not drop going up.
    CHECK_FALSE(leq_inf(zero, mu));
    // Different blocks never compare.
    CHECK_FALSE(leq_inf(parse_weight(LieFlavor::SL, "1:1"), zero));
    // leq_fin implies leq_inf.
    CHECK(leq_inf(parse_weight(LieFlavor::SL, "1:-1,2:1"), zero));
    // A depth cap below the degree gap blocks the witness.
    CHECK_FALSE(leq_inf(mu, zero, 0));
}

TEST_CASE("leq_inf certificate steps satisfy their tags") {
    std::mt19937 rng(31);
    for (LieFlavor f : {LieFlavor::SL, LieFlavor::O, LieFlavor::SP}) {
        for (int i = 0; i < 10; ++i) {
            Weight lam = ola_tests::random_integral_weight(f, rng, 2);
            auto gammas = enumerate_R_k_in_window(f, 1, 3);
            Weight mu = lam + gammas[i % gammas.size()];
            OrderCert cert;
            REQUIRE(leq_inf(mu, lam, -1, &cert));
            Weight cur = cert.start;
            CHECK(cur == mu);
            for (const auto& s : cert.steps) {
                if (s.gamma_step) {
                    Weight gamma = cur - s.to;
                    CHECK(c_coeff(f, s.k, gamma) >= 1);
                } else {
                    CHECK(leq_fin(cur, s.to));
                }
                cur = s.to;
            }
            CHECK(cur == lam);
        }
    }
}

TEST_CASE("inf_interval basics and envelope stability") {
    Weight zero = parse_weight(LieFlavor::SL, "");
    Weight mu = parse_weight(LieFlavor::SL, "1:-1,-1:1");
    CHECK(inf_interval(zero, zero) == std::vector<Weight>{zero});
    auto iv = inf_interval(mu, zero);
    CHECK(contains(iv, mu));
    CHECK(contains(iv, zero));
    CHECK(iv == inf_interval(mu, zero, 2));
    // Incomparable pair: empty interval.
    CHECK(inf_interval(zero, mu).empty());
    CHECK(inf_interval(parse_weight(LieFlavor::SL, "1:1"), zero).empty());
}

TEST_CASE("interval elements share block and respect degree bounds") {
    std::mt19937 rng(41);
    for (LieFlavor f : {LieFlavor::SL, LieFlavor::O, LieFlavor::SP}) {
        for (int i = 0; i < 6; ++i) {
            Weight lam = ola_tests::random_integral_weight(f, rng, 2);
            auto gammas = enumerate_R_k_in_window(f, 1, 3);
            Weight mu = lam + gammas[(2 * i) % gammas.size()] +
                        gammas[(2 * i + 1) % gammas.size()];
            for (const Weight& kappa : inf_interval(mu, lam)) {
                CHECK(same_block(kappa, lam));
                CHECK(degree(mu) <= degree(kappa));
                CHECK(degree(kappa) <= degree(lam));
            }
        }
    }
}
