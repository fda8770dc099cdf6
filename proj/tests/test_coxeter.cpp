#include <doctest.h>

#include <random>

#include "ola/coxeter.hpp"
#include "ola/oracle.hpp"

using namespace ola;

TEST_CASE("permutation basics") {
    Permutation w = parse_permutation("[2,1,3]");
    CHECK(coxeter_length(w) == 1);
    CHECK(coxeter_length(longest_element(4)) == 6);
    CHECK(inverse(parse_permutation("[3,1,2]")) == parse_permutation("[2,3,1]"));
    CHECK(compose(parse_permutation("[2,1,3]"), parse_permutation("[1,3,2]")) ==
          parse_permutation("[2,3,1]"));
    CHECK(to_string(w) == "[2,1,3]");
    CHECK_THROWS_AS(parse_permutation("[1,1,2]"), parse_error);
    CHECK_THROWS_AS(parse_permutation("[0,1]"), parse_error);
}

TEST_CASE("bruhat order dot criterion sanity") {
    Permutation e = identity_perm(3), w0 = longest_element(3);
    CHECK(bruhat_leq(e, w0));
    CHECK_FALSE(bruhat_leq(w0, e));
    CHECK(bruhat_leq(parse_permutation("[2,1,3]"), parse_permutation("[3,1,2]")));
    CHECK_FALSE(
        bruhat_leq(parse_permutation("[2,1,3]"), parse_permutation("[1,3,2]")));
    // Length monotonicity over all of S_4.
    KLContext ctx(4);
    for (const Permutation& x : ctx.elements())
        for (const Permutation& w : ctx.elements())
            if (bruhat_leq(x, w) && !(x == w))
                CHECK(coxeter_length(x) < coxeter_length(w));
}

TEST_CASE("KL polynomials: S_3 is trivial, S_4 has the classical 1+q") {
    KLContext c3(3);
    for (const Permutation& x : c3.elements())
        for (const Permutation& w : c3.elements())
            if (bruhat_leq(x, w))
                CHECK(c3.kl_poly(x, w) == KLPolynomial{{Int(1)}});

    KLContext c4(4);
    KLPolynomial p = c4.kl_poly(parse_permutation("[1,3,2,4]"),
                                parse_permutation("[3,4,1,2]"));
    CHECK(p.coeffs == std::vector<Int>{Int(1), Int(1)});
    CHECK(to_string(p) == "1 + q");
    CHECK(p.eval_one() == 2);

    // Incomparable or reversed pairs give zero.
    CHECK(c4.kl_poly(longest_element(4), identity_perm(4)).coeffs.empty());
}

TEST_CASE("KL is independent of the descent chosen in the recursion") {
    KLContext a(4, DescentPolicy::SmallestIndex);
    KLContext b(4, DescentPolicy::LargestIndex);
    for (const Permutation& x : a.elements())
        for (const Permutation& w : a.elements())
            CHECK(a.kl_poly(x, w) == b.kl_poly(x, w));
}

TEST_CASE("KL inversion symmetry P_{x,w} = P_{x^{-1},w^{-1}}") {
    KLContext ctx(4);
    for (const Permutation& x : ctx.elements())
        for (const Permutation& w : ctx.elements())
            CHECK(ctx.kl_poly(x, w) == ctx.kl_poly(inverse(x), inverse(w)));
}

TEST_CASE("mu coefficients of S_4 against the R-polynomial solver") {
    KLContext ctx(4);
    for (const Permutation& x : ctx.elements())
        for (const Permutation& w : ctx.elements()) {
            if (!bruhat_leq(x, w)) continue;
            long long gap = coxeter_length(w) - coxeter_length(x);
            if (gap <= 0 || gap % 2 == 0) continue;
            KLPolynomial p = kl_oracle(x, w);
            Int expected = p.coeff(static_cast<std::size_t>((gap - 1) / 2));
            CHECK(ctx.mu(x, w) == expected);
        }
}

TEST_CASE("window cap raises a resource error") {
    CHECK_THROWS_AS(KLContext(max_kl_window() + 1), resource_error);
}
