#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "qk0/quadratic_form.hpp"

using namespace qk0;

TEST_CASE("det and ds on signature forms") {
    CHECK(det_sign({3, 0}) == 1);
    CHECK(det_sign({0, 3}) == -1);
    CHECK(ds_sign({0, 3}) == 1);  // (-1)^3 * (-1)^3
    CHECK(ds_sign({1, 1}) == 1);  // hyperbolic plane
    CHECK(ds_sign({1, 0}) == 1);
    CHECK(ds_sign({3, 0}) == -1);
}

TEST_CASE("det on a concrete diagonal form") {
    PrimeField f7(7);
    DiagonalForm<PrimeField> q(f7, {2, 3});
    CHECK(det_form(q) == 6);
    CHECK(ds_form(q) == f7.neg(6)); // rank 2: ds = -det
    CHECK_THROWS_AS(DiagonalForm<PrimeField>(f7, {2, 0}), Error);
}

TEST_CASE("perp one") {
    CHECK(perp_one({3, 0}) == SignatureForm{4, 0});
    CHECK(perp_one({0, 3}) == SignatureForm{1, 3});
    CHECK(perp_one({2, 5}) == SignatureForm{3, 5});
}

TEST_CASE("hyperbolic reduction") {
    CHECK(hyperbolic_reduce({5, 2}) == HyperbolicSplit{{3, 0}, 2});
    CHECK(hyperbolic_reduce({2, 5}) == HyperbolicSplit{{0, 3}, 2});
    CHECK(hyperbolic_reduce({4, 4}) == HyperbolicSplit{{0, 0}, 4});
}

TEST_CASE("q_k perp 1 = q_{k-1} perp h") {
    for (unsigned k = 1; k <= 12; ++k) {
        auto split = hyperbolic_reduce(perp_one({0, k}));
        CHECK(split == HyperbolicSplit{{0, k - 1}, 1});
    }
}

TEST_CASE("ds of stacked hyperbolic planes stays +1") {
    for (unsigned r = 0; r <= 20; ++r) CHECK(ds_sign({r, r}) == 1);
}

TEST_CASE("scaling") {
    PrimeField f7(7);
    DiagonalForm<PrimeField> q(f7, {1, 6, 2});
    auto same = scale_form<PrimeField>(1, q);
    CHECK(same.coeffs == q.coeffs);
    auto neg = scale_form(f7.neg(1), q);
    CHECK(neg.coeffs == std::vector<std::uint32_t>{6, 1, 5});
    CHECK_THROWS_AS(scale_form<PrimeField>(0, q), Error);
    CHECK(scale_sign(-1, SignatureForm{2, 5}) == SignatureForm{5, 2});
    CHECK_THROWS_AS(scale_sign(0, SignatureForm{1, 0}), Error);
}

TEST_CASE("det and ds are permutation invariant") {
    PrimeField f(101);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::uint32_t> dist(1, 100);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::uint32_t> coeffs(6);
        for (auto& c : coeffs) c = dist(rng);
        DiagonalForm<PrimeField> q(f, coeffs);
        std::shuffle(coeffs.begin(), coeffs.end(), rng);
        DiagonalForm<PrimeField> shuffled(f, coeffs);
        CHECK(det_form(q) == det_form(shuffled));
        CHECK(ds_form(q) == ds_form(shuffled));
    }
}

TEST_CASE("rank zero form is the empty product") {
    PrimeField f7(7);
    DiagonalForm<PrimeField> q(f7, {});
    CHECK(det_form(q) == 1);
    CHECK(ds_form(q) == 1);
}
