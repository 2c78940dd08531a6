#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qk0/label.hpp"
#include "qk0/render.hpp"

using namespace qk0;

namespace {
constexpr auto kLevel1 = FieldProfile::SqrtMinusOne;
constexpr auto kLevel2 = FieldProfile::SumTwoSquares;
constexpr auto kLevelInf = FieldProfile::QuaternionDivision;
} // namespace

TEST_CASE("base Clifford labels") {
    CHECK(base_clifford(kLevelInf, BaseForm::MinusTwo) == AlgebraLabel{LabelBase::Quaternion, 0, false});
    CHECK(base_clifford(kLevel1, BaseForm::MinusOne) == AlgebraLabel{LabelBase::Ground, 0, true});
    CHECK(base_clifford(kLevel2, BaseForm::MinusTwo) == AlgebraLabel{LabelBase::Ground, 1, false});
    CHECK(base_clifford(kLevel2, BaseForm::MinusOne) == AlgebraLabel{LabelBase::Complex, 0, false});
    for (auto profile : {kLevel1, kLevel2, kLevelInf}) {
        CHECK(base_clifford(profile, BaseForm::Rank0) == AlgebraLabel{LabelBase::Ground, 0, false});
        CHECK(base_clifford(profile, BaseForm::PlusOne) == AlgebraLabel{LabelBase::Ground, 0, true});
        CHECK(base_clifford(profile, BaseForm::PlusTwo) == AlgebraLabel{LabelBase::Ground, 1, false});
    }
}

TEST_CASE("normalization collapses") {
    CHECK(normalize_label(kLevel2, {LabelBase::Quaternion, 0, false}) ==
          AlgebraLabel{LabelBase::Ground, 1, false});
    CHECK(normalize_label(kLevel1, {LabelBase::Complex, 2, false}) ==
          AlgebraLabel{LabelBase::Ground, 2, true});
    CHECK(normalize_label(kLevelInf, {LabelBase::Complex, 3, false}) ==
          AlgebraLabel{LabelBase::Complex, 3, false});
    // Idempotent.
    for (auto profile : {kLevel1, kLevel2, kLevelInf}) {
        AlgebraLabel raw{LabelBase::Quaternion, 2, true};
        auto once = normalize_label(profile, raw);
        CHECK(normalize_label(profile, once) == once);
    }
}

TEST_CASE("tensor label table") {
    CHECK(tensor_labels(kLevelInf, {LabelBase::Quaternion, 0, false},
                        {LabelBase::Quaternion, 0, false}) ==
          AlgebraLabel{LabelBase::Ground, 2, false});
    CHECK(tensor_labels(kLevelInf, {LabelBase::Quaternion, 0, true},
                        {LabelBase::Ground, 1, false}) ==
          AlgebraLabel{LabelBase::Quaternion, 1, true});
    CHECK(tensor_labels(kLevelInf, {LabelBase::Complex, 0, false},
                        {LabelBase::Complex, 0, false}) ==
          AlgebraLabel{LabelBase::Complex, 0, true});
    CHECK(tensor_labels(kLevelInf, {LabelBase::Quaternion, 0, false},
                        {LabelBase::Complex, 0, false}) ==
          AlgebraLabel{LabelBase::Complex, 1, false});
    CHECK_THROWS_AS(tensor_labels(kLevelInf, {LabelBase::Ground, 0, true},
                                  {LabelBase::Ground, 0, true}),
                    Error);
}

TEST_CASE("clifford_of_signature reproduces the definite families") {
    // Negative definite at level inf: C, H, H^2, H(2), C(4), K(8), K(8)^2, K(16).
    CHECK(clifford_of_signature(kLevelInf, {0, 4}) == AlgebraLabel{LabelBase::Quaternion, 1, false});
    CHECK(clifford_of_signature(kLevelInf, {0, 7}) == AlgebraLabel{LabelBase::Ground, 3, true});
    // Positive definite at level inf row 7 is C(8), not the split k(8)^2.
    CHECK(clifford_of_signature(kLevelInf, {7, 0}) == AlgebraLabel{LabelBase::Complex, 3, false});
    CHECK(clifford_of_signature(kLevel2, {0, 3}) == AlgebraLabel{LabelBase::Ground, 1, true});
    CHECK(clifford_of_signature(kLevel1, {6, 0}) == AlgebraLabel{LabelBase::Ground, 3, false});
    CHECK(clifford_of_signature(kLevelInf, {0, 0}) == AlgebraLabel{LabelBase::Ground, 0, false});
}

TEST_CASE("C_4 is self-dual") {
    CHECK(clifford_of_signature(kLevelInf, {4, 0}) == clifford_of_signature(kLevelInf, {0, 4}));
}

TEST_CASE("simple module dimensions") {
    CHECK(simple_dim({LabelBase::Quaternion, 1, false}) == DimLog{3});
    CHECK(simple_dim({LabelBase::Ground, 0, true}) == DimLog{0});
    CHECK(simple_dim({LabelBase::Complex, 1, false}) == DimLog{2});
}

TEST_CASE("ds square test") {
    for (auto profile : {kLevel1, kLevel2, kLevelInf}) CHECK(ds_square_test(profile, {0, 3}));
    CHECK(ds_square_test(kLevel2, {1, 0}));
    CHECK_FALSE(ds_square_test(kLevel2, {3, 0}));
    CHECK(ds_square_test(kLevel1, {3, 0}));
}

TEST_CASE("abs_group examples") {
    CHECK(abs_group(kLevelInf, {2, 0}).k0 == K0Class::ZMod2);
    CHECK(abs_group(kLevelInf, {0, 3}).k0 == K0Class::Z);
    CHECK(abs_group(kLevel1, {2, 1}).k0 == K0Class::Z);
    CHECK(abs_group(kLevel2, {0, 2}).k0 == K0Class::ZMod2);
    CHECK(abs_group(kLevelInf, {4, 4}).k0 == K0Class::Zero);
    CHECK_THROWS_AS(abs_group(kLevelInf, {0, 0}), Error);
}

TEST_CASE("abs diagnostic record for the real sphere S^1 ring analogue") {
    auto res = abs_group(kLevelInf, {2, 0});
    CHECK(res.label == AlgebraLabel{LabelBase::Ground, 1, false});
    CHECK(res.d == DimLog{1});
    CHECK(res.d_perp == DimLog{2});
    CHECK_FALSE(res.label.split);
}

TEST_CASE("closed form examples") {
    CHECK(closed_form_k0(kLevelInf, {13, 0}) == K0Class::Z);
    CHECK(closed_form_k0(kLevel2, {5, 0}) == K0Class::Z);
    CHECK(closed_form_k0(kLevel1, {3, 3}) == K0Class::Zero);
    CHECK_THROWS_AS(closed_form_k0(kLevel2, {0, 0}), Error);
}

TEST_CASE("period-4 closed form over level 2 follows the table") {
    // Positive side: Z, Z/2, 0, 0 for n = 1, 2, 3, 4 mod 4.
    CHECK(closed_form_k0(kLevel2, {1, 0}) == K0Class::Z);
    CHECK(closed_form_k0(kLevel2, {2, 0}) == K0Class::ZMod2);
    CHECK(closed_form_k0(kLevel2, {3, 0}) == K0Class::Zero);
    CHECK(closed_form_k0(kLevel2, {4, 0}) == K0Class::Zero);
    // Negative side: 0, Z/2, Z, 0.
    CHECK(closed_form_k0(kLevel2, {0, 1}) == K0Class::Zero);
    CHECK(closed_form_k0(kLevel2, {0, 2}) == K0Class::ZMod2);
    CHECK(closed_form_k0(kLevel2, {0, 3}) == K0Class::Z);
    CHECK(closed_form_k0(kLevel2, {0, 4}) == K0Class::Zero);
}

TEST_CASE("abs agrees with the closed forms on a small sweep") {
    for (auto profile : {kLevel1, kLevel2, kLevelInf})
        for (unsigned n = 0; n <= 16; ++n)
            for (unsigned m = 0; m <= 16; ++m) {
                if (n + m == 0) continue;
                REQUIRE(abs_group(profile, {n, m}).k0 == closed_form_k0(profile, {n, m}));
            }
}

TEST_CASE("split labels appear exactly for odd rank with square ds") {
    for (auto profile : {kLevel1, kLevel2, kLevelInf})
        for (unsigned n = 0; n <= 12; ++n)
            for (unsigned m = 0; m <= 12; ++m) {
                SignatureForm q{n, m};
                bool expected = (q.rank() % 2 == 1) && ds_square_test(profile, q);
                REQUIRE(clifford_of_signature(profile, q).split == expected);
            }
}

TEST_CASE("periodicity of the definite families") {
    for (unsigned n = 1; n <= 16; ++n) {
        auto base = clifford_of_signature(kLevelInf, {n, 0});
        auto shifted = clifford_of_signature(kLevelInf, {n + 8, 0});
        CHECK(shifted == AlgebraLabel{base.base, base.log2size + 4, base.split});
        auto base2 = clifford_of_signature(kLevel2, {0, n});
        auto shifted2 = clifford_of_signature(kLevel2, {0, n + 4});
        CHECK(shifted2 == AlgebraLabel{base2.base, base2.log2size + 2, base2.split});
        auto base1 = clifford_of_signature(kLevel1, {n, 0});
        auto shifted1 = clifford_of_signature(kLevel1, {n + 2, 0});
        CHECK(shifted1 == AlgebraLabel{base1.base, base1.log2size + 1, base1.split});
    }
}

TEST_CASE("mixed-form dimension formula in exponents") {
    // d(Q_{n,m}) = d(q'_{n-m}) * 2^m for n >= m, d(q_{m-n}) * 2^n otherwise.
    for (auto profile : {kLevel1, kLevel2, kLevelInf})
        for (unsigned n = 0; n <= 10; ++n)
            for (unsigned m = 0; m <= 10; ++m) {
                auto mixed = simple_dim(clifford_of_signature(profile, {n, m}));
                if (n >= m) {
                    auto core = simple_dim(clifford_of_signature(profile, {n - m, 0}));
                    REQUIRE(mixed.exponent == core.exponent + m);
                } else {
                    auto core = simple_dim(clifford_of_signature(profile, {0, m - n}));
                    REQUIRE(mixed.exponent == core.exponent + n);
                }
            }
}

TEST_CASE("fully hyperbolic forms land on zero") {
    for (unsigned n = 1; n <= 20; ++n)
        for (auto profile : {kLevel1, kLevel2, kLevelInf})
            CHECK(abs_group(profile, {n, n}).k0 == K0Class::Zero);
}
