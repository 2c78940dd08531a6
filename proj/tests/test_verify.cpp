#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qk0/verify.hpp"

using namespace qk0;

TEST_CASE("predicted factors from labels") {
    auto split = predicted_factors({LabelBase::Ground, 1, true});
    REQUIRE(split.size() == 2);
    CHECK(split[0] == SimpleFactor{2, 1, 2});
    auto quad = predicted_factors({LabelBase::Complex, 1, false});
    REQUIRE(quad.size() == 1);
    CHECK(quad[0] == SimpleFactor{2, 2, 4});
    CHECK_THROWS_AS(predicted_factors({LabelBase::Quaternion, 0, false}), Error);
}

TEST_CASE("small sweeps match on both residue classes") {
    for (std::uint32_t p : {5u, 7u}) {
        PrimeField field(p);
        auto records = run_prime_sweep(field, 4);
        CHECK(records.size() == 2 + 3 + 4 + 5);
        for (const auto& rec : records) {
            INFO(record_line(rec));
            REQUIRE(rec.match);
        }
    }
}

TEST_CASE("record line shape") {
    PrimeField field(5);
    auto records = run_prime_sweep(field, 1);
    REQUIRE(records.size() == 2);
    // (0,1) over F_5: C(-x^2) with -1 square splits into two rank-1 blocks.
    const auto& rec = records.front();
    CHECK(rec.form == SignatureForm{0, 1});
    CHECK(record_line(rec) ==
          "VERIFY plus=0 minus=1 p=5 label=K(1)^2 k0=Z oracle=2x(m=1,e=1) match=yes");
}

TEST_CASE("oracle k0 equals the closed forms across a rank-5 sweep") {
    PrimeField field(13);
    for (const auto& rec : run_prime_sweep(field, 5)) {
        REQUIRE(rec.match);
        CHECK(rec.oracle_k0 == closed_form_k0(field.profile(), rec.form));
    }
}
