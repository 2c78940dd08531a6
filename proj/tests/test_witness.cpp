#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qk0/rational.hpp"
#include "qk0/witness.hpp"

using namespace qk0;

TEST_CASE("the three quaternion identities hold over Q") {
    RationalField Q;
    for (WitnessKind kind : {WitnessKind::CxC, WitnessKind::HxC, WitnessKind::HxH}) {
        auto out = verify_witness_iso(Q, WitnessCase{kind});
        INFO(witness_certificate(out));
        CHECK(out.pass);
    }
}

TEST_CASE("CxC splits over F_13 too (where -1 is already a square)") {
    PrimeField f13(13);
    auto out = verify_witness_iso(f13, WitnessCase{WitnessKind::CxC});
    INFO(witness_certificate(out));
    CHECK(out.pass);
    CHECK(out.dim == 4);
}

TEST_CASE("ABS_PLUS n=1 over F_7") {
    PrimeField f7(7);
    auto out = verify_witness_iso(f7, WitnessCase{WitnessKind::AbsPlus, 1});
    INFO(witness_certificate(out));
    CHECK(out.pass);
    CHECK(out.dim == 8);
}

TEST_CASE("hyperbolic splitting witness for a mixed form") {
    RationalField Q;
    auto out = verify_witness_iso(Q, WitnessCase{WitnessKind::Hyp, 0, {2, 1}});
    INFO(witness_certificate(out));
    CHECK(out.pass);
    CHECK(out.dim == 32);
}

TEST_CASE("scaled binary lemma for b = (-,-)") {
    PrimeField f5(5);
    auto out = verify_witness_iso(f5, WitnessCase{WitnessKind::Scaled, 0, {1, 1}, {-1, -1}});
    INFO(witness_certificate(out));
    CHECK(out.pass);
}

TEST_CASE("certificate grammar") {
    RationalField Q;
    auto out = verify_witness_iso(Q, WitnessCase{WitnessKind::CxC});
    CHECK(witness_certificate(out) == "WITNESS CxC field=Q PASS dim=4");
}

TEST_CASE("suite covers the canonical case list") {
    auto cases = witness_suite_cases();
    // 3 named identities + 6 AbsPlus + 6 AbsMinus + 28 Hyp + 4*10 Scaled.
    CHECK(cases.size() == 3 + 6 + 6 + 28 + 40);
}
