#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qk0/clifford.hpp"
#include "qk0/rational.hpp"
#include "support/naive_clifford.hpp"

using namespace qk0;

namespace {

CliffordSpec<PrimeField> spec_over(const PrimeField& f, const SignatureForm& q) {
    return CliffordSpec<PrimeField>(signature_coeffs(f, q));
}

CliffordElement<PrimeField> random_element(const CliffordSpec<PrimeField>& spec,
                                           std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> mask(0, spec.dim() - 1);
    std::uniform_int_distribution<std::uint32_t> coeff(0, spec.field().modulus() - 1);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> terms;
    for (int i = 0; i < 5; ++i) terms.emplace_back(mask(rng), coeff(rng));
    return sparse_normalize(spec.field(), std::move(terms));
}

} // namespace

TEST_CASE("basis product examples") {
    PrimeField f7(7);
    auto spec = spec_over(f7, {2, 0});
    auto [c12, m12] = basis_mul(0b01, 0b10, spec);
    CHECK(c12 == 1);
    CHECK(m12 == 0b11);
    auto [c21, m21] = basis_mul(0b10, 0b01, spec);
    CHECK(c21 == f7.neg(1)); // e2 e1 = -e1 e2
    CHECK(m21 == 0b11);

    DiagonalForm<PrimeField> mixed(f7, {3, 5});
    CliffordSpec<PrimeField> spec2(mixed);
    auto [sq, msq] = basis_mul(0b01, 0b01, spec2);
    CHECK(sq == 3); // e_i^2 = a_i
    CHECK(msq == 0);
    auto [top, mtop] = basis_mul(0b11, 0b11, spec2);
    CHECK(top == f7.neg(f7.mul(3, 5))); // (e1e2)^2 = -a1 a2
    CHECK(mtop == 0);
}

TEST_CASE("fast sign rule matches the transposition-count oracle up to rank 9") {
    PrimeField f11(11);
    for (SignatureForm q : {SignatureForm{4, 5}, SignatureForm{9, 0}, SignatureForm{0, 9}}) {
        auto spec = spec_over(f11, q);
        for (std::uint32_t s = 0; s < spec.dim(); ++s)
            for (std::uint32_t t = 0; t < spec.dim(); ++t) {
                auto fast = basis_mul(s, t, spec);
                auto naive = testsupport::naive_basis_mul(s, t, spec);
                REQUIRE(fast == naive);
            }
    }
}

TEST_CASE("element multiplication examples") {
    PrimeField f7(7);
    auto spec = spec_over(f7, {2, 0});
    auto unit = clifford_unit(spec);
    auto e1 = clifford_generator(spec, 0);
    auto e2 = clifford_generator(spec, 1);
    auto x = sparse_add(f7, e1, e2);
    CHECK(sparse_eq(f7, clifford_mul(spec, unit, x), x));
    // (e1 + e2)^2 = 2 under a1 = a2 = 1
    auto sq = clifford_mul(spec, x, x);
    CHECK(sparse_eq(f7, sq, CliffordElement<PrimeField>::basis(0, 2)));
    CliffordElement<PrimeField> zero;
    CHECK(clifford_mul(spec, x, zero).empty());
}

TEST_CASE("anticommutation and squares for every generator pair") {
    PrimeField f13(13);
    DiagonalForm<PrimeField> form(f13, {1, 12, 2, 5, 3});
    CliffordSpec<PrimeField> spec(form);
    for (unsigned i = 0; i < spec.rank(); ++i) {
        auto ei = clifford_generator(spec, i);
        auto sq = clifford_mul(spec, ei, ei);
        CHECK(sparse_eq(f13, sq, CliffordElement<PrimeField>::basis(0, form.coeffs[i])));
        for (unsigned j = i + 1; j < spec.rank(); ++j) {
            auto ej = clifford_generator(spec, j);
            auto anti = sparse_add(f13, clifford_mul(spec, ei, ej), clifford_mul(spec, ej, ei));
            CHECK(anti.empty());
        }
    }
}

TEST_CASE("associativity on random triples") {
    std::mt19937_64 rng(2024);
    PrimeField f5(5);
    for (SignatureForm q : {SignatureForm{2, 1}, SignatureForm{3, 3}}) {
        auto spec = spec_over(f5, q);
        for (int trial = 0; trial < 1000; ++trial) {
            auto x = random_element(spec, rng);
            auto y = random_element(spec, rng);
            auto z = random_element(spec, rng);
            auto left = clifford_mul(spec, clifford_mul(spec, x, y), z);
            auto right = clifford_mul(spec, x, clifford_mul(spec, y, z));
            REQUIRE(sparse_eq(f5, left, right));
        }
    }
}

TEST_CASE("associativity holds over Q as well") {
    RationalField Q;
    DiagonalForm<RationalField> form(Q, {Q.one(), Q.neg(Q.one()), Q.from_int(1)});
    CliffordSpec<RationalField> spec(form);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(-4, 4);
    auto rand_elem = [&] {
        std::vector<std::pair<std::uint32_t, mpq_class>> terms;
        for (int i = 0; i < 4; ++i)
            terms.emplace_back(std::uniform_int_distribution<std::uint32_t>(0, spec.dim() - 1)(rng),
                               Q.from_fraction(num(rng), 2));
        return sparse_normalize(Q, std::move(terms));
    };
    for (int trial = 0; trial < 200; ++trial) {
        auto x = rand_elem(), y = rand_elem(), z = rand_elem();
        REQUIRE(sparse_eq(Q, clifford_mul(spec, clifford_mul(spec, x, y), z),
                          clifford_mul(spec, x, clifford_mul(spec, y, z))));
    }
}

TEST_CASE("rank cap is enforced") {
    PrimeField f5(5);
    CHECK_THROWS_AS(spec_over(f5, {13, 0}), Error);
    CHECK_NOTHROW(CliffordSpec<PrimeField>(signature_coeffs(f5, {4, 0}), 4));
    CHECK_THROWS_AS(CliffordSpec<PrimeField>(signature_coeffs(f5, {5, 0}), 4), Error);
}
