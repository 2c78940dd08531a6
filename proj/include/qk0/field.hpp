#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>

#include "qk0/error.hpp"

namespace qk0 {

/// The three mutually exclusive field hypotheses (characteristic != 2)
/// that drive every classification branch:
///   SqrtMinusOne       -1 is a square in k
///   SumTwoSquares      -1 is not a square but is a sum of two squares
///   QuaternionDivision x^2 + y^2 + z^2 = 0 has only the trivial zero,
///                      i.e. (-1,-1)/k is a division algebra
enum class FieldProfile {
    SqrtMinusOne,
    SumTwoSquares,
    QuaternionDivision,
};

const char* profile_tag(FieldProfile p); // "level-1" | "level-2" | "level-inf"

/// Odd prime field F_p, p < 2^16. Residues are plain uint32_t values in
/// [0, p); the field object carries the modulus and does the arithmetic,
/// so residue arrays stay flat in the linear-algebra kernels.
class PrimeField {
public:
    using Elem = std::uint32_t;

    static constexpr std::uint32_t kMaxModulus = 1u << 16;

    explicit PrimeField(std::uint32_t p);

    std::uint32_t modulus() const { return p_; }

    /// SqrtMinusOne for p = 1 mod 4, SumTwoSquares for p = 3 mod 4.
    /// A finite field never satisfies the quaternion-division hypothesis.
    FieldProfile profile() const;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long n) const;

    Elem add(Elem a, Elem b) const {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>(std::uint64_t(a) * b % p_);
    }
    Elem pow(Elem base, std::uint64_t e) const;
    /// Multiplicative inverse; throws DivisionByZero on 0.
    Elem inv(Elem a) const;

    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    /// Euler's criterion, with 0 counted as a square.
    bool is_square(Elem a) const;

    /// The smaller of the two square roots of a, or nullopt when a is not
    /// a square. Deterministic search; at p < 2^16 Tonelli-Shanks is not
    /// worth its weight.
    std::optional<Elem> sqrt(Elem a) const;

    std::string describe() const { return "Fp:" + std::to_string(p_); }

private:
    std::uint32_t p_;
};

bool is_odd_prime(std::uint32_t n);

inline FieldProfile profile_of_prime(const PrimeField& field) { return field.profile(); }

template <class F>
concept FieldLike = requires(const F f, typename F::Elem a) {
    { f.zero() } -> std::same_as<typename F::Elem>;
    { f.one() } -> std::same_as<typename F::Elem>;
    { f.from_int(1LL) } -> std::same_as<typename F::Elem>;
    { f.add(a, a) } -> std::same_as<typename F::Elem>;
    { f.sub(a, a) } -> std::same_as<typename F::Elem>;
    { f.neg(a) } -> std::same_as<typename F::Elem>;
    { f.mul(a, a) } -> std::same_as<typename F::Elem>;
    { f.inv(a) } -> std::same_as<typename F::Elem>;
    { f.is_zero(a) } -> std::same_as<bool>;
    { f.eq(a, a) } -> std::same_as<bool>;
};

} // namespace qk0
