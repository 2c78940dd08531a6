#include "qk0/field.hpp"

namespace qk0 {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::InvalidArgument: return "INVALID_ARGUMENT";
    case Errc::NotASquare: return "NOT_A_SQUARE";
    case Errc::DivisionByZero: return "DIVISION_BY_ZERO";
    case Errc::ZeroScalar: return "ZERO_SCALAR";
    case Errc::DimensionCapExceeded: return "DIMENSION_CAP_EXCEEDED";
    case Errc::RelationViolated: return "RELATION_VIOLATED";
    case Errc::NotAHomomorphism: return "NOT_A_HOMOMORPHISM";
    case Errc::CenterTooLarge: return "CENTER_TOO_LARGE";
    case Errc::NotSemisimple: return "NOT_SEMISIMPLE";
    case Errc::NotAPerfectSquare: return "NOT_A_PERFECT_SQUARE";
    case Errc::UnknownWitness: return "UNKNOWN_WITNESS";
    case Errc::SplitTensorSplit: return "SPLIT_TENSOR_SPLIT";
    case Errc::EmptyForm: return "EMPTY_FORM";
    case Errc::LowDimension: return "LOW_DIMENSION";
    case Errc::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

const char* profile_tag(FieldProfile p) {
    switch (p) {
    case FieldProfile::SqrtMinusOne: return "level-1";
    case FieldProfile::SumTwoSquares: return "level-2";
    case FieldProfile::QuaternionDivision: return "level-inf";
    }
    return "?";
}

bool is_odd_prime(std::uint32_t n) {
    if (n < 3 || n % 2 == 0) return false;
    for (std::uint32_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (p >= kMaxModulus)
        throw Error(Errc::InvalidArgument, "modulus " + std::to_string(p) + " exceeds 2^16");
    if (!is_odd_prime(p))
        throw Error(Errc::InvalidArgument, std::to_string(p) + " is not an odd prime");
}

FieldProfile PrimeField::profile() const {
    return p_ % 4 == 1 ? FieldProfile::SqrtMinusOne : FieldProfile::SumTwoSquares;
}

PrimeField::Elem PrimeField::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::pow(Elem base, std::uint64_t e) const {
    std::uint64_t acc = 1, b = base % p_;
    while (e) {
        if (e & 1) acc = acc * b % p_;
        b = b * b % p_;
        e >>= 1;
    }
    return static_cast<Elem>(acc);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a == 0) throw Error(Errc::DivisionByZero, "inverse of 0 mod " + std::to_string(p_));
    return pow(a, p_ - 2);
}

bool PrimeField::is_square(Elem a) const {
    if (a == 0) return true;
    return pow(a, (p_ - 1) / 2) == 1;
}

std::optional<PrimeField::Elem> PrimeField::sqrt(Elem a) const {
    if (a == 0) return 0;
    if (!is_square(a)) return std::nullopt;
    for (Elem r = 1; r <= p_ / 2; ++r)
        if (mul(r, r) == a) return r;
    return std::nullopt; // unreachable for a genuine square
}

} // namespace qk0
