#pragma once

#include <gmpxx.h>

#include <string>

#include "qk0/error.hpp"

namespace qk0 {

/// Exact rational arithmetic for witness checks over Q. Backed by GMP's
/// mpq_class, which keeps values canonical (lowest terms, positive
/// denominator) after every operation. Q satisfies the quaternion-division
/// hypothesis, so it is the concrete carrier for the level-inf oracle runs.
struct RationalField {
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(long long n) const { return Elem(static_cast<long>(n)); }
    Elem from_fraction(long num, long den) const {
        if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator");
        Elem q(num, den);
        q.canonicalize();
        return q;
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw Error(Errc::DivisionByZero, "inverse of 0 in Q");
        return Elem(1) / a;
    }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string describe() const { return "Q"; }
};

} // namespace qk0
