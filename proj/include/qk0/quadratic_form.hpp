#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qk0/error.hpp"
#include "qk0/field.hpp"

namespace qk0 {

/// The signature form Q_{n,m} = x_1^2+..+x_n^2 - y_1^2-..-y_m^2, recorded
/// as the pair of coefficient counts. Covers every form the symbolic
/// pipeline touches: the definite families (n,0) and (0,m), the hyperbolic
/// plane (1,1) and the rank-0 recursion base (0,0).
struct SignatureForm {
    unsigned plus = 0;
    unsigned minus = 0;

    unsigned rank() const { return plus + minus; }
    bool operator==(const SignatureForm&) const = default;
};

/// det q as a sign: (-1)^minus.
inline int det_sign(const SignatureForm& q) { return q.minus % 2 == 0 ? 1 : -1; }

/// ds q = (-1)^(r(r-1)/2) det q as a sign, r = rank.
inline int ds_sign(const SignatureForm& q) {
    unsigned r = q.rank();
    int flip = (std::uint64_t(r) * (r - 1) / 2) % 2 == 0 ? 1 : -1;
    return flip * det_sign(q);
}

/// q |-> q perp <1>.
inline SignatureForm perp_one(const SignatureForm& q) { return {q.plus + 1, q.minus}; }

/// Splits off the maximal number of hyperbolic planes, leaving a definite
/// core: Q_{n,m} = core perp h^count with core = (n-m,0) or (0,m-n).
struct HyperbolicSplit {
    SignatureForm core;
    unsigned h_count = 0;
    bool operator==(const HyperbolicSplit&) const = default;
};

inline HyperbolicSplit hyperbolic_reduce(const SignatureForm& q) {
    if (q.plus >= q.minus) return {{q.plus - q.minus, 0}, q.minus};
    return {{0, q.minus - q.plus}, q.plus};
}

/// Scaling a signature form by a unit sign: +1 fixes it, -1 swaps the
/// coefficient counts.
inline SignatureForm scale_sign(int u, const SignatureForm& q) {
    if (u == 0) throw Error(Errc::ZeroScalar, "scaling form by zero");
    return u > 0 ? q : SignatureForm{q.minus, q.plus};
}

/// A diagonal form sum a_i x_i^2 with nonzero coefficients in a concrete
/// field. Only the engine and witness layers need general coefficients;
/// the symbolic pipeline stays on SignatureForm.
template <FieldLike F>
struct DiagonalForm {
    F field;
    std::vector<typename F::Elem> coeffs;

    DiagonalForm(const F& f, std::vector<typename F::Elem> a)
        : field(f), coeffs(std::move(a)) {
        for (const auto& c : coeffs)
            if (field.is_zero(c))
                throw Error(Errc::InvalidArgument, "degenerate diagonal form (zero coefficient)");
    }

    unsigned rank() const { return static_cast<unsigned>(coeffs.size()); }
};

template <FieldLike F>
typename F::Elem det_form(const DiagonalForm<F>& q) {
    auto d = q.field.one();
    for (const auto& c : q.coeffs) d = q.field.mul(d, c);
    return d;
}

template <FieldLike F>
typename F::Elem ds_form(const DiagonalForm<F>& q) {
    unsigned r = q.rank();
    auto d = det_form(q);
    if ((std::uint64_t(r) * (r - 1) / 2) % 2 != 0) d = q.field.neg(d);
    return d;
}

template <FieldLike F>
DiagonalForm<F> scale_form(const typename F::Elem& u, const DiagonalForm<F>& q) {
    if (q.field.is_zero(u)) throw Error(Errc::ZeroScalar, "scaling form by zero");
    std::vector<typename F::Elem> scaled;
    scaled.reserve(q.coeffs.size());
    for (const auto& c : q.coeffs) scaled.push_back(q.field.mul(u, c));
    return DiagonalForm<F>(q.field, std::move(scaled));
}

/// Realizes Q_{n,m} as a concrete diagonal form (+1 coefficients first).
template <FieldLike F>
DiagonalForm<F> signature_coeffs(const F& field, const SignatureForm& q) {
    std::vector<typename F::Elem> a;
    a.reserve(q.rank());
    for (unsigned i = 0; i < q.plus; ++i) a.push_back(field.one());
    for (unsigned i = 0; i < q.minus; ++i) a.push_back(field.neg(field.one()));
    return DiagonalForm<F>(field, std::move(a));
}

} // namespace qk0
