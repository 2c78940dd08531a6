#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

#include "qk0/error.hpp"
#include "qk0/quadratic_form.hpp"

namespace qk0 {

inline constexpr unsigned kDefaultRankCap = 12; // dimension 2^12 = 4096

/// Engine rank cap, overridable through QK0_RANK_CAP (read once).
unsigned engine_rank_cap();

/// Dimension cap for tables and representations: 2^rank-cap.
inline std::uint32_t engine_dim_cap() { return 1u << engine_rank_cap(); }

/// Presentation of a Clifford algebra C(q): generators e_1..e_n with
/// e_i^2 = a_i and e_i e_j = -e_j e_i. Basis elements are the products
/// e_S over subsets S, encoded as bitmasks (bit i-1 set iff e_i appears).
template <FieldLike F>
struct CliffordSpec {
    DiagonalForm<F> form;

    explicit CliffordSpec(DiagonalForm<F> q, unsigned rank_cap = engine_rank_cap())
        : form(std::move(q)) {
        if (form.rank() > rank_cap)
            throw Error(Errc::DimensionCapExceeded,
                        "rank " + std::to_string(form.rank()) + " exceeds cap " +
                            std::to_string(rank_cap));
    }

    unsigned rank() const { return form.rank(); }
    std::uint32_t dim() const { return 1u << form.rank(); }
    const F& field() const { return form.field; }
};

/// Number of transpositions needed to interleave e_S e_T into ascending
/// order: sum over j in T of |{i in S : i > j}|. Only the parity matters.
inline bool reorder_sign_is_negative(std::uint32_t s, std::uint32_t t) {
    unsigned swaps = 0;
    while (t) {
        unsigned j = static_cast<unsigned>(std::countr_zero(t));
        swaps += std::popcount(s >> (j + 1));
        t &= t - 1;
    }
    return swaps % 2 != 0;
}

/// Product of two basis elements: e_S e_T = scalar * e_(S xor T), where
/// scalar folds the reordering sign with the squares a_i for i in S and T.
template <FieldLike F>
std::pair<typename F::Elem, std::uint32_t>
basis_mul(std::uint32_t s, std::uint32_t t, const CliffordSpec<F>& spec) {
    const F& k = spec.field();
    auto scalar = k.one();
    for (std::uint32_t common = s & t; common; common &= common - 1) {
        unsigned i = static_cast<unsigned>(std::countr_zero(common));
        scalar = k.mul(scalar, spec.form.coeffs[i]);
    }
    if (reorder_sign_is_negative(s, t)) scalar = k.neg(scalar);
    return {scalar, s ^ t};
}

/// Sparse vector over an indexed basis: sorted (index, coefficient) pairs
/// with no stored zeros. Used both for Clifford elements (bitmask indices)
/// and for elements of structure-constant tables.
template <FieldLike F>
struct SparseVec {
    using Elem = typename F::Elem;
    std::vector<std::pair<std::uint32_t, Elem>> terms;

    bool empty() const { return terms.empty(); }

    static SparseVec basis(std::uint32_t idx, const Elem& c) {
        SparseVec v;
        v.terms.emplace_back(idx, c);
        return v;
    }
};

template <FieldLike F>
SparseVec<F> sparse_normalize(const F& k, std::vector<std::pair<std::uint32_t, typename F::Elem>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVec<F> out;
    for (auto& [idx, c] : terms) {
        if (!out.terms.empty() && out.terms.back().first == idx)
            out.terms.back().second = k.add(out.terms.back().second, c);
        else
            out.terms.emplace_back(idx, c);
    }
    std::erase_if(out.terms, [&](const auto& t) { return k.is_zero(t.second); });
    return out;
}

template <FieldLike F>
SparseVec<F> sparse_add(const F& k, const SparseVec<F>& x, const SparseVec<F>& y) {
    auto terms = x.terms;
    terms.insert(terms.end(), y.terms.begin(), y.terms.end());
    return sparse_normalize(k, std::move(terms));
}

template <FieldLike F>
SparseVec<F> sparse_scale(const F& k, const typename F::Elem& c, const SparseVec<F>& x) {
    SparseVec<F> out;
    if (k.is_zero(c)) return out;
    for (const auto& [idx, v] : x.terms) out.terms.emplace_back(idx, k.mul(c, v));
    return out;
}

template <FieldLike F>
bool sparse_eq(const F& k, const SparseVec<F>& x, const SparseVec<F>& y) {
    if (x.terms.size() != y.terms.size()) return false;
    for (std::size_t i = 0; i < x.terms.size(); ++i)
        if (x.terms[i].first != y.terms[i].first || !k.eq(x.terms[i].second, y.terms[i].second))
            return false;
    return true;
}

/// A Clifford element is a SparseVec keyed by basis bitmasks.
template <FieldLike F>
using CliffordElement = SparseVec<F>;

template <FieldLike F>
CliffordElement<F> clifford_unit(const CliffordSpec<F>& spec) {
    return CliffordElement<F>::basis(0, spec.field().one());
}

template <FieldLike F>
CliffordElement<F> clifford_generator(const CliffordSpec<F>& spec, unsigned i) {
    if (i >= spec.rank()) throw Error(Errc::InvalidArgument, "generator index out of range");
    return CliffordElement<F>::basis(1u << i, spec.field().one());
}

/// Bilinear extension of basis_mul.
template <FieldLike F>
CliffordElement<F> clifford_mul(const CliffordSpec<F>& spec, const CliffordElement<F>& x,
                                const CliffordElement<F>& y) {
    const F& k = spec.field();
    std::vector<std::pair<std::uint32_t, typename F::Elem>> terms;
    terms.reserve(x.terms.size() * y.terms.size());
    for (const auto& [s, cs] : x.terms)
        for (const auto& [t, ct] : y.terms) {
            auto [scalar, u] = basis_mul(s, t, spec);
            auto c = k.mul(k.mul(cs, ct), scalar);
            if (!k.is_zero(c)) terms.emplace_back(u, c);
        }
    return sparse_normalize(k, std::move(terms));
}

} // namespace qk0
