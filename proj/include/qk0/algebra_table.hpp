#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qk0/clifford.hpp"
#include "qk0/error.hpp"
#include "qk0/linalg.hpp"

namespace qk0 {

/// Structure-constant table of a finite-dimensional algebra. Every algebra
/// this project builds (Clifford algebras, matrix algebras, their tensor
/// products and direct sums) is monomial in its natural basis: the product
/// of two basis elements is a scalar times a single basis element. The
/// table stores that scalar and index per pair; a zero scalar encodes a
/// zero product. The unit is a general element since matrix-algebra units
/// are sums of basis idempotents.
template <FieldLike F>
class AlgebraTable {
public:
    using Elem = typename F::Elem;

    AlgebraTable(const F& field, std::uint32_t dim, std::vector<std::uint32_t> idx,
                 std::vector<Elem> coef, SparseVec<F> unit)
        : field_(field), dim_(dim), idx_(std::move(idx)), coef_(std::move(coef)),
          unit_(std::move(unit)) {
        if (dim_ > engine_dim_cap())
            throw Error(Errc::DimensionCapExceeded,
                        "table dimension " + std::to_string(dim_) + " exceeds " +
                            std::to_string(engine_dim_cap()));
        if (idx_.size() != std::size_t(dim_) * dim_ || coef_.size() != idx_.size())
            throw Error(Errc::Internal, "table shape mismatch");
    }

    const F& field() const { return field_; }
    std::uint32_t dim() const { return dim_; }
    const SparseVec<F>& unit() const { return unit_; }

    std::uint32_t product_index(std::uint32_t i, std::uint32_t j) const {
        return idx_[std::size_t(i) * dim_ + j];
    }
    const Elem& product_coef(std::uint32_t i, std::uint32_t j) const {
        return coef_[std::size_t(i) * dim_ + j];
    }

    SparseVec<F> mul(const SparseVec<F>& x, const SparseVec<F>& y) const {
        std::vector<std::pair<std::uint32_t, Elem>> terms;
        terms.reserve(x.terms.size() * y.terms.size());
        for (const auto& [i, ci] : x.terms)
            for (const auto& [j, cj] : y.terms) {
                const Elem& c = product_coef(i, j);
                if (field_.is_zero(c)) continue;
                terms.emplace_back(product_index(i, j), field_.mul(field_.mul(ci, cj), c));
            }
        return sparse_normalize(field_, std::move(terms));
    }

    std::vector<Elem> dense(const SparseVec<F>& x) const {
        std::vector<Elem> v(dim_, field_.zero());
        for (const auto& [i, c] : x.terms) v[i] = c;
        return v;
    }

    SparseVec<F> sparse(const std::vector<Elem>& v) const {
        SparseVec<F> out;
        for (std::uint32_t i = 0; i < dim_; ++i)
            if (!field_.is_zero(v[i])) out.terms.emplace_back(i, v[i]);
        return out;
    }

    /// Product of dense vectors through the monomial table.
    std::vector<Elem> dense_mul(const std::vector<Elem>& x, const std::vector<Elem>& y) const {
        std::vector<Elem> out(dim_, field_.zero());
        for (std::uint32_t i = 0; i < dim_; ++i) {
            if (field_.is_zero(x[i])) continue;
            for (std::uint32_t j = 0; j < dim_; ++j) {
                if (field_.is_zero(y[j])) continue;
                const Elem& c = product_coef(i, j);
                if (field_.is_zero(c)) continue;
                std::uint32_t u = product_index(i, j);
                out[u] = field_.add(out[u], field_.mul(field_.mul(x[i], y[j]), c));
            }
        }
        return out;
    }

    /// Debug dump: one line per basis pair, `i j -> c_0,...,c_{dim-1}`.
    void dump(std::ostream& os) const;

private:
    F field_;
    std::uint32_t dim_;
    std::vector<std::uint32_t> idx_;
    std::vector<Elem> coef_;
    SparseVec<F> unit_;
};

/// C(q) as a structure-constant table on the bitmask basis.
template <FieldLike F>
AlgebraTable<F> clifford_table(const CliffordSpec<F>& spec) {
    const std::uint32_t dim = spec.dim();
    if (dim > engine_dim_cap())
        throw Error(Errc::DimensionCapExceeded, "Clifford dimension exceeds cap");
    std::vector<std::uint32_t> idx(std::size_t(dim) * dim);
    std::vector<typename F::Elem> coef(std::size_t(dim) * dim, spec.field().zero());
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < std::int64_t(dim); ++s)
        for (std::uint32_t t = 0; t < dim; ++t) {
            auto [c, u] = basis_mul(std::uint32_t(s), t, spec);
            idx[std::size_t(s) * dim + t] = u;
            coef[std::size_t(s) * dim + t] = c;
        }
    return AlgebraTable<F>(spec.field(), dim, std::move(idx), std::move(coef),
                           SparseVec<F>::basis(0, spec.field().one()));
}

/// Full matrix algebra M_n(k) on the basis E_rc, index r*n + c.
template <FieldLike F>
AlgebraTable<F> matrix_table(const F& field, std::uint32_t n) {
    const std::uint32_t dim = n * n;
    std::vector<std::uint32_t> idx(std::size_t(dim) * dim, 0);
    std::vector<typename F::Elem> coef(std::size_t(dim) * dim, field.zero());
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            for (std::uint32_t c = 0; c < n; ++c)
                for (std::uint32_t d = 0; d < n; ++d) {
                    std::uint32_t i = a * n + b, j = c * n + d;
                    if (b == c) {
                        idx[std::size_t(i) * dim + j] = a * n + d;
                        coef[std::size_t(i) * dim + j] = field.one();
                    }
                }
    SparseVec<F> unit;
    for (std::uint32_t i = 0; i < n; ++i) unit.terms.emplace_back(i * n + i, field.one());
    return AlgebraTable<F>(field, dim, std::move(idx), std::move(coef), std::move(unit));
}

/// Plain (ungraded) tensor product A (x) B, basis (i,j) at index i*dimB + j.
template <FieldLike F>
AlgebraTable<F> tensor_table(const AlgebraTable<F>& A, const AlgebraTable<F>& B) {
    const F& field = A.field();
    const std::uint64_t dim64 = std::uint64_t(A.dim()) * B.dim();
    if (dim64 > engine_dim_cap())
        throw Error(Errc::DimensionCapExceeded, "tensor dimension exceeds cap");
    const std::uint32_t dim = static_cast<std::uint32_t>(dim64);
    const std::uint32_t dB = B.dim();
    std::vector<std::uint32_t> idx(std::size_t(dim) * dim, 0);
    std::vector<typename F::Elem> coef(std::size_t(dim) * dim, field.zero());
    for (std::uint32_t a1 = 0; a1 < A.dim(); ++a1)
        for (std::uint32_t b1 = 0; b1 < dB; ++b1)
            for (std::uint32_t a2 = 0; a2 < A.dim(); ++a2)
                for (std::uint32_t b2 = 0; b2 < dB; ++b2) {
                    std::uint32_t i = a1 * dB + b1, j = a2 * dB + b2;
                    const auto& ca = A.product_coef(a1, a2);
                    const auto& cb = B.product_coef(b1, b2);
                    if (field.is_zero(ca) || field.is_zero(cb)) continue;
                    idx[std::size_t(i) * dim + j] =
                        A.product_index(a1, a2) * dB + B.product_index(b1, b2);
                    coef[std::size_t(i) * dim + j] = field.mul(ca, cb);
                }
    SparseVec<F> unit;
    for (const auto& [ia, ca] : A.unit().terms)
        for (const auto& [ib, cb] : B.unit().terms)
            unit.terms.emplace_back(ia * dB + ib, field.mul(ca, cb));
    unit = sparse_normalize(field, std::move(unit.terms));
    return AlgebraTable<F>(field, dim, std::move(idx), std::move(coef), std::move(unit));
}

/// Direct sum A x B: block algebra, cross products vanish.
template <FieldLike F>
AlgebraTable<F> direct_sum_table(const AlgebraTable<F>& A, const AlgebraTable<F>& B) {
    const F& field = A.field();
    const std::uint32_t dim = A.dim() + B.dim();
    if (dim > engine_dim_cap())
        throw Error(Errc::DimensionCapExceeded, "direct sum dimension exceeds cap");
    std::vector<std::uint32_t> idx(std::size_t(dim) * dim, 0);
    std::vector<typename F::Elem> coef(std::size_t(dim) * dim, field.zero());
    for (std::uint32_t i = 0; i < A.dim(); ++i)
        for (std::uint32_t j = 0; j < A.dim(); ++j) {
            idx[std::size_t(i) * dim + j] = A.product_index(i, j);
            coef[std::size_t(i) * dim + j] = A.product_coef(i, j);
        }
    for (std::uint32_t i = 0; i < B.dim(); ++i)
        for (std::uint32_t j = 0; j < B.dim(); ++j) {
            idx[std::size_t(A.dim() + i) * dim + (A.dim() + j)] = A.dim() + B.product_index(i, j);
            coef[std::size_t(A.dim() + i) * dim + (A.dim() + j)] = B.product_coef(i, j);
        }
    SparseVec<F> unit = A.unit();
    for (const auto& [ib, cb] : B.unit().terms) unit.terms.emplace_back(A.dim() + ib, cb);
    return AlgebraTable<F>(field, dim, std::move(idx), std::move(coef), std::move(unit));
}

template <FieldLike F>
void AlgebraTable<F>::dump(std::ostream& os) const {
    for (std::uint32_t i = 0; i < dim_; ++i)
        for (std::uint32_t j = 0; j < dim_; ++j) {
            os << i << ' ' << j << " ->";
            auto row = dense(field_.is_zero(product_coef(i, j))
                                 ? SparseVec<F>{}
                                 : SparseVec<F>::basis(product_index(i, j), product_coef(i, j)));
            for (std::uint32_t c = 0; c < dim_; ++c) os << (c ? "," : " ") << row[c];
            os << '\n';
        }
}

} // namespace qk0
