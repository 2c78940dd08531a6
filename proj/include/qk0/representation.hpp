#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qk0/algebra_table.hpp"
#include "qk0/linalg.hpp"
#include "qk0/rational.hpp"

namespace qk0 {

/// Generic dense matrix over a field object, used where the code is
/// generic over F_p / Q. Rank queries dispatch to the concrete kernels.
template <FieldLike F>
struct DenseMatrix {
    using Elem = typename F::Elem;
    F field;
    std::uint32_t rows = 0, cols = 0;
    std::vector<Elem> a;

    DenseMatrix(const F& f, std::uint32_t r, std::uint32_t c)
        : field(f), rows(r), cols(c), a(std::size_t(r) * c, f.zero()) {}

    Elem& at(std::uint32_t r, std::uint32_t c) { return a[std::size_t(r) * cols + c]; }
    const Elem& at(std::uint32_t r, std::uint32_t c) const { return a[std::size_t(r) * cols + c]; }
};

inline std::uint32_t dense_rank(const DenseMatrix<PrimeField>& M) {
    FpMatrix fm(M.field, M.rows, M.cols);
    fm.a = M.a;
    return fp_rank(std::move(fm));
}

inline std::uint32_t dense_rank(const DenseMatrix<RationalField>& M) {
    QMatrix qm(M.rows, M.cols);
    qm.a = M.a;
    return q_rank(qm);
}

/// Matrix of left multiplication by x in the table basis: column j holds
/// the coordinates of x * e_j.
template <FieldLike F>
DenseMatrix<F> left_mul_matrix(const AlgebraTable<F>& A, const SparseVec<F>& x) {
    const F& k = A.field();
    DenseMatrix<F> L(k, A.dim(), A.dim());
    for (std::uint32_t j = 0; j < A.dim(); ++j)
        for (const auto& [i, ci] : x.terms) {
            const auto& c = A.product_coef(i, j);
            if (k.is_zero(c)) continue;
            std::uint32_t u = A.product_index(i, j);
            L.at(u, j) = k.add(L.at(u, j), k.mul(ci, c));
        }
    return L;
}

/// The regular representation b |-> L_b, exposed as a lazily indexed
/// list so that large tables never materialize dim^3 entries at once.
template <FieldLike F>
class RegularRepresentation {
public:
    explicit RegularRepresentation(const AlgebraTable<F>& table) : table_(&table) {
        if (table.dim() > engine_dim_cap())
            throw Error(Errc::DimensionCapExceeded, "regular representation above dimension cap");
    }

    std::uint32_t size() const { return table_->dim(); }

    DenseMatrix<F> operator[](std::uint32_t b) const {
        return left_mul_matrix(*table_, SparseVec<F>::basis(b, table_->field().one()));
    }

private:
    const AlgebraTable<F>* table_;
};

template <FieldLike F>
RegularRepresentation<F> regular_representation(const AlgebraTable<F>& table) {
    return RegularRepresentation<F>(table);
}

/// Outcome of extending a generator assignment e_i -> images[i] to an
/// algebra map C(spec) -> target. Failures carry the offending pair.
template <FieldLike F>
struct GeneratorMapResult {
    bool ok = false;
    Errc error = Errc::Internal;
    std::pair<std::uint32_t, std::uint32_t> witness_pair{0, 0};
    std::vector<SparseVec<F>> basis_images; // indexed by source bitmask
    std::vector<DenseMatrix<F>> matrix;     // singleton when ok; avoids default-construct
};

/// Checks the Clifford relations on the proposed generator images,
/// extends multiplicatively over the bitmask basis, verifies the result
/// is an algebra homomorphism on every basis pair, and returns its
/// matrix (target.dim x source.dim).
template <FieldLike F>
GeneratorMapResult<F> extend_generator_map(const std::vector<SparseVec<F>>& images,
                                           const CliffordSpec<F>& source,
                                           const AlgebraTable<F>& target) {
    const F& k = source.field();
    GeneratorMapResult<F> res;
    if (images.size() != source.rank())
        throw Error(Errc::InvalidArgument, "one image per generator required");

    // Relations: images[i]^2 = a_i * unit, images[i] images[j] + images[j] images[i] = 0.
    for (std::uint32_t i = 0; i < images.size(); ++i) {
        auto sq = target.mul(images[i], images[i]);
        auto want = sparse_scale(k, source.form.coeffs[i], target.unit());
        if (!sparse_eq(k, sq, want)) {
            res.error = Errc::RelationViolated;
            res.witness_pair = {i, i};
            return res;
        }
        for (std::uint32_t j = i + 1; j < images.size(); ++j) {
            auto anti = sparse_add(k, target.mul(images[i], images[j]),
                                   target.mul(images[j], images[i]));
            if (!anti.empty()) {
                res.error = Errc::RelationViolated;
                res.witness_pair = {i, j};
                return res;
            }
        }
    }

    const std::uint32_t sdim = source.dim();
    res.basis_images.assign(sdim, SparseVec<F>{});
    res.basis_images[0] = target.unit();
    for (std::uint32_t mask = 1; mask < sdim; ++mask) {
        std::uint32_t top = 31u - static_cast<std::uint32_t>(std::countl_zero(mask));
        res.basis_images[mask] =
            target.mul(res.basis_images[mask & ~(1u << top)], images[top]);
    }

    for (std::uint32_t s = 0; s < sdim; ++s)
        for (std::uint32_t t = 0; t < sdim; ++t) {
            auto lhs = target.mul(res.basis_images[s], res.basis_images[t]);
            auto [c, u] = basis_mul(s, t, source);
            auto rhs = sparse_scale(k, c, res.basis_images[u]);
            if (!sparse_eq(k, lhs, rhs)) {
                res.error = Errc::NotAHomomorphism;
                res.witness_pair = {s, t};
                return res;
            }
        }

    DenseMatrix<F> M(k, target.dim(), sdim);
    for (std::uint32_t col = 0; col < sdim; ++col)
        for (const auto& [row, c] : res.basis_images[col].terms) M.at(row, col) = c;
    res.matrix.push_back(std::move(M));
    res.ok = true;
    return res;
}

} // namespace qk0
