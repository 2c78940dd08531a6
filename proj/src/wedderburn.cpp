#include "qk0/wedderburn.hpp"

#include <cmath>
#include <optional>

#include "qk0/representation.hpp"

namespace qk0 {

namespace {

// Columns of N are candidate center vectors; intersect with the
// commutator kernel of basis element b: z e_b - e_b z = 0.
FpMatrix commutator_times(const FpTable& A, std::uint32_t b, const FpMatrix& N) {
    const PrimeField& F = A.field();
    FpMatrix M(F, A.dim(), N.cols);
    for (std::uint32_t col = 0; col < N.cols; ++col) {
        for (std::uint32_t i = 0; i < A.dim(); ++i) {
            std::uint32_t zi = N.at(i, col);
            if (!zi) continue;
            // z_i e_i e_b
            if (!F.is_zero(A.product_coef(i, b))) {
                std::uint32_t u = A.product_index(i, b);
                M.at(u, col) = F.add(M.at(u, col), F.mul(zi, A.product_coef(i, b)));
            }
            // - z_i e_b e_i
            if (!F.is_zero(A.product_coef(b, i))) {
                std::uint32_t u = A.product_index(b, i);
                M.at(u, col) = F.sub(M.at(u, col), F.mul(zi, A.product_coef(b, i)));
            }
        }
    }
    return M;
}

FpVec column_of(const FpMatrix& M, std::uint32_t col) {
    FpVec v(M.rows);
    for (std::uint32_t i = 0; i < M.rows; ++i) v[i] = M.at(i, col);
    return v;
}

} // namespace

std::vector<FpVec> center_basis(const FpTable& A) {
    const PrimeField& F = A.field();
    FpMatrix N = FpMatrix::identity(F, A.dim());
    for (std::uint32_t b = 0; b < A.dim() && N.cols > 1; ++b) {
        FpMatrix M = commutator_times(A, b, N);
        FpMatrix V = fp_nullspace(std::move(M));
        if (V.cols == N.cols) continue; // constraint already satisfied
        N = fp_mul(N, V);
    }
    std::vector<FpVec> basis;
    basis.reserve(N.cols);
    for (std::uint32_t c = 0; c < N.cols; ++c) basis.push_back(column_of(N, c));
    return basis;
}

static FpMatrix trace_form_gram_impl(const FpTable& A, bool parallel) {
    const PrimeField& F = A.field();
    const std::uint64_t p = F.modulus();
    const std::uint32_t dim = A.dim();
    FpMatrix G(F, dim, dim);
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
    for (std::int64_t i = 0; i < std::int64_t(dim); ++i) {
        for (std::uint32_t j = std::uint32_t(i); j < dim; ++j) {
            // trace(L_i L_j) = sum over k with e_i (e_j e_k) landing back on e_k.
            std::uint64_t acc = 0;
            for (std::uint32_t k = 0; k < dim; ++k) {
                std::uint32_t cjk = A.product_coef(j, k);
                if (!cjk) continue;
                std::uint32_t mid = A.product_index(j, k);
                std::uint32_t ci = A.product_coef(std::uint32_t(i), mid);
                if (!ci) continue;
                if (A.product_index(std::uint32_t(i), mid) == k)
                    acc = (acc + std::uint64_t(cjk) * ci) % p;
            }
            G.at(std::uint32_t(i), j) = static_cast<std::uint32_t>(acc);
            G.at(j, std::uint32_t(i)) = static_cast<std::uint32_t>(acc);
        }
    }
    return G;
}

FpMatrix trace_form_gram(const FpTable& A) { return trace_form_gram_impl(A, true); }
FpMatrix trace_form_gram_serial(const FpTable& A) { return trace_form_gram_impl(A, false); }

std::uint32_t trace_form_rank(const FpTable& A) { return fp_rank(trace_form_gram(A)); }

namespace {

CentralIdempotents split_center(const FpTable& A, const std::vector<FpVec>& zb) {
    const PrimeField& F = A.field();
    const std::uint32_t dim = A.dim();
    CentralIdempotents out;
    FpVec unit = A.dense(A.unit());
    if (zb.size() == 1) {
        out.idempotents.push_back(unit);
        return out;
    }
    // Pick a center vector independent of the unit.
    std::optional<FpVec> v;
    for (const auto& cand : zb) {
        FpMatrix two(F, 2, dim);
        for (std::uint32_t c = 0; c < dim; ++c) {
            two.at(0, c) = unit[c];
            two.at(1, c) = cand[c];
        }
        if (fp_rank(std::move(two)) == 2) {
            v = cand;
            break;
        }
    }
    if (!v) throw Error(Errc::Internal, "center basis does not extend the unit");

    // v^2 = alpha * unit + beta * v; minimal polynomial t^2 - beta t - alpha.
    FpVec vsq = A.dense_mul(*v, *v);
    FpMatrix sys(F, dim, 2);
    for (std::uint32_t r = 0; r < dim; ++r) {
        sys.at(r, 0) = unit[r];
        sys.at(r, 1) = (*v)[r];
    }
    std::vector<std::uint32_t> ab;
    if (!fp_solve(std::move(sys), vsq, ab))
        throw Error(Errc::Internal, "center element square escapes the center span");
    const std::uint32_t alpha = ab[0], beta = ab[1];
    const std::uint32_t disc = F.add(F.mul(beta, beta), F.mul(4 % F.modulus(), alpha));

    auto root = F.sqrt(disc);
    if (!root) {
        out.idempotents.push_back(unit);
        out.quadratic_field_center = true;
        return out;
    }
    if (*root == 0)
        throw Error(Errc::NotSemisimple, "center has a repeated root (nilpotent part)");

    const std::uint32_t half = F.inv(2 % F.modulus());
    const std::uint32_t t_plus = F.mul(F.add(beta, *root), half);
    const std::uint32_t t_minus = F.mul(F.sub(beta, *root), half);
    const std::uint32_t scale = F.inv(F.sub(t_plus, t_minus));
    FpVec e1(dim), e2(dim);
    for (std::uint32_t c = 0; c < dim; ++c) {
        e1[c] = F.mul(scale, F.sub((*v)[c], F.mul(t_minus, unit[c])));
        e2[c] = F.sub(unit[c], e1[c]);
    }
    if (A.dense_mul(e1, e1) != e1 || A.dense_mul(e2, e2) != e2)
        throw Error(Errc::Internal, "constructed central elements are not idempotent");
    FpVec zero(dim, 0);
    if (A.dense_mul(e1, e2) != zero)
        throw Error(Errc::Internal, "central idempotents are not orthogonal");
    out.idempotents.push_back(std::move(e1));
    out.idempotents.push_back(std::move(e2));
    return out;
}

std::uint32_t exact_sqrt(std::uint32_t n) {
    auto r = static_cast<std::uint32_t>(std::lround(std::sqrt(double(n))));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    if (r * r != n) throw Error(Errc::NotAPerfectSquare, "block dimension is not m^2 * e");
    return r;
}

} // namespace

CentralIdempotents central_idempotents(const FpTable& A) {
    if (trace_form_rank(A) != A.dim())
        throw Error(Errc::NotSemisimple, "trace form is degenerate");
    auto zb = center_basis(A);
    if (zb.size() > 2)
        throw Error(Errc::CenterTooLarge,
                    "center dimension " + std::to_string(zb.size()) + " exceeds 2");
    return split_center(A, zb);
}

WedderburnReport classify(const FpTable& A) {
    const PrimeField& F = A.field();
    WedderburnReport report;
    report.trace_form_rank = trace_form_rank(A);
    if (report.trace_form_rank != A.dim())
        throw Error(Errc::NotSemisimple, "trace form is degenerate");
    auto zb = center_basis(A);
    if (zb.size() > 2)
        throw Error(Errc::CenterTooLarge,
                    "center dimension " + std::to_string(zb.size()) + " exceeds 2");
    auto ci = split_center(A, zb);

    for (const auto& e : ci.idempotents) {
        // Block dimension: rank of left multiplication by e.
        DenseMatrix<PrimeField> Le = left_mul_matrix(A, A.sparse(e));
        std::uint32_t block_dim = dense_rank(Le);
        // Center degree: dimension of e * Z(A).
        FpMatrix ez(F, static_cast<std::uint32_t>(zb.size()), A.dim());
        for (std::uint32_t r = 0; r < zb.size(); ++r) {
            FpVec prod = A.dense_mul(e, zb[r]);
            for (std::uint32_t c = 0; c < A.dim(); ++c) ez.at(r, c) = prod[c];
        }
        std::uint32_t center_degree = fp_rank(std::move(ez));
        if (center_degree == 0 || block_dim % center_degree != 0)
            throw Error(Errc::NotAPerfectSquare, "block dimension not divisible by center degree");
        std::uint32_t m = exact_sqrt(block_dim / center_degree);
        report.factors.push_back({m, center_degree, m * center_degree});
    }
    return report;
}

} // namespace qk0
