#include "qk0/linalg.hpp"

#include <cstdlib>

#include "qk0/error.hpp"

namespace qk0 {

FpMatrix FpMatrix::identity(const PrimeField& f, std::uint32_t n) {
    FpMatrix I(f, n, n);
    for (std::uint32_t i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

static void check_mul_dims(const FpMatrix& A, const FpMatrix& B) {
    if (A.cols != B.rows)
        throw Error(Errc::InvalidArgument, "matrix product dimension mismatch");
    if (A.field.modulus() != B.field.modulus())
        throw Error(Errc::InvalidArgument, "matrix product over different fields");
}

FpMatrix fp_mul_serial(const FpMatrix& A, const FpMatrix& B) {
    check_mul_dims(A, B);
    const std::uint64_t p = A.field.modulus();
    FpMatrix C(A.field, A.rows, B.cols);
    for (std::uint32_t i = 0; i < A.rows; ++i) {
        for (std::uint32_t k = 0; k < A.cols; ++k) {
            std::uint64_t aik = A.at(i, k);
            if (!aik) continue;
            for (std::uint32_t j = 0; j < B.cols; ++j)
                C.at(i, j) = static_cast<std::uint32_t>((C.at(i, j) + aik * B.at(k, j)) % p);
        }
    }
    return C;
}

FpMatrix fp_mul(const FpMatrix& A, const FpMatrix& B) {
    check_mul_dims(A, B);
    const std::uint64_t p = A.field.modulus();
    FpMatrix C(A.field, A.rows, B.cols);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < std::int64_t(A.rows); ++i) {
        for (std::uint32_t k = 0; k < A.cols; ++k) {
            std::uint64_t aik = A.at(std::uint32_t(i), k);
            if (!aik) continue;
            for (std::uint32_t j = 0; j < B.cols; ++j) {
                auto& c = C.at(std::uint32_t(i), j);
                c = static_cast<std::uint32_t>((c + aik * B.at(k, j)) % p);
            }
        }
    }
    return C;
}

// Row-echelon elimination. Parallel row updates when `parallel` is set;
// the serial path is the reference the tests pin the parallel one to.
static std::uint32_t fp_ref_inplace(FpMatrix& M, bool parallel) {
    const PrimeField& F = M.field;
    const std::uint64_t p = F.modulus();
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < M.cols && rank < M.rows; ++col) {
        std::uint32_t pivot = rank;
        while (pivot < M.rows && M.at(pivot, col) == 0) ++pivot;
        if (pivot == M.rows) continue;
        if (pivot != rank)
            for (std::uint32_t j = col; j < M.cols; ++j)
                std::swap(M.at(pivot, j), M.at(rank, j));
        const std::uint64_t piv_inv = F.inv(M.at(rank, col));
        for (std::uint32_t j = col; j < M.cols; ++j)
            M.at(rank, j) = static_cast<std::uint32_t>(M.at(rank, j) * piv_inv % p);
        const std::uint32_t* prow = &M.a[std::size_t(rank) * M.cols];
#pragma omp parallel for schedule(static) if (parallel)
        for (std::int64_t r = rank + 1; r < std::int64_t(M.rows); ++r) {
            std::uint64_t f = M.at(std::uint32_t(r), col);
            if (!f) continue;
            std::uint32_t* row = &M.a[std::size_t(r) * M.cols];
            for (std::uint32_t j = col; j < M.cols; ++j)
                row[j] = static_cast<std::uint32_t>((row[j] + (p - f) * prow[j]) % p);
        }
        ++rank;
    }
    return rank;
}

std::uint32_t fp_rank(FpMatrix M) { return fp_ref_inplace(M, true); }
std::uint32_t fp_rank_serial(FpMatrix M) { return fp_ref_inplace(M, false); }

// Reduced row echelon form; returns pivot columns.
static std::vector<std::uint32_t> fp_rref_inplace(FpMatrix& M) {
    const PrimeField& F = M.field;
    const std::uint64_t p = F.modulus();
    std::vector<std::uint32_t> pivots;
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < M.cols && rank < M.rows; ++col) {
        std::uint32_t pivot = rank;
        while (pivot < M.rows && M.at(pivot, col) == 0) ++pivot;
        if (pivot == M.rows) continue;
        if (pivot != rank)
            for (std::uint32_t j = 0; j < M.cols; ++j)
                std::swap(M.at(pivot, j), M.at(rank, j));
        const std::uint64_t piv_inv = F.inv(M.at(rank, col));
        for (std::uint32_t j = 0; j < M.cols; ++j)
            M.at(rank, j) = static_cast<std::uint32_t>(M.at(rank, j) * piv_inv % p);
        const std::uint32_t* prow = &M.a[std::size_t(rank) * M.cols];
#pragma omp parallel for schedule(static)
        for (std::int64_t r = 0; r < std::int64_t(M.rows); ++r) {
            if (std::uint32_t(r) == rank) continue;
            std::uint64_t f = M.at(std::uint32_t(r), col);
            if (!f) continue;
            std::uint32_t* row = &M.a[std::size_t(r) * M.cols];
            for (std::uint32_t j = 0; j < M.cols; ++j)
                row[j] = static_cast<std::uint32_t>((row[j] + (p - f) * prow[j]) % p);
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

FpMatrix fp_nullspace(FpMatrix M) {
    const PrimeField F = M.field;
    auto pivots = fp_rref_inplace(M);
    std::vector<bool> is_pivot(M.cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::uint32_t nullity = M.cols - static_cast<std::uint32_t>(pivots.size());
    FpMatrix N(F, M.cols, nullity);
    std::uint32_t k = 0;
    for (std::uint32_t free_col = 0; free_col < M.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        N.at(free_col, k) = 1;
        for (std::uint32_t r = 0; r < pivots.size(); ++r)
            N.at(pivots[r], k) = F.neg(M.at(r, free_col));
        ++k;
    }
    return N;
}

bool fp_solve(FpMatrix M, std::vector<std::uint32_t> rhs, std::vector<std::uint32_t>& x_out) {
    if (rhs.size() != M.rows)
        throw Error(Errc::InvalidArgument, "solve: rhs size mismatch");
    // Augment and reduce.
    FpMatrix Aug(M.field, M.rows, M.cols + 1);
    for (std::uint32_t i = 0; i < M.rows; ++i) {
        for (std::uint32_t j = 0; j < M.cols; ++j) Aug.at(i, j) = M.at(i, j);
        Aug.at(i, M.cols) = rhs[i];
    }
    auto pivots = fp_rref_inplace(Aug);
    if (!pivots.empty() && pivots.back() == M.cols) return false; // pivot in rhs column
    x_out.assign(M.cols, 0);
    for (std::uint32_t r = 0; r < pivots.size(); ++r) x_out[pivots[r]] = Aug.at(r, M.cols);
    return true;
}

std::uint32_t q_rank(const QMatrix& M) {
    // Clear denominators row by row (rank-preserving), then run Bareiss.
    std::vector<mpz_class> z(std::size_t(M.rows) * M.cols);
    for (std::uint32_t i = 0; i < M.rows; ++i) {
        mpz_class lcm_den = 1;
        for (std::uint32_t j = 0; j < M.cols; ++j) {
            mpz_class den = M.at(i, j).get_den();
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
        }
        for (std::uint32_t j = 0; j < M.cols; ++j) {
            mpq_class scaled = M.at(i, j) * mpq_class(lcm_den);
            z[std::size_t(i) * M.cols + j] = scaled.get_num(); // denominator is 1
        }
    }
    auto at = [&](std::uint32_t r, std::uint32_t c) -> mpz_class& {
        return z[std::size_t(r) * M.cols + c];
    };
    mpz_class prev_pivot = 1;
    std::uint32_t rank = 0;
    for (std::uint32_t col = 0; col < M.cols && rank < M.rows; ++col) {
        std::uint32_t pivot = rank;
        while (pivot < M.rows && at(pivot, col) == 0) ++pivot;
        if (pivot == M.rows) continue;
        if (pivot != rank)
            for (std::uint32_t j = 0; j < M.cols; ++j) std::swap(at(pivot, j), at(rank, j));
        for (std::uint32_t r = rank + 1; r < M.rows; ++r) {
            for (std::uint32_t j = col + 1; j < M.cols; ++j) {
                mpz_class num = at(rank, col) * at(r, j) - at(r, col) * at(rank, j);
                mpz_divexact(at(r, j).get_mpz_t(), num.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            at(r, col) = 0;
        }
        prev_pivot = at(rank, col);
        ++rank;
    }
    return rank;
}

} // namespace qk0
