#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "qk0/field.hpp"

namespace qk0 {

/// Dense row-major matrix over F_p. Entries are residues in [0, p).
struct FpMatrix {
    PrimeField field;
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::vector<std::uint32_t> a;

    FpMatrix(const PrimeField& f, std::uint32_t r, std::uint32_t c)
        : field(f), rows(r), cols(c), a(std::size_t(r) * c, 0) {}

    std::uint32_t& at(std::uint32_t r, std::uint32_t c) { return a[std::size_t(r) * cols + c]; }
    std::uint32_t at(std::uint32_t r, std::uint32_t c) const { return a[std::size_t(r) * cols + c]; }

    static FpMatrix identity(const PrimeField& f, std::uint32_t n);
    bool operator==(const FpMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

/// OpenMP product kernel and its serial reference. Both are exact; the
/// tests hold them equal on randomized inputs and the bench target
/// compares their throughput.
FpMatrix fp_mul(const FpMatrix& A, const FpMatrix& B);
FpMatrix fp_mul_serial(const FpMatrix& A, const FpMatrix& B);

std::uint32_t fp_rank(FpMatrix M);        // parallel row elimination
std::uint32_t fp_rank_serial(FpMatrix M); // serial reference

/// Basis of the right nullspace {x : Mx = 0}; returned as a cols x nullity
/// matrix whose columns are the basis vectors.
FpMatrix fp_nullspace(FpMatrix M);

/// Solves M x = rhs if consistent; returns false when inconsistent.
bool fp_solve(FpMatrix M, std::vector<std::uint32_t> rhs, std::vector<std::uint32_t>& x_out);

/// Dense matrix over Q.
struct QMatrix {
    std::uint32_t rows = 0;
    std::uint32_t cols = 0;
    std::vector<mpq_class> a;

    QMatrix(std::uint32_t r, std::uint32_t c) : rows(r), cols(c), a(std::size_t(r) * c, mpq_class(0)) {}

    mpq_class& at(std::uint32_t r, std::uint32_t c) { return a[std::size_t(r) * cols + c]; }
    const mpq_class& at(std::uint32_t r, std::uint32_t c) const { return a[std::size_t(r) * cols + c]; }
};

/// Exact rank by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
std::uint32_t q_rank(const QMatrix& M);

} // namespace qk0
