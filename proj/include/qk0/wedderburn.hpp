#pragma once

#include <cstdint>
#include <vector>

#include "qk0/algebra_table.hpp"
#include "qk0/field.hpp"
#include "qk0/linalg.hpp"

namespace qk0 {

using FpTable = AlgebraTable<PrimeField>;
using FpVec = std::vector<std::uint32_t>;

/// One simple factor M_m(F_{p^e}) of a semisimple algebra over F_p.
struct SimpleFactor {
    std::uint32_t matrix_size = 0;      // m
    std::uint32_t center_degree = 0;    // e
    std::uint32_t simple_module_dim = 0; // m * e, dimension over F_p

    bool operator==(const SimpleFactor&) const = default;
};

struct WedderburnReport {
    std::vector<SimpleFactor> factors;
    std::uint32_t trace_form_rank = 0; // semisimplicity witness
};

/// Basis of the center {z : zb = bz for all b}, as dense vectors.
/// Always contains the unit in its span.
std::vector<FpVec> center_basis(const FpTable& A);

/// Gram matrix of T(x,y) = trace(L_x L_y) on the table basis.
FpMatrix trace_form_gram(const FpTable& A);
FpMatrix trace_form_gram_serial(const FpTable& A);

/// Rank of the trace form; equals dim exactly when A is semisimple
/// (valid here: p odd and factor matrix sizes are powers of 2).
std::uint32_t trace_form_rank(const FpTable& A);

struct CentralIdempotents {
    std::vector<FpVec> idempotents;     // one (the unit) or two orthogonal primitives
    bool quadratic_field_center = false; // single block whose center is F_{p^2}
};

/// Splits a 2-dimensional center into orthogonal idempotents or certifies
/// it is a quadratic field. Centers of dimension > 2 are rejected.
CentralIdempotents central_idempotents(const FpTable& A);

/// Full ground-truth classification: semisimplicity certificate, central
/// idempotents, and per-block (matrix_size, center_degree).
WedderburnReport classify(const FpTable& A);

} // namespace qk0
