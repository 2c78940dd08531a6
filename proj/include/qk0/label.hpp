#pragma once

#include <cstdint>

#include "qk0/error.hpp"
#include "qk0/field.hpp"
#include "qk0/quadratic_form.hpp"

namespace qk0 {

/// Symbolic Wedderburn type of a Clifford algebra over k:
///   base      K = ground field, C = k[x]/(x^2+1), H = (-1,-1)/k
///   log2size  matrix size 2^t
///   split     false = M_{2^t}(base), true = M_{2^t}(base) x M_{2^t}(base)
/// Sizes live as base-2 exponents; every size in scope is a power of two
/// and exponent arithmetic never overflows.
enum class LabelBase { Ground, Complex, Quaternion };

struct AlgebraLabel {
    LabelBase base = LabelBase::Ground;
    std::uint64_t log2size = 0;
    bool split = false;

    bool operator==(const AlgebraLabel&) const = default;
};

enum class K0Class { Z, ZMod2, Zero };

/// d(q) = 2^exponent, the common k-dimension of the simple C(q)-modules.
struct DimLog {
    std::uint64_t exponent = 0;
    bool operator==(const DimLog&) const = default;
};

/// The rank <= 2 building blocks of the recursion.
enum class BaseForm {
    Rank0,    // empty form, C = k
    MinusOne, // -x^2
    MinusTwo, // -x^2 - y^2
    PlusOne,  // x^2
    PlusTwo,  // x^2 + y^2
};

/// Collapses a raw label to its normal form under the profile:
/// C = k x k when sqrt(-1) is in k; H = M_2(k) unless (-1,-1)/k is a
/// division algebra. Idempotent.
AlgebraLabel normalize_label(FieldProfile profile, AlgebraLabel raw);

/// C(q) for the five base forms, already normalized.
AlgebraLabel base_clifford(FieldProfile profile, BaseForm which);

/// Label of A (x) B. Refuses products with more than two simple factors.
AlgebraLabel tensor_labels(FieldProfile profile, const AlgebraLabel& a, const AlgebraLabel& b);

/// C(Q_{n,m}): hyperbolic splitting, two-step descent on the definite
/// core, then the matrix-size bookkeeping for the hyperbolic part.
AlgebraLabel clifford_of_signature(FieldProfile profile, const SignatureForm& q);

DimLog simple_dim(const AlgebraLabel& label);

/// Whether sqrt(ds q) lies in k: ds = +1 always does; ds = -1 exactly
/// under the sqrt(-1) profile.
bool ds_square_test(FieldProfile profile, const SignatureForm& q);

/// Diagnostic record accompanying the K0 answer.
struct AbsResult {
    AlgebraLabel label;
    DimLog d;
    DimLog d_perp;
    bool ds_square = false;
    K0Class k0 = K0Class::Zero;
};

/// The ABS decision rule: split label gives Z; otherwise compare
/// d(q perp 1) against d(q) (equal -> 0, double -> Z/2).
AbsResult abs_group(FieldProfile profile, const SignatureForm& q);

/// The closed-form case statements (period 8 / parity / period 4),
/// applied to n - m resp. m - n.
K0Class closed_form_k0(FieldProfile profile, const SignatureForm& q);

} // namespace qk0
