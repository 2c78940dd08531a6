#include "qk0/label.hpp"

namespace qk0 {

AlgebraLabel normalize_label(FieldProfile profile, AlgebraLabel raw) {
    switch (profile) {
    case FieldProfile::QuaternionDivision:
        return raw;
    case FieldProfile::SumTwoSquares:
        if (raw.base == LabelBase::Quaternion)
            return {LabelBase::Ground, raw.log2size + 1, raw.split};
        return raw;
    case FieldProfile::SqrtMinusOne:
        if (raw.base == LabelBase::Quaternion)
            return {LabelBase::Ground, raw.log2size + 1, raw.split};
        if (raw.base == LabelBase::Complex) {
            if (raw.split)
                throw Error(Errc::Internal, "C-based split label cannot normalize at level 1");
            return {LabelBase::Ground, raw.log2size, true};
        }
        return raw;
    }
    throw Error(Errc::Internal, "unknown profile");
}

AlgebraLabel base_clifford(FieldProfile profile, BaseForm which) {
    switch (which) {
    case BaseForm::Rank0:
        return {LabelBase::Ground, 0, false};
    case BaseForm::MinusOne: // C(-x^2) = k[e]/(e^2+1)
        return normalize_label(profile, {LabelBase::Complex, 0, false});
    case BaseForm::MinusTwo: // C(-x^2-y^2) = (-1,-1)/k
        return normalize_label(profile, {LabelBase::Quaternion, 0, false});
    case BaseForm::PlusOne: // C(x^2) = k[e]/(e^2-1) = k x k
        return {LabelBase::Ground, 0, true};
    case BaseForm::PlusTwo: // C(x^2+y^2) = (1,1)/k = M_2(k) over every field
        return {LabelBase::Ground, 1, false};
    }
    throw Error(Errc::Internal, "unknown base form");
}

AlgebraLabel tensor_labels(FieldProfile profile, const AlgebraLabel& a, const AlgebraLabel& b) {
    if (a.split && b.split)
        throw Error(Errc::SplitTensorSplit, "tensor of two split labels has four factors");

    LabelBase base;
    std::uint64_t extra_size = 0;
    bool extra_split = false;
    if (a.base == LabelBase::Ground) {
        base = b.base;
    } else if (b.base == LabelBase::Ground) {
        base = a.base;
    } else if (a.base == LabelBase::Complex && b.base == LabelBase::Complex) {
        if (a.split || b.split)
            throw Error(Errc::SplitTensorSplit,
                        "C (x) C doubles the factor count; split input would exceed two");
        base = LabelBase::Complex;
        extra_split = true; // C (x) C = C + C
    } else if (a.base == LabelBase::Quaternion && b.base == LabelBase::Quaternion) {
        base = LabelBase::Ground; // H (x) H = k(4)
        extra_size = 2;
    } else {
        base = LabelBase::Complex; // H (x) C = C(2)
        extra_size = 1;
    }
    AlgebraLabel raw{base, a.log2size + b.log2size + extra_size,
                     static_cast<bool>(a.split ^ b.split ^ extra_split)};
    return normalize_label(profile, raw);
}

namespace {

// C'_c = C_{c-2} (x) C'_2 and C_c = C'_{c-2} (x) C_2, down to rank <= 2.
AlgebraLabel definite_label(FieldProfile profile, bool positive, unsigned c) {
    if (c == 0) return base_clifford(profile, BaseForm::Rank0);
    if (positive) {
        if (c == 1) return base_clifford(profile, BaseForm::PlusOne);
        if (c == 2) return base_clifford(profile, BaseForm::PlusTwo);
        return tensor_labels(profile, definite_label(profile, false, c - 2),
                             base_clifford(profile, BaseForm::PlusTwo));
    }
    if (c == 1) return base_clifford(profile, BaseForm::MinusOne);
    if (c == 2) return base_clifford(profile, BaseForm::MinusTwo);
    return tensor_labels(profile, definite_label(profile, true, c - 2),
                         base_clifford(profile, BaseForm::MinusTwo));
}

} // namespace

AlgebraLabel clifford_of_signature(FieldProfile profile, const SignatureForm& q) {
    HyperbolicSplit split = hyperbolic_reduce(q);
    AlgebraLabel core = definite_label(profile, split.core.plus > 0, split.core.rank());
    if (split.h_count == 0) return core;
    return tensor_labels(profile, core,
                         {LabelBase::Ground, split.h_count, false});
}

DimLog simple_dim(const AlgebraLabel& label) {
    std::uint64_t base_log = 0;
    switch (label.base) {
    case LabelBase::Ground: base_log = 0; break;
    case LabelBase::Complex: base_log = 1; break;
    case LabelBase::Quaternion: base_log = 2; break;
    }
    return {base_log + label.log2size};
}

bool ds_square_test(FieldProfile profile, const SignatureForm& q) {
    if (ds_sign(q) == 1) return true;
    return profile == FieldProfile::SqrtMinusOne;
}

AbsResult abs_group(FieldProfile profile, const SignatureForm& q) {
    if (q.rank() == 0)
        throw Error(Errc::EmptyForm, "K0 of the zero ring is undefined; rank >= 1 required");
    AbsResult res;
    res.label = clifford_of_signature(profile, q);
    res.d = simple_dim(res.label);
    res.d_perp = simple_dim(clifford_of_signature(profile, perp_one(q)));
    res.ds_square = ds_square_test(profile, q);
    if (res.label.split) {
        res.k0 = K0Class::Z;
        return res;
    }
    if (res.d_perp.exponent == res.d.exponent)
        res.k0 = K0Class::Zero;
    else if (res.d_perp.exponent == res.d.exponent + 1)
        res.k0 = K0Class::ZMod2;
    else
        throw Error(Errc::Internal, "d(q perp 1)/d(q) outside {1,2}");
    return res;
}

K0Class closed_form_k0(FieldProfile profile, const SignatureForm& q) {
    if (q.rank() == 0)
        throw Error(Errc::EmptyForm, "K0 of the zero ring is undefined; rank >= 1 required");
    switch (profile) {
    case FieldProfile::SqrtMinusOne:
        return q.rank() % 2 == 1 ? K0Class::Z : K0Class::Zero;
    case FieldProfile::QuaternionDivision: {
        if (q.plus >= q.minus) {
            switch ((q.plus - q.minus) % 8) {
            case 1: case 5: return K0Class::Z;
            case 2: case 3: return K0Class::ZMod2;
            default: return K0Class::Zero;
            }
        }
        switch ((q.minus - q.plus) % 8) {
        case 3: case 7: return K0Class::Z;
        case 5: case 6: return K0Class::ZMod2;
        default: return K0Class::Zero;
        }
    }
    case FieldProfile::SumTwoSquares: {
        // The period-4 tables: positive side Z at 1, Z/2 at 2, 0 at {0,3};
        // negative side Z at 3, Z/2 at 2, 0 at {0,1}.
        if (q.plus >= q.minus) {
            switch ((q.plus - q.minus) % 4) {
            case 1: return K0Class::Z;
            case 2: return K0Class::ZMod2;
            default: return K0Class::Zero;
            }
        }
        switch ((q.minus - q.plus) % 4) {
        case 3: return K0Class::Z;
        case 2: return K0Class::ZMod2;
        default: return K0Class::Zero;
        }
    }
    }
    throw Error(Errc::Internal, "unknown profile");
}

} // namespace qk0
