#include "qk0/render.hpp"

#include <gmpxx.h>

namespace qk0 {

std::string render_pow2(std::uint64_t exponent) {
    if (exponent < 64) return std::to_string(std::uint64_t(1) << exponent);
    mpz_class v = 1;
    v <<= static_cast<unsigned long>(exponent);
    return v.get_str();
}

std::string render_label(const AlgebraLabel& label) {
    const char* base = "K";
    if (label.base == LabelBase::Complex) base = "C";
    else if (label.base == LabelBase::Quaternion) base = "H";
    std::string out = std::string(base) + "(" + render_pow2(label.log2size) + ")";
    if (label.split) out += "^2";
    return out;
}

std::string render_k0(K0Class k0) {
    switch (k0) {
    case K0Class::Z: return "Z";
    case K0Class::ZMod2: return "Z/2";
    case K0Class::Zero: return "0";
    }
    return "?";
}

FieldProfile parse_field_descriptor(const std::string& desc) {
    if (desc == "level-1") return FieldProfile::SqrtMinusOne;
    if (desc == "level-2") return FieldProfile::SumTwoSquares;
    if (desc == "level-inf") return FieldProfile::QuaternionDivision;
    if (desc == "Q") return FieldProfile::QuaternionDivision;
    if (desc.rfind("Fp:", 0) == 0) {
        const std::string num = desc.substr(3);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw Error(Errc::InvalidArgument, "bad prime in field descriptor '" + desc + "'");
        unsigned long p = std::stoul(num);
        if (p >= PrimeField::kMaxModulus)
            throw Error(Errc::InvalidArgument, "prime out of range in '" + desc + "'");
        return PrimeField(static_cast<std::uint32_t>(p)).profile();
    }
    throw Error(Errc::InvalidArgument,
                "unknown field descriptor '" + desc +
                    "' (expected level-1 | level-2 | level-inf | Fp:<p> | Q)");
}

TableKind parse_table_kind(const std::string& kind) {
    if (kind == "definite-plus") return TableKind::DefinitePlus;
    if (kind == "definite-minus") return TableKind::DefiniteMinus;
    if (kind == "paper-8r") return TableKind::Paper8r;
    if (kind == "paper-4r") return TableKind::Paper4r;
    throw Error(Errc::InvalidArgument, "unknown table kind '" + kind + "'");
}

namespace {

std::string seven_column_row(FieldProfile profile, unsigned n, unsigned k) {
    AlgebraLabel c_neg = clifford_of_signature(profile, {0, k});
    AlgebraLabel c_pos = clifford_of_signature(profile, {k, 0});
    AlgebraLabel c_perp = clifford_of_signature(profile, {1, k}); // q_k perp <1>
    return "n=" + std::to_string(n) + " C=" + render_label(c_neg) +
           " Cprime=" + render_label(c_pos) + " Cperp=" + render_label(c_perp) +
           " d=" + render_pow2(simple_dim(c_neg).exponent) +
           " dprime=" + render_pow2(simple_dim(c_pos).exponent) +
           " dperp=" + render_pow2(simple_dim(c_perp).exponent);
}

std::string definite_row(FieldProfile profile, unsigned n, bool positive) {
    SignatureForm q = positive ? SignatureForm{n, 0} : SignatureForm{0, n};
    AbsResult res = abs_group(profile, q);
    AlgebraLabel perp = clifford_of_signature(profile, perp_one(q));
    return "n=" + std::to_string(n) + " C=" + render_label(res.label) +
           " Cperp=" + render_label(perp) + " d=" + render_pow2(res.d.exponent) +
           " dperp=" + render_pow2(res.d_perp.exponent) + " k0=" + render_k0(res.k0);
}

} // namespace

std::vector<std::string> table_rows(FieldProfile profile, TableKind kind, unsigned r,
                                    unsigned max_n) {
    std::vector<std::string> rows;
    switch (kind) {
    case TableKind::Paper8r:
        for (unsigned n = 1; n <= 8; ++n) rows.push_back(seven_column_row(profile, n, 8 * r + n));
        break;
    case TableKind::Paper4r:
        for (unsigned n = 1; n <= 4; ++n) rows.push_back(seven_column_row(profile, n, 4 * r + n));
        break;
    case TableKind::DefinitePlus:
        for (unsigned n = 1; n <= max_n; ++n) rows.push_back(definite_row(profile, n, true));
        break;
    case TableKind::DefiniteMinus:
        for (unsigned n = 1; n <= max_n; ++n) rows.push_back(definite_row(profile, n, false));
        break;
    }
    return rows;
}

std::string compute_line(FieldProfile profile, const SignatureForm& q) {
    AbsResult res = abs_group(profile, q);
    return "K0 plus=" + std::to_string(q.plus) + " minus=" + std::to_string(q.minus) +
           " profile=" + profile_tag(profile) + " algebra=" + render_label(res.label) +
           " d=" + render_pow2(res.d.exponent) + " dperp=" + render_pow2(res.d_perp.exponent) +
           " result=" + render_k0(res.k0);
}

} // namespace qk0
