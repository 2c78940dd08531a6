#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qk0/label.hpp"
#include "qk0/wedderburn.hpp"
#include "qk0/witness.hpp"

namespace qk0 {

/// One oracle-versus-symbolic comparison: C(Q_{n,m}) built by structure
/// constants over F_p, classified from scratch, matched against the label
/// calculus prediction under the prime's profile.
struct VerificationRecord {
    SignatureForm form;
    std::uint32_t prime = 0;
    AlgebraLabel label;
    K0Class symbolic_k0 = K0Class::Zero;
    WedderburnReport oracle;
    std::uint32_t oracle_d = 0;       // simple module dim of C(Q_{n,m})
    std::uint32_t oracle_d_perp = 0;  // same for C(Q_{n+1,m})
    K0Class oracle_k0 = K0Class::Zero;
    bool match = false;
    std::string diff;
};

/// Factors the label predicts over a finite field of the matching profile.
std::vector<SimpleFactor> predicted_factors(const AlgebraLabel& label);

/// Builds and classifies C(Q_{n,m}) over F_p for every 1 <= n+m <= max_rank.
std::vector<VerificationRecord> run_prime_sweep(const PrimeField& field, unsigned max_rank);

std::string record_line(const VerificationRecord& rec);

/// Runs the canonical witness list over one concrete field.
template <FieldLike F>
std::vector<WitnessOutcome> run_witness_suite(const F& field) {
    std::vector<WitnessOutcome> out;
    for (const auto& c : witness_suite_cases()) out.push_back(verify_witness_iso(field, c));
    return out;
}

} // namespace qk0
