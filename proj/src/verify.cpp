#include "qk0/verify.hpp"

#include <map>

#include "qk0/render.hpp"

namespace qk0 {

std::vector<SimpleFactor> predicted_factors(const AlgebraLabel& label) {
    if (label.base == LabelBase::Quaternion)
        throw Error(Errc::Internal, "quaternion base cannot occur over a finite field");
    if (label.log2size > 16)
        throw Error(Errc::Internal, "label too large for a concrete comparison");
    std::uint32_t m = 1u << label.log2size;
    std::uint32_t e = label.base == LabelBase::Complex ? 2 : 1;
    SimpleFactor f{m, e, m * e};
    std::vector<SimpleFactor> out(label.split ? 2 : 1, f);
    return out;
}

namespace {

WedderburnReport classify_signature(const PrimeField& field, const SignatureForm& q) {
    CliffordSpec<PrimeField> spec(signature_coeffs(field, q));
    return classify(clifford_table(spec));
}

} // namespace

std::vector<VerificationRecord> run_prime_sweep(const PrimeField& field, unsigned max_rank) {
    const FieldProfile profile = field.profile();
    std::map<std::pair<unsigned, unsigned>, WedderburnReport> memo;
    auto classified = [&](const SignatureForm& q) -> const WedderburnReport& {
        auto key = std::make_pair(q.plus, q.minus);
        auto it = memo.find(key);
        if (it == memo.end())
            it = memo.emplace(key, classify_signature(field, q)).first;
        return it->second;
    };

    std::vector<VerificationRecord> records;
    for (unsigned rank = 1; rank <= max_rank; ++rank) {
        for (unsigned plus = 0; plus <= rank; ++plus) {
            SignatureForm q{plus, rank - plus};
            VerificationRecord rec;
            rec.form = q;
            rec.prime = field.modulus();
            AbsResult sym = abs_group(profile, q);
            rec.label = sym.label;
            rec.symbolic_k0 = sym.k0;
            rec.oracle = classified(q);
            const WedderburnReport& perp = classified(perp_one(q));
            rec.oracle_d = rec.oracle.factors.front().simple_module_dim;
            rec.oracle_d_perp = perp.factors.front().simple_module_dim;

            if (rec.oracle.factors.size() == 2)
                rec.oracle_k0 = K0Class::Z;
            else if (rec.oracle_d_perp == rec.oracle_d)
                rec.oracle_k0 = K0Class::Zero;
            else if (rec.oracle_d_perp == 2 * rec.oracle_d)
                rec.oracle_k0 = K0Class::ZMod2;
            else
                throw Error(Errc::Internal, "oracle d-ratio outside {1,2}");

            auto predicted = predicted_factors(rec.label);
            rec.match = true;
            if (predicted.size() != rec.oracle.factors.size()) {
                rec.match = false;
                rec.diff += " factor-count predicted=" + std::to_string(predicted.size()) +
                            " oracle=" + std::to_string(rec.oracle.factors.size());
            } else {
                for (std::size_t i = 0; i < predicted.size(); ++i) {
                    if (predicted[i] == rec.oracle.factors[i]) continue;
                    rec.match = false;
                    rec.diff += " factor" + std::to_string(i) + " predicted=(m=" +
                                std::to_string(predicted[i].matrix_size) + ",e=" +
                                std::to_string(predicted[i].center_degree) + ") oracle=(m=" +
                                std::to_string(rec.oracle.factors[i].matrix_size) + ",e=" +
                                std::to_string(rec.oracle.factors[i].center_degree) + ")";
                }
            }
            if (rec.oracle_k0 != rec.symbolic_k0) {
                rec.match = false;
                rec.diff += " k0 symbolic=" + render_k0(rec.symbolic_k0) +
                            " oracle=" + render_k0(rec.oracle_k0);
            }
            records.push_back(std::move(rec));
        }
    }
    return records;
}

std::string record_line(const VerificationRecord& rec) {
    std::string oracle_desc = std::to_string(rec.oracle.factors.size()) + "x(m=" +
                              std::to_string(rec.oracle.factors.front().matrix_size) + ",e=" +
                              std::to_string(rec.oracle.factors.front().center_degree) + ")";
    std::string line = "VERIFY plus=" + std::to_string(rec.form.plus) +
                       " minus=" + std::to_string(rec.form.minus) +
                       " p=" + std::to_string(rec.prime) + " label=" + render_label(rec.label) +
                       " k0=" + render_k0(rec.symbolic_k0) + " oracle=" + oracle_desc +
                       " match=" + (rec.match ? "yes" : "no");
    if (!rec.match) line += " diff:" + rec.diff;
    return line;
}

} // namespace qk0
