#include "qk0/witness.hpp"

namespace qk0 {

std::string witness_name(const WitnessCase& c) {
    auto sig = [](const SignatureForm& q) {
        return "plus=" + std::to_string(q.plus) + ",minus=" + std::to_string(q.minus);
    };
    switch (c.kind) {
    case WitnessKind::CxC: return "CxC";
    case WitnessKind::HxC: return "HxC";
    case WitnessKind::HxH: return "HxH";
    case WitnessKind::AbsPlus: return "ABS_PLUS:n=" + std::to_string(c.n);
    case WitnessKind::AbsMinus: return "ABS_MINUS:n=" + std::to_string(c.n);
    case WitnessKind::Hyp: return "HYP:" + sig(c.q);
    case WitnessKind::Scaled:
        return std::string("SCALED:b=(") + (c.b[0] > 0 ? "+" : "-") +
               (c.b[1] > 0 ? "+" : "-") + ")," + sig(c.q);
    }
    return "?";
}

std::string witness_certificate(const WitnessOutcome& o) {
    std::string line = "WITNESS " + o.name + " field=" + o.field_desc;
    if (o.pass) return line + " PASS dim=" + std::to_string(o.dim);
    return line + " FAIL " + o.detail;
}

std::vector<WitnessCase> witness_suite_cases() {
    std::vector<WitnessCase> cases;
    cases.push_back({WitnessKind::CxC});
    cases.push_back({WitnessKind::HxC});
    cases.push_back({WitnessKind::HxH});
    for (unsigned n = 1; n <= 6; ++n) cases.push_back({WitnessKind::AbsPlus, n});
    for (unsigned n = 1; n <= 6; ++n) cases.push_back({WitnessKind::AbsMinus, n});
    for (unsigned rank = 0; rank <= 6; ++rank)
        for (unsigned plus = 0; plus <= rank; ++plus)
            cases.push_back({WitnessKind::Hyp, 0, {plus, rank - plus}});
    const std::array<std::array<int, 2>, 4> binaries{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    for (const auto& b : binaries)
        for (unsigned rank = 0; rank <= 3; ++rank)
            for (unsigned plus = 0; plus <= rank; ++plus)
                cases.push_back({WitnessKind::Scaled, 0, {plus, rank - plus}, b});
    return cases;
}

} // namespace qk0
