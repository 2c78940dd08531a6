#include "qk0/real_geometry.hpp"

#include "qk0/error.hpp"
#include "qk0/render.hpp"

namespace qk0 {

RealGeometryReport real_geometry(const SignatureForm& q) {
    if (q.rank() == 0)
        throw Error(Errc::EmptyForm, "the zero ring has no geometry");
    if (q.plus == 0)
        return {GeometryCase::NoRealPoints, K0Class::Zero, K0Class::Zero};
    if (q.minus == 0) {
        if (q.rank() < 3)
            throw Error(Errc::LowDimension,
                        "sphere case needs n >= 3 (ring dimension >= 2)");
        return {GeometryCase::Sphere, K0Class::Z, K0Class::ZMod2};
    }
    if (q.rank() < 3)
        throw Error(Errc::LowDimension,
                    "indefinite case needs n + m >= 3 (ring dimension >= 2)");
    return {GeometryCase::Indefinite, K0Class::Zero, K0Class::Zero};
}

std::string real_geometry_line(const SignatureForm& q) {
    RealGeometryReport rep = real_geometry(q);
    const char* tag = "NO_REAL_POINTS";
    if (rep.case_tag == GeometryCase::Sphere) tag = "SPHERE";
    else if (rep.case_tag == GeometryCase::Indefinite) tag = "INDEFINITE";
    return "REAL plus=" + std::to_string(q.plus) + " minus=" + std::to_string(q.minus) +
           " case=" + tag + " E=" + render_k0(rep.euler_class_group) +
           " CH0=" + render_k0(rep.chow_group) + " source=literature";
}

} // namespace qk0
