#pragma once

#include <string>

#include "qk0/label.hpp"
#include "qk0/quadratic_form.hpp"

namespace qk0 {

/// The three shapes of the real quadric Spec R[x,y]/(Q_{n,m} - 1).
enum class GeometryCase { NoRealPoints, Sphere, Indefinite };

/// Euler class group and zero-cycle Chow group of the real coordinate
/// ring. These values are quoted classical results, not recomputed here;
/// the CLI marks them `source=literature`.
struct RealGeometryReport {
    GeometryCase case_tag = GeometryCase::NoRealPoints;
    K0Class euler_class_group = K0Class::Zero; // Z or 0
    K0Class chow_group = K0Class::Zero;        // Z/2 or 0
};

/// n = 0: no real points. m = 0, n >= 3: sphere. n,m >= 1, n+m >= 3:
/// indefinite. The sphere/indefinite families need ring dimension >= 2
/// (n + m >= 3); below that the cited results do not apply and the call
/// is refused.
RealGeometryReport real_geometry(const SignatureForm& q);

std::string real_geometry_line(const SignatureForm& q);

} // namespace qk0
