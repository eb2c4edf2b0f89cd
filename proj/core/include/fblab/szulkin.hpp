#pragma once

#include "fblab/common.hpp"

namespace fblab {

// Szulkin's degree-3 homogeneous harmonic polynomial
//   s(x,y,z) = x^3 - 3 x y^2 + z^3 - 1.5 (x^2 + y^2) z
// whose zero set is a topological plane; the only critical point of s is the
// origin. Both facts carry the whole construction, so the evaluations here
// are exact closed forms, no approximation anywhere.
struct ScalarJet3 {
    double value;
    Vec3 gradient;
};

ScalarJet3 szulkin_jet(const Vec3& p);

inline double szulkin(const Vec3& p) { return szulkin_jet(p).value; }

// Certified envelope: |grad s(Y)| <= kSzulkinGradientEnvelope * |Y|^2 for all Y.
// Componentwise: |s_x|,|s_y| <= 4.5|Y|^2 and |s_z| <= 3|Y|^2, so the Euclidean
// norm is at most sqrt(49.5)|Y|^2 < 7.04|Y|^2.
inline constexpr double kSzulkinGradientEnvelope = 7.04;

} // namespace fblab
