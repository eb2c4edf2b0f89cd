#pragma once

#include <optional>

#include "fblab/log_scale.hpp"
#include "fblab/twist_profile.hpp"

namespace fblab {

enum class MapDirection { Forward, Backward };

// D Phi split into the shell rotation R and the rank-<=1 remainder E coming
// from the radial variation of the angle. singular_values are sorted
// ascending; lambda[2]/lambda[0] is the linear dilatation.
struct FrameDecomposition {
    Mat3 jacobian;
    Mat3 rotation;
    Mat3 error;
    Vec3 singular_values;

    double max_error_entry() const { return error.cwiseAbs().maxCoeff(); }
    double dilatation() const { return singular_values[2] / singular_values[0]; }
};

// Rotates p about the z-axis by +/- theta evaluated at the scale of p.
// Without scale_offset, p lives at physical scale (theta == 0 for |p| >= 1,
// blend below, pure law for |p| <= 1/100) and the origin maps to itself.
// With scale_offset rho, a point at radius t stands for physical radius
// t e^{-rho}; the angle is taken at the combined scale rho - log t, and the
// origin is rejected since it has no well-defined angle.
Vec3 twist_map(const TwistProfile& profile, MapDirection direction, const Vec3& p,
               const std::optional<LogScale>& scale_offset = std::nullopt);

// Jacobian of the same map at p, split per FrameDecomposition.
FrameDecomposition twist_frame(const TwistProfile& profile, const Vec3& p,
                               const std::optional<LogScale>& scale_offset = std::nullopt,
                               MapDirection direction = MapDirection::Forward);

// Angle at the (possibly combined) scale of a point with radius t > 0.
ThetaValue theta_at_point_scale(const TwistProfile& profile, double t,
                                const std::optional<LogScale>& scale_offset);

} // namespace fblab
