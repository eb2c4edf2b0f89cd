#include "fblab/twist_map.hpp"

namespace fblab {

namespace {

Mat3 z_rotation(double angle)
{
    const double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r << c, -s, 0.0,
         s,  c, 0.0,
         0.0, 0.0, 1.0;
    return r;
}

} // namespace

ThetaValue theta_at_point_scale(const TwistProfile& profile, double t,
                                const std::optional<LogScale>& scale_offset)
{
    if (!(t > 0.0))
        throw std::domain_error("theta_at_point_scale: radius must be positive");
    const double rho = scale_offset ? scale_offset->rho() - std::log(t) : -std::log(t);
    return theta_at(profile, rho);
}

Vec3 twist_map(const TwistProfile& profile, MapDirection direction, const Vec3& p,
               const std::optional<LogScale>& scale_offset)
{
    const double t = p.norm();
    if (t == 0.0) {
        if (scale_offset)
            throw std::domain_error("twist_map: origin has no angle at an offset scale");
        return p;
    }
    const double sign = direction == MapDirection::Forward ? 1.0 : -1.0;
    const double angle = sign * theta_at_point_scale(profile, t, scale_offset).theta;
    const double c = std::cos(angle), s = std::sin(angle);
    return Vec3(c * p.x() - s * p.y(), s * p.x() + c * p.y(), p.z());
}

FrameDecomposition twist_frame(const TwistProfile& profile, const Vec3& p,
                               const std::optional<LogScale>& scale_offset,
                               MapDirection direction)
{
    const double t = p.norm();
    if (t == 0.0)
        throw std::domain_error("twist_frame: Jacobian undefined at the origin");

    const double sign = direction == MapDirection::Forward ? 1.0 : -1.0;
    const ThetaValue tv = theta_at_point_scale(profile, t, scale_offset);
    const double angle = sign * tv.theta;
    const double dangle_drho = sign * tv.dtheta_drho;

    FrameDecomposition frame;
    frame.rotation = z_rotation(angle);

    // E = (dR/dangle * p) * grad(angle)^T with grad(angle) = -dangle_drho p / t^2.
    const double c = std::cos(angle), s = std::sin(angle);
    const Vec3 swirl(-p.x() * s - p.y() * c, p.x() * c - p.y() * s, 0.0);
    frame.error = (-dangle_drho / (t * t)) * swirl * p.transpose();
    frame.jacobian = frame.rotation + frame.error;

    Eigen::JacobiSVD<Mat3> svd(frame.jacobian);
    frame.singular_values = svd.singularValues().reverse(); // ascending
    return frame;
}

} // namespace fblab
