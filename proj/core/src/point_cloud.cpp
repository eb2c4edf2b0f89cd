#include "fblab/point_cloud.hpp"

#include "fblab/graph_surface.hpp"
#include "fblab/twist_map.hpp"

namespace fblab {

namespace {

void require_pure_shells(const LogScale& scale, double R)
{
    const double worst = scale.rho() - std::log(R);
    if (worst < kPureLawRho)
        throw std::domain_error(
            "sample_interface: combined scale " + std::to_string(worst) +
            " leaves the pure law region (need rho - log R >= log 100)");
}

void validate_annulus(double R, double t_min, double target_gap)
{
    if (!(t_min > 0.0) || !(t_min < R))
        throw std::domain_error("sample_interface: need 0 < t_min < R");
    if (!(target_gap > 0.0))
        throw std::domain_error("sample_interface: target_gap must be positive");
}

} // namespace

PointCloud sample_twisted_interface(const TwistProfile& profile, const LogScale& scale,
                                    double R, double t_min, double target_gap,
                                    const BaseCurve& curve, double extra_rotation)
{
    validate_annulus(R, t_min, target_gap);
    if (!profile.is_none()) require_pure_shells(scale, R);

    const double rho = scale.rho();
    const double sigma = std::max(curve.max_cyl_radius, 1e-3);
    const double g = target_gap;

    // Shells walk down from R so the outermost shell lands exactly on R.
    std::vector<double> shells;
    double t = R;
    while (t > t_min) {
        shells.push_back(t);
        const double rate = theta_at(profile, rho - std::log(t)).dtheta_drho;
        const double dt = 0.95 * g / (1.0 + 2.0 * rate * sigma);
        t -= dt;
    }
    shells.push_back(t_min);

    PointCloud cloud;
    cloud.ball_radius = R;
    cloud.log_scale_rho = rho;
    cloud.hole_radius = t_min;

    std::vector<double> angles(shells.size());
    std::vector<double> ring_arcs(shells.size());
    std::size_t total = 1;
    for (std::size_t i = 0; i < shells.size(); ++i) {
        angles[i] = theta_at(profile, rho - std::log(shells[i])).theta + extra_rotation;
        const std::size_t count = std::max<std::size_t>(
            8, static_cast<std::size_t>(std::ceil(curve.length * shells[i] / (0.95 * g))));
        ring_arcs[i] = curve.length / static_cast<double>(count);
        total += count;
    }
    cloud.points.reserve(total);
    for (std::size_t i = 0; i < shells.size(); ++i) {
        const double c = std::cos(angles[i]), s = std::sin(angles[i]);
        const double ti = shells[i];
        for (const Vec3& q : curve.resample(ring_arcs[i]))
            cloud.points.emplace_back(ti * (c * q.x() - s * q.y()),
                                      ti * (s * q.x() + c * q.y()), ti * q.z());
    }
    cloud.points.emplace_back(0.0, 0.0, 0.0);

    // Certified structural gap: radial half-spacing + angular drift across
    // the pair + curve half-spacing, all at the outer shell of each pair.
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < shells.size(); ++i) {
        const double hi = shells[i];
        const double dt = shells[i] - shells[i + 1];
        const double dth = std::fabs(angles[i] - angles[i + 1]);
        const double bound = 0.5 * dt +
                             hi * 2.0 * std::sin(std::min(dth, kPi) * 0.5) * sigma +
                             0.5 * hi * ring_arcs[i];
        worst = std::max(worst, bound);
    }
    cloud.structural_gap = worst;
    return cloud;
}

PointCloud sample_graph_interface(const LogScale& scale, double R, double t_min,
                                  double target_gap)
{
    validate_annulus(R, t_min, target_gap);
    require_pure_shells(scale, R);

    const double rho = scale.rho();
    const AmplitudeEnvelope env =
        graph_amplitude_envelope(rho - std::log(R), rho - std::log(t_min));
    const double bx = env.max_abs_value + env.max_abs_slope;
    const double slope2 = 1.0 + bx * bx + env.max_abs_slope * env.max_abs_slope;
    const double spacing = 1.3 * target_gap / std::sqrt(slope2);

    PointCloud cloud;
    cloud.log_scale_rho = rho;
    cloud.hole_radius = t_min;
    cloud.structural_gap = 0.71 * spacing * std::sqrt(slope2);

    double max_norm = 0.0;
    for (double t = R; t > t_min; t -= spacing) {
        const std::size_t n =
            std::max<std::size_t>(8, static_cast<std::size_t>(std::ceil(kTwoPi * t / spacing)));
        for (std::size_t j = 0; j < n; ++j) {
            const double phi = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
            const Vec2 q(t * std::cos(phi), t * std::sin(phi));
            const Vec3 p(q.x(), q.y(), graph_jet(q, scale).value);
            max_norm = std::max(max_norm, p.norm());
            cloud.points.push_back(p);
        }
    }
    cloud.points.emplace_back(0.0, 0.0, 0.0);
    cloud.ball_radius = max_norm;
    return cloud;
}

PointCloud sample_interface(const DomainKind& kind, const LogScale& scale, double R,
                            double t_min, double target_gap, const BaseCurve& curve)
{
    if (kind.is_twist())
        return sample_twisted_interface(kind.profile, scale, R, t_min, target_gap, curve);
    return sample_graph_interface(scale, R, t_min, target_gap);
}

} // namespace fblab
