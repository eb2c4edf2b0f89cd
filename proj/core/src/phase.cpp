#include "fblab/phase.hpp"

#include <algorithm>

#include "fblab/blowup.hpp"
#include "fblab/twist_map.hpp"

namespace fblab {

namespace {

// Matched-shell distance to the cone rotated by phi, over shells t in
// [t_min, R] (the scan surrogate; exact clouds confirm the minimizer).
double matched_distance(const TwistProfile& profile, double rho, double R, double t_min,
                        double sigma, double phi)
{
    const int n = 2048;
    double best = 0.0;
    const double llo = std::log(t_min), lhi = std::log(R);
    for (int i = 0; i <= n; ++i) {
        const double lt = llo + (lhi - llo) * static_cast<double>(i) / n;
        const double t = std::exp(lt);
        const double dth = circular_distance(theta_at(profile, rho - lt).theta, phi);
        best = std::max(best, 2.0 * t * std::sin(0.5 * dth) * sigma);
    }
    return best;
}

} // namespace

RotationFit best_rotation_distance(const TwistProfile& profile, const LogScale& scale,
                                   const BaseCurve& curve, const RotationScanOptions& opt)
{
    const double rho = scale.rho();
    const double sigma = curve.max_cyl_radius;
    auto objective = [&](double phi) {
        return matched_distance(profile, rho, opt.R, opt.t_min, sigma, phi);
    };

    double phi_best = 0.0, d_best = objective(0.0);
    const std::size_t n = static_cast<std::size_t>(std::ceil(kTwoPi / opt.grid_step));
    for (std::size_t i = 1; i < n; ++i) {
        const double phi = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        const double d = objective(phi);
        if (d < d_best) {
            d_best = d;
            phi_best = phi;
        }
    }

    // Golden-section refinement inside the bracketing grid cells.
    double a = phi_best - opt.grid_step, b = phi_best + opt.grid_step;
    const double gr = 0.6180339887498949;
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = objective(x1), f2 = objective(x2);
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = objective(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = objective(x2);
        }
    }
    phi_best = wrap_angle(0.5 * (a + b));

    RotationFit fit;
    fit.phi_star = phi_best;
    fit.d_matched = objective(phi_best);

    const PointCloud cloud =
        sample_twisted_interface(profile, scale, opt.R, opt.t_min, opt.cloud_gap, curve);
    const PointCloud reference = sample_twisted_interface(
        TwistProfile::none(), scale, opt.R, opt.t_min, opt.cloud_gap, curve, phi_best);
    const DistanceResult hd = hausdorff_in_ball(cloud, reference, opt.R);
    fit.d_star = hd.value;
    fit.uncertainty = hd.uncertainty;
    fit.cloud_points = cloud.size() + reference.size();
    return fit;
}

} // namespace fblab
