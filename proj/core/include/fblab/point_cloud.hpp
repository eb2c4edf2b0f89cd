#pragma once

#include <vector>

#include "fblab/base_curve.hpp"
#include "fblab/domain.hpp"
#include "fblab/log_scale.hpp"

namespace fblab {

// Finite sample of a rescaled interface. gap is the certified sampling
// density: every true surface point of the sampled region is within gap of
// some sample. It splits into the structural part (shell spacing, curve
// spacing, angular drift across a shell gap) and the inner hole below t_min,
// which only the origin sample covers.
struct PointCloud {
    std::vector<Vec3> points;
    double ball_radius = 0.0;
    double log_scale_rho = 0.0;
    double structural_gap = 0.0;
    double hole_radius = 0.0; // t_min; 0 when the sampling reaches the origin

    double gap() const { return std::max(structural_gap, hole_radius); }
    std::size_t size() const { return points.size(); }
};

// Rescaled twisted interface Sigma/r cap (B_R \ B_{t_min}) plus the origin:
// shells { t R_{theta(rho - log t)} c : c in curve }. Never touches physical
// radii. extra_rotation adds a fixed rotation to every shell (reference
// clouds R_phi Sigma_s use profile None with extra_rotation = phi).
// Throws when a shell's combined scale leaves the pure law region
// (profile None is exempt: there is no law to leave).
PointCloud sample_twisted_interface(const TwistProfile& profile, const LogScale& scale,
                                    double R, double t_min, double target_gap,
                                    const BaseCurve& curve, double extra_rotation = 0.0);

// Rescaled oscillating graph over the annulus t in [t_min, R] plus the
// origin; polar grid with the vertical displacement folded into the
// certified gap. Same pure-region requirement.
PointCloud sample_graph_interface(const LogScale& scale, double R, double t_min,
                                  double target_gap);

PointCloud sample_interface(const DomainKind& kind, const LogScale& scale, double R,
                            double t_min, double target_gap, const BaseCurve& curve);

} // namespace fblab
