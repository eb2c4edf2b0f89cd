#pragma once

#include "fblab/point_cloud.hpp"
#include "fblab/set_distance.hpp"

namespace fblab {

// Best single rotation of the base cone against the rescaled twisted
// interface: scan the matched-shell distance over a 1e-3 angle grid,
// golden-section refine, then evaluate the exact cloud Hausdorff distance
// at the minimizer.
struct RotationFit {
    double phi_star = 0.0;
    double d_star = 0.0;          // exact cloud HD at phi_star
    double uncertainty = 0.0;     // summed cloud gaps
    double d_matched = 0.0;       // matched-shell value at phi_star
    std::size_t cloud_points = 0;
};

struct RotationScanOptions {
    double R = 2.0;
    double t_min = 0.05;
    double cloud_gap = 2e-3;
    double grid_step = 1e-3;
};

RotationFit best_rotation_distance(const TwistProfile& profile, const LogScale& scale,
                                   const BaseCurve& curve,
                                   const RotationScanOptions& opt = {});

} // namespace fblab
