#pragma once

#include <vector>

#include "fblab/base_curve.hpp"
#include "fblab/domain.hpp"
#include "fblab/log_scale.hpp"

namespace fblab {

// Surface area of the rescaled interface inside B(0, r) over a list of
// radii, from a matched triangulated strip mesh; reported as area / r^2.
// For a plane this is pi, for the untwisted cone a constant, and Ahlfors
// regularity shows up as a bounded interval across decades of r.
struct AreaRatioRow {
    double r = 0.0;
    double area = 0.0;
    double ratio = 0.0; // area / r^2
};

struct AreaProbeOptions {
    int shells_per_decade = 64;
    std::size_t curve_samples = 1024;
};

std::vector<AreaRatioRow> area_ratio_probe(const DomainKind& kind, const LogScale& scale,
                                           const std::vector<double>& radii,
                                           const BaseCurve& curve,
                                           const AreaProbeOptions& opt = {});

// Flat-disc oracle: triangulates {z = 0} with the same machinery.
std::vector<AreaRatioRow> area_ratio_plane(const std::vector<double>& radii,
                                           const AreaProbeOptions& opt = {});

} // namespace fblab
