#pragma once

#include <vector>

#include "fblab/point_cloud.hpp"

namespace fblab {

// Uniform spatial hash over a point set for nearest-neighbor distance
// queries. Clouds here are quasi-uniform at their sampling gap, so a grid at
// roughly that cell size gives O(1) expected cost per query.
class SpatialHashGrid {
public:
    SpatialHashGrid(const std::vector<Vec3>& points, double cell_size);

    double nearest_distance(const Vec3& q) const;
    double cell_size() const { return cell_; }

private:
    std::size_t cell_index(int ix, int iy, int iz) const;

    const std::vector<Vec3>& points_;
    double cell_ = 1.0;
    Vec3 origin_ = Vec3::Zero();
    int nx_ = 1, ny_ = 1, nz_ = 1;
    std::vector<std::uint32_t> starts_; // CSR offsets per cell
    std::vector<std::uint32_t> items_;  // point indices sorted by cell
};

// Distance value together with the certified sampling uncertainty of the
// clouds it was computed from.
struct DistanceResult {
    double value = 0.0;
    double uncertainty = 0.0;

    double upper() const { return value + uncertainty; }
};

// excess(S, T) = sup_{s in S} inf_{t in T} |s - t|; empty S gives 0, empty T
// with nonempty S is undefined and throws.
double excess(const std::vector<Vec3>& S, const std::vector<Vec3>& T);
double excess(const std::vector<Vec3>& S, const SpatialHashGrid& T_grid, bool T_empty);

DistanceResult excess(const PointCloud& S, const PointCloud& T);

// max of the two excesses over the clouds clipped to the closed ball B_R;
// both clipped clouds must be nonempty.
DistanceResult hausdorff_in_ball(const PointCloud& S, const PointCloud& T, double R);

std::vector<Vec3> clip_to_ball(const std::vector<Vec3>& pts, double R);

} // namespace fblab
