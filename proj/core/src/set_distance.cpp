#include "fblab/set_distance.hpp"

#include <algorithm>
#include <limits>

#include "fblab/parallel.hpp"

namespace fblab {

SpatialHashGrid::SpatialHashGrid(const std::vector<Vec3>& points, double cell_size)
    : points_(points)
{
    if (points_.empty())
        throw std::invalid_argument("SpatialHashGrid: empty point set");

    Vec3 lo = points_[0], hi = points_[0];
    for (const Vec3& p : points_) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
    }
    const Vec3 extent = hi - lo;
    const double max_extent = std::max({extent.x(), extent.y(), extent.z(), 1e-12});

    // Keep the table near the point count: quasi-uniform clouds then hold
    // O(1) points per occupied cell.
    const double budget =
        max_extent / std::cbrt(2.0 * static_cast<double>(points_.size()));
    cell_ = std::max({cell_size, budget, 1e-9});
    origin_ = lo;
    nx_ = std::max(1, static_cast<int>(extent.x() / cell_) + 1);
    ny_ = std::max(1, static_cast<int>(extent.y() / cell_) + 1);
    nz_ = std::max(1, static_cast<int>(extent.z() / cell_) + 1);

    const std::size_t ncells = static_cast<std::size_t>(nx_) * ny_ * nz_;
    starts_.assign(ncells + 1, 0);
    std::vector<std::uint32_t> cell_of(points_.size());
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const Vec3 r = (points_[i] - origin_) / cell_;
        const int ix = std::min(nx_ - 1, std::max(0, static_cast<int>(r.x())));
        const int iy = std::min(ny_ - 1, std::max(0, static_cast<int>(r.y())));
        const int iz = std::min(nz_ - 1, std::max(0, static_cast<int>(r.z())));
        cell_of[i] = static_cast<std::uint32_t>(cell_index(ix, iy, iz));
        ++starts_[cell_of[i] + 1];
    }
    for (std::size_t c = 0; c < ncells; ++c) starts_[c + 1] += starts_[c];
    items_.resize(points_.size());
    std::vector<std::uint32_t> cursor(starts_.begin(), starts_.end() - 1);
    for (std::size_t i = 0; i < points_.size(); ++i)
        items_[cursor[cell_of[i]]++] = static_cast<std::uint32_t>(i);
}

std::size_t SpatialHashGrid::cell_index(int ix, int iy, int iz) const
{
    return (static_cast<std::size_t>(iz) * ny_ + iy) * nx_ + ix;
}

double SpatialHashGrid::nearest_distance(const Vec3& q) const
{
    const Vec3 r = (q - origin_) / cell_;
    // Anchor the ring walk at the clamped cell; d0 corrects the termination
    // bound when q lies outside the grid box.
    const int cx = std::clamp(static_cast<int>(std::floor(r.x())), 0, nx_ - 1);
    const int cy = std::clamp(static_cast<int>(std::floor(r.y())), 0, ny_ - 1);
    const int cz = std::clamp(static_cast<int>(std::floor(r.z())), 0, nz_ - 1);
    const Vec3 anchor_lo = origin_ + cell_ * Vec3(cx, cy, cz);
    const Vec3 anchor_hi = anchor_lo + Vec3(cell_, cell_, cell_);
    const Vec3 clamped = q.cwiseMax(anchor_lo).cwiseMin(anchor_hi);
    const double d0 = (q - clamped).norm();

    double best2 = std::numeric_limits<double>::infinity();
    const int max_ring = std::max({nx_, ny_, nz_});

    for (int ring = 0;; ++ring) {
        // Cells at Chebyshev distance `ring` from the anchor are at least
        // (ring-1)*cell - d0 away from q.
        const double dmin = (ring - 1) * cell_ - d0;
        if (dmin > 0.0 && dmin * dmin >= best2) break;
        if (ring > max_ring) break;

        const int x0 = std::max(0, cx - ring), x1 = std::min(nx_ - 1, cx + ring);
        const int y0 = std::max(0, cy - ring), y1 = std::min(ny_ - 1, cy + ring);
        const int z0 = std::max(0, cz - ring), z1 = std::min(nz_ - 1, cz + ring);
        for (int iz = z0; iz <= z1; ++iz) {
            const bool z_face = (iz == cz - ring || iz == cz + ring);
            for (int iy = y0; iy <= y1; ++iy) {
                const bool y_face = (iy == cy - ring || iy == cy + ring);
                for (int ix = x0; ix <= x1; ++ix) {
                    if (!z_face && !y_face && ix != cx - ring && ix != cx + ring)
                        continue; // interior of the ring already visited
                    const std::size_t c = cell_index(ix, iy, iz);
                    for (std::uint32_t k = starts_[c]; k < starts_[c + 1]; ++k) {
                        const double d2 = (points_[items_[k]] - q).squaredNorm();
                        best2 = std::min(best2, d2);
                    }
                }
            }
        }
    }
    return std::sqrt(best2);
}

double excess(const std::vector<Vec3>& S, const SpatialHashGrid& T_grid, bool T_empty)
{
    if (S.empty()) return 0.0;
    if (T_empty)
        throw std::invalid_argument("excess: undefined against the empty set");
    return parallel_max(S.size(),
                        [&](std::size_t i) { return T_grid.nearest_distance(S[i]); });
}

double excess(const std::vector<Vec3>& S, const std::vector<Vec3>& T)
{
    if (S.empty()) return 0.0;
    if (T.empty())
        throw std::invalid_argument("excess: undefined against the empty set");
    SpatialHashGrid grid(T, 0.0);
    return excess(S, grid, false);
}

DistanceResult excess(const PointCloud& S, const PointCloud& T)
{
    if (S.points.empty()) return {0.0, S.gap() + T.gap()};
    if (T.points.empty())
        throw std::invalid_argument("excess: undefined against the empty set");
    SpatialHashGrid grid(T.points, T.gap());
    return {excess(S.points, grid, false), S.gap() + T.gap()};
}

std::vector<Vec3> clip_to_ball(const std::vector<Vec3>& pts, double R)
{
    std::vector<Vec3> out;
    out.reserve(pts.size());
    const double r2 = R * R;
    for (const Vec3& p : pts)
        if (p.squaredNorm() <= r2) out.push_back(p);
    return out;
}

DistanceResult hausdorff_in_ball(const PointCloud& S, const PointCloud& T, double R)
{
    const std::vector<Vec3> s = clip_to_ball(S.points, R);
    const std::vector<Vec3> t = clip_to_ball(T.points, R);
    if (s.empty() || t.empty())
        throw std::invalid_argument("hausdorff_in_ball: empty clipped cloud");

    double d;
    {
        SpatialHashGrid grid_t(t, T.gap());
        d = excess(s, grid_t, false);
    }
    {
        SpatialHashGrid grid_s(s, S.gap());
        d = std::max(d, excess(t, grid_s, false));
    }
    return {d, S.gap() + T.gap()};
}

} // namespace fblab
