#include "fblab/area_probe.hpp"

#include <algorithm>
#include <functional>

#include "fblab/graph_surface.hpp"
#include "fblab/twist_map.hpp"

namespace fblab {

namespace {

// Accumulates strip areas between consecutive rings of a matched mesh:
// ring(j) yields the n points of shell j in a fixed parameterization.
std::vector<AreaRatioRow> mesh_area_rows(
    const std::vector<double>& shells, std::size_t n,
    const std::function<Vec3(std::size_t shell, std::size_t i)>& vertex,
    const std::vector<double>& radii)
{
    std::vector<double> cumulative(shells.size(), 0.0); // area inside shell j
    std::vector<Vec3> lower(n), upper(n);
    for (std::size_t i = 0; i < n; ++i) lower[i] = vertex(0, i);

    for (std::size_t j = 0; j + 1 < shells.size(); ++j) {
        for (std::size_t i = 0; i < n; ++i) upper[i] = vertex(j + 1, i);
        double strip = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t k = (i + 1) % n;
            const Vec3 &a = lower[i], &b = lower[k], &c = upper[k], &d = upper[i];
            strip += 0.5 * ((b - a).cross(d - a)).norm();
            strip += 0.5 * ((c - b).cross(d - b)).norm();
        }
        if (!(strip > 0.0))
            throw std::runtime_error("area_ratio_probe: degenerate strip in triangulation");
        cumulative[j + 1] = cumulative[j] + strip;
        lower.swap(upper);
    }

    std::vector<AreaRatioRow> rows;
    rows.reserve(radii.size());
    for (double r : radii) {
        auto it = std::upper_bound(shells.begin(), shells.end(), r * (1.0 + 1e-12));
        if (it == shells.begin() || it == shells.end())
            throw std::domain_error("area_ratio_probe: radius outside the sampled range");
        const std::size_t j = static_cast<std::size_t>(it - shells.begin()) - 1;
        rows.push_back({r, cumulative[j], cumulative[j] / (r * r)});
    }
    return rows;
}

std::vector<double> shell_grid(const std::vector<double>& radii, int per_decade)
{
    if (radii.empty()) throw std::domain_error("area_ratio_probe: no radii");
    double r_lo = radii[0], r_hi = radii[0];
    for (double r : radii) {
        if (!(r > 0.0)) throw std::domain_error("area_ratio_probe: radii must be positive");
        r_lo = std::min(r_lo, r);
        r_hi = std::max(r_hi, r);
    }
    std::vector<double> shells{r_lo * 1e-3}; // strips continue toward 0; truncate 3 decades in
    const double step = std::log(10.0) / per_decade;
    for (double lt = std::log(r_lo * 1e-3) + step; lt < std::log(r_hi) - 0.5 * step; lt += step)
        shells.push_back(std::exp(lt));
    shells.insert(shells.end(), radii.begin(), radii.end());
    std::sort(shells.begin(), shells.end());
    shells.erase(std::unique(shells.begin(), shells.end()), shells.end());
    return shells;
}

} // namespace

std::vector<AreaRatioRow> area_ratio_probe(const DomainKind& kind, const LogScale& scale,
                                           const std::vector<double>& radii,
                                           const BaseCurve& curve,
                                           const AreaProbeOptions& opt)
{
    const std::vector<double> shells = shell_grid(radii, opt.shells_per_decade);
    const std::size_t n = opt.curve_samples;

    if (kind.is_twist()) {
        const std::vector<Vec3> ring = curve.resample(curve.length / static_cast<double>(n));
        const std::size_t rn = ring.size();
        std::vector<double> angles(shells.size());
        for (std::size_t j = 0; j < shells.size(); ++j)
            angles[j] =
                theta_at(kind.profile, scale.rho() - std::log(shells[j])).theta;
        auto vertex = [&](std::size_t j, std::size_t i) {
            const double c = std::cos(angles[j]), s = std::sin(angles[j]);
            const Vec3& q = ring[i % rn];
            return Vec3(shells[j] * (c * q.x() - s * q.y()),
                        shells[j] * (s * q.x() + c * q.y()), shells[j] * q.z());
        };
        return mesh_area_rows(shells, rn, vertex, radii);
    }

    auto vertex = [&](std::size_t j, std::size_t i) {
        const double phi = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        const Vec2 q(shells[j] * std::cos(phi), shells[j] * std::sin(phi));
        return Vec3(q.x(), q.y(), graph_jet(q, scale).value);
    };
    return mesh_area_rows(shells, n, vertex, radii);
}

std::vector<AreaRatioRow> area_ratio_plane(const std::vector<double>& radii,
                                           const AreaProbeOptions& opt)
{
    const std::vector<double> shells = shell_grid(radii, opt.shells_per_decade);
    const std::size_t n = opt.curve_samples;
    auto vertex = [&](std::size_t j, std::size_t i) {
        const double phi = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        return Vec3(shells[j] * std::cos(phi), shells[j] * std::sin(phi), 0.0);
    };
    return mesh_area_rows(shells, n, vertex, radii);
}

} // namespace fblab
