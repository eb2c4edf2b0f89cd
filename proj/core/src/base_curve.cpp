#include "fblab/base_curve.hpp"

#include "fblab/szulkin.hpp"

namespace fblab {

namespace {

Vec3 curve_tangent(const Vec3& p)
{
    const Vec3 g = szulkin_jet(p).gradient;
    Vec3 t = g.cross(p);
    const double n = t.norm();
    if (n == 0.0)
        throw std::runtime_error("trace_base_curve: degenerate tangent (critical point?)");
    return t / n;
}

} // namespace

Vec3 project_to_base_curve(Vec3 q)
{
    q.normalize();
    for (int it = 0; it < 30; ++it) {
        const ScalarJet3 jet = szulkin_jet(q);
        if (std::fabs(jet.value) <= 1e-13) return q;
        // Newton step tangent to the sphere, then renormalize.
        const Vec3 gt = jet.gradient - jet.gradient.dot(q) * q;
        const double n2 = gt.squaredNorm();
        if (n2 == 0.0) break;
        q -= (jet.value / n2) * gt;
        q.normalize();
    }
    if (std::fabs(szulkin(q)) > 1e-10)
        throw std::runtime_error("project_to_base_curve: Newton projection failed");
    return q;
}

BaseCurve trace_base_curve(double target_gap)
{
    if (!(target_gap > 1e-6) || !(target_gap < 0.1))
        throw std::domain_error("trace_base_curve: target_gap must lie in (1e-6, 0.1)");

    const Vec3 seed(0.0, 1.0, 0.0);
    const double h = 0.9 * std::min(target_gap, 0.05);
    // The loop on S^2 has length below 4*pi; generous budget.
    const std::size_t max_steps = static_cast<std::size_t>(64.0 * 13.0 / h) + 64;

    BaseCurve curve;
    curve.points.reserve(static_cast<std::size_t>(10.0 / h) + 8);
    curve.points.push_back(seed);

    Vec3 p = seed;
    Vec3 dir = curve_tangent(seed);
    double travelled = 0.0;
    bool closed = false;

    for (std::size_t step = 0; step < max_steps; ++step) {
        Vec3 t = curve_tangent(p);
        if (t.dot(dir) < 0.0) t = -t; // keep orientation through the loop
        Vec3 q = project_to_base_curve(p + h * t);

        travelled += (q - p).norm();
        p = q;
        dir = t;

        if (travelled > 1.0 && (p - seed).norm() < 0.9 * h) {
            closed = true;
            break;
        }
        curve.points.push_back(p);
    }
    if (!closed)
        throw std::runtime_error("trace_base_curve: continuation failed to close the loop");

    curve.arc.resize(curve.points.size());
    const std::size_t n = curve.points.size();
    double len = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        curve.arc[i] = len;
        const Vec3& a = curve.points[i];
        const Vec3& b = curve.points[(i + 1) % n];
        const double chord = (a - b).norm();
        len += chord;
        curve.gap = std::max(curve.gap, chord);
        curve.max_cyl_radius = std::max(curve.max_cyl_radius, std::hypot(a.x(), a.y()));
    }
    curve.length = len;
    return curve;
}

std::vector<Vec3> BaseCurve::resample(double spacing) const
{
    if (!(spacing > 0.0))
        throw std::domain_error("BaseCurve::resample: spacing must be positive");
    const std::size_t n = points.size();
    const std::size_t count =
        std::max<std::size_t>(8, static_cast<std::size_t>(std::ceil(length / spacing)));
    std::vector<Vec3> out;
    out.reserve(count);

    const double step = length / static_cast<double>(count);
    std::size_t seg = 0;
    for (std::size_t k = 0; k < count; ++k) {
        const double target = step * static_cast<double>(k);
        while (seg + 1 < n && arc[seg + 1] <= target) ++seg;
        const Vec3& a = points[seg];
        const Vec3& b = points[(seg + 1) % n];
        const double seg_len = (b - a).norm();
        const double local = seg_len > 0.0 ? (target - arc[seg]) / seg_len : 0.0;
        out.push_back(project_to_base_curve(a + local * (b - a)));
    }
    return out;
}

} // namespace fblab
