#include "fblab/corkscrew.hpp"

#include <limits>

namespace fblab {

double corkscrew_probe(const ImplicitDomain& field, Side side, const Vec3& Q, double s,
                       const CorkscrewOptions& opt)
{
    if (!(s > 0.0) || s > 1.0)
        throw std::domain_error("corkscrew_probe: probe scale must lie in (0, 1]");

    double best = 0.0;
    for (int level = 1; level <= opt.levels; ++level) {
        const int n = 1 << level;
        const double delta = s / static_cast<double>(n);
        for (int iz = -n; iz < n; ++iz) {
            for (int iy = -n; iy < n; ++iy) {
                for (int ix = -n; ix < n; ++ix) {
                    const Vec3 off((ix + 0.5) * delta, (iy + 0.5) * delta,
                                   (iz + 0.5) * delta);
                    const double r = off.norm();
                    if (r >= s) continue;
                    const Vec3 X = Q + off;
                    const double v = side_sign(side) * field.value(X);
                    if (!(v > 0.0)) continue;
                    const double room = s - r;
                    // Ball radius for the Lipschitz certificate: stay inside
                    // B(Q,s) and keep the origin out of the certifying ball.
                    const double h = std::min(room, opt.step_cap_factor * X.norm());
                    if (!(h > 0.0)) continue;
                    const double bound = field.gradient_norm_bound(X, h);
                    const double cert = bound > 0.0 ? std::min(h, v / bound) : h;
                    best = std::max(best, std::min(cert, room));
                }
            }
        }
    }
    if (best <= 0.0) return std::numeric_limits<double>::infinity();
    return s / best;
}

} // namespace fblab
