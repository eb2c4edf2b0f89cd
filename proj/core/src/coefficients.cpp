#include "fblab/coefficients.hpp"

#include <Eigen/Eigenvalues>

#include "fblab/graph_surface.hpp"
#include "fblab/twist_map.hpp"

namespace fblab {

CoefficientMatrix pullback_coefficient(const DomainKind& kind, const LogScale& scale,
                                       const Vec3& x)
{
    CoefficientMatrix out;
    if (kind.is_twist()) {
        if (x.norm() == 0.0 || kind.profile.is_none()) {
            out.b = Mat3::Identity();
            out.lambda_min = out.lambda_max = 1.0;
            return out;
        }
        const Mat3 j = twist_frame(kind.profile, x, scale).jacobian;
        out.b = (j * j.transpose()) / j.determinant();
        // Symmetrize away the last-bit asymmetry of the product.
        out.b = 0.5 * (out.b + out.b.transpose()).eval();
    } else {
        const Vec2 q(x.x(), x.y());
        Vec2 g = Vec2::Zero();
        if (q.norm() > 0.0) g = graph_jet(q, scale).gradient;
        const double vx = g.x(), vy = g.y();
        out.b << 1.0, 0.0, -vx,
                 0.0, 1.0, -vy,
                 -vx, -vy, 1.0 + vx * vx + vy * vy;
    }
    Eigen::SelfAdjointEigenSolver<Mat3> es(out.b, Eigen::EigenvaluesOnly);
    out.lambda_min = es.eigenvalues()[0];
    out.lambda_max = es.eigenvalues()[2];
    return out;
}

} // namespace fblab
