#pragma once

#include "fblab/domain.hpp"
#include "fblab/log_scale.hpp"

namespace fblab {

// Coefficient matrix of the conjugated equation -div(B grad u) = 0 on the
// fixed template domain: B = (det DPhi)^{-1} DPhi DPhi^T. Both maps here are
// volume preserving, so det B = 1 and the eigenvalues pair up around 1.
struct CoefficientMatrix {
    Mat3 b;
    double lambda_min;
    double lambda_max;

    double max_entry_distance_from_identity() const
    {
        return (b - Mat3::Identity()).cwiseAbs().maxCoeff();
    }
};

// For TwistedSzulkin, B is evaluated at the combined log-scale
// rho - log|x|; for OscillatingGraph it carries the closed form
//   [[1,0,-vx],[0,1,-vy],[-vx,-vy,1+vx^2+vy^2]]
// built from the rescaled oscillation gradient (independent of x.z).
CoefficientMatrix pullback_coefficient(const DomainKind& kind, const LogScale& scale,
                                       const Vec3& x);

} // namespace fblab
