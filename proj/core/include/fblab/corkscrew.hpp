#pragma once

#include "fblab/signed_field.hpp"

namespace fblab {

// Quantitative interior-corkscrew probe at boundary point Q and scale s:
// searches a dyadic grid of candidates X in B(Q, s) on the given side and
// certifies a clearance min(|f(X)|/L, s - |X-Q|) per candidate via the
// field's Lipschitz envelope. Returns M = s / best clearance (infinity when
// no candidate clears); the conservative envelope makes M an upper bound of
// the true corkscrew constant, so only growth trends are asserted.
struct CorkscrewOptions {
    int levels = 5;
    double step_cap_factor = 0.99; // keep certification balls off the origin
};

double corkscrew_probe(const ImplicitDomain& field, Side side, const Vec3& Q, double s,
                       const CorkscrewOptions& opt = {});

} // namespace fblab
