#include "fblab/szulkin.hpp"

namespace fblab {

ScalarJet3 szulkin_jet(const Vec3& p)
{
    const double x = p.x(), y = p.y(), z = p.z();
    ScalarJet3 jet;
    jet.value = x * x * x - 3.0 * x * y * y + z * z * z - 1.5 * (x * x + y * y) * z;
    jet.gradient = Vec3(3.0 * x * x - 3.0 * y * y - 3.0 * x * z,
                        -6.0 * x * y - 3.0 * y * z,
                        3.0 * z * z - 1.5 * (x * x + y * y));
    return jet;
}

} // namespace fblab
