#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace fblab {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;

// Pure-law cutoff rho0 = log(100): the rotation/oscillation laws hold for
// r <= 1/100, i.e. rho >= rho0; below it a C^1 blend takes over.
inline constexpr double kPureLawRho = 4.60517018598809136804; // log(100)

// Beyond rho = e^70 the angle reduction mod 2pi loses the last digits we
// promise; operations refuse instead of degrading silently.
inline const double kMaxRho = std::exp(70.0);

// fmod against 2pi is meaningless once ulp(theta) ~ 2pi; refuse above this.
inline constexpr double kMaxReducibleAngle = 1e12;

// Wrap an angle into [0, 2pi).
inline double wrap_angle(double theta)
{
    double m = std::fmod(theta, kTwoPi);
    if (m < 0.0) m += kTwoPi;
    if (m >= kTwoPi) m = 0.0;
    return m;
}

// Circular distance between two angles, result in [0, pi].
inline double circular_distance(double a, double b)
{
    double d = std::fabs(wrap_angle(a) - wrap_angle(b));
    return d > kPi ? kTwoPi - d : d;
}

} // namespace fblab
