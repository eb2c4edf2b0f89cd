#pragma once

#include <cstdint>
#include <vector>

#include "fblab/coefficients.hpp"
#include "fblab/domain.hpp"

namespace fblab {

enum class BoundaryData { Szulkin, LinearZ };

// Dirichlet solve of -div(B grad u) = 0 on the fixed template domain
// (untwisted Szulkin side, or a half-space slab) intersected with the box
// [-K,K]^3: u = 0 on the interface, u = data on the outer box faces, with B
// pulled back from the deformation at log-scale `scale`.
struct SolveSpec {
    DomainKind kind = DomainKind::twisted_szulkin(TwistProfile::log_log());
    Side side = Side::Plus;
    double rho = 1000.0;      // conjugation scale
    double extent = 4.0;      // K
    double h = 1.0 / 64.0;    // grid spacing; K/h must be integral
    BoundaryData data = BoundaryData::Szulkin;
    double tolerance = 1e-8;  // relative residual
    int max_iterations = 100000;
    bool identity_coefficient = false; // oracle mode: B = Id
};

enum class NodeState : std::int8_t { Exterior = 0, Unknown = 1, Dirichlet = 2 };

// One interface crossing along a grid edge: the boundary sits at
// node + alpha * h * dir * e_axis, with `node` on the solved side.
struct CutArm {
    std::int64_t node = 0; // flat lattice index of the interior endpoint
    std::int8_t axis = 0;
    std::int8_t dir = 0;   // +1 or -1
    double alpha = 1.0;    // in (0, 1]
};

class GridSolution {
public:
    SolveSpec spec;
    int n = 0;                      // nodes per axis
    std::vector<NodeState> states;  // lattice
    std::vector<std::int32_t> index; // lattice -> unknown index or -1
    std::vector<double> values;     // per unknown
    std::vector<CutArm> cuts;
    double residual = 0.0;
    int iterations = 0;
    double min_value = 0.0;
    double max_value = 0.0;

    std::int64_t flat(int ix, int iy, int iz) const
    {
        return (static_cast<std::int64_t>(iz) * n + iy) * n + ix;
    }
    Vec3 position(int ix, int iy, int iz) const
    {
        const double K = spec.extent;
        return Vec3(-K + spec.h * ix, -K + spec.h * iy, -K + spec.h * iz);
    }
    Vec3 position(std::int64_t f) const
    {
        const int ix = static_cast<int>(f % n);
        const int iy = static_cast<int>((f / n) % n);
        const int iz = static_cast<int>(f / (static_cast<std::int64_t>(n) * n));
        return position(ix, iy, iz);
    }
    // Solution value at a lattice node (boundary data on Dirichlet nodes,
    // 0 outside the domain).
    double value_at(int ix, int iy, int iz) const;
    double boundary_data(const Vec3& p) const;
    // Signed template field: positive on the solved side.
    double template_field(const Vec3& p) const;
};

GridSolution solve_conjugated(const SolveSpec& spec);

// Interior max-norm deviation between two solutions on the same lattice,
// restricted to nodes unknown in both and to the annulus [r_lo, r_hi].
double max_deviation(const GridSolution& a, const GridSolution& b, double r_lo,
                     double r_hi);

// Max-norm error against a reference function on interior unknowns in the
// annulus.
double max_error_against(const GridSolution& sol,
                         const std::function<double(const Vec3&)>& reference,
                         double r_lo, double r_hi);

} // namespace fblab
