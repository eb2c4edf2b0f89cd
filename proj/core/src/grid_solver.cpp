#include "fblab/grid_solver.hpp"

#include <algorithm>
#include <cmath>

#include "fblab/parallel.hpp"
#include "fblab/szulkin.hpp"

namespace fblab {

namespace {

constexpr double kCutTol = 1e-13;

double deterministic_dot(const std::vector<double>& a, const std::vector<double>& b)
{
    const std::size_t block = 8192;
    const std::size_t nblocks = (a.size() + block - 1) / block;
    std::vector<double> partial(nblocks, 0.0);
    parallel_for_blocks(0, a.size(), block, [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
        partial[lo / block] = s;
    });
    double s = 0.0;
    for (double v : partial) s += v;
    return s;
}

// The 6 positive diagonal directions of the mixed-term stencil, as
// (axis a, axis b, sign of e_b): direction e_a + sign*e_b, with the
// conductance +/- B_ab h / 2 (positive for e_a + e_b, negative otherwise).
struct DiagDir {
    int a, b, sb;
};
constexpr DiagDir kDiagDirs[6] = {{0, 1, +1}, {0, 1, -1}, {0, 2, +1},
                                  {0, 2, -1}, {1, 2, +1}, {1, 2, -1}};

} // namespace

double GridSolution::boundary_data(const Vec3& p) const
{
    const double raw = spec.data == BoundaryData::Szulkin ? szulkin(p) : p.z();
    return std::max(side_sign(spec.side) * raw, 0.0);
}

double GridSolution::template_field(const Vec3& p) const
{
    const double raw = spec.kind.is_twist() ? szulkin(p) : p.z();
    return side_sign(spec.side) * raw;
}

double GridSolution::value_at(int ix, int iy, int iz) const
{
    const std::int64_t f = flat(ix, iy, iz);
    switch (states[f]) {
    case NodeState::Unknown: return values[index[f]];
    case NodeState::Dirichlet: return boundary_data(position(ix, iy, iz));
    case NodeState::Exterior: return 0.0;
    }
    return 0.0;
}

namespace {

class Assembler {
public:
    explicit Assembler(const SolveSpec& spec) : spec_(spec)
    {
        const double ratio = spec.extent / spec.h;
        if (std::fabs(ratio - std::round(ratio)) > 1e-9)
            throw std::domain_error("solve_conjugated: h must divide the extent K");
        if (!(spec.tolerance > 0.0))
            throw std::domain_error("solve_conjugated: tolerance must be positive");
        n_ = 2 * static_cast<int>(std::round(ratio)) + 1;

        if (!spec.identity_coefficient) {
            // The pure law must hold across the whole box.
            const double worst =
                spec.rho - std::log(spec.extent * std::sqrt(3.0));
            if (worst < kPureLawRho)
                throw std::domain_error(
                    "solve_conjugated: scale leaves the pure region inside the box");
        }
    }

    GridSolution run();

private:
    Mat3 coefficient(const Vec3& p) const
    {
        if (spec_.identity_coefficient || (spec_.kind.is_twist() && spec_.kind.profile.is_none()))
            return Mat3::Identity();
        return pullback_coefficient(spec_.kind, LogScale(spec_.rho), p).b;
    }
    bool has_cross() const
    {
        return !(spec_.identity_coefficient ||
                 (spec_.kind.is_twist() && spec_.kind.profile.is_none()));
    }

    double cut_alpha(const GridSolution& g, const Vec3& from, const Vec3& step) const
    {
        // Root of the template field along [from, from+step]; f(0) > 0 >= f(1).
        double lo = 0.0, hi = 1.0;
        double flo = g.template_field(from);
        for (int it = 0; it < 80 && hi - lo > kCutTol; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = g.template_field(from + mid * step);
            if (fm > 0.0) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        (void)flo;
        return std::max(hi, 1e-6); // never a zero-length arm
    }

    const SolveSpec& spec_;
    int n_ = 0;
};

GridSolution Assembler::run()
{
    GridSolution g;
    g.spec = spec_;
    g.n = n_;
    const int n = n_;
    const std::int64_t lattice = static_cast<std::int64_t>(n) * n * n;
    const double h = spec_.h;

    g.states.assign(lattice, NodeState::Exterior);
    g.index.assign(lattice, -1);

    // Classification.
    std::int32_t unknowns = 0;
    for (int iz = 0; iz < n; ++iz)
        for (int iy = 0; iy < n; ++iy)
            for (int ix = 0; ix < n; ++ix) {
                const std::int64_t f = g.flat(ix, iy, iz);
                const Vec3 p = g.position(ix, iy, iz);
                if (g.template_field(p) <= 0.0) continue; // exterior / interface plane
                const bool face = ix == 0 || iy == 0 || iz == 0 || ix == n - 1 ||
                                  iy == n - 1 || iz == n - 1;
                if (face) {
                    g.states[f] = NodeState::Dirichlet;
                } else {
                    g.states[f] = NodeState::Unknown;
                    g.index[f] = unknowns++;
                }
            }
    if (unknowns == 0)
        throw std::runtime_error("solve_conjugated: empty domain");

    const std::size_t m = static_cast<std::size_t>(unknowns);
    std::vector<std::int64_t> node_of(m);
    for (std::int64_t f = 0; f < lattice; ++f)
        if (g.index[f] >= 0) node_of[g.index[f]] = f;

    const std::int64_t stride[3] = {1, n, static_cast<std::int64_t>(n) * n};
    const bool cross = has_cross();

    std::vector<double> diag(m, 0.0), rhs(m, 0.0);
    std::vector<double> face[3];
    for (auto& v : face) v.assign(m, 0.0);
    std::vector<double> edge[6];
    if (cross)
        for (auto& v : edge) v.assign(m, 0.0);

    // Assembly: principal arms (+ Shortley-Weller-style cut arms as pure
    // conductances, which keeps the matrix symmetric), then the diagonal
    // mixed-term couplings.
    parallel_for_blocks(0, m, 2048, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t u = lo; u < hi; ++u) {
            const std::int64_t f = node_of[u];
            const Vec3 p = g.position(f);
            for (int axis = 0; axis < 3; ++axis) {
                Vec3 e = Vec3::Zero();
                e[axis] = 1.0;
                for (int dir = -1; dir <= 1; dir += 2) {
                    const std::int64_t nb = f + dir * stride[axis];
                    const NodeState st = g.states[nb];
                    if (st == NodeState::Unknown || st == NodeState::Dirichlet) {
                        const Mat3 B = coefficient(p + (0.5 * dir * h) * e);
                        const double gcond = B(axis, axis) * h;
                        diag[u] += gcond;
                        if (st == NodeState::Unknown) {
                            if (dir > 0) face[axis][u] = gcond;
                            // dir < 0 handled by the neighbor's +face entry;
                            // conductances agree because the face is shared.
                        } else {
                            rhs[u] += gcond * g.boundary_data(g.position(nb));
                        }
                    } else {
                        // Interface crossing: conductance over the cut arm.
                        const double alpha = cut_alpha(g, p, (dir * h) * e);
                        const Mat3 B = coefficient(p + (0.5 * alpha * dir * h) * e);
                        const double gcond = B(axis, axis) * h / alpha;
                        diag[u] += gcond; // boundary value 0: no rhs term
                    }
                }
            }
            if (!cross) continue;
            for (int d = 0; d < 6; ++d) {
                const DiagDir dd = kDiagDirs[d];
                const std::int64_t nb = f + stride[dd.a] + dd.sb * stride[dd.b];
                const NodeState st = g.states[nb];
                if (st == NodeState::Exterior) continue;
                Vec3 mid = p;
                mid[dd.a] += 0.5 * h;
                mid[dd.b] += 0.5 * dd.sb * h;
                const Mat3 B = coefficient(mid);
                const double w = 0.5 * dd.sb * B(dd.a, dd.b) * h;
                if (w == 0.0) continue;
                edge[d][u] = (st == NodeState::Unknown) ? w : 0.0;
                diag[u] += w;
                if (st == NodeState::Dirichlet)
                    rhs[u] += w * g.boundary_data(g.position(nb));
            }
        }
    });

    // Mirror contributions of the diagonal couplings: the (P, P+v) edge also
    // feeds P+v's diagonal (and rhs when P is Dirichlet -- impossible here
    // since edges are stored on unknown P only; add the reverse arms now).
    for (std::size_t u = 0; u < m; ++u) {
        const std::int64_t f = node_of[u];
        if (cross) {
            for (int d = 0; d < 6; ++d) {
                const DiagDir dd = kDiagDirs[d];
                const std::int64_t nb = f - stride[dd.a] - dd.sb * stride[dd.b];
                const NodeState st = g.states[nb];
                if (st == NodeState::Exterior) continue;
                if (st == NodeState::Unknown) continue; // counted from the other side
                // Dirichlet behind us: same conductance, folded here.
                const Vec3 p = g.position(f);
                Vec3 mid = p;
                mid[dd.a] -= 0.5 * h;
                mid[dd.b] -= 0.5 * dd.sb * h;
                const Mat3 B = coefficient(mid);
                const double w = 0.5 * dd.sb * B(dd.a, dd.b) * h;
                if (w == 0.0) continue;
                diag[u] += w;
                rhs[u] += w * g.boundary_data(g.position(nb));
            }
        }
    }
    // Unknown-unknown diagonal couplings feed both endpoints' diagonals.
    if (cross) {
        for (std::size_t u = 0; u < m; ++u) {
            const std::int64_t f = node_of[u];
            for (int d = 0; d < 6; ++d) {
                if (edge[d][u] == 0.0) continue;
                const DiagDir dd = kDiagDirs[d];
                const std::int64_t nb = f + stride[dd.a] + dd.sb * stride[dd.b];
                if (g.states[nb] == NodeState::Unknown) diag[g.index[nb]] += edge[d][u];
            }
        }
    }

    // Record cut arms for gradient sampling.
    for (std::size_t u = 0; u < m; ++u) {
        const std::int64_t f = node_of[u];
        const Vec3 p = g.position(f);
        for (int axis = 0; axis < 3; ++axis) {
            Vec3 e = Vec3::Zero();
            e[axis] = 1.0;
            for (int dir = -1; dir <= 1; dir += 2) {
                const std::int64_t nb = f + dir * stride[axis];
                if (g.states[nb] == NodeState::Exterior) {
                    CutArm cut;
                    cut.node = f;
                    cut.axis = static_cast<std::int8_t>(axis);
                    cut.dir = static_cast<std::int8_t>(dir);
                    cut.alpha = cut_alpha(g, p, (dir * h) * e);
                    g.cuts.push_back(cut);
                }
            }
        }
    }

    // Operator application.
    auto apply = [&](const std::vector<double>& x, std::vector<double>& y) {
        parallel_for_blocks(0, m, 4096, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t u = lo; u < hi; ++u) {
                const std::int64_t f = node_of[u];
                double acc = diag[u] * x[u];
                for (int axis = 0; axis < 3; ++axis) {
                    const double gp = face[axis][u];
                    if (gp != 0.0) acc -= gp * x[g.index[f + stride[axis]]];
                    const std::int64_t nb = f - stride[axis];
                    if (g.states[nb] == NodeState::Unknown) {
                        const std::int32_t v = g.index[nb];
                        const double gm = face[axis][v];
                        if (gm != 0.0) acc -= gm * x[v];
                    }
                }
                if (cross) {
                    for (int d = 0; d < 6; ++d) {
                        const DiagDir dd = kDiagDirs[d];
                        const double w = edge[d][u];
                        if (w != 0.0)
                            acc -= w * x[g.index[f + stride[dd.a] + dd.sb * stride[dd.b]]];
                        const std::int64_t nb = f - stride[dd.a] - dd.sb * stride[dd.b];
                        if (g.states[nb] == NodeState::Unknown) {
                            const std::int32_t v = g.index[nb];
                            const double wm = edge[d][v];
                            if (wm != 0.0) acc -= wm * x[v];
                        }
                    }
                }
                y[u] = acc;
            }
        });
    };

    // Symmetric Gauss-Seidel preconditioner via 8-coloring by parity; every
    // stencil offset flips a parity bit, so same-color updates commute and
    // the sweep is deterministic under any thread count.
    std::vector<std::vector<std::int32_t>> colors(8);
    for (std::size_t u = 0; u < m; ++u) {
        const std::int64_t f = node_of[u];
        const int ix = static_cast<int>(f % n);
        const int iy = static_cast<int>((f / n) % n);
        const int iz = static_cast<int>(f / (static_cast<std::int64_t>(n) * n));
        colors[(ix & 1) | ((iy & 1) << 1) | ((iz & 1) << 2)].push_back(
            static_cast<std::int32_t>(u));
    }

    auto gs_row = [&](std::size_t u, const std::vector<double>& r,
                      std::vector<double>& z) {
        const std::int64_t f = node_of[u];
        double acc = r[u];
        for (int axis = 0; axis < 3; ++axis) {
            const double gp = face[axis][u];
            if (gp != 0.0) acc += gp * z[g.index[f + stride[axis]]];
            const std::int64_t nb = f - stride[axis];
            if (g.states[nb] == NodeState::Unknown) {
                const std::int32_t v = g.index[nb];
                const double gm = face[axis][v];
                if (gm != 0.0) acc += gm * z[v];
            }
        }
        if (cross) {
            for (int d = 0; d < 6; ++d) {
                const DiagDir dd = kDiagDirs[d];
                const double w = edge[d][u];
                if (w != 0.0) acc += w * z[g.index[f + stride[dd.a] + dd.sb * stride[dd.b]]];
                const std::int64_t nb = f - stride[dd.a] - dd.sb * stride[dd.b];
                if (g.states[nb] == NodeState::Unknown) {
                    const std::int32_t v = g.index[nb];
                    const double wm = edge[d][v];
                    if (wm != 0.0) acc += wm * z[v];
                }
            }
        }
        z[u] = acc / diag[u];
    };

    auto precondition = [&](const std::vector<double>& r, std::vector<double>& z) {
        std::fill(z.begin(), z.end(), 0.0);
        for (int c = 0; c < 8; ++c)
            for (std::int32_t u : colors[c]) gs_row(static_cast<std::size_t>(u), r, z);
        for (int c = 7; c >= 0; --c)
            for (std::int32_t u : colors[c]) gs_row(static_cast<std::size_t>(u), r, z);
    };

    // Preconditioned conjugate gradients.
    std::vector<double> x(m, 0.0), r = rhs, z(m, 0.0), pdir(m, 0.0), Ap(m, 0.0);
    const double rhs_norm = std::sqrt(deterministic_dot(rhs, rhs));
    double rel = 1.0;
    int iter = 0;
    if (rhs_norm == 0.0) {
        rel = 0.0;
    } else {
        precondition(r, z);
        pdir = z;
        double rz = deterministic_dot(r, z);
        for (iter = 1; iter <= spec_.max_iterations; ++iter) {
            apply(pdir, Ap);
            const double pAp = deterministic_dot(pdir, Ap);
            if (!(pAp > 0.0))
                throw std::runtime_error(
                    "solve_conjugated: indefinite system (coefficient bug?)");
            const double alpha = rz / pAp;
            for (std::size_t i = 0; i < m; ++i) x[i] += alpha * pdir[i];
            for (std::size_t i = 0; i < m; ++i) r[i] -= alpha * Ap[i];
            rel = std::sqrt(deterministic_dot(r, r)) / rhs_norm;
            if (rel < spec_.tolerance) break;
            precondition(r, z);
            const double rz_new = deterministic_dot(r, z);
            const double beta = rz_new / rz;
            rz = rz_new;
            for (std::size_t i = 0; i < m; ++i) pdir[i] = z[i] + beta * pdir[i];
        }
        if (rel >= spec_.tolerance)
            throw std::runtime_error("solve_conjugated: PCG failed to converge");
    }

    g.values = std::move(x);
    g.residual = rel;
    g.iterations = iter;
    g.min_value = g.values.empty() ? 0.0 : *std::min_element(g.values.begin(), g.values.end());
    g.max_value = g.values.empty() ? 0.0 : *std::max_element(g.values.begin(), g.values.end());
    return g;
}

} // namespace

GridSolution solve_conjugated(const SolveSpec& spec)
{
    Assembler assembler(spec);
    return assembler.run();
}

double max_deviation(const GridSolution& a, const GridSolution& b, double r_lo, double r_hi)
{
    if (a.n != b.n) throw std::invalid_argument("max_deviation: lattice mismatch");
    double worst = 0.0;
    for (std::int64_t f = 0; f < static_cast<std::int64_t>(a.states.size()); ++f) {
        if (a.states[f] != NodeState::Unknown || b.states[f] != NodeState::Unknown)
            continue;
        const double r = a.position(f).norm();
        if (r < r_lo || r > r_hi) continue;
        worst = std::max(worst, std::fabs(a.values[a.index[f]] - b.values[b.index[f]]));
    }
    return worst;
}

double max_error_against(const GridSolution& sol,
                         const std::function<double(const Vec3&)>& reference,
                         double r_lo, double r_hi)
{
    double worst = 0.0;
    for (std::int64_t f = 0; f < static_cast<std::int64_t>(sol.states.size()); ++f) {
        if (sol.states[f] != NodeState::Unknown) continue;
        const Vec3 p = sol.position(f);
        const double r = p.norm();
        if (r < r_lo || r > r_hi) continue;
        worst = std::max(worst, std::fabs(sol.values[sol.index[f]] - reference(p)));
    }
    return worst;
}

} // namespace fblab
