#pragma once

#include <utility>
#include <vector>

#include "shadowlp/lp.hpp"

namespace shadowlp {

// Interpolated objective q(lambda) = (1 - lambda) * t + lambda * z.
struct InterpolationObjective {
    Vec t;
    Vec z;
};

// One basis together with the lambda interval on which it is optimal.
struct PathSegment {
    Basis basis;
    double lambda_lo;
    double lambda_hi;
};

enum class PathTerminal { Optimal, Unbounded };

struct ShadowPath {
    std::vector<PathSegment> segments;
    PathTerminal terminal = PathTerminal::Optimal;
};

// Number of basis exchanges along the path.
int path_pivots(const ShadowPath& path);

// Feasibility slack tolerance used by vertex tests; grows with the vertex
// norm so huge right-hand sides do not drown the check in rounding noise.
inline double feas_tol(double scale, double xnorm) { return 1e-9 * scale * (1.0 + xnorm); }

// True when basis I is simultaneously primal-feasible (its vertex violates
// no row) and dual-feasible for q (q lies in the cone of its rows).
// Requires y > 0; a singular basis is never optimal.
bool is_opt_simp(const LinearProgram& lp, const Vec& q, const Basis& basis);

// Walks bases along q(lambda) from lambda=0 (objective t, optimized by
// `start`) to lambda=1 (objective z). Breakpoints come from the closed-form
// roots of the basis coordinates beta(lambda) = M_I^{-1} q(lambda), which
// are affine in lambda. Leaving index: first coordinate to cross zero;
// entering index: primal ratio test along the edge direction. Ties break
// to the smallest row index. Throws NotOptimalStart when `start` does not
// optimize t, CycleGuard past C(n,d)+1 pivots, DegeneratePivot when an
// exchange produces a singular basis.
std::pair<SolveResult, ShadowPath> polar_shadow_vertex(const LinearProgram& lp, const Basis& start,
                                                       const Vec& t);

}  // namespace shadowlp
