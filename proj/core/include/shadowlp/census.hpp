#pragma once

#include <vector>

#include "shadowlp/lp.hpp"

namespace shadowlp {

// The set of facet bases met by sweeping objectives around a 2D plane.
struct ShadowSet {
    std::vector<Basis> bases;  // sorted lexicographically
    int count() const { return static_cast<int>(bases.size()); }
    bool contains(const Basis& b) const;
};

// Exact census over the plane Span(t, z): a full-rank D-subset I with a
// feasible vertex belongs to the shadow iff some nonzero c_t*t + c_z*z lies
// in the cone of its rows, i.e. the 2D cone {c : c_t*u + c_z*v >= 0} with
// u = M_I^{-1} t, v = M_I^{-1} z is nontrivial. Nontriviality is decided by
// the largest cyclic gap between the constraint angles atan2(v_k, u_k):
// the cone is nontrivial iff the gap reaches pi. Throws DegenerateCone when
// the gap sits within 1e-10 of pi, TooLarge past C(n,D) = 1e6 subsets.
// t and z must be linearly independent, y > 0.
ShadowSet exact_shadow(const std::vector<Vec>& points, const Vec& y, const Vec& t, const Vec& z);

// Discretized census: sweeps q_theta = z sin(theta) + t cos(theta) over the
// grid theta in {2*pi*j/m : j = 1..m} and collects, per direction, the
// unique subset whose cone strictly contains q_theta. Two simultaneous hits
// mean overlapping cone interiors and raise DegenerateCone. Always a subset
// of the exact census; stabilizes to it as m doubles.
ShadowSet discretized_shadow(const std::vector<Vec>& points, const Vec& y, const Vec& t, const Vec& z,
                             int m);

// Exhaustive reference solver: enumerates every d-subset, keeps feasible
// vertices, and certifies optimality by cone membership of z. Unbounded
// when feasible vertices exist but none is certified. Infeasible when no
// feasible vertex exists and A has full column rank (a nonempty region
// would then have a vertex). Throws UnresolvedDegenerate when rank
// deficiency makes the vertex-free cases ambiguous, TooLarge past
// C(n,d) = 1e6.
SolveResult brute_force_solve(const LinearProgram& lp);

}  // namespace shadowlp
