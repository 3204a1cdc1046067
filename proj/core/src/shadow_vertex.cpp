#include "shadowlp/shadow_vertex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace shadowlp {

int path_pivots(const ShadowPath& path) { return static_cast<int>(path.segments.size()) - 1; }

bool is_opt_simp(const LinearProgram& lp, const Vec& q, const Basis& basis) {
    for (double yi : lp.y)
        if (yi <= 0.0) throw Error("is_opt_simp requires y > 0");
    if (static_cast<int>(basis.size()) != lp.d) return false;

    Vec x;
    try {
        x = vertex_of(lp, basis);
    } catch (const SingularSystem&) {
        return false;
    }
    const double tol = feas_tol(instance_scale(lp), vec_norm(x));
    if (!point_feasible(lp, x, tol)) return false;

    try {
        return cone_membership(basis_cols(lp, basis), q).has_value();
    } catch (const SingularSystem&) {
        return false;
    }
}

std::pair<SolveResult, ShadowPath> polar_shadow_vertex(const LinearProgram& lp, const Basis& start,
                                                       const Vec& t) {
    for (double yi : lp.y)
        if (yi <= 0.0) throw Error("polar_shadow_vertex requires y > 0");
    if (vec_norm(t) == 0.0) throw Error("start objective is zero");
    if (!is_opt_simp(lp, t, start)) throw NotOptimalStart();

    const unsigned long long max_pivots =
        binomial_capped(lp.n, lp.d, std::numeric_limits<long long>::max() - 2) + 1;

    ShadowPath path;
    Basis basis = start;
    double lambda = 0.0;
    unsigned long long pivots = 0;

    for (;;) {
        Vec u, v;
        try {
            Mat cols = basis_cols(lp, basis);
            u = solve_square(cols, t);
            v = solve_square(cols, lp.z);
        } catch (const SingularSystem&) {
            throw DegeneratePivot("pivot produced a singular basis");
        }

        // beta(l) = (1-l) u + l v per coordinate; an exit happens where a
        // coordinate crosses zero heading negative, i.e. v_k < 0.
        const double exit_tol = 1e-10 * vec_norm(v);
        int leave_pos = -1;
        double lambda_next = std::numeric_limits<double>::infinity();
        for (int k = 0; k < lp.d; ++k) {
            if (v[k] >= -exit_tol) continue;
            double root = u[k] / (u[k] - v[k]);
            root = std::min(1.0, std::max(root, lambda));
            if (root < lambda_next) {
                lambda_next = root;
                leave_pos = k;
            }
        }

        if (leave_pos < 0) {
            path.segments.push_back({basis, lambda, 1.0});
            path.terminal = PathTerminal::Optimal;
            Vec x = vertex_of(lp, basis);
            SolveResult res{LpStatus::Optimal, x, basis, dot(lp.z, x)};
            return {res, path};
        }

        path.segments.push_back({basis, lambda, lambda_next});

        // Edge direction: stay tight on every basis row except the leaver.
        Vec rhs(lp.d, 0.0);
        rhs[leave_pos] = -1.0;
        Vec w;
        try {
            w = solve_square(basis_rows(lp, basis), rhs);
        } catch (const SingularSystem&) {
            throw DegeneratePivot("edge direction system is singular");
        }
        const Vec x = vertex_of(lp, basis);
        const double wnorm = vec_norm(w);

        int enter = -1;
        double best_step = std::numeric_limits<double>::infinity();
        size_t pos = 0;
        for (int j = 1; j <= lp.n; ++j) {
            if (pos < basis.size() && basis[pos] == j) {
                ++pos;
                continue;
            }
            const Vec& aj = lp.a[j - 1];
            const double g = dot(aj, w);
            if (g <= 1e-12 * vec_norm(aj) * wnorm) continue;
            const double step = std::max(0.0, (lp.y[j - 1] - dot(aj, x)) / g);
            if (step < best_step) {
                best_step = step;
                enter = j;
            }
        }

        if (enter < 0) {
            path.terminal = PathTerminal::Unbounded;
            SolveResult res{LpStatus::Unbounded, std::nullopt, std::nullopt, std::nullopt};
            return {res, path};
        }

        basis[leave_pos] = enter;
        std::sort(basis.begin(), basis.end());
        lambda = lambda_next;
        if (++pivots > max_pivots) throw CycleGuard();
    }
}

}  // namespace shadowlp
