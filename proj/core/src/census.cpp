#include "shadowlp/census.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "shadowlp/shadow_vertex.hpp"

namespace shadowlp {

bool ShadowSet::contains(const Basis& b) const {
    return std::binary_search(bases.begin(), bases.end(), b);
}

namespace {

constexpr unsigned long long kSubsetGuard = 1000000ULL;
constexpr double kPi = 3.14159265358979323846;

void check_census_inputs(const std::vector<Vec>& points, const Vec& y, const Vec& t, const Vec& z) {
    if (points.empty()) throw Error("census needs at least one point");
    const int dim = static_cast<int>(points[0].size());
    if (static_cast<int>(y.size()) != static_cast<int>(points.size()))
        throw DimensionMismatch("census y length does not match point count");
    for (const Vec& p : points)
        if (static_cast<int>(p.size()) != dim) throw DimensionMismatch("census points have mixed dimensions");
    for (double yi : y)
        if (yi <= 0.0) throw Error("census requires y > 0");
    const double tn = vec_norm(t), zn = vec_norm(z);
    if (static_cast<int>(t.size()) != dim || static_cast<int>(z.size()) != dim)
        throw DimensionMismatch("plane vectors do not match point dimension");
    // independence: area of the (t, z) parallelogram relative to |t||z|
    const double g = dot(t, z);
    const double area2 = tn * tn * zn * zn - g * g;
    if (!(area2 > 1e-20 * tn * tn * zn * zn)) throw Error("census plane vectors are linearly dependent");
    if (binomial_capped(static_cast<int>(points.size()), dim, kSubsetGuard) > kSubsetGuard)
        throw TooLarge("C(n,d) exceeds 1e6, refusing census enumeration");
}

// Largest cyclic gap between the angles of the nonzero (u_k, v_k) pairs.
// The 2D cone {c : c_t u + c_z v >= 0} is nontrivial iff the gap reaches pi.
double largest_angle_gap(const Vec& u, const Vec& v) {
    const double tiny = 1e-14 * (vec_norm(u) + vec_norm(v));
    std::vector<double> ang;
    ang.reserve(u.size());
    for (size_t k = 0; k < u.size(); ++k) {
        if (std::abs(u[k]) <= tiny && std::abs(v[k]) <= tiny) continue;
        ang.push_back(std::atan2(v[k], u[k]));
    }
    if (ang.empty()) throw DegenerateCone("plane coefficients vanish on every generator");
    std::sort(ang.begin(), ang.end());
    double gap = ang.front() + 2.0 * kPi - ang.back();
    for (size_t i = 1; i < ang.size(); ++i) gap = std::max(gap, ang[i] - ang[i - 1]);
    return gap;
}

struct SubsetScan {
    Basis basis;
    Vec u, v;
    double smin_cols;
};

// Facet-passing subsets with their plane coordinates u = M_I^{-1} t,
// v = M_I^{-1} z precomputed.
std::vector<SubsetScan> scan_facets(const std::vector<Vec>& points, const Vec& y, const Vec& t,
                                    const Vec& z, bool with_smin) {
    const int n = static_cast<int>(points.size());
    const int dim = static_cast<int>(points[0].size());
    LinearProgram view{n, dim, points, y, z};
    const double scale = instance_scale(view);

    std::vector<SubsetScan> out;
    if (n < dim) return out;
    Basis idx = first_subset(dim);
    do {
        Vec x;
        try {
            x = vertex_of(view, idx);
        } catch (const SingularSystem&) {
            continue;
        }
        if (!point_feasible(view, x, feas_tol(scale, vec_norm(x)))) continue;
        Mat cols = basis_cols(view, idx);
        Vec u, v;
        try {
            u = solve_square(cols, t);
            v = solve_square(cols, z);
        } catch (const SingularSystem&) {
            continue;
        }
        out.push_back({idx, std::move(u), std::move(v), with_smin ? smin(cols) : 0.0});
    } while (next_subset(idx, n));
    return out;
}

}  // namespace

ShadowSet exact_shadow(const std::vector<Vec>& points, const Vec& y, const Vec& t, const Vec& z) {
    check_census_inputs(points, y, t, z);
    ShadowSet shadow;
    for (const SubsetScan& s : scan_facets(points, y, t, z, false)) {
        const double gap = largest_angle_gap(s.u, s.v);
        if (std::abs(gap - kPi) <= 1e-10)
            throw DegenerateCone("plane cone sits within 1e-10 of the boundary case");
        if (gap > kPi) shadow.bases.push_back(s.basis);
    }
    return shadow;
}

ShadowSet discretized_shadow(const std::vector<Vec>& points, const Vec& y, const Vec& t, const Vec& z,
                             int m) {
    check_census_inputs(points, y, t, z);
    if (m < 1) throw Error("grid size must be >= 1");
    std::vector<SubsetScan> scans = scan_facets(points, y, t, z, true);

    const double tt = dot(t, t), zz = dot(z, z), tz = dot(t, z);
    std::vector<char> hit(scans.size(), 0);
    for (int j = 1; j <= m; ++j) {
        const double theta = 2.0 * kPi * j / m;
        const double ct = std::cos(theta), cz = std::sin(theta);
        const double qnorm = std::sqrt(std::max(0.0, ct * ct * tt + cz * cz * zz + 2.0 * ct * cz * tz));
        int found = -1;
        for (size_t s = 0; s < scans.size(); ++s) {
            const double tol = 1e-9 * qnorm / std::max(scans[s].smin_cols, 1e-300);
            bool inside = true;
            for (size_t k = 0; k < scans[s].u.size(); ++k) {
                if (ct * scans[s].u[k] + cz * scans[s].v[k] < tol) {
                    inside = false;
                    break;
                }
            }
            if (!inside) continue;
            if (found >= 0)
                throw DegenerateCone("two subsets optimize the same grid direction");
            found = static_cast<int>(s);
        }
        if (found >= 0) hit[found] = 1;
    }

    ShadowSet shadow;
    for (size_t s = 0; s < scans.size(); ++s)
        if (hit[s]) shadow.bases.push_back(scans[s].basis);
    return shadow;
}

SolveResult brute_force_solve(const LinearProgram& lp) {
    if (binomial_capped(lp.n, lp.d, kSubsetGuard) > kSubsetGuard)
        throw TooLarge("C(n,d) exceeds 1e6, refusing brute-force enumeration");
    const double scale = instance_scale(lp);

    bool any_feasible = false;
    double best_feasible_obj = -std::numeric_limits<double>::infinity();
    bool have_certified = false;
    double best_certified_obj = -std::numeric_limits<double>::infinity();
    Vec best_vertex;
    Basis best_basis;

    if (lp.n >= lp.d) {
        Basis idx = first_subset(lp.d);
        do {
            Vec x;
            try {
                x = vertex_of(lp, idx);
            } catch (const SingularSystem&) {
                continue;
            }
            if (!point_feasible(lp, x, feas_tol(scale, vec_norm(x)))) continue;
            any_feasible = true;
            const double obj = dot(lp.z, x);
            best_feasible_obj = std::max(best_feasible_obj, obj);
            bool certified;
            try {
                certified = cone_membership(basis_cols(lp, idx), lp.z).has_value();
            } catch (const SingularSystem&) {
                certified = false;
            }
            if (certified && (!have_certified || obj > best_certified_obj)) {
                have_certified = true;
                best_certified_obj = obj;
                best_vertex = x;
                best_basis = idx;
            }
        } while (next_subset(idx, lp.n));
    }

    if (have_certified) {
        if (best_feasible_obj > best_certified_obj + 1e-6 * (1.0 + std::abs(best_certified_obj)))
            throw UnresolvedDegenerate("a feasible vertex beats every certified optimum");
        return {LpStatus::Optimal, best_vertex, best_basis, best_certified_obj};
    }
    if (any_feasible) return {LpStatus::Unbounded, std::nullopt, std::nullopt, std::nullopt};

    // No feasible vertex. A nonempty region with rank-d constraints would
    // have one, so full rank certifies infeasibility.
    Mat full(lp.n, lp.d);
    for (int i = 0; i < lp.n; ++i)
        for (int j = 0; j < lp.d; ++j) full.at(i, j) = lp.a[i][j];
    std::vector<double> sv = singular_values(full);
    const bool full_rank = lp.n >= lp.d && sv[lp.d - 1] > 1e-12 * std::max(sv[0], 1e-300);
    if (full_rank) return {LpStatus::Infeasible, std::nullopt, std::nullopt, std::nullopt};
    throw UnresolvedDegenerate("no feasible vertex and rank-deficient constraints");
}

}  // namespace shadowlp
