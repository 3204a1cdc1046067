#include "shadowlp/two_phase.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

namespace shadowlp {

namespace {

// floor(lg x) for x > 0, exact even when x is a power of two.
int floor_lg(double x) { return std::ilogb(x); }

// ceil(lg x): floor plus one unless x is an exact power of two.
int ceil_lg(double x) {
    const int e = std::ilogb(x);
    return std::ldexp(1.0, e) == x ? e : e + 1;
}

}  // namespace

ChosenBasis choose_basis(const LinearProgram& lp, RngStream& stream) {
    if (lp.n < lp.d) throw Error("need at least d rows to pick a basis");
    const int count = static_cast<int>(std::ceil(3.0 * lp.n * lp.d * std::log(lp.n)));
    ChosenBasis out;
    out.shortlist = sample_dsets(stream, lp.n, lp.d, std::max(count, 1));
    out.smin_value = -1.0;
    for (const Basis& cand : out.shortlist) {
        const double s = smin(basis_rows(lp, cand));
        if (s > out.smin_value) {
            out.smin_value = s;
            out.basis = cand;
        }
    }
    if (out.smin_value <= 1e-13 * instance_scale(lp))
        throw AllSingular("every shortlisted basis is numerically singular");
    return out;
}

LpPrime build_lp_prime(const LinearProgram& lp, const Basis& basis_I) {
    LpPrime out;
    out.kappa = std::ldexp(1.0, floor_lg(smin(basis_rows(lp, basis_I))));
    out.M = std::ldexp(1.0, ceil_lg(instance_scale(lp)) + 2);
    const double off = std::sqrt(static_cast<double>(lp.d)) * out.M * out.M / (4.0 * out.kappa);
    out.y_prime.assign(lp.n, off);
    for (int i : basis_I) out.y_prime[i - 1] = out.M;
    out.lp = lp;
    out.lp.y = out.y_prime;
    return out;
}

LpPlus build_lp_plus(const LinearProgram& lp, const Vec& y_prime) {
    LpPlus plus;
    plus.rows.reserve(lp.n + 2);
    plus.y_plus.reserve(lp.n + 2);

    Vec floor_row(lp.d + 1, 0.0), gate_row(lp.d + 1, 0.0);
    floor_row[0] = -1.0;
    gate_row[0] = 1.0;
    plus.rows.push_back(floor_row);  // index -1
    plus.y_plus.push_back(1.0);
    plus.rows.push_back(gate_row);   // index 0
    plus.y_plus.push_back(1.0);

    for (int i = 0; i < lp.n; ++i) {
        Vec row(lp.d + 1);
        row[0] = (y_prime[i] - lp.y[i]) / 2.0;
        for (int j = 0; j < lp.d; ++j) row[j + 1] = lp.a[i][j];
        plus.rows.push_back(std::move(row));
        const double yp = (y_prime[i] + lp.y[i]) / 2.0;
        if (yp <= 0.0) throw NonPositiveYPlus("lifted rhs is not positive at row " + std::to_string(i + 1));
        plus.y_plus.push_back(yp);
    }

    plus.z_plus.assign(lp.d + 1, 0.0);
    plus.z_plus[0] = 1.0;
    return plus;
}

LinearProgram normalized_program(const LpPlus& plus) {
    LinearProgram norm;
    norm.n = static_cast<int>(plus.rows.size());
    norm.d = static_cast<int>(plus.z_plus.size());
    norm.a.reserve(norm.n);
    for (int p = 0; p < norm.n; ++p) {
        Vec row = plus.rows[p];
        for (double& v : row) v /= plus.y_plus[p];
        norm.a.push_back(std::move(row));
    }
    norm.y.assign(norm.n, 1.0);
    norm.z = plus.z_plus;
    return norm;
}

double find_zeta(const LpPlus& plus, const Vec& z, const Basis& basis_J) {
    const int d = static_cast<int>(z.size());

    // alpha solves z = sum_{i in J} alpha_i a_i; the same combination of
    // lifted rows then fixes the plane coordinate zeta0.
    std::vector<Vec> cols;
    cols.reserve(basis_J.size());
    for (int i : basis_J) {
        const Vec& lifted = plus.rows[LpPlus::position(i)];
        cols.emplace_back(lifted.begin() + 1, lifted.end());
    }
    Vec alpha = solve_square(mat_from_cols(cols), z);
    double zeta0 = 0.0;
    for (size_t k = 0; k < basis_J.size(); ++k) zeta0 -= alpha[k] * plus.rows[LpPlus::position(basis_J[k])][0];

    const LinearProgram norm = normalized_program(plus);
    Basis start;
    start.push_back(LpPlus::position(-1) + 1);  // 1-based row of index -1
    for (int i : basis_J) start.push_back(LpPlus::position(i) + 1);
    std::sort(start.begin(), start.end());

    double zeta = std::max(2.0 * zeta0, 1.0);
    for (int attempt = 0; attempt < 60; ++attempt) {
        Vec q(d + 1);
        q[0] = -zeta;
        for (int j = 0; j < d; ++j) q[j + 1] = z[j];
        if (is_opt_simp(norm, q, start)) return zeta;
        zeta *= 2.0;
    }
    throw ZetaSearchFailed("no interpolation weight passed the optimality test");
}

std::pair<SolveResult, TwoPhaseTrace> two_phase_solve(const LinearProgram& lp, RngStream& stream) {
    validate_lp(lp);
    TwoPhaseTrace trace;

    ChosenBasis chosen = choose_basis(lp, stream);
    trace.shortlist = std::move(chosen.shortlist);
    trace.chosen_I = chosen.basis;

    LpPrime prime = build_lp_prime(lp, trace.chosen_I);
    trace.kappa = prime.kappa;
    trace.M = prime.M;
    trace.y_prime = prime.y_prime;
    if (std::sqrt(static_cast<double>(lp.d)) * prime.M / (4.0 * prime.kappa) < 1.0)
        throw Error("scale separation sqrt(d) M / (4 kappa) >= 1 failed");

    trace.alpha = sample_alpha(stream, lp.d);
    trace.t0 = mat_vec(basis_cols(lp, trace.chosen_I), trace.alpha);

    auto [phase1, path1] = polar_shadow_vertex(prime.lp, trace.chosen_I, trace.t0);
    trace.phase1_path = path1;
    trace.phase1_pivots = path_pivots(path1);
    if (phase1.status == LpStatus::Unbounded)
        return {SolveResult{LpStatus::Unbounded, std::nullopt, std::nullopt, std::nullopt}, trace};

    trace.J = *phase1.basis;
    LpPlus plus = build_lp_plus(lp, prime.y_prime);
    trace.zeta = find_zeta(plus, lp.z, *trace.J);

    const LinearProgram norm = normalized_program(plus);
    Basis start;
    start.push_back(LpPlus::position(-1) + 1);
    for (int i : *trace.J) start.push_back(LpPlus::position(i) + 1);
    std::sort(start.begin(), start.end());

    Vec t_plus(lp.d + 1);
    t_plus[0] = -*trace.zeta;
    for (int j = 0; j < lp.d; ++j) t_plus[j + 1] = lp.z[j];

    auto [phase2, path2] = polar_shadow_vertex(norm, start, t_plus);
    trace.phase2_path = path2;
    trace.phase2_pivots = path_pivots(path2);
    if (phase2.status != LpStatus::Optimal)
        throw DegeneratePivot("lifted walk failed to terminate at a gate vertex");

    std::vector<int> K;
    for (int pos : *phase2.basis) K.push_back(LpPlus::index_at(pos - 1));
    std::sort(K.begin(), K.end());
    trace.K = K;

    // Vertex of the unnormalized lifted rows over K.
    std::vector<Vec> rows;
    Vec rhs;
    for (int idx : K) {
        rows.push_back(plus.rows[LpPlus::position(idx)]);
        rhs.push_back(plus.y_plus[LpPlus::position(idx)]);
    }
    Vec lifted = solve_square(mat_from_rows(rows), rhs);
    trace.x0 = lifted[0];

    if (lifted[0] < 1.0 - 1e-9)
        return {SolveResult{LpStatus::Infeasible, std::nullopt, std::nullopt, std::nullopt}, trace};

    if (std::find(K.begin(), K.end(), 0) == K.end())
        throw DegeneratePivot("gate coordinate saturated without the gate row tight");
    Basis final_basis;
    for (int idx : K)
        if (idx >= 1) final_basis.push_back(idx);
    Vec x(lifted.begin() + 1, lifted.end());
    return {SolveResult{LpStatus::Optimal, x, final_basis, dot(lp.z, x)}, trace};
}

std::string trace_json(const TwoPhaseTrace& trace) {
    nlohmann::ordered_json j;
    j["shortlist"] = trace.shortlist;
    j["chosen_I"] = trace.chosen_I;
    j["kappa"] = trace.kappa;
    j["M"] = trace.M;
    j["alpha"] = trace.alpha;
    j["t0"] = trace.t0;
    j["y_prime"] = trace.y_prime;
    j["J"] = trace.J ? nlohmann::ordered_json(*trace.J) : nlohmann::ordered_json(nullptr);
    j["zeta"] = trace.zeta ? nlohmann::ordered_json(*trace.zeta) : nlohmann::ordered_json(nullptr);
    j["K"] = trace.K ? nlohmann::ordered_json(*trace.K) : nlohmann::ordered_json(nullptr);
    j["x0"] = trace.x0 ? nlohmann::ordered_json(*trace.x0) : nlohmann::ordered_json(nullptr);
    j["phase1_pivots"] = trace.phase1_pivots;
    j["phase2_pivots"] = trace.phase2_pivots;
    return j.dump();
}

}  // namespace shadowlp
