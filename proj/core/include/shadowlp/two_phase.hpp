#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shadowlp/lp.hpp"
#include "shadowlp/rng.hpp"
#include "shadowlp/shadow_vertex.hpp"

namespace shadowlp {

// Lifted program in d+1 variables. Row index space is {-1, 0, 1..n}:
// position p in `rows` holds index p-1, so rows[0] is index -1 (the floor
// -x0 <= 1), rows[1] is index 0 (the gate x0 <= 1) and rows[k+1] is the
// lifted copy of original row k.
struct LpPlus {
    std::vector<Vec> rows;
    Vec y_plus;
    Vec z_plus;

    static int position(int index) { return index + 1; }
    static int index_at(int position) { return position - 1; }
};

struct TwoPhaseTrace {
    std::vector<Basis> shortlist;
    Basis chosen_I;
    double kappa = 0.0;
    double M = 0.0;
    Vec alpha;
    Vec t0;
    Vec y_prime;
    std::optional<Basis> J;              // phase-1 solution basis
    std::optional<double> zeta;
    std::optional<std::vector<int>> K;   // phase-2 basis, indices in {-1,0,1..n}
    std::optional<double> x0;
    int phase1_pivots = 0;
    int phase2_pivots = 0;

    // Kept for diagnostics and invariant checks; not part of the JSON form.
    ShadowPath phase1_path;
    ShadowPath phase2_path;
};

struct ChosenBasis {
    Basis basis;
    double smin_value = 0.0;
    std::vector<Basis> shortlist;
};

// Draws ceil(3*n*d*ln n) random d-subsets and keeps the one whose row
// matrix has the largest smallest singular value (first drawn wins ties).
// Throws AllSingular when every candidate is below 1e-13 * scale.
ChosenBasis choose_basis(const LinearProgram& lp, RngStream& stream);

struct LpPrime {
    LinearProgram lp;   // same rows and objective, inflated rhs
    double kappa = 0.0; // 2^floor(lg smin(A_I))
    double M = 0.0;     // 2^(ceil(lg max_i |(y_i, a_i)|) + 2)
    Vec y_prime;
};

// Replaces the rhs so that basis I optimizes any strictly positive
// combination of its rows: y'_i = M on the basis, sqrt(d) M^2 / (4 kappa)
// off it.
LpPrime build_lp_prime(const LinearProgram& lp, const Basis& basis_I);

// Lifts the phase-1 program into d+1 dims: row i becomes
// ((y'_i - y_i)/2, a_i) with rhs (y'_i + y_i)/2, plus the gate rows
// -1 and 0 that clamp x0 to [-1, 1]. Maximizing x0 decides feasibility.
// Throws NonPositiveYPlus if any lifted rhs fails to be positive.
LpPlus build_lp_plus(const LinearProgram& lp, const Vec& y_prime);

// Rows scaled to rhs 1 (a+_i / y+_i), objective z+; the form the walk runs on.
LinearProgram normalized_program(const LpPlus& plus);

// Interpolation weight zeta > 0 such that {-1} union J optimizes (-zeta, z)
// on the lifted program. Constructive value first (zeta0 from the cone
// coefficients of z at J, then max(2*zeta0, 1)), verified by the optimality
// test and doubled on failure. Throws ZetaSearchFailed after 60 doublings.
double find_zeta(const LpPlus& plus, const Vec& z, const Basis& basis_J);

// Full pipeline: random basis shortlist, phase-1 walk on the inflated
// program (unbounded there means unbounded overall), lift, phase-2 walk
// maximizing the gate coordinate, then read feasibility off x0.
// Consumes the stream in the order: shortlist draw, then alpha draw.
std::pair<SolveResult, TwoPhaseTrace> two_phase_solve(const LinearProgram& lp, RngStream& stream);

// JSON with exactly the trace fields above (paths excluded); absent
// optionals serialize as null.
std::string trace_json(const TwoPhaseTrace& trace);

}  // namespace shadowlp
