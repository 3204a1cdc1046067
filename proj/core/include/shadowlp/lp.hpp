#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shadowlp/linalg.hpp"

namespace shadowlp {

// max <z,x> subject to <a_i,x> <= y_i, i = 1..n.
struct LinearProgram {
    int n = 0;
    int d = 0;
    std::vector<Vec> a;  // n rows of length d
    Vec y;               // length n
    Vec z;               // length d
};

// Sorted subset of row indices, 1-based to match the file format.
using Basis = std::vector<int>;

enum class LpStatus { Optimal, Unbounded, Infeasible };

const char* status_name(LpStatus s);

struct SolveResult {
    LpStatus status;
    std::optional<Vec> vertex;
    std::optional<Basis> basis;
    std::optional<double> objective;
};

struct GeneralPositionReport {
    double min_subset_smin = 0.0;  // over all d-row submatrices
    double min_slack_gap = 0.0;    // over all (basis vertex, off-basis row) pairs
    double min_zcone_gap = 0.0;    // distance from z to the nearest (d-1)-generator cone
    std::vector<std::vector<int>> degenerate_flags;
};

// Throws ParseError / DimensionMismatch on structural violations
// (n < 1, d < 2, size mismatches, non-finite entries, zero objective).
void validate_lp(const LinearProgram& lp);

// Text format: first data line "n d", then n lines "a_i1 .. a_id y_i",
// then one line "z_1 .. z_d". Lines starting with '#' and blank lines are
// skipped. Accepts LF or CRLF.
LinearProgram read_lp(std::istream& in);
LinearProgram read_lp_file(const std::string& path);

// Writes with 17 significant digits so read_lp(write_lp(lp)) round-trips
// bit-exactly.
void write_lp(std::ostream& out, const LinearProgram& lp);
void write_lp_file(const std::string& path, const LinearProgram& lp);

// max_i |(y_i, a_i)|, the scale that tolerances are relative to.
double instance_scale(const LinearProgram& lp);

// d x d matrix whose rows are a_i for i in basis.
Mat basis_rows(const LinearProgram& lp, const Basis& basis);
// d x d matrix whose columns are a_i for i in basis.
Mat basis_cols(const LinearProgram& lp, const Basis& basis);
Vec y_sub(const LinearProgram& lp, const Basis& basis);
// Solves <a_i,x> = y_i over the basis rows.
Vec vertex_of(const LinearProgram& lp, const Basis& basis);
bool point_feasible(const LinearProgram& lp, const Vec& x, double tol);

// min(C(n,k), cap + 1), saturating instead of overflowing.
unsigned long long binomial_capped(int n, int k, unsigned long long cap);

// 1-based lexicographic k-subset enumeration: {1..k}, then successors.
std::vector<int> first_subset(int k);
bool next_subset(std::vector<int>& idx, int n);

struct GpTolerances {
    double slack_gap = 1e-9;    // times instance scale
    double subset_smin = 1e-12; // times instance scale
    double zcone = 1e-9;        // times |z|
};

// Scans every d-subset for near-singular bases and near-tight off-basis
// rows, and every (d-1)-subset for cones that nearly contain z. Throws
// TooLarge when C(n,d) exceeds 1e6.
GeneralPositionReport check_general_position(const LinearProgram& lp,
                                             const GpTolerances& tol = {});

// JSON rendering of a solve outcome (status, vertex, basis, objective).
std::string solve_result_json(const SolveResult& r);

}  // namespace shadowlp
