#pragma once

#include <optional>
#include <vector>

#include "shadowlp/errors.hpp"

namespace shadowlp {

using Vec = std::vector<double>;

// Dense row-major matrix. Dimensions are fixed at construction.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

    double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }
};

Mat mat_from_rows(const std::vector<Vec>& rows);
Mat mat_from_cols(const std::vector<Vec>& cols);
Mat transpose(const Mat& m);
Vec mat_vec(const Mat& m, const Vec& x);

double dot(const Vec& a, const Vec& b);
double vec_norm(const Vec& v);
bool all_finite(const Vec& v);
bool all_finite(const Mat& m);

// All singular values, descending. Uses one-sided Jacobi orthogonalization,
// which keeps full accuracy on (near-)singular inputs where forming the
// Gram matrix explicitly would floor the smallest value near sqrt(eps).
std::vector<double> singular_values(Mat a);

// Largest singular value.
double mat_norm(const Mat& a);

// Smallest singular value of a square matrix. An exactly singular input
// must come back below 1e-12 * mat_norm(a).
double smin(const Mat& a);

// Gaussian elimination with partial pivoting. Throws SingularSystem when
// the best available pivot falls below 1e-13 * mat_norm(a).
Vec solve_square(const Mat& a, const Vec& b);

// Least squares min |a*x - b| via Jacobi orthogonalization; returns the
// minimum-norm solution and the residual norm. Requires a.rows >= a.cols.
struct LeastSquares {
    Vec x;
    double residual;
};
LeastSquares least_squares(const Mat& a, const Vec& b);

// Coefficients lambda >= 0 with columns * lambda = q, if q lies in the cone
// spanned by the columns. Tolerance scales with the conditioning of the
// generator matrix: tol = 1e-9 * |q| / max(smin(columns), eps). Entries in
// [-tol, 0) are clamped to 0. Rank-deficient columns throw SingularSystem.
std::optional<Vec> cone_membership(const Mat& columns, const Vec& q);

}  // namespace shadowlp
