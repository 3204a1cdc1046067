#include "shadowlp/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace shadowlp {

Mat mat_from_rows(const std::vector<Vec>& rows) {
    assert(!rows.empty());
    Mat m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows; ++i) {
        assert(static_cast<int>(rows[i].size()) == m.cols);
        for (int j = 0; j < m.cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat mat_from_cols(const std::vector<Vec>& cols) {
    assert(!cols.empty());
    Mat m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols; ++j) {
        assert(static_cast<int>(cols[j].size()) == m.rows);
        for (int i = 0; i < m.rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Mat transpose(const Mat& m) {
    Mat t(m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

Vec mat_vec(const Mat& m, const Vec& x) {
    assert(static_cast<int>(x.size()) == m.cols);
    Vec y(m.rows, 0.0);
    for (int i = 0; i < m.rows; ++i) {
        double s = 0;
        for (int j = 0; j < m.cols; ++j) s += m.at(i, j) * x[j];
        y[i] = s;
    }
    return y;
}

double dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double vec_norm(const Vec& v) { return std::sqrt(dot(v, v)); }

bool all_finite(const Vec& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

bool all_finite(const Mat& m) {
    for (double x : m.data)
        if (!std::isfinite(x)) return false;
    return true;
}

namespace {

// Orthogonalizes the columns of a in place (one-sided Jacobi). When v is
// non-null it accumulates the applied rotations so that a_in * v = a_out.
void jacobi_columns(Mat& a, Mat* v) {
    const int m = a.rows, n = a.cols;
    const double tol = 1e-12;
    if (v) {
        *v = Mat(n, n);
        for (int i = 0; i < n; ++i) v->at(i, i) = 1.0;
    }
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double app = 0, aqq = 0, apq = 0;
                for (int i = 0; i < m; ++i) {
                    const double x = a.at(i, p), y = a.at(i, q);
                    app += x * x;
                    aqq += y * y;
                    apq += x * y;
                }
                if (std::abs(apq) <= tol * std::sqrt(app * aqq)) continue;
                rotated = true;
                const double tau = (aqq - app) / (2.0 * apq);
                const double t = tau >= 0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                          : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int i = 0; i < m; ++i) {
                    const double x = a.at(i, p), y = a.at(i, q);
                    a.at(i, p) = c * x - s * y;
                    a.at(i, q) = s * x + c * y;
                }
                if (v) {
                    for (int i = 0; i < n; ++i) {
                        const double x = v->at(i, p), y = v->at(i, q);
                        v->at(i, p) = c * x - s * y;
                        v->at(i, q) = s * x + c * y;
                    }
                }
            }
        }
        if (!rotated) break;
    }
}

double col_norm(const Mat& a, int j) {
    double s = 0;
    for (int i = 0; i < a.rows; ++i) s += a.at(i, j) * a.at(i, j);
    return std::sqrt(s);
}

}  // namespace

std::vector<double> singular_values(Mat a) {
    assert(a.rows > 0 && a.cols > 0);
    if (a.rows < a.cols) a = transpose(a);
    jacobi_columns(a, nullptr);
    std::vector<double> sv(a.cols);
    for (int j = 0; j < a.cols; ++j) sv[j] = col_norm(a, j);
    std::sort(sv.rbegin(), sv.rend());
    return sv;
}

double mat_norm(const Mat& a) { return singular_values(a).front(); }

double smin(const Mat& a) {
    assert(a.rows == a.cols);
    return singular_values(a).back();
}

Vec solve_square(const Mat& a, const Vec& b) {
    assert(a.rows == a.cols);
    assert(static_cast<int>(b.size()) == a.rows);
    const int n = a.rows;
    const double threshold = 1e-13 * mat_norm(a);

    Mat w = a;
    Vec rhs = b;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(w.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double cand = std::abs(w.at(i, k));
            if (cand > best) {
                best = cand;
                piv = i;
            }
        }
        if (best <= threshold) throw SingularSystem();
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(piv, j));
            std::swap(rhs[k], rhs[piv]);
        }
        const double inv = 1.0 / w.at(k, k);
        for (int i = k + 1; i < n; ++i) {
            const double f = w.at(i, k) * inv;
            if (f == 0.0) continue;
            w.at(i, k) = 0.0;
            for (int j = k + 1; j < n; ++j) w.at(i, j) -= f * w.at(k, j);
            rhs[i] -= f * rhs[k];
        }
    }

    Vec x(n);
    for (int i = n - 1; i >= 0; --i) {
        double s = rhs[i];
        for (int j = i + 1; j < n; ++j) s -= w.at(i, j) * x[j];
        x[i] = s / w.at(i, i);
    }
    return x;
}

LeastSquares least_squares(const Mat& a, const Vec& b) {
    assert(a.rows >= a.cols);
    assert(static_cast<int>(b.size()) == a.rows);
    Mat w = a;
    Mat v;
    jacobi_columns(w, &v);

    std::vector<double> sv(w.cols);
    double smax = 0;
    for (int j = 0; j < w.cols; ++j) {
        sv[j] = col_norm(w, j);
        smax = std::max(smax, sv[j]);
    }
    const double cutoff = 1e-12 * smax;

    // a = W V^T with W = w having orthogonal columns; project b onto the
    // non-negligible columns and pull coefficients back through V.
    Vec c(w.cols, 0.0);
    for (int j = 0; j < w.cols; ++j) {
        if (sv[j] <= cutoff) continue;
        double p = 0;
        for (int i = 0; i < w.rows; ++i) p += w.at(i, j) * b[i];
        c[j] = p / (sv[j] * sv[j]);
    }
    Vec x = mat_vec(v, c);
    Vec r = mat_vec(a, x);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return {x, vec_norm(r)};
}

std::optional<Vec> cone_membership(const Mat& columns, const Vec& q) {
    Vec lambda = solve_square(columns, q);
    const double s = smin(columns);
    const double tol = 1e-9 * vec_norm(q) / std::max(s, 1e-300);
    for (double& l : lambda) {
        if (l < -tol) return std::nullopt;
        if (l < 0.0) l = 0.0;
    }
    return lambda;
}

}  // namespace shadowlp
