#include "shadowlp/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace shadowlp {

const char* status_name(LpStatus s) {
    switch (s) {
        case LpStatus::Optimal: return "Optimal";
        case LpStatus::Unbounded: return "Unbounded";
        case LpStatus::Infeasible: return "Infeasible";
    }
    return "Unknown";
}

void validate_lp(const LinearProgram& lp) {
    if (lp.n < 1) throw ParseError("n must be >= 1");
    if (lp.d < 2) throw ParseError("d must be >= 2");
    if (static_cast<int>(lp.a.size()) != lp.n)
        throw DimensionMismatch("row count " + std::to_string(lp.a.size()) +
                                " does not match n=" + std::to_string(lp.n));
    for (const Vec& row : lp.a) {
        if (static_cast<int>(row.size()) != lp.d)
            throw DimensionMismatch("row width does not match d=" + std::to_string(lp.d));
        if (!all_finite(row)) throw ParseError("non-finite constraint entry");
    }
    if (static_cast<int>(lp.y.size()) != lp.n)
        throw DimensionMismatch("rhs length does not match n=" + std::to_string(lp.n));
    if (!all_finite(lp.y)) throw ParseError("non-finite rhs entry");
    if (static_cast<int>(lp.z.size()) != lp.d)
        throw DimensionMismatch("objective length does not match d=" + std::to_string(lp.d));
    if (!all_finite(lp.z)) throw ParseError("non-finite objective entry");
    if (vec_norm(lp.z) == 0.0) throw ParseError("objective vector is zero");
}

namespace {

struct DataLine {
    std::string text;
    int number;
};

std::vector<DataLine> data_lines(std::istream& in) {
    std::vector<DataLine> out;
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        out.push_back({line, number});
    }
    return out;
}

std::vector<double> parse_numbers(const DataLine& dl) {
    std::vector<double> vals;
    const char* p = dl.text.c_str();
    while (*p) {
        while (*p == ' ' || *p == '\t') ++p;
        if (!*p) break;
        char* end = nullptr;
        double v = std::strtod(p, &end);
        if (end == p) throw ParseError("invalid number near '" + std::string(p).substr(0, 16) + "'", dl.number);
        if (!std::isfinite(v)) throw ParseError("non-finite value", dl.number);
        if (*end && *end != ' ' && *end != '\t')
            throw ParseError("invalid number near '" + std::string(p).substr(0, 16) + "'", dl.number);
        vals.push_back(v);
        p = end;
    }
    return vals;
}

long parse_int(const std::vector<double>& vals, size_t i, const DataLine& dl) {
    double v = vals[i];
    if (v != std::floor(v) || std::abs(v) > 1e9) throw ParseError("expected an integer", dl.number);
    return static_cast<long>(v);
}

}  // namespace

LinearProgram read_lp(std::istream& in) {
    std::vector<DataLine> lines = data_lines(in);
    if (lines.empty()) throw ParseError("empty input");

    std::vector<double> header = parse_numbers(lines[0]);
    if (header.size() != 2) throw ParseError("expected header 'n d'", lines[0].number);
    long n = parse_int(header, 0, lines[0]);
    long d = parse_int(header, 1, lines[0]);
    if (n < 1) throw ParseError("n must be >= 1", lines[0].number);
    if (d < 2) throw ParseError("d must be >= 2", lines[0].number);

    if (static_cast<long>(lines.size()) < n + 2)
        throw DimensionMismatch("expected " + std::to_string(n) + " constraint rows plus an objective line, found " +
                                std::to_string(lines.size() - 1) + " data lines after the header");
    if (static_cast<long>(lines.size()) > n + 2)
        throw ParseError("unexpected trailing content", lines[n + 2].number);

    LinearProgram lp;
    lp.n = static_cast<int>(n);
    lp.d = static_cast<int>(d);
    for (long i = 1; i <= n; ++i) {
        std::vector<double> vals = parse_numbers(lines[i]);
        if (static_cast<long>(vals.size()) != d + 1)
            throw ParseError("expected " + std::to_string(d + 1) + " numbers in constraint row, found " +
                                 std::to_string(vals.size()),
                             lines[i].number);
        lp.y.push_back(vals.back());
        vals.pop_back();
        lp.a.push_back(std::move(vals));
    }
    std::vector<double> zvals = parse_numbers(lines[n + 1]);
    if (static_cast<long>(zvals.size()) != d)
        throw ParseError("expected " + std::to_string(d) + " objective entries, found " + std::to_string(zvals.size()),
                         lines[n + 1].number);
    lp.z = std::move(zvals);
    if (vec_norm(lp.z) == 0.0) throw ParseError("objective vector is zero", lines[n + 1].number);
    validate_lp(lp);
    return lp;
}

LinearProgram read_lp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return read_lp(in);
}

namespace {

void write_value(std::ostream& out, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out << buf;
}

}  // namespace

void write_lp(std::ostream& out, const LinearProgram& lp) {
    out << lp.n << ' ' << lp.d << '\n';
    for (int i = 0; i < lp.n; ++i) {
        for (int j = 0; j < lp.d; ++j) {
            write_value(out, lp.a[i][j]);
            out << ' ';
        }
        write_value(out, lp.y[i]);
        out << '\n';
    }
    for (int j = 0; j < lp.d; ++j) {
        if (j) out << ' ';
        write_value(out, lp.z[j]);
    }
    out << '\n';
}

void write_lp_file(const std::string& path, const LinearProgram& lp) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    write_lp(out, lp);
}

double instance_scale(const LinearProgram& lp) {
    double best = 0;
    for (int i = 0; i < lp.n; ++i) {
        double s = lp.y[i] * lp.y[i];
        for (double v : lp.a[i]) s += v * v;
        best = std::max(best, s);
    }
    return std::sqrt(best);
}

Mat basis_rows(const LinearProgram& lp, const Basis& basis) {
    Mat m(static_cast<int>(basis.size()), lp.d);
    for (size_t r = 0; r < basis.size(); ++r)
        for (int c = 0; c < lp.d; ++c) m.at(static_cast<int>(r), c) = lp.a[basis[r] - 1][c];
    return m;
}

Mat basis_cols(const LinearProgram& lp, const Basis& basis) {
    Mat m(lp.d, static_cast<int>(basis.size()));
    for (size_t c = 0; c < basis.size(); ++c)
        for (int r = 0; r < lp.d; ++r) m.at(r, static_cast<int>(c)) = lp.a[basis[c] - 1][r];
    return m;
}

Vec y_sub(const LinearProgram& lp, const Basis& basis) {
    Vec v(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) v[i] = lp.y[basis[i] - 1];
    return v;
}

Vec vertex_of(const LinearProgram& lp, const Basis& basis) {
    return solve_square(basis_rows(lp, basis), y_sub(lp, basis));
}

bool point_feasible(const LinearProgram& lp, const Vec& x, double tol) {
    for (int i = 0; i < lp.n; ++i)
        if (dot(lp.a[i], x) > lp.y[i] + tol) return false;
    return true;
}

unsigned long long binomial_capped(int n, int k, unsigned long long cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 c = 1;
    for (int i = 1; i <= k; ++i) {
        c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (c > cap) return cap + 1;
    }
    return static_cast<unsigned long long>(c);
}

std::vector<int> first_subset(int k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i + 1;
    return idx;
}

bool next_subset(std::vector<int>& idx, int n) {
    int k = static_cast<int>(idx.size());
    for (int i = k - 1; i >= 0; --i) {
        if (idx[i] < n - (k - 1 - i)) {
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

GeneralPositionReport check_general_position(const LinearProgram& lp, const GpTolerances& tol) {
    const unsigned long long guard = 1000000ULL;
    if (binomial_capped(lp.n, lp.d, guard) > guard)
        throw TooLarge("C(n,d) exceeds 1e6, refusing general-position scan");

    const double scale = instance_scale(lp);
    const double inf = std::numeric_limits<double>::infinity();
    GeneralPositionReport rep;
    rep.min_subset_smin = inf;
    rep.min_slack_gap = inf;
    rep.min_zcone_gap = inf;

    if (lp.n >= lp.d) {
        Basis idx = first_subset(lp.d);
        do {
            Mat rows = basis_rows(lp, idx);
            double s = smin(rows);
            rep.min_subset_smin = std::min(rep.min_subset_smin, s);
            if (s <= tol.subset_smin * scale) {
                rep.degenerate_flags.push_back(idx);
                continue;
            }
            Vec x;
            try {
                x = solve_square(rows, y_sub(lp, idx));
            } catch (const SingularSystem&) {
                rep.degenerate_flags.push_back(idx);
                continue;
            }
            size_t pos = 0;
            for (int j = 1; j <= lp.n; ++j) {
                if (pos < idx.size() && idx[pos] == j) {
                    ++pos;
                    continue;
                }
                double gap = std::abs(dot(lp.a[j - 1], x) - lp.y[j - 1]);
                rep.min_slack_gap = std::min(rep.min_slack_gap, gap);
                if (gap <= tol.slack_gap * scale) {
                    std::vector<int> flagged = idx;
                    flagged.push_back(j);
                    std::sort(flagged.begin(), flagged.end());
                    rep.degenerate_flags.push_back(std::move(flagged));
                }
            }
        } while (next_subset(idx, lp.n));
    }

    // (d-1)-generator cones that nearly contain the objective direction.
    if (lp.n >= lp.d - 1 && lp.d >= 2) {
        const double znorm = vec_norm(lp.z);
        std::vector<int> idx = first_subset(lp.d - 1);
        do {
            std::vector<Vec> cols;
            cols.reserve(idx.size());
            for (int i : idx) cols.push_back(lp.a[i - 1]);
            LeastSquares ls = least_squares(mat_from_cols(cols), lp.z);
            double lam_tol = 1e-9 * vec_norm(ls.x) + 1e-300;
            bool in_cone = true;
            for (double l : ls.x)
                if (l < -lam_tol) in_cone = false;
            if (!in_cone) continue;
            rep.min_zcone_gap = std::min(rep.min_zcone_gap, ls.residual);
            if (ls.residual <= tol.zcone * znorm) rep.degenerate_flags.push_back(idx);
        } while (next_subset(idx, lp.n));
    }

    return rep;
}

std::string solve_result_json(const SolveResult& r) {
    nlohmann::ordered_json j;
    j["status"] = status_name(r.status);
    j["vertex"] = r.vertex ? nlohmann::ordered_json(*r.vertex) : nlohmann::ordered_json(nullptr);
    j["basis"] = r.basis ? nlohmann::ordered_json(*r.basis) : nlohmann::ordered_json(nullptr);
    j["objective"] =
        r.objective ? nlohmann::ordered_json(*r.objective) : nlohmann::ordered_json(nullptr);
    return j.dump();
}

}  // namespace shadowlp
