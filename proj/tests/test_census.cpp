#include <doctest.h>

#include "shadowlp/census.hpp"
#include "shadowlp/errors.hpp"
#include "shadowlp/rng.hpp"
#include "shadowlp/shadow_vertex.hpp"
#include "test_support.hpp"

using namespace shadowlp;

namespace {

const std::vector<Vec> square_rows = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
const Vec square_y = {1, 1, 1, 1};

std::optional<Basis> oracle_optimal_basis(const LinearProgram& lp, const Vec& q) {
    std::vector<int> idx = first_subset(lp.d);
    do {
        if (is_opt_simp(lp, q, idx)) return idx;
    } while (next_subset(idx, lp.n));
    return std::nullopt;
}

}  // namespace

TEST_SUITE("census") {

TEST_CASE("square shadow holds all four corners, exactly and discretized") {
    const Vec t = {1, 0.1}, z = {-1, 0.2};
    ShadowSet exact = exact_shadow(square_rows, square_y, t, z);
    CHECK(exact.count() == 4);
    CHECK(exact.contains({1, 2}));
    CHECK(exact.contains({2, 3}));
    CHECK(exact.contains({3, 4}));
    CHECK(exact.contains({1, 4}));
    CHECK_FALSE(exact.contains({1, 3}));  // singular pair

    ShadowSet disc = discretized_shadow(square_rows, square_y, t, z, 1024);
    CHECK(disc.bases == exact.bases);
}

TEST_CASE("a shadow can be empty even with a feasible vertex") {
    // single basis e1,e2,e3: u = t, v = z give angles 0, 3pi/4, -pi/2 whose
    // largest cyclic gap is 3pi/4 < pi, so no plane direction lands in the cone
    const std::vector<Vec> rows = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    const Vec y = {1, 1, 1};
    ShadowSet exact = exact_shadow(rows, y, {1, -1, 0}, {0, 1, -1});
    CHECK(exact.count() == 0);
    ShadowSet disc = discretized_shadow(rows, y, {1, -1, 0}, {0, 1, -1}, 4096);
    CHECK(disc.count() == 0);
}

TEST_CASE("a cone gap within 1e-10 of pi is refused") {
    // angles 0, pi/2, pi: the wrap-around gap is exactly pi
    const std::vector<Vec> rows = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK_THROWS_AS(exact_shadow(rows, {1, 1, 1}, {1, -1, 0}, {0, 0, 1}), DegenerateCone);
}

TEST_CASE("discretized census refuses overlapping cone interiors") {
    // duplicated row: subsets {1,2} and {2,3} span the same quadrant, so any
    // direction inside it is claimed twice
    const std::vector<Vec> rows = {{1, 0}, {0, 1}, {1, 0}};
    const Vec y = {1, 1, 1};
    CHECK_THROWS_AS(discretized_shadow(rows, y, {1, 0.5}, {-0.5, 1}, 1024), DegenerateCone);
    // the exact census has no interior test and simply lists both
    ShadowSet exact = exact_shadow(rows, y, {1, 0.5}, {-0.5, 1});
    CHECK(exact.count() == 2);
    CHECK(exact.contains({1, 2}));
    CHECK(exact.contains({2, 3}));
}

TEST_CASE("census input validation") {
    CHECK_THROWS_AS(exact_shadow(square_rows, square_y, {1, 0}, {2, 0}), Error);  // dependent plane
    CHECK_THROWS_AS(exact_shadow(square_rows, {1, 1, 0, 1}, {1, 0.1}, {-1, 0.2}), Error);  // y = 0
    std::vector<Vec> big(50, Vec(10, 0.0));
    RngStream s(61, 0);
    for (Vec& r : big)
        for (double& v : r) v = s.gaussian();
    Vec ones(50, 1.0);
    Vec t(10, 0.0), z(10, 0.0);
    t[0] = 1;
    z[1] = 1;
    CHECK_THROWS_AS(exact_shadow(big, ones, t, z), TooLarge);
}

TEST_CASE("discretized grids only grow toward the exact census") {
    RngStream stream(62, 0);
    int checked = 0;
    for (int rep = 0; rep < 20 && checked < 8; ++rep) {
        LinearProgram lp = testsupport::random_lp(stream, 6, 3, 1.0, /*positive_y=*/true);
        Vec t(3);
        for (double& c : t) c = stream.gaussian();
        if (vec_norm(t) < 0.1) continue;
        ShadowSet exact;
        try {
            exact = exact_shadow(lp.a, lp.y, t, lp.z);
        } catch (const DegenerateCone&) {
            continue;
        }
        ++checked;
        ShadowSet prev;
        bool stabilized = false;
        for (int m = 64; m <= (1 << 20); m *= 2) {
            ShadowSet disc = discretized_shadow(lp.a, lp.y, t, lp.z, m);
            for (const Basis& b : prev.bases) CHECK(disc.contains(b));  // grid refinement keeps hits
            for (const Basis& b : disc.bases) CHECK(exact.contains(b));
            if (disc.bases == exact.bases) {
                stabilized = true;
                break;
            }
            prev = disc;
        }
        CHECK(stabilized);
    }
    CHECK(checked >= 8);
}

TEST_CASE("every pivot path stays inside the exact shadow of its plane") {
    RngStream stream(63, 0);
    int walks = 0;
    for (int rep = 0; rep < 80 && walks < 25; ++rep) {
        LinearProgram lp = testsupport::random_lp(stream, 7, 3, 1.0, /*positive_y=*/true);
        Vec t(3);
        for (double& c : t) c = stream.gaussian();
        if (vec_norm(t) < 0.1) continue;
        auto start = oracle_optimal_basis(lp, t);
        if (!start) continue;
        ShadowSet exact;
        try {
            exact = exact_shadow(lp.a, lp.y, t, lp.z);
        } catch (const DegenerateCone&) {
            continue;
        }
        ++walks;
        auto [result, path] = polar_shadow_vertex(lp, *start, t);
        for (const PathSegment& seg : path.segments) CHECK(exact.contains(seg.basis));
        CHECK(path.segments.size() <= exact.bases.size());
    }
    CHECK(walks >= 25);
}

TEST_CASE("brute force solves the textbook cases") {
    LinearProgram square;
    square.n = 4;
    square.d = 2;
    square.a = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    square.y = {1, 1, 0, 0};
    square.z = {1, 1};
    SolveResult r = brute_force_solve(square);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(*r.objective == doctest::Approx(2.0));
    CHECK(*r.basis == Basis{1, 2});
    CHECK((*r.vertex)[0] == doctest::Approx(1));

    LinearProgram strip;
    strip.n = 3;
    strip.d = 2;
    strip.a = {{1, 0}, {0, 1}, {0, -1}};
    strip.y = {1, 1, 1};
    strip.z = {-1, 0.5};
    CHECK(brute_force_solve(strip).status == LpStatus::Unbounded);

    LinearProgram infeas;
    infeas.n = 4;
    infeas.d = 2;
    infeas.a = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    infeas.y = {-1, -1, 1, 1};  // x <= -1 and x >= 1
    infeas.z = {1, 0};
    CHECK(brute_force_solve(infeas).status == LpStatus::Infeasible);
}

TEST_CASE("brute force refuses rank-deficient vertex-free systems") {
    LinearProgram lp;
    lp.n = 2;
    lp.d = 2;
    lp.a = {{1, 0}, {-1, 0}};  // every row parallel to e1
    lp.y = {1, -2};            // x <= 1, x >= 2
    lp.z = {1, 0};
    CHECK_THROWS_AS(brute_force_solve(lp), UnresolvedDegenerate);
}

TEST_CASE("brute force enforces the subset budget") {
    RngStream stream(64, 0);
    LinearProgram lp = testsupport::random_lp(stream, 60, 15, 1.0);
    CHECK_THROWS_AS(brute_force_solve(lp), TooLarge);
}

}  // TEST_SUITE
