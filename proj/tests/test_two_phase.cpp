#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "shadowlp/census.hpp"
#include "shadowlp/errors.hpp"
#include "shadowlp/two_phase.hpp"
#include "test_support.hpp"

using namespace shadowlp;

namespace {

bool is_power_of_two(double x) { return x > 0.0 && std::ldexp(1.0, std::ilogb(x)) == x; }

LinearProgram unit_square() {
    LinearProgram lp;
    lp.n = 4;
    lp.d = 2;
    lp.a = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    lp.y = {1, 1, 0, 0};
    lp.z = {1, 1};
    return lp;
}

void check_trace_invariants(const LinearProgram& lp, const TwoPhaseTrace& trace) {
    CHECK(static_cast<int>(trace.chosen_I.size()) == lp.d);
    CHECK(is_power_of_two(trace.kappa));
    CHECK(is_power_of_two(trace.M));
    // scale separation keeps the inflated rhs ordered: sqrt(d) M / (4 kappa) >= 1
    CHECK(std::sqrt(static_cast<double>(lp.d)) * trace.M / (4.0 * trace.kappa) >= 1.0);

    double alpha_sum = 0.0;
    for (double v : trace.alpha) {
        CHECK(v >= 1.0 / (lp.d * static_cast<double>(lp.d)) - 1e-15);
        alpha_sum += v;
    }
    CHECK(alpha_sum == doctest::Approx(1.0).epsilon(1e-12));

    // the start objective is certified optimal at the chosen basis of the
    // inflated program
    LpPrime prime = build_lp_prime(lp, trace.chosen_I);
    CHECK(prime.kappa == trace.kappa);
    CHECK(prime.M == trace.M);
    CHECK(prime.y_prime == trace.y_prime);
    CHECK(is_opt_simp(prime.lp, trace.t0, trace.chosen_I));

    CHECK(trace.phase1_pivots == path_pivots(trace.phase1_path));
    if (trace.K) CHECK(trace.phase2_pivots == path_pivots(trace.phase2_path));
}

}  // namespace

TEST_SUITE("two_phase") {

TEST_CASE("choose_basis draws the documented shortlist and keeps the best") {
    RngStream gen(71, 0);
    LinearProgram lp = testsupport::random_lp(gen, 10, 3, 1.0);
    RngStream s(71, 1);
    ChosenBasis chosen = choose_basis(lp, s);
    CHECK(chosen.shortlist.size() == 208);  // ceil(3 * 10 * 3 * ln 10)

    double best = -1.0;
    for (const Basis& cand : chosen.shortlist) best = std::max(best, smin(basis_rows(lp, cand)));
    CHECK(chosen.smin_value == best);
    CHECK(chosen.smin_value == smin(basis_rows(lp, chosen.basis)));

    RngStream s2(71, 1);
    ChosenBasis again = choose_basis(lp, s2);
    CHECK(again.basis == chosen.basis);
    CHECK(again.shortlist == chosen.shortlist);
}

TEST_CASE("choose_basis reports an all-singular instance") {
    LinearProgram lp;
    lp.n = 5;
    lp.d = 3;
    lp.a.assign(5, {1, 0, 0});
    lp.y.assign(5, 1.0);
    lp.z = {1, 0, 0};
    RngStream s(72, 0);
    CHECK_THROWS_AS(choose_basis(lp, s), AllSingular);
}

TEST_CASE("build_lp_prime rounds kappa and M to powers of two") {
    // basis rows scaled to smin 0.3 (kappa 0.25), scale pinned to 1 (M 4)
    LinearProgram lp;
    lp.n = 4;
    lp.d = 3;
    lp.a = {{0.3, 0, 0}, {0, 0.3, 0}, {0, 0, 0.3}, {1, 0, 0}};
    lp.y = {0, 0, 0, 0};
    lp.z = {1, 0, 0};
    LpPrime prime = build_lp_prime(lp, {1, 2, 3});
    CHECK(prime.kappa == 0.25);
    CHECK(prime.M == 4.0);
    CHECK(prime.y_prime[0] == 4.0);
    CHECK(prime.y_prime[1] == 4.0);
    CHECK(prime.y_prime[2] == 4.0);
    // off-basis: sqrt(3) * 16 / (4 * 0.25) = 16 sqrt(3)
    CHECK(prime.y_prime[3] == doctest::Approx(27.712812921102035).epsilon(1e-15));
    CHECK(prime.lp.y == prime.y_prime);
    CHECK(prime.lp.a == lp.a);  // rows and objective never change
    CHECK(prime.lp.z == lp.z);

    // exact powers of two stay put: scale 1 -> M = 4, smin 0.25 -> kappa 0.25
    LinearProgram exact;
    exact.n = 2;
    exact.d = 2;
    exact.a = {{0.25, 0}, {0, 0.25}};
    exact.y = {0, 0};
    exact.z = {1, 0};
    // scale = 0.25 here: M = 2^(-2+2) = 1
    LpPrime p2 = build_lp_prime(exact, {1, 2});
    CHECK(p2.kappa == 0.25);
    CHECK(p2.M == 1.0);
}

TEST_CASE("build_lp_plus lifts rows by the rhs gap") {
    LinearProgram lp;
    lp.n = 1;
    lp.d = 2;
    lp.a = {{1, 0}};
    lp.y = {1};
    lp.z = {0, 1};
    LpPlus plus = build_lp_plus(lp, {4});
    REQUIRE(plus.rows.size() == 3);
    CHECK(plus.rows[LpPlus::position(-1)] == Vec{-1, 0, 0});
    CHECK(plus.rows[LpPlus::position(0)] == Vec{1, 0, 0});
    CHECK(plus.y_plus[LpPlus::position(-1)] == 1.0);
    CHECK(plus.y_plus[LpPlus::position(0)] == 1.0);
    // lifted row: ((4-1)/2, a) with rhs (4+1)/2
    CHECK(plus.rows[LpPlus::position(1)] == Vec{1.5, 1, 0});
    CHECK(plus.y_plus[LpPlus::position(1)] == 2.5);
    CHECK(plus.z_plus == Vec{1, 0, 0});

    LinearProgram norm_src = lp;
    LinearProgram norm = normalized_program(plus);
    CHECK(norm.n == 3);
    CHECK(norm.d == 3);
    CHECK(norm.y == Vec{1, 1, 1});
    CHECK(norm.a[2][0] == doctest::Approx(0.6));
    CHECK(norm.a[2][1] == doctest::Approx(0.4));

    lp.y = {-5};  // y+ = (4 - 5)/2 < 0
    CHECK_THROWS_AS(build_lp_plus(lp, {4}), NonPositiveYPlus);
}

TEST_CASE("find_zeta settles on the unit weight for a clean corner") {
    LinearProgram square;
    square.n = 4;
    square.d = 2;
    square.a = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    square.y = {1, 1, 1, 1};
    square.z = {1, 1};
    LpPrime prime = build_lp_prime(square, {1, 2});
    LpPlus plus = build_lp_plus(square, prime.y_prime);
    CHECK(find_zeta(plus, square.z, {1, 2}) == 1.0);
}

TEST_CASE("two-phase solves the unit square") {
    LinearProgram lp = unit_square();
    RngStream s(73, 0);
    auto [result, trace] = two_phase_solve(lp, s);
    REQUIRE(result.status == LpStatus::Optimal);
    CHECK(*result.objective == doctest::Approx(2.0).epsilon(1e-9));
    CHECK((*result.vertex)[0] == doctest::Approx(1.0));
    CHECK((*result.vertex)[1] == doctest::Approx(1.0));
    CHECK(*result.basis == Basis{1, 2});

    check_trace_invariants(lp, trace);
    REQUIRE(trace.J.has_value());
    REQUIRE(trace.K.has_value());
    CHECK(*trace.K == std::vector<int>{0, 1, 2});
    CHECK(*trace.x0 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(*trace.zeta >= 1.0);
    CHECK(trace.shortlist.size() == 34);  // ceil(3 * 4 * 2 * ln 4)
}

TEST_CASE("two-phase reports an empty region through the gate coordinate") {
    LinearProgram lp;
    lp.n = 4;
    lp.d = 2;
    lp.a = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    lp.y = {-1, -1, 1, 1};  // x <= -1 and x >= 1
    lp.z = {1, 0};
    RngStream s(74, 0);
    auto [result, trace] = two_phase_solve(lp, s);
    CHECK(result.status == LpStatus::Infeasible);
    CHECK_FALSE(result.vertex.has_value());
    check_trace_invariants(lp, trace);
    REQUIRE(trace.x0.has_value());
    CHECK(*trace.x0 < 1.0 - 1e-9);
    CHECK(*trace.x0 >= -1.0 - 1e-9);
}

TEST_CASE("two-phase flags an unbounded objective in phase one") {
    LinearProgram lp;
    lp.n = 3;
    lp.d = 2;
    lp.a = {{1, 0}, {0, 1}, {0, -1}};
    lp.y = {1, 1, 1};
    lp.z = {-1, 0.5};
    RngStream s(75, 0);
    auto [result, trace] = two_phase_solve(lp, s);
    CHECK(result.status == LpStatus::Unbounded);
    check_trace_invariants(lp, trace);
    CHECK_FALSE(trace.J.has_value());
    CHECK_FALSE(trace.K.has_value());
    CHECK(trace.phase2_pivots == 0);
}

TEST_CASE("two-phase agrees with brute force on random instances") {
    RngStream gen(76, 0);
    int compared = 0, optimal_seen = 0;
    for (int rep = 0; rep < 60; ++rep) {
        LinearProgram lp = testsupport::random_lp(gen, 7, 3, 1.0);
        SolveResult reference;
        try {
            reference = brute_force_solve(lp);
        } catch (const UnresolvedDegenerate&) {
            continue;
        }
        RngStream s(76, 1000 + static_cast<std::uint64_t>(rep));
        auto [result, trace] = two_phase_solve(lp, s);
        ++compared;
        check_trace_invariants(lp, trace);
        REQUIRE(result.status == reference.status);
        if (result.status == LpStatus::Optimal) {
            ++optimal_seen;
            CHECK(*result.objective ==
                  doctest::Approx(*reference.objective).epsilon(1e-8));
            CHECK(*result.basis == *reference.basis);
            CHECK(*trace.zeta >= 1.0);
            REQUIRE(trace.K.has_value());
            CHECK(std::find(trace.K->begin(), trace.K->end(), 0) != trace.K->end());
        }
    }
    CHECK(compared >= 35);
    CHECK(optimal_seen >= 10);
}

TEST_CASE("two-phase replays bit-identically from the same stream") {
    RngStream gen(77, 0);
    LinearProgram lp = testsupport::random_lp(gen, 8, 3, 0.5);
    RngStream s1(77, 5), s2(77, 5);
    auto [r1, t1] = two_phase_solve(lp, s1);
    auto [r2, t2] = two_phase_solve(lp, s2);
    CHECK(trace_json(t1) == trace_json(t2));
    CHECK(r1.status == r2.status);
    if (r1.objective) CHECK(*r1.objective == *r2.objective);
}

TEST_CASE("trace_json lists every pipeline field in order") {
    LinearProgram lp = unit_square();
    RngStream s(78, 0);
    auto [result, trace] = two_phase_solve(lp, s);
    const std::string text = trace_json(trace);
    CHECK(text.rfind("{\"shortlist\":", 0) == 0);

    auto j = nlohmann::json::parse(text);
    for (const char* key : {"shortlist", "chosen_I", "kappa", "M", "alpha", "t0", "y_prime", "J",
                            "zeta", "K", "x0", "phase1_pivots", "phase2_pivots"})
        CHECK(j.contains(key));
    CHECK(j["kappa"].is_number());
    CHECK(j["J"].is_array());

    // unbounded runs serialize the missing phase-2 fields as nulls
    LinearProgram strip;
    strip.n = 3;
    strip.d = 2;
    strip.a = {{1, 0}, {0, 1}, {0, -1}};
    strip.y = {1, 1, 1};
    strip.z = {-1, 0.5};
    RngStream s2(78, 1);
    auto [r2, t2] = two_phase_solve(strip, s2);
    auto j2 = nlohmann::json::parse(trace_json(t2));
    CHECK(j2["J"].is_null());
    CHECK(j2["zeta"].is_null());
    CHECK(j2["K"].is_null());
    CHECK(j2["x0"].is_null());
}

}  // TEST_SUITE
