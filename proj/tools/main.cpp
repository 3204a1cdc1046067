#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "shadowlp/bounds.hpp"
#include "shadowlp/census.hpp"
#include "shadowlp/experiment.hpp"
#include "shadowlp/lp.hpp"
#include "shadowlp/rng.hpp"
#include "shadowlp/two_phase.hpp"

namespace {

using nlohmann::ordered_json;
using namespace shadowlp;

constexpr int kExitOptimal = 0;
constexpr int kExitError = 1;
constexpr int kExitTooLarge = 2;
constexpr int kExitUnbounded = 10;
constexpr int kExitInfeasible = 11;

ordered_json finite_or_string(double v) {
    if (std::isfinite(v)) return v;
    return v > 0 ? "inf" : "-inf";
}

// Plane vector spec: "rand:<seed>" for a seeded Gaussian direction,
// otherwise a comma-separated coordinate list.
Vec parse_direction(const std::string& spec, int dim) {
    if (spec.rfind("rand:", 0) == 0) {
        const std::uint64_t seed = std::stoull(spec.substr(5));
        RngStream stream(seed, 0);
        Vec v(dim);
        for (double& x : v) x = stream.gaussian();
        return v;
    }
    Vec v;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        v.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw Error("bad coordinate '" + tok + "'");
    }
    if (static_cast<int>(v.size()) != dim)
        throw Error("direction needs " + std::to_string(dim) + " coordinates");
    return v;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error("cannot write '" + out_path + "'");
    out << text;
}

int cmd_solve(const std::string& path, std::uint64_t seed) {
    LinearProgram lp = read_lp_file(path);
    RngStream stream(seed, 0);
    auto [result, trace] = two_phase_solve(lp, stream);

    ordered_json j = ordered_json::parse(solve_result_json(result));
    j["trace"] = ordered_json::parse(trace_json(trace));
    std::cout << j.dump() << '\n';

    switch (result.status) {
        case LpStatus::Optimal: return kExitOptimal;
        case LpStatus::Unbounded: return kExitUnbounded;
        case LpStatus::Infeasible: return kExitInfeasible;
    }
    return kExitError;
}

int cmd_experiment(const std::string& path, const ExperimentConfig& cfg, const std::string& out_path) {
    LinearProgram base = read_lp_file(path);
    std::vector<TrialRecord> records = run_experiment(base, cfg);
    emit(records_csv(records), out_path);
    std::cerr << summary_text(base, cfg, records);
    return kExitOptimal;
}

int cmd_shadow(const std::string& path, const std::string& mode, int m, const std::string& t_spec,
               const std::string& z_spec) {
    LinearProgram lp = read_lp_file(path);
    for (double yi : lp.y)
        if (yi <= 0.0) throw Error("shadow census requires y > 0");

    const Vec t = parse_direction(t_spec, lp.d);
    const Vec z = z_spec == "lp" ? lp.z : parse_direction(z_spec, lp.d);

    ShadowSet shadow;
    if (mode == "exact")
        shadow = exact_shadow(lp.a, lp.y, t, z);
    else if (mode == "discretized")
        shadow = discretized_shadow(lp.a, lp.y, t, z, m);
    else
        throw Error("mode must be exact or discretized");

    ordered_json j;
    j["count"] = shadow.count();
    j["bases"] = shadow.bases;
    std::cout << j.dump() << '\n';
    return kExitOptimal;
}

int cmd_bound(int n, int d, double sigma) {
    BoundInputs bi{n, d, sigma};
    ordered_json j;
    j["n"] = n;
    j["d"] = d;
    j["sigma"] = sigma;
    j["bound_D"] = finite_or_string(bound_D(bi));
    j["kappa0"] = finite_or_string(kappa0(bi));
    j["bound_lp_prime"] = finite_or_string(bound_lp_prime(bi));
    j["bound_lp_plus"] = finite_or_string(bound_lp_plus(bi));
    j["bound_total"] = finite_or_string(bound_total(bi));
    std::cout << j.dump() << '\n';
    return kExitOptimal;
}

int cmd_perturb(const std::string& path, double sigma, std::uint64_t seed, const std::string& out_path) {
    LinearProgram base = read_lp_file(path);
    RngStream stream(seed, mix_seed(seed, 0));
    LinearProgram noisy = perturb(base, make_perturbation_spec(base, sigma), stream);
    std::ostringstream text;
    write_lp(text, noisy);
    emit(text.str(), out_path);
    return kExitOptimal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shadow-vertex LP toolkit: two-phase solver, shadow census, smoothed-trial harness"};
    app.require_subcommand(1);

    // solve
    std::string solve_path;
    std::uint64_t solve_seed = 0;
    CLI::App* solve = app.add_subcommand("solve", "Solve an LP file, print result + trace JSON");
    solve->add_option("path", solve_path, "LP file")->required();
    solve->add_option("--seed", solve_seed, "random stream seed (default 0)");

    // experiment
    std::string exp_path, exp_out;
    ExperimentConfig cfg;
    CLI::App* experiment =
        app.add_subcommand("experiment", "Perturb-and-solve trials, CSV rows on stdout, summary on stderr");
    experiment->add_option("path", exp_path, "base LP file")->required();
    experiment->add_option("--sigma", cfg.sigmas, "noise level, repeatable")->required();
    experiment->add_option("--trials", cfg.trials, "trials per sigma (default 1)");
    experiment->add_option("--seed", cfg.master_seed, "master seed (default 0)");
    experiment->add_option("--threads", cfg.threads, "worker threads (default 1)");
    experiment->add_flag("--census", cfg.census, "also count the lifted-plane exact shadow per trial");
    experiment->add_flag("--timing", cfg.timing,
                         "record wall_nanos per trial (makes output run-dependent)");
    experiment->add_option("--out", exp_out, "write CSV here instead of stdout");

    // shadow
    std::string shadow_path, shadow_mode = "exact", shadow_t = "rand:1", shadow_z = "lp";
    int shadow_m = 1024;
    CLI::App* shadow = app.add_subcommand("shadow", "Count the shadow bases of an LP over a plane");
    shadow->add_option("path", shadow_path, "LP file (requires y > 0)")->required();
    shadow->add_option("--mode", shadow_mode, "exact (default) or discretized");
    shadow->add_option("--m", shadow_m, "grid size for discretized mode (default 1024)");
    shadow->add_option("--t", shadow_t, "plane vector t: 'rand:<seed>' or comma list (default rand:1)");
    shadow->add_option("--z", shadow_z, "plane vector z: 'lp' for the objective (default), 'rand:<seed>', or comma list");

    // bound
    int bound_n = 0, bound_d = 0;
    double bound_sigma = 0.0;
    CLI::App* bound = app.add_subcommand("bound", "Evaluate the smoothed pivot-count bound formulas");
    bound->add_option("--n", bound_n, "rows")->required();
    bound->add_option("--d", bound_d, "dimension")->required();
    bound->add_option("--sigma", bound_sigma, "noise level")->required();

    // perturb
    std::string pert_path, pert_out;
    double pert_sigma = 0.0;
    std::uint64_t pert_seed = 0;
    CLI::App* perturb_cmd = app.add_subcommand("perturb", "Write a Gaussian-perturbed copy of an LP");
    perturb_cmd->add_option("path", pert_path, "base LP file")->required();
    perturb_cmd->add_option("--sigma", pert_sigma, "noise level")->required();
    perturb_cmd->add_option("--seed", pert_seed, "random stream seed (default 0)");
    perturb_cmd->add_option("--out", pert_out, "write LP here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(solve_path, solve_seed);
        if (experiment->parsed()) return cmd_experiment(exp_path, cfg, exp_out);
        if (shadow->parsed()) return cmd_shadow(shadow_path, shadow_mode, shadow_m, shadow_t, shadow_z);
        if (bound->parsed()) return cmd_bound(bound_n, bound_d, bound_sigma);
        if (perturb_cmd->parsed()) return cmd_perturb(pert_path, pert_sigma, pert_seed, pert_out);
    } catch (const TooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitTooLarge;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
