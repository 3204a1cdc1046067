#include "shadowlp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "shadowlp/bounds.hpp"
#include "shadowlp/census.hpp"
#include "shadowlp/rng.hpp"
#include "shadowlp/two_phase.hpp"

namespace shadowlp {

long long lifted_census_count(const LinearProgram& perturbed, const TwoPhaseTrace& trace) {
    LpPlus plus = build_lp_plus(perturbed, trace.y_prime);
    LinearProgram norm = normalized_program(plus);
    // census runs over the lifted copies of the original rows only; the
    // two gate rows are excluded by construction of the step bound
    std::vector<Vec> points(norm.a.begin() + 2, norm.a.end());
    Vec ones(points.size(), 1.0);
    Vec t(perturbed.d + 1, 0.0);
    for (int j = 0; j < perturbed.d; ++j) t[j + 1] = perturbed.z[j];
    return exact_shadow(points, ones, t, plus.z_plus).count();
}

namespace {

TrialRecord run_trial(const LinearProgram& base, const ExperimentConfig& cfg, double sigma,
                      int trial_index) {
    TrialRecord rec;
    rec.trial_index = trial_index;
    rec.sigma = sigma;
    rec.seed = mix_seed(cfg.master_seed, static_cast<std::uint64_t>(trial_index));
    rec.n = base.n;
    rec.d = base.d;

    const auto start = std::chrono::steady_clock::now();
    try {
        RngStream stream(cfg.master_seed, rec.seed);
        LinearProgram perturbed = perturb(base, make_perturbation_spec(base, sigma), stream);
        auto [result, trace] = two_phase_solve(perturbed, stream);
        rec.status = status_name(result.status);
        rec.phase1_pivots = trace.phase1_pivots;
        rec.phase2_pivots = trace.phase2_pivots;
        rec.kappa = trace.kappa;
        rec.M = trace.M;
        if (result.status == LpStatus::Optimal) rec.objective = result.objective;
        if (cfg.census && result.status != LpStatus::Unbounded)
            rec.shadow_exact = lifted_census_count(perturbed, trace);
    } catch (const std::exception& e) {
        rec.status = "ERROR";
        rec.message = e.what();
        std::replace(rec.message.begin(), rec.message.end(), ',', ';');
        std::replace(rec.message.begin(), rec.message.end(), '\n', ' ');
    }
    if (cfg.timing) {
        const auto stop = std::chrono::steady_clock::now();
        rec.wall_nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    }
    return rec;
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::vector<TrialRecord> run_experiment(const LinearProgram& base, const ExperimentConfig& cfg) {
    if (cfg.trials < 1) throw Error("trials must be >= 1");
    if (cfg.sigmas.empty()) throw Error("at least one sigma is required");
    validate_lp(base);

    const size_t total = cfg.sigmas.size() * static_cast<size_t>(cfg.trials);
    std::vector<TrialRecord> records(total);

    std::atomic<size_t> cursor{0};
    auto worker = [&] {
        for (;;) {
            const size_t k = cursor.fetch_add(1);
            if (k >= total) return;
            const size_t si = k / cfg.trials;
            const int ti = static_cast<int>(k % cfg.trials);
            records[k] = run_trial(base, cfg, cfg.sigmas[si], ti);
        }
    };

    const int threads = std::max(1, cfg.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (std::thread& th : pool) th.join();
    }
    return records;
}

std::string records_csv(const std::vector<TrialRecord>& records) {
    std::ostringstream out;
    out << "trial_index,sigma,seed,n,d,status,phase1_pivots,phase2_pivots,objective,kappa,M,"
           "shadow_exact,wall_nanos,message\n";
    for (const TrialRecord& r : records) {
        out << r.trial_index << ',' << fmt17(r.sigma) << ',' << r.seed << ',' << r.n << ',' << r.d << ','
            << r.status << ',';
        if (r.phase1_pivots) out << *r.phase1_pivots;
        out << ',';
        if (r.phase2_pivots) out << *r.phase2_pivots;
        out << ',';
        if (r.objective) out << fmt17(*r.objective);
        out << ',';
        if (r.kappa) out << fmt17(*r.kappa);
        out << ',';
        if (r.M) out << fmt17(*r.M);
        out << ',';
        if (r.shadow_exact) out << *r.shadow_exact;
        out << ',';
        if (r.wall_nanos) out << *r.wall_nanos;
        out << ',' << r.message << '\n';
    }
    return out.str();
}

std::string summary_text(const LinearProgram& base, const ExperimentConfig& cfg,
                         const std::vector<TrialRecord>& records) {
    std::ostringstream out;
    for (size_t si = 0; si < cfg.sigmas.size(); ++si) {
        const double sigma = cfg.sigmas[si];
        std::vector<double> totals;
        int errors = 0;
        for (int ti = 0; ti < cfg.trials; ++ti) {
            const TrialRecord& r = records[si * cfg.trials + ti];
            if (r.status == "ERROR") {
                ++errors;
                continue;
            }
            totals.push_back(double(r.phase1_pivots.value_or(0) + r.phase2_pivots.value_or(0)));
        }
        out << "sigma=" << fmt17(sigma) << " trials=" << cfg.trials << " errors=" << errors;
        if (!totals.empty()) {
            double mean = 0;
            for (double t : totals) mean += t;
            mean /= static_cast<double>(totals.size());
            std::sort(totals.begin(), totals.end());
            const size_t mid = totals.size() / 2;
            const double median =
                totals.size() % 2 ? totals[mid] : 0.5 * (totals[mid - 1] + totals[mid]);
            out << " mean_pivots=" << mean << " median_pivots=" << median;
        }
        try {
            BoundInputs bi{base.n, base.d, sigma};
            const double d_val = bound_D(bi);
            const double total_val = bound_total(bi);
            out << " bound_D=" << fmt17(d_val) << " bound_total=" << fmt17(total_val);
        } catch (const DomainError&) {
            out << " bound_D=n/a bound_total=n/a";
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace shadowlp
