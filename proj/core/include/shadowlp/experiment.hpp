#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shadowlp/lp.hpp"
#include "shadowlp/two_phase.hpp"

namespace shadowlp {

// One perturb-and-solve trial. Every field except wall_nanos is a
// deterministic function of (base instance, master seed, trial_index,
// sigma); wall_nanos is only filled when timing is requested, since wall
// clock readings would break byte-identical reruns.
struct TrialRecord {
    int trial_index = 0;
    double sigma = 0.0;
    std::uint64_t seed = 0;  // derived per-trial stream id
    int n = 0;
    int d = 0;
    std::string status;  // Optimal | Unbounded | Infeasible | ERROR
    std::optional<int> phase1_pivots;
    std::optional<int> phase2_pivots;
    std::optional<double> objective;  // only when Optimal
    std::optional<double> kappa;
    std::optional<double> M;
    std::optional<long long> shadow_exact;  // lifted-plane census, on request
    std::optional<long long> wall_nanos;    // on request
    std::string message;  // failure text for ERROR rows
};

struct ExperimentConfig {
    std::vector<double> sigmas;
    int trials = 1;
    std::uint64_t master_seed = 0;
    int threads = 1;
    bool census = false;
    bool timing = false;
};

// Exact census of the objective plane swept by the gate phase of a finished
// solve: the lifted copies of the original rows (gate rows excluded, rhs
// normalized to 1) swept over Span((0, z), z_plus). The gate-phase pivot
// count never exceeds this census plus two.
long long lifted_census_count(const LinearProgram& perturbed, const TwoPhaseTrace& trace);

// Runs trials for every (sigma, trial_index) pair. Scheduling never affects
// results: each trial derives its own stream via mix_seed(master, index)
// and rows are emitted in (sigma order, trial order). Solver failures
// become status=ERROR rows rather than aborting the run.
std::vector<TrialRecord> run_experiment(const LinearProgram& base, const ExperimentConfig& cfg);

// CSV with a fixed header matching the TrialRecord field order. Doubles are
// written with 17 significant digits; absent values are empty cells.
std::string records_csv(const std::vector<TrialRecord>& records);

// Per-sigma aggregate: mean and median of total pivots over non-error rows
// plus the matching theoretical bounds (blank when outside their domain).
std::string summary_text(const LinearProgram& base, const ExperimentConfig& cfg,
                         const std::vector<TrialRecord>& records);

}  // namespace shadowlp
