#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "shadowlp/lp.hpp"

namespace shadowlp {

// 64-bit avalanche mix of (seed, index); used to derive per-trial streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

// Deterministic random stream: identical (master_seed, stream_id) yields an
// identical sample sequence. Distinct stream ids are decorrelated by the
// avalanche-mixed seeding.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_id);

    std::uint64_t next_u64();
    // Uniform in [0, 1) with 53 random bits.
    double uniform01();
    // Uniform in [0, m), rejection-sampled so every value is equally likely.
    std::uint64_t bounded(std::uint64_t m);
    // Standard normal by the Marsaglia polar method.
    double gaussian();
    double gaussian(double mean, double sd);
    Vec gaussian_vec(const Vec& center, double sd);

    std::uint64_t stream_id() const { return id_; }

private:
    std::mt19937_64 eng_;
    std::uint64_t id_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

struct PerturbationSpec {
    double sigma = 0.0;  // relative noise level
    double scale = 0.0;  // max_i |(y_i, a_i)| of the base instance
};

PerturbationSpec make_perturbation_spec(const LinearProgram& base, double sigma);

// Every entry of A and y replaced by a Gaussian centered at the original
// entry with sd = sigma * scale. The objective z is left untouched.
LinearProgram perturb(const LinearProgram& base, const PerturbationSpec& spec, RngStream& stream);

// Interior point of the standard simplex, biased away from the boundary:
// alpha = (1/d^2) * 1 + (1 - 1/d) * u with u uniform on the simplex
// (sorted-uniform spacings). All entries >= 1/d^2, entries sum to 1.
Vec sample_alpha(RngStream& stream, int d);

// count i.i.d. uniform d-subsets of {1..n}, each sorted.
std::vector<Basis> sample_dsets(RngStream& stream, int n, int d, int count);

}  // namespace shadowlp
