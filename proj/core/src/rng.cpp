#include "shadowlp/rng.hpp"

#include <algorithm>
#include <cmath>

namespace shadowlp {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t x = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_id) : id_(stream_id) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(master_seed),
        static_cast<std::uint32_t>(master_seed >> 32),
        static_cast<std::uint32_t>(stream_id),
        static_cast<std::uint32_t>(stream_id >> 32),
        static_cast<std::uint32_t>(mix_seed(master_seed, stream_id)),
        static_cast<std::uint32_t>(mix_seed(master_seed, stream_id) >> 32),
    };
    eng_.seed(seq);
}

std::uint64_t RngStream::next_u64() { return eng_(); }

double RngStream::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::uint64_t RngStream::bounded(std::uint64_t m) {
    const std::uint64_t threshold = (-m) % m;  // 2^64 mod m
    std::uint64_t r;
    do {
        r = next_u64();
    } while (r < threshold);
    return r % m;
}

double RngStream::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u, v, s;
    do {
        u = 2.0 * uniform01() - 1.0;
        v = 2.0 * uniform01() - 1.0;
        s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    have_spare_ = true;
    return u * f;
}

double RngStream::gaussian(double mean, double sd) { return mean + sd * gaussian(); }

Vec RngStream::gaussian_vec(const Vec& center, double sd) {
    Vec out(center.size());
    for (size_t i = 0; i < center.size(); ++i) out[i] = center[i] + sd * gaussian();
    return out;
}

PerturbationSpec make_perturbation_spec(const LinearProgram& base, double sigma) {
    return {sigma, instance_scale(base)};
}

LinearProgram perturb(const LinearProgram& base, const PerturbationSpec& spec, RngStream& stream) {
    const double sd = spec.sigma * spec.scale;
    LinearProgram out = base;
    for (int i = 0; i < out.n; ++i) {
        for (int j = 0; j < out.d; ++j) out.a[i][j] = base.a[i][j] + sd * stream.gaussian();
        out.y[i] = base.y[i] + sd * stream.gaussian();
    }
    return out;
}

Vec sample_alpha(RngStream& stream, int d) {
    // u = spacings of d-1 sorted uniforms, a uniform sample of the simplex
    std::vector<double> cuts(d - 1);
    for (double& c : cuts) c = stream.uniform01();
    std::sort(cuts.begin(), cuts.end());
    Vec alpha(d);
    const double lo = 1.0 / (static_cast<double>(d) * d);
    const double w = 1.0 - 1.0 / d;
    double prev = 0.0;
    for (int i = 0; i < d; ++i) {
        const double next = (i == d - 1) ? 1.0 : cuts[i];
        alpha[i] = lo + w * (next - prev);
        prev = next;
    }
    return alpha;
}

std::vector<Basis> sample_dsets(RngStream& stream, int n, int d, int count) {
    std::vector<Basis> out;
    out.reserve(count);
    for (int s = 0; s < count; ++s) {
        // Floyd's sampling: uniform over all C(n,d) subsets
        Basis set;
        set.reserve(d);
        for (int j = n - d + 1; j <= n; ++j) {
            const int t = static_cast<int>(stream.bounded(static_cast<std::uint64_t>(j))) + 1;
            if (std::find(set.begin(), set.end(), t) != set.end())
                set.push_back(j);
            else
                set.push_back(t);
        }
        std::sort(set.begin(), set.end());
        out.push_back(std::move(set));
    }
    return out;
}

}  // namespace shadowlp
