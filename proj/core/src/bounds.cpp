#include "shadowlp/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "shadowlp/errors.hpp"

namespace shadowlp {

namespace {

void check_domain(const BoundInputs& b) {
    if (b.d < 3) throw DomainError("bound formulas need d >= 3");
    if (b.n <= b.d) throw DomainError("bound formulas need n > d");
    if (!(b.sigma > 0.0)) throw DomainError("bound formulas need sigma > 0");
}

// No domain check: inner evaluations may push sigma below the smallest
// positive double, which legitimately overflows the quotient to +inf.
double bound_D_raw(double n, double d, double sigma) {
    const double cap = 1.0 / (3.0 * std::sqrt(d * std::log(n)));
    const double s = std::min(sigma, cap);
    return 58888678.0 * n * d * d * d / std::pow(s, 6.0);
}

}  // namespace

double bound_D(const BoundInputs& b) {
    check_domain(b);
    return bound_D_raw(b.n, b.d, b.sigma);
}

double kappa0(const BoundInputs& b) {
    check_domain(b);
    const double n = b.n, d = b.d;
    return b.sigma * std::min(1.0, b.sigma) / (12.0 * d * d * std::pow(n, 7.0) * std::sqrt(std::log(n)));
}

double bound_lp_prime(const BoundInputs& b) {
    check_domain(b);
    const double n = b.n, d = b.d;
    const double ln_n = std::log(n);
    const double lead = 326.0 * n * d * ln_n * std::log2(d * n / std::min(1.0, b.sigma));
    const double sigma_eff = std::min(1.0, std::pow(b.sigma, 4.0)) /
                             (12960.0 * std::pow(d, 8.5) * std::pow(n, 14.0) * std::pow(ln_n, 2.5));
    return lead * bound_D_raw(n, d, sigma_eff);
}

double bound_lp_plus(const BoundInputs& b) {
    check_domain(b);
    const double n = b.n, d = b.d;
    const double ln_n = std::log(n);
    const double lead = 49.0 * std::log2(n * d / std::min(b.sigma, 1.0));
    const double sigma_eff = std::min(1.0, std::pow(b.sigma, 5.0)) /
                             (std::pow(2.0, 23.0) * std::pow(d + 1.0, 5.5) * std::pow(n, 14.0) *
                              std::pow(ln_n, 2.5));
    return lead * bound_D_raw(n, d, sigma_eff) + n;
}

double bound_total(const BoundInputs& b) { return bound_lp_prime(b) + bound_lp_plus(b) + 2.0; }

}  // namespace shadowlp
