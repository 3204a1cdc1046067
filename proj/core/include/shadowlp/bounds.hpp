#pragma once

namespace shadowlp {

struct BoundInputs {
    int n = 0;
    int d = 0;
    double sigma = 0.0;
};

// Expected shadow size bound:
// D(n,d,sigma) = 58888678 * n * d^3 / min(sigma, 1/(3*sqrt(d ln n)))^6.
// Requires n > d >= 3 and sigma > 0 (DomainError otherwise). May overflow
// to +infinity for tiny effective sigma; that is reported as-is.
double bound_D(const BoundInputs& b);

// Scale floor kappa0 = sigma * min(1, sigma) / (12 d^2 n^7 sqrt(ln n)).
double kappa0(const BoundInputs& b);

// Expected pivot bound for the inflated phase-1 program:
// 326 n d (ln n) lg(dn/min(1,sigma)) * D evaluated at
// sigma' = min(1, sigma^4) / (12960 d^8.5 n^14 (ln n)^2.5).
double bound_lp_prime(const BoundInputs& b);

// Expected pivot bound for the lifted phase-2 program:
// 49 lg(nd/min(sigma,1)) * D evaluated at
// sigma' = min(1, sigma^5) / (2^23 (d+1)^5.5 n^14 (ln n)^2.5), plus n.
double bound_lp_plus(const BoundInputs& b);

// Whole-pipeline expectation: bound_lp_prime + bound_lp_plus + 2.
double bound_total(const BoundInputs& b);

}  // namespace shadowlp
