#pragma once

#include <vector>

#include "hmc/family.hpp"

// Floating-point evaluation of the asymptotic expansions
//   [z^{lcm k}] H°(z) ~ (2pi)^{(N-1)/2} lcm / prod Gamma(a_i)
//                        * k^{(N-1)k - (N-1)/2 + sum a_i} * e^{(1 + log c - N) k}
// and its conjugacy companion (divide by n = lcm k). Everything is
// evaluated in log space; the plain-value forms overflow doubles well
// before k = 200, the log forms never do.
namespace hmc::asympt {

// Gamma function for x > 0. Relative error <= 1e-12 on (0, 50].
double gamma_fn(double x);

struct AsymptoticParams {
    int N = 0;
    std::int64_t lcm = 0;
    double log_c = 0;
    double sum_a = 0;
    double log_gamma_prod = 0; // log prod Gamma(a_i)
    double gamma_prod = 0;
    std::vector<double> a;
};

AsymptoticParams derive(const FamilySpec& family);

// Natural log of the asymptotic estimate; finite for all k >= 1.
double log_rooted_estimate(const FamilySpec& family, std::int64_t k);
double log_conjugacy_estimate(const FamilySpec& family, std::int64_t k);

// exp() of the above; may overflow to +inf for large k.
double rooted_estimate(const FamilySpec& family, std::int64_t k);
double conjugacy_estimate(const FamilySpec& family, std::int64_t k);

// log of a positive big integer, for exact-vs-asymptotic ratios.
double log_int(const Int& v);

} // namespace hmc::asympt
