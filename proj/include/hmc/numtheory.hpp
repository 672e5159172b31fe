#pragma once

#include <cstdint>
#include <vector>

#include "hmc/rational.hpp"

// Integer number-theoretic kernels. Inputs are small (divisor sums run over
// n up to a few hundred; property tests go to 10^4), so plain trial division
// throughout. Values that can grow (d^m in the Jordan totient) return Int.
namespace hmc::numtheory {

std::int64_t gcd(std::int64_t a, std::int64_t b); // not both zero
std::int64_t lcm(std::int64_t a, std::int64_t b); // a, b >= 1

// All positive divisors of n in ascending order, n >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

std::int64_t euler_phi(std::int64_t n); // n >= 1
int moebius(std::int64_t n);            // n >= 1, in {-1, 0, 1}

// Jordan totient phi_m(ell) = sum_{d | ell} mu(ell/d) d^m;  phi_1 = Euler phi.
Int jordan_totient(unsigned long m, std::int64_t ell); // ell >= 1

// sigma_k of the input values; sigma_0 = 1. k <= values.size().
Rat elementary_symmetric(const std::vector<Rat>& values, std::size_t k);

// [sigma_0, ..., sigma_n] in one pass (coefficients of prod (1 + a_i t)).
std::vector<Rat> elementary_symmetric_all(const std::vector<Rat>& values);

} // namespace hmc::numtheory
