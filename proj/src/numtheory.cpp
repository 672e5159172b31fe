#include "hmc/numtheory.hpp"

#include <stdexcept>

namespace hmc::numtheory {

std::int64_t gcd(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) throw std::domain_error("gcd(0,0) is undefined");
    if (a < 0 || b < 0) throw std::domain_error("gcd: negative input");
    while (b != 0) {
        std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
    if (a < 1 || b < 1) throw std::domain_error("lcm: inputs must be >= 1");
    return a / gcd(a, b) * b;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::domain_error("divisors: n must be >= 1");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw std::domain_error("euler_phi: n must be >= 1");
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

int moebius(std::int64_t n) {
    if (n < 1) throw std::domain_error("moebius: n must be >= 1");
    int sign = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0; // square factor
        sign = -sign;
    }
    if (n > 1) sign = -sign;
    return sign;
}

Int jordan_totient(unsigned long m, std::int64_t ell) {
    if (ell < 1) throw std::domain_error("jordan_totient: ell must be >= 1");
    Int sum = 0;
    for (std::int64_t d : divisors(ell))
        sum += moebius(ell / d) * int_pow(Int(d), m);
    return sum;
}

std::vector<Rat> elementary_symmetric_all(const std::vector<Rat>& values) {
    // coefficients of prod_i (1 + a_i t), built up one factor at a time
    std::vector<Rat> sigma(values.size() + 1, Rat(0));
    sigma[0] = 1;
    std::size_t deg = 0;
    for (const Rat& a : values) {
        ++deg;
        for (std::size_t k = deg; k >= 1; --k)
            sigma[k] += a * sigma[k - 1];
    }
    return sigma;
}

Rat elementary_symmetric(const std::vector<Rat>& values, std::size_t k) {
    if (k > values.size())
        throw std::domain_error("elementary_symmetric: k exceeds list length");
    return elementary_symmetric_all(values)[k];
}

} // namespace hmc::numtheory
