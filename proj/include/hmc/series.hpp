#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hmc/rational.hpp"

namespace hmc {

// Truncated formal power series over exact rationals. coeff[k] is the
// coefficient of z^k; the truncation order T is coeff.size() - 1 and is
// carried explicitly. Binary operations narrow to the smaller order, so
// precision loss is visible in the result's order, never silent.
struct TruncSeries {
    std::vector<Rat> coeff;

    TruncSeries() : coeff(1) {}
    explicit TruncSeries(std::size_t trunc_order) : coeff(trunc_order + 1) {}

    std::size_t order() const { return coeff.size() - 1; }

    const Rat& operator[](std::size_t k) const { return coeff[k]; }
    Rat& operator[](std::size_t k) { return coeff[k]; }

    static TruncSeries constant(const Rat& c, std::size_t trunc_order);
    static TruncSeries monomial(const Rat& c, std::size_t power, std::size_t trunc_order);

    // Copy truncated (or zero-extended) to the given order.
    TruncSeries truncated(std::size_t trunc_order) const;

    bool is_zero() const;
    bool operator==(const TruncSeries& other) const { return coeff == other.coeff; }

    std::string str(const std::string& var = "z") const; // for diagnostics
};

TruncSeries add(const TruncSeries& a, const TruncSeries& b);
TruncSeries sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries scale(const Rat& c, const TruncSeries& a);

inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return add(a, b); }
inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return sub(a, b); }
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return mul(a, b); }

// Termwise d/dz; order drops by one. Requires order >= 1.
TruncSeries derivative(const TruncSeries& a);

// theta = z d/dz: coefficient k multiplied by k. Order unchanged.
TruncSeries theta(const TruncSeries& a);

// Formal log, a(0) = 1 required; computed from (log a)' = a'/a.
TruncSeries log_series(const TruncSeries& a);

// Formal exp, a(0) = 0 required; computed from y' = a' y.
TruncSeries exp_series(const TruncSeries& a);

// Cauchy quotient, b(0) != 0 required.
TruncSeries divide(const TruncSeries& a, const TruncSeries& b);

// b(z) = a(c z^m): coefficient of z^{mk} is a_k c^k. Order becomes m * order(a).
TruncSeries substitute_monomial(const TruncSeries& a, const Rat& c, std::size_t m);

// Hadamard products. Both coefficient conventions are in live use by the
// callers, so the mode is always an explicit choice, never inferred.
enum class HadamardMode { ogf, egf };

// ogf: c_n = a_n b_n.  egf: c_n = a_n b_n n!  (a, b stored as ordinary
// coefficients of EGFs, i.e. a_n = A_n / n!).
TruncSeries hadamard(const TruncSeries& a, const TruncSeries& b, HadamardMode mode);

// Single-variable slice of the multivariate Hadamard product in variable
// z_m: the partition m^k has weight m^k k!, so c_k = a_k b_k k! m^k.
// m = 1 coincides with egf-mode hadamard.
TruncSeries hadamard_weighted(const TruncSeries& a, const TruncSeries& b, std::size_t m);

} // namespace hmc
