#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hmc/rational.hpp"

namespace hmc {

// A free product Z_p * Z_q; p or q may be the infinite cyclic factor,
// written here as the value kInf. Canonical form keeps a single infinite
// factor in the q position, so the three shapes are (p,q), (p,inf),
// (inf,inf).
struct FamilySpec {
    static constexpr int kInf = 0;

    int p = 2;
    int q = 3;

    bool p_finite() const { return p != kInf; }
    bool q_finite() const { return q != kInf; }
    bool both_finite() const { return p_finite() && q_finite(); }
    bool both_infinite() const { return !p_finite() && !q_finite(); }

    // Validates (finite factors >= 2; p*q >= 6 when both finite) and
    // canonicalizes. Throws std::domain_error on invalid input.
    static FamilySpec make(int p, int q);

    std::string str() const; // "(2,3)", "(2,inf)", "(inf,inf)"

    bool operator==(const FamilySpec&) const = default;
};

// Parameters of the hypergeometric form of the growth series for one
// family: H*(z) = f(c z^lcm) with f a pure-numerator hypergeometric series
// with parameter list a_list of length N, and c = c_base^c_exp an exact
// integer.
struct HyperParams {
    std::int64_t lcm_pq = 0;
    std::int64_t gcd_pq = 0;
    int N = 0;
    std::int64_t c_base = 0;
    std::int64_t c_exp = 0;
    Int c_value;
    std::vector<Rat> a_list;
};

enum class Kind { rooted, conjugacy };
enum class Method { hypergeometric, riccati, cycle_index, oracle, closed_form };

std::string to_string(Kind k);
std::string to_string(Method m);

// Exact integer coefficient table for one family and kind, with the method
// that produced it. coeff[n] is the count at index n (dart count n).
struct CountReport {
    FamilySpec family;
    Kind kind = Kind::rooted;
    Method method = Method::hypergeometric;
    std::vector<Int> coeff;

    std::size_t max_index() const { return coeff.empty() ? 0 : coeff.size() - 1; }
    const Int& at(std::size_t n) const { return coeff.at(n); }

    // Indices with nonzero count, ascending.
    std::vector<std::size_t> support() const;
    // Nonzero counts in index order (the "first K nonzero terms" view).
    std::vector<Int> nonzero_values() const;
};

} // namespace hmc
