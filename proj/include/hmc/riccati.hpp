#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hmc/family.hpp"
#include "hmc/series.hpp"

// Independent computation of the rooted growth series: w(x) = x f'(x)/f(x)
// satisfies w = x sum_{i=0}^{N} sigma_{N-i}(a) w_i with the tower
// w_0 = 1, w_1 = w, w_i = x w_{i-1}' + w w_{i-1}. Solving order by order
// gives H°(z) = lcm * w(c z^lcm) without ever touching f.
namespace hmc::riccati {

struct RiccatiEquation {
    int N = 0;
    std::vector<Rat> sigma; // sigma[0] = 1, ..., sigma[N] = prod a_i
    FamilySpec family;
};

// Thrown by named_recurrence for families outside the classical (N = 2)
// cases; carries the hierarchy order so callers can report it.
struct not_classical_riccati : std::domain_error {
    int N;
    explicit not_classical_riccati(const FamilySpec& family, int N_);
};

// The explicit integer recurrence in h-space for the classical families
// (2,3), (2,4), (3,3) and (2,inf):
//   h_{k+1} = c (k + sigma1) h_k + (c/lcm) sum_{i=0}^{k} h_i h_{k-i}
// where h_k is the count at dart index lcm*k.
struct NamedRecurrence {
    FamilySpec family;
    std::int64_t stride = 0; // lcm: counts live at indices stride*k
    Int c;
    Rat sigma1;
    Rat quad; // c / stride
    Int h1;

    // h_0..h_K (h_k = count at index stride*k); integrality asserted.
    std::vector<Int> coefficients(std::size_t K) const;
    CountReport as_report(std::size_t T) const;
    std::string describe() const;
};

RiccatiEquation build_equation(const FamilySpec& family);

// Unique power-series solution with w(0) = 0, up to x^K.
TruncSeries solve_w(const RiccatiEquation& eq, std::size_t K);

// The tower [w_0, ..., w_N] built from a given w, at w's truncation.
std::vector<TruncSeries> w_tower(const RiccatiEquation& eq, const TruncSeries& w);

// w - x * sum_i sigma_{N-i} w_i; identically zero for a solution.
TruncSeries equation_residual(const RiccatiEquation& eq, const TruncSeries& w);

// H° coefficients via the Riccati solve: h(lcm*k) = lcm * c^k * w_k.
CountReport rooted_from_riccati(const FamilySpec& family, std::size_t T);

NamedRecurrence named_recurrence(const FamilySpec& family);

// (p-1)(q-1) = (p,q) + 1, the condition for the hierarchy member to be a
// classical Riccati equation (finite p, q).
bool classical_riccati_condition(int p, int q);

} // namespace hmc::riccati
