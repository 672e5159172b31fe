#pragma once

#include "hmc/family.hpp"
#include "hmc/series.hpp"

// Rooted hypermap / free-subgroup growth series via the hypergeometric
// route: H*(z) = f(c z^lcm) with f_{k+1}/f_k = prod (k + a_i)/(k+1), and
// H° = z d/dz log H*.
namespace hmc::hypercount {

// Derives (lcm, gcd, N, c, a_list) for a family with at least one finite
// factor. For (p,inf): N = p, a_i = i/p, c = p^{p-1}. Throws on (inf,inf).
HyperParams derive_params(const FamilySpec& family);

// Ordinary coefficients of f: f_0 = 1, f_{k+1} = f_k prod_a (k+a) / (k+1),
// up to z^K.
TruncSeries f_series(const HyperParams& params, std::size_t K);

// H*(z) up to z^T, computed both by substitution f(c z^lcm) and directly
// from the factorial formula; exact agreement is enforced.
TruncSeries hstar_series(const FamilySpec& family, std::size_t T);

// Coefficients of H°(z) = z (H*)'/H* up to z^T. Integrality, positivity
// and support at multiples of lcm are asserted before storage.
CountReport rooted_series(const FamilySpec& family, std::size_t T);

// Index-n subgroup counts of Z*Z (all of them free), by Hall's recurrence
// s_n = n n! - sum_{k=1}^{n-1} k! s_{n-k}.
CountReport hall_series(std::size_t T);

// Dispatches on the family: hall_series for (inf,inf), rooted_series
// otherwise.
CountReport rooted_report(const FamilySpec& family, std::size_t T);

} // namespace hmc::hypercount
