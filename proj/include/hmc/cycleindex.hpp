#pragma once

#include "hmc/family.hpp"
#include "hmc/series.hpp"

// Isomorphism-class / conjugacy-class growth series via cycle indices:
//   H~(z) = sum_{k>=1} mu(k)/k sum_{m>=1} log(P_m (*) Q_m)(z_m) | z_m = z^{mk}
// where P_m, Q_m are the per-variable factors of the cycle indices of the
// two cycle-type species and (*) is the weighted (variable z_m) Hadamard
// product. The Moebius weights are exact rationals; the final series must
// come out integral, which is asserted.
namespace hmc::cycleindex {

// The variable-z_m factor of the cycle index: for finite p,
//   exp( 1/(m p) * sum_{d | (m,p)} d phi(d) z^{p/d} ),
// for the infinite factor the geometric series 1/(1-z). Truncated at z^K.
TruncSeries cycle_factor(std::int64_t m, int p, std::size_t K);

// Conjugacy counts for any family shape, up to index T.
CountReport conjugacy_series(const FamilySpec& family, std::size_t T);

// Z*Z specialisation: the Jordan-totient closed form
//   c(n) = (1/n) sum_{l | n} s_{n/l} phi_{n/l+1}(l)
// cross-checked coefficient-by-coefficient against the Moebius-log route;
// disagreement is fatal.
CountReport conjugacy_series_f2(std::size_t T);

// Dispatches on the family: conjugacy_series_f2 for (inf,inf) (it carries
// the dual-route check), conjugacy_series otherwise.
CountReport conjugacy_report(const FamilySpec& family, std::size_t T);

} // namespace hmc::cycleindex
