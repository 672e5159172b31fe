#include "hmc/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "hmc/errors.hpp"
#include "hmc/hypercount.hpp"

namespace hmc::asympt {

double gamma_fn(double x) {
    if (!(x > 0)) throw std::domain_error("gamma_fn: x must be > 0");
    // glibc's tgamma is good to a few ulp on this range, well inside the
    // 1e-12 relative contract; the contract is pinned by tests.
    return std::tgamma(x);
}

AsymptoticParams derive(const FamilySpec& family) {
    HyperParams hp = hypercount::derive_params(family);
    AsymptoticParams ap;
    ap.N = hp.N;
    ap.lcm = hp.lcm_pq;
    ap.log_c = static_cast<double>(hp.c_exp) * std::log(static_cast<double>(hp.c_base));
    ap.gamma_prod = 1;
    for (const Rat& a : hp.a_list) {
        double ad = a.get_d();
        ap.a.push_back(ad);
        ap.sum_a += ad;
        ap.log_gamma_prod += std::lgamma(ad);
        ap.gamma_prod *= gamma_fn(ad);
    }
    return ap;
}

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double log_rooted_from(const AsymptoticParams& ap, std::int64_t k) {
    if (k < 1) throw std::domain_error("asymptotic estimate: k must be >= 1");
    double kk = static_cast<double>(k);
    return 0.5 * (ap.N - 1) * std::log(kTwoPi) + std::log(static_cast<double>(ap.lcm)) -
           ap.log_gamma_prod +
           ((ap.N - 1) * kk - 0.5 * (ap.N - 1) + ap.sum_a) * std::log(kk) +
           (1.0 + ap.log_c - ap.N) * kk;
}

} // namespace

double log_rooted_estimate(const FamilySpec& family, std::int64_t k) {
    return log_rooted_from(derive(family), k);
}

double log_conjugacy_estimate(const FamilySpec& family, std::int64_t k) {
    AsymptoticParams ap = derive(family);
    // the displayed closed form carries exponent -(N+1)/2 and no lcm factor
    double kk = static_cast<double>(k);
    double closed = 0.5 * (ap.N - 1) * std::log(kTwoPi) - ap.log_gamma_prod +
                    ((ap.N - 1) * kk - 0.5 * (ap.N + 1) + ap.sum_a) * std::log(kk) +
                    (1.0 + ap.log_c - ap.N) * kk;
    // must equal rooted/(lcm k); log-absolute difference is value-relative
    double via_rooted = log_rooted_from(ap, k) - std::log(static_cast<double>(ap.lcm * k));
    if (std::abs(via_rooted - closed) > 1e-12 * std::max(1.0, std::abs(closed)))
        throw internal_error("asymptotic conjugacy identity violated");
    return closed;
}

double rooted_estimate(const FamilySpec& family, std::int64_t k) {
    return std::exp(log_rooted_estimate(family, k));
}

double conjugacy_estimate(const FamilySpec& family, std::int64_t k) {
    return std::exp(log_conjugacy_estimate(family, k));
}

double log_int(const Int& v) {
    if (v <= 0) throw std::domain_error("log_int: value must be positive");
    signed long exp2;
    double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * std::log(2.0);
}

} // namespace hmc::asympt
