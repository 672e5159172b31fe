#include "hmc/cycleindex.hpp"

#include <stdexcept>

#include "hmc/errors.hpp"
#include "hmc/hypercount.hpp"
#include "hmc/numtheory.hpp"

namespace hmc::cycleindex {

namespace nt = hmc::numtheory;

TruncSeries cycle_factor(std::int64_t m, int p, std::size_t K) {
    if (m < 1) throw std::domain_error("cycle_factor: m must be >= 1");
    if (K < 1) throw std::domain_error("cycle_factor: K must be >= 1");
    if (p == FamilySpec::kInf) {
        TruncSeries geo(K);
        for (std::size_t j = 0; j <= K; ++j) geo.coeff[j] = 1;
        return geo;
    }
    TruncSeries arg(K);
    for (std::int64_t d : nt::divisors(nt::gcd(m, p))) {
        std::size_t e = static_cast<std::size_t>(p / d);
        if (e > K) continue;
        Rat t(d * nt::euler_phi(d), m * p);
        t.canonicalize();
        arg.coeff[e] += t;
    }
    return exp_series(arg);
}

namespace {

CountReport finalize(const FamilySpec& family, Method method,
                     const std::vector<Rat>& acc, std::int64_t stride) {
    CountReport rep;
    rep.family = family;
    rep.kind = Kind::conjugacy;
    rep.method = method;
    rep.coeff.resize(acc.size());
    for (std::size_t n = 0; n < acc.size(); ++n) {
        if (!is_integer(acc[n]))
            throw internal_error("conjugacy count not integral at index " +
                                 std::to_string(n) + " for " + family.str() + ": " +
                                 acc[n].get_str());
        rep.coeff[n] = acc[n].get_num();
        if (rep.coeff[n] < 0)
            throw internal_error("conjugacy count negative at index " + std::to_string(n));
        if (stride > 0 && n % stride != 0 && rep.coeff[n] != 0)
            throw internal_error("conjugacy count off the lcm lattice at index " +
                                 std::to_string(n));
    }
    return rep;
}

} // namespace

CountReport conjugacy_series(const FamilySpec& family, std::size_t T) {
    std::int64_t stride = 0;
    if (family.both_finite()) {
        stride = nt::lcm(family.p, family.q);
        if (T < static_cast<std::size_t>(stride))
            throw std::domain_error("conjugacy_series: T below the first nonzero index");
    } else {
        if (T < 1) throw std::domain_error("conjugacy_series: T must be >= 1");
        if (family.p_finite()) stride = family.p; // dart count is a multiple of p
    }

    std::vector<Rat> acc(T + 1, Rat(0));
    for (std::int64_t m = 1; m <= static_cast<std::int64_t>(T); ++m) {
        const std::size_t Km = T / m; // largest useful z_m exponent
        TruncSeries P = cycle_factor(m, family.p, Km);
        TruncSeries Q = cycle_factor(m, family.q, Km);
        TruncSeries PQ = hadamard_weighted(P, Q, m);

        std::size_t e_min = 0;
        for (std::size_t e = 1; e <= PQ.order(); ++e)
            if (PQ.coeff[e] != 0) {
                e_min = e;
                break;
            }
        if (e_min == 0) continue; // supports never intersect below T

        TruncSeries L = log_series(PQ);
        for (std::int64_t k = 1; m * k * static_cast<std::int64_t>(e_min) <=
                                 static_cast<std::int64_t>(T);
             ++k) {
            int mu = nt::moebius(k);
            if (mu == 0) continue;
            Rat weight(mu, k);
            weight.canonicalize();
            const std::size_t cap = T / (m * k);
            for (std::size_t e = e_min; e <= cap && e <= L.order(); ++e) {
                if (L.coeff[e] == 0) continue;
                acc[m * k * e] += weight * L.coeff[e];
            }
        }
    }
    return finalize(family, Method::cycle_index, acc, stride);
}

CountReport conjugacy_series_f2(std::size_t T) {
    if (T < 1) throw std::domain_error("conjugacy_series_f2: T must be >= 1");
    const FamilySpec f2 = FamilySpec::make(FamilySpec::kInf, FamilySpec::kInf);

    // closed form from Hall's numbers and the Jordan totient
    CountReport hall = hypercount::hall_series(T);
    CountReport rep;
    rep.family = f2;
    rep.kind = Kind::conjugacy;
    rep.method = Method::closed_form;
    rep.coeff.resize(T + 1);
    for (std::size_t n = 1; n <= T; ++n) {
        Int sum = 0;
        for (std::int64_t ell : nt::divisors(static_cast<std::int64_t>(n))) {
            std::size_t cofactor = n / ell;
            sum += hall.coeff[cofactor] * nt::jordan_totient(cofactor + 1, ell);
        }
        if (sum % Int(static_cast<unsigned long>(n)) != 0)
            throw internal_error("f2 conjugacy closed form not divisible by n at n=" +
                                 std::to_string(n));
        rep.coeff[n] = sum / Int(static_cast<unsigned long>(n));
    }

    // independent route: the Moebius-log assembly over P_m = Q_m = 1/(1-z_m)
    CountReport via_log = conjugacy_series(f2, T);
    if (via_log.coeff != rep.coeff)
        throw internal_error("f2 conjugacy: closed form and Moebius-log routes disagree");
    return rep;
}

CountReport conjugacy_report(const FamilySpec& family, std::size_t T) {
    if (family.both_infinite()) return conjugacy_series_f2(T);
    return conjugacy_series(family, T);
}

} // namespace hmc::cycleindex
