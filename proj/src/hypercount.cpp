#include "hmc/hypercount.hpp"

#include <stdexcept>

#include "hmc/errors.hpp"
#include "hmc/numtheory.hpp"

namespace hmc::hypercount {

namespace nt = hmc::numtheory;

HyperParams derive_params(const FamilySpec& family) {
    if (family.both_infinite())
        throw std::domain_error("derive_params: (inf,inf) has no hypergeometric form; "
                                "use hall_series");
    HyperParams hp;
    if (family.both_finite()) {
        const std::int64_t p = family.p, q = family.q;
        hp.gcd_pq = nt::gcd(p, q);
        hp.lcm_pq = nt::lcm(p, q);
        // a_list = { i/lcm : 1 <= i < lcm, p∤i, q∤i }
        for (std::int64_t i = 1; i < hp.lcm_pq; ++i) {
            if (i % p == 0 || i % q == 0) continue;
            Rat a(i, hp.lcm_pq);
            a.canonicalize();
            hp.a_list.push_back(a);
        }
        if ((p * q - p - q) % hp.gcd_pq != 0)
            throw internal_error("derive_params: (pq-p-q)/gcd not integral");
        hp.N = 1 + static_cast<int>((p * q - p - q) / hp.gcd_pq);
        hp.c_base = hp.lcm_pq;
        hp.c_exp = (p * q - p - q) / hp.gcd_pq;
    } else {
        // (p, inf)
        const std::int64_t p = family.p;
        hp.gcd_pq = p;
        hp.lcm_pq = p;
        for (std::int64_t i = 1; i <= p; ++i) {
            Rat a(i, p);
            a.canonicalize();
            hp.a_list.push_back(a);
        }
        hp.N = static_cast<int>(p);
        hp.c_base = p;
        hp.c_exp = p - 1;
    }
    if (hp.a_list.size() != static_cast<std::size_t>(hp.N))
        throw internal_error("derive_params: N does not match parameter count for " +
                             family.str());
    hp.c_value = int_pow(Int(hp.c_base), static_cast<unsigned long>(hp.c_exp));
    return hp;
}

TruncSeries f_series(const HyperParams& params, std::size_t K) {
    TruncSeries f(K);
    f.coeff[0] = 1;
    for (std::size_t k = 0; k < K; ++k) {
        Rat ratio(1);
        for (const Rat& a : params.a_list)
            ratio *= Rat(k) + a;
        f.coeff[k + 1] = f.coeff[k] * ratio / Rat(k + 1);
    }
    return f;
}

namespace {

// Coefficient of z^n in H* from the closed factorial form: for finite
// (p,q) at n = lcm*k it is n! / (p^{n/p} (n/p)! q^{n/q} (n/q)!); for
// (p,inf) at n = p*k it is (pk)!/(p^k k!).
Rat hstar_coeff_factorial(const FamilySpec& family, std::size_t n) {
    if (n == 0) return Rat(1);
    if (family.both_finite()) {
        const std::size_t p = family.p, q = family.q;
        if (n % p != 0 || n % q != 0) return Rat(0);
        Rat den(int_pow(Int(p), n / p) * factorial(n / p) *
                int_pow(Int(q), n / q) * factorial(n / q));
        Rat r = Rat(factorial(n)) / den;
        r.canonicalize();
        return r;
    }
    const std::size_t p = family.p;
    if (n % p != 0) return Rat(0);
    const std::size_t k = n / p;
    Rat r = Rat(factorial(n)) / Rat(int_pow(Int(p), k) * factorial(k));
    r.canonicalize();
    return r;
}

} // namespace

TruncSeries hstar_series(const FamilySpec& family, std::size_t T) {
    HyperParams hp = derive_params(family);
    if (T < static_cast<std::size_t>(hp.lcm_pq))
        throw std::domain_error("hstar_series: T below the first nonzero index");
    const std::size_t K = T / hp.lcm_pq;
    TruncSeries sub =
        substitute_monomial(f_series(hp, K), Rat(hp.c_value), hp.lcm_pq).truncated(T);
    for (std::size_t n = 0; n <= T; ++n) {
        if (sub.coeff[n] != hstar_coeff_factorial(family, n))
            throw internal_error("hstar_series: substitution and factorial routes "
                                 "disagree at z^" + std::to_string(n) + " for " +
                                 family.str());
    }
    return sub;
}

namespace {

CountReport report_from_series(const FamilySpec& family, Kind kind, Method method,
                               const TruncSeries& s, std::int64_t stride) {
    CountReport rep;
    rep.family = family;
    rep.kind = kind;
    rep.method = method;
    rep.coeff.resize(s.order() + 1);
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if (!is_integer(s.coeff[n]))
            throw internal_error("non-integral count " + s.coeff[n].get_str() +
                                 " at index " + std::to_string(n) + " for " + family.str());
        rep.coeff[n] = s.coeff[n].get_num();
        if (rep.coeff[n] < 0)
            throw internal_error("negative count at index " + std::to_string(n) +
                                 " for " + family.str());
        if (stride > 0 && n % stride != 0 && rep.coeff[n] != 0)
            throw internal_error("nonzero count off the lcm lattice at index " +
                                 std::to_string(n) + " for " + family.str());
    }
    return rep;
}

} // namespace

CountReport rooted_series(const FamilySpec& family, std::size_t T) {
    HyperParams hp = derive_params(family);
    TruncSeries hcirc = theta(log_series(hstar_series(family, T)));
    return report_from_series(family, Kind::rooted, Method::hypergeometric, hcirc,
                              hp.lcm_pq);
}

CountReport hall_series(std::size_t T) {
    if (T < 1) throw std::domain_error("hall_series: T must be >= 1");
    CountReport rep;
    rep.family = FamilySpec::make(FamilySpec::kInf, FamilySpec::kInf);
    rep.kind = Kind::rooted;
    rep.method = Method::closed_form;
    rep.coeff.resize(T + 1);
    rep.coeff[0] = 0;
    rep.coeff[1] = 1;
    for (std::size_t n = 2; n <= T; ++n) {
        Int s = n * factorial(n);
        for (std::size_t k = 1; k < n; ++k)
            s -= factorial(k) * rep.coeff[n - k];
        if (s <= 0)
            throw internal_error("hall_series: nonpositive count at n=" + std::to_string(n));
        rep.coeff[n] = s;
    }
    return rep;
}

CountReport rooted_report(const FamilySpec& family, std::size_t T) {
    if (family.both_infinite()) return hall_series(T);
    return rooted_series(family, T);
}

} // namespace hmc::hypercount
