#include "hmc/riccati.hpp"

#include <sstream>

#include "hmc/errors.hpp"
#include "hmc/hypercount.hpp"
#include "hmc/numtheory.hpp"

namespace hmc::riccati {

not_classical_riccati::not_classical_riccati(const FamilySpec& family, int N_)
    : std::domain_error("family " + family.str() +
                        " is not a classical Riccati case (N = " + std::to_string(N_) +
                        ", need N = 2)"),
      N(N_) {}

RiccatiEquation build_equation(const FamilySpec& family) {
    HyperParams hp = hypercount::derive_params(family);
    RiccatiEquation eq;
    eq.N = hp.N;
    eq.sigma = numtheory::elementary_symmetric_all(hp.a_list);
    eq.family = family;
    return eq;
}

namespace {

// x * s, truncated at s's order.
TruncSeries shift_up(const TruncSeries& s) {
    TruncSeries r(s.order());
    for (std::size_t k = 1; k <= r.order(); ++k)
        r.coeff[k] = s.coeff[k - 1];
    return r;
}

} // namespace

TruncSeries solve_w(const RiccatiEquation& eq, std::size_t K) {
    if (K < 1) throw std::domain_error("solve_w: K must be >= 1");
    // The right side carries a leading x, so its x^{n+1} coefficient only
    // involves w_0..w_n: each coefficient is determined exactly once.
    TruncSeries w(K);
    for (std::size_t n = 0; n < K; ++n) {
        TruncSeries prefix = w.truncated(n);
        TruncSeries cur = TruncSeries::constant(Rat(1), n); // w_0
        Rat acc = eq.sigma[eq.N] * cur.coeff[n];
        for (int i = 1; i <= eq.N; ++i) {
            cur = (i == 1) ? prefix : theta(cur) + prefix * cur;
            acc += eq.sigma[eq.N - i] * cur.coeff[n];
        }
        w.coeff[n + 1] = acc;
    }
    return w;
}

std::vector<TruncSeries> w_tower(const RiccatiEquation& eq, const TruncSeries& w) {
    std::vector<TruncSeries> tower;
    tower.push_back(TruncSeries::constant(Rat(1), w.order()));
    for (int i = 1; i <= eq.N; ++i)
        tower.push_back(i == 1 ? w : theta(tower.back()) + w * tower.back());
    return tower;
}

TruncSeries equation_residual(const RiccatiEquation& eq, const TruncSeries& w) {
    std::vector<TruncSeries> tower = w_tower(eq, w);
    TruncSeries rhs(w.order());
    for (int i = 0; i <= eq.N; ++i)
        rhs = rhs + scale(eq.sigma[eq.N - i], tower[i]);
    return w - shift_up(rhs);
}

CountReport rooted_from_riccati(const FamilySpec& family, std::size_t T) {
    HyperParams hp = hypercount::derive_params(family);
    if (T < static_cast<std::size_t>(hp.lcm_pq))
        throw std::domain_error("rooted_from_riccati: T below the first nonzero index");
    const std::size_t K = T / hp.lcm_pq;
    TruncSeries w = solve_w(build_equation(family), K);

    CountReport rep;
    rep.family = family;
    rep.kind = Kind::rooted;
    rep.method = Method::riccati;
    rep.coeff.resize(T + 1);
    Rat ck(1); // c^k
    for (std::size_t k = 1; k <= K; ++k) {
        ck *= Rat(hp.c_value);
        Rat h = Rat(hp.lcm_pq) * ck * w.coeff[k];
        if (!is_integer(h))
            throw internal_error("riccati count not integral at k=" + std::to_string(k) +
                                 " for " + family.str());
        rep.coeff[k * hp.lcm_pq] = h.get_num();
        if (rep.coeff[k * hp.lcm_pq] < 0)
            throw internal_error("riccati count negative at k=" + std::to_string(k));
    }
    return rep;
}

bool classical_riccati_condition(int p, int q) {
    return (p - 1) * (q - 1) == static_cast<int>(numtheory::gcd(p, q)) + 1;
}

NamedRecurrence named_recurrence(const FamilySpec& family) {
    RiccatiEquation eq = build_equation(family);
    if (eq.N != 2) throw not_classical_riccati(family, eq.N);
    HyperParams hp = hypercount::derive_params(family);

    NamedRecurrence rec;
    rec.family = family;
    rec.stride = hp.lcm_pq;
    rec.c = hp.c_value;
    rec.sigma1 = eq.sigma[1];
    rec.quad = Rat(hp.c_value) / Rat(hp.lcm_pq);
    Rat h1 = Rat(hp.lcm_pq) * Rat(hp.c_value) * eq.sigma[2];
    rec.h1 = to_integer(h1);
    return rec;
}

std::vector<Int> NamedRecurrence::coefficients(std::size_t K) const {
    std::vector<Int> h(K + 1);
    if (K >= 1) h[1] = h1;
    for (std::size_t k = 1; k < K; ++k) {
        Rat next = Rat(c) * (Rat(k) + sigma1) * Rat(h[k]);
        Rat conv(0);
        for (std::size_t i = 0; i <= k; ++i)
            conv += Rat(h[i]) * Rat(h[k - i]);
        next += quad * conv;
        if (!is_integer(next))
            throw internal_error("named recurrence produced a non-integer at k=" +
                                 std::to_string(k + 1));
        h[k + 1] = next.get_num();
    }
    return h;
}

CountReport NamedRecurrence::as_report(std::size_t T) const {
    std::vector<Int> h = coefficients(T / stride);
    CountReport rep;
    rep.family = family;
    rep.kind = Kind::rooted;
    rep.method = Method::riccati;
    rep.coeff.resize(T + 1);
    for (std::size_t k = 1; k < h.size(); ++k)
        rep.coeff[k * stride] = h[k];
    return rep;
}

std::string NamedRecurrence::describe() const {
    // n indexes steps of the stride: h(n) is the count on n darts
    std::ostringstream out;
    const std::string L = std::to_string(stride);
    Rat lin_const = Rat(c) * sigma1;
    out << "h(" << L << "(k+1)) = (" << c.get_str() << "k";
    if (lin_const != 0) out << " + " << lin_const.get_str();
    out << ") h(" << L << "k)";
    out << " + ";
    if (quad != 1) out << quad.get_str() << " ";
    out << "sum_{i=0..k} h(" << L << "i) h(" << L << "(k-i))";
    out << ",  h(" << L << ") = " << h1.get_str();
    return out.str();
}

} // namespace hmc::riccati
