#include "hmc/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hmc {

TruncSeries TruncSeries::constant(const Rat& c, std::size_t trunc_order) {
    TruncSeries s(trunc_order);
    s.coeff[0] = c;
    return s;
}

TruncSeries TruncSeries::monomial(const Rat& c, std::size_t power, std::size_t trunc_order) {
    TruncSeries s(trunc_order);
    if (power <= trunc_order) s.coeff[power] = c;
    return s;
}

TruncSeries TruncSeries::truncated(std::size_t trunc_order) const {
    TruncSeries s(trunc_order);
    for (std::size_t k = 0; k <= std::min(trunc_order, order()); ++k)
        s.coeff[k] = coeff[k];
    return s;
}

bool TruncSeries::is_zero() const {
    for (const Rat& r : coeff)
        if (r != 0) return false;
    return true;
}

std::string TruncSeries::str(const std::string& var) const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k <= order(); ++k) {
        if (coeff[k] == 0) continue;
        if (!first) out << " + ";
        first = false;
        out << coeff[k].get_str();
        if (k >= 1) out << "*" << var << "^" << k;
    }
    if (first) out << "0";
    return out.str();
}

TruncSeries add(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= r.order(); ++k)
        r.coeff[k] = a.coeff[k] + b.coeff[k];
    return r;
}

TruncSeries sub(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= r.order(); ++k)
        r.coeff[k] = a.coeff[k] - b.coeff[k];
    return r;
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
    TruncSeries r(std::min(a.order(), b.order()));
    for (std::size_t i = 0; i <= r.order(); ++i) {
        if (a.coeff[i] == 0) continue;
        for (std::size_t j = 0; i + j <= r.order(); ++j) {
            if (b.coeff[j] == 0) continue;
            r.coeff[i + j] += a.coeff[i] * b.coeff[j];
        }
    }
    return r;
}

TruncSeries scale(const Rat& c, const TruncSeries& a) {
    TruncSeries r = a;
    for (Rat& x : r.coeff) x *= c;
    return r;
}

TruncSeries derivative(const TruncSeries& a) {
    if (a.order() < 1) throw std::domain_error("derivative: order must be >= 1");
    TruncSeries r(a.order() - 1);
    for (std::size_t k = 1; k <= a.order(); ++k)
        r.coeff[k - 1] = Rat(k) * a.coeff[k];
    return r;
}

TruncSeries theta(const TruncSeries& a) {
    TruncSeries r(a.order());
    for (std::size_t k = 1; k <= a.order(); ++k)
        r.coeff[k] = Rat(k) * a.coeff[k];
    return r;
}

TruncSeries divide(const TruncSeries& a, const TruncSeries& b) {
    if (b.coeff[0] == 0) throw std::domain_error("divide: denominator has zero constant term");
    TruncSeries r(std::min(a.order(), b.order()));
    for (std::size_t k = 0; k <= r.order(); ++k) {
        Rat acc = a.coeff[k];
        for (std::size_t j = 1; j <= k; ++j)
            acc -= b.coeff[j] * r.coeff[k - j];
        r.coeff[k] = acc / b.coeff[0];
    }
    return r;
}

TruncSeries log_series(const TruncSeries& a) {
    if (a.coeff[0] != 1) throw std::domain_error("log_series: constant term must be 1");
    TruncSeries r(a.order());
    if (a.order() == 0) return r;
    // (log a)' = a'/a, then integrate termwise; constant term 0
    TruncSeries q = divide(derivative(a), a.truncated(a.order() - 1));
    for (std::size_t k = 1; k <= a.order(); ++k)
        r.coeff[k] = q.coeff[k - 1] / Rat(k);
    return r;
}

TruncSeries exp_series(const TruncSeries& a) {
    if (a.coeff[0] != 0) throw std::domain_error("exp_series: constant term must be 0");
    // y' = a' y order by order: k y_k = sum_{j=1}^{k} j a_j y_{k-j}
    TruncSeries r(a.order());
    r.coeff[0] = 1;
    for (std::size_t k = 1; k <= a.order(); ++k) {
        Rat acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a.coeff[j] == 0) continue;
            acc += Rat(j) * a.coeff[j] * r.coeff[k - j];
        }
        r.coeff[k] = acc / Rat(k);
    }
    return r;
}

TruncSeries substitute_monomial(const TruncSeries& a, const Rat& c, std::size_t m) {
    if (m == 0) throw std::domain_error("substitute_monomial: m must be >= 1");
    TruncSeries r(m * a.order());
    Rat ck(1);
    for (std::size_t k = 0; k <= a.order(); ++k) {
        r.coeff[m * k] = a.coeff[k] * ck;
        ck *= c;
    }
    return r;
}

TruncSeries hadamard(const TruncSeries& a, const TruncSeries& b, HadamardMode mode) {
    TruncSeries r(std::min(a.order(), b.order()));
    Rat nfact(1);
    for (std::size_t k = 0; k <= r.order(); ++k) {
        if (k > 0) nfact *= Rat(k);
        r.coeff[k] = a.coeff[k] * b.coeff[k];
        if (mode == HadamardMode::egf) r.coeff[k] *= nfact;
    }
    return r;
}

TruncSeries hadamard_weighted(const TruncSeries& a, const TruncSeries& b, std::size_t m) {
    if (m == 0) throw std::domain_error("hadamard_weighted: m must be >= 1");
    TruncSeries r(std::min(a.order(), b.order()));
    Rat w(1); // k! m^k
    for (std::size_t k = 0; k <= r.order(); ++k) {
        if (k > 0) w *= Rat(k) * Rat(m);
        r.coeff[k] = a.coeff[k] * b.coeff[k] * w;
    }
    return r;
}

} // namespace hmc
