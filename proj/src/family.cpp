#include "hmc/family.hpp"

#include <stdexcept>

namespace hmc {

FamilySpec FamilySpec::make(int p, int q) {
    FamilySpec f;
    // single infinite factor goes to the q position
    if (p == kInf && q != kInf) std::swap(p, q);
    f.p = p;
    f.q = q;
    if (f.p_finite() && f.p < 2)
        throw std::domain_error("family: finite factor must be >= 2");
    if (f.q_finite() && f.q < 2)
        throw std::domain_error("family: finite factor must be >= 2");
    if (f.both_finite() && f.p * f.q < 6)
        throw std::domain_error("family: p*q >= 6 required for finite (p,q)");
    return f;
}

std::string FamilySpec::str() const {
    auto part = [](int v) { return v == kInf ? std::string("inf") : std::to_string(v); };
    return "(" + part(p) + "," + part(q) + ")";
}

std::string to_string(Kind k) {
    return k == Kind::rooted ? "rooted" : "conjugacy";
}

std::string to_string(Method m) {
    switch (m) {
        case Method::hypergeometric: return "hypergeometric";
        case Method::riccati: return "riccati";
        case Method::cycle_index: return "cycle_index";
        case Method::oracle: return "oracle";
        case Method::closed_form: return "closed_form";
    }
    return "?";
}

std::vector<std::size_t> CountReport::support() const {
    std::vector<std::size_t> idx;
    for (std::size_t n = 0; n < coeff.size(); ++n)
        if (coeff[n] != 0) idx.push_back(n);
    return idx;
}

std::vector<Int> CountReport::nonzero_values() const {
    std::vector<Int> v;
    for (const Int& c : coeff)
        if (c != 0) v.push_back(c);
    return v;
}

} // namespace hmc
