#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "hmc/errors.hpp"

namespace hmc {

// All exact arithmetic goes through GMP. mpq_class keeps every value in
// lowest terms with a positive denominator, so equality and printing are
// canonical without extra work.
using Int = mpz_class;
using Rat = mpq_class;

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Exact conversion; throws if r has a nontrivial denominator.
inline Int to_integer(const Rat& r) {
    if (!is_integer(r))
        throw internal_error("expected integer, got " + r.get_str());
    return r.get_num();
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace hmc
