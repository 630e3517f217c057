#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace polycert {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    r.canonicalize();
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// k (k-1) ... (k-s+1)
inline Int falling_factorial(const Int& k, unsigned long s) {
    Int r = 1;
    for (unsigned long i = 0; i < s; ++i) r *= k - static_cast<long>(i);
    return r;
}

}  // namespace polycert
