#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace aginv {

// Arbitrary-precision integer used throughout the kernel. Intermediate
// entries of a Smith reduction routinely leave the 64-bit range even for
// small inputs, so fixed-width arithmetic is never used on matrix data.
using Int = mpz_class;

inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

inline Int pow_int(const Int& base, unsigned long exponent) {
    Int result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

inline Int binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

inline std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace aginv
