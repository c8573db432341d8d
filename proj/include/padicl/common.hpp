#pragma once

#include <gmpxx.h>
#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace padicl {

// Exact rational used for valuations, annulus radii and certificate slopes.
// Denominators stay tiny (divisors of d_n = p^{n-1}(p-1)), so long long is ample.
using Rat = boost::rational<long long>;

inline long long rat_floor(const Rat& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}
inline long long rat_ceil(const Rat& r) { return -rat_floor(-r); }
inline double rat_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

struct PadicError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define PADICL_ERROR(name)                          \
    struct name : PadicError {                      \
        using PadicError::PadicError;               \
        name() : PadicError(#name) {}               \
    }

PADICL_ERROR(DivisionByZeroPrecision);
PADICL_ERROR(NotAUnit);
PADICL_ERROR(OutsideLogDomain);
PADICL_ERROR(OutsideExpDomain);
PADICL_ERROR(LevelError);
PADICL_ERROR(NotIntegral);
PADICL_ERROR(InsufficientTruncation);
PADICL_ERROR(InsufficientPrecision);
PADICL_ERROR(NoAdmissibleN);
PADICL_ERROR(NotAdmissible);
PADICL_ERROR(NotPsiZero);
PADICL_ERROR(InvalidEigenvalue);
PADICL_ERROR(InvalidEpsilon);
PADICL_ERROR(NotLocallyAnalytic);
PADICL_ERROR(ConfigError);

#undef PADICL_ERROR

// p^k as an mpz (k >= 0).
inline mpz_class pow_p(long p, long k) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
    return r;
}

// v_p of an exact nonzero integer.
inline long val_p(const mpz_class& x, long p) {
    if (x == 0) throw PadicError("val_p of exact zero");
    mpz_class tmp;
    mpz_class pz(p);
    return static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

inline long long ipow(long long b, long e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace padicl
