#pragma once

#include "common.hpp"

namespace padicl {

/**
 * Element of Q_p known to an explicit absolute precision p^M (odd p only).
 *
 * Stored as value = p^val * u with u a unit reduced mod p^{M-val}; "zero to
 * precision" means value == 0 mod p^M and is flagged rather than given a
 * valuation. Arithmetic never reports more precision than its inputs justify.
 */
class PadicScalar {
public:
    PadicScalar() : p_(3), val_(0), M_(0), zero_(true), u_(0) {}

    static PadicScalar zero(long p, long M);
    static PadicScalar from_mpz(long p, const mpz_class& v, long M);
    static PadicScalar from_int(long p, long long v, long M) {
        return from_mpz(p, mpz_class(static_cast<long>(v)), M);
    }
    static PadicScalar from_mpq(long p, const mpq_class& v, long M);
    // value = p^val * u, u given as exact integer (need not be reduced).
    static PadicScalar from_unit(long p, long val, const mpz_class& u, long M);

    long p() const { return p_; }
    long prec() const { return M_; }
    bool is_zero() const { return zero_; }           // zero to stated precision
    long val() const { return zero_ ? M_ : val_; }   // v_p, with zero reported as M
    const mpz_class& unit() const { return u_; }

    // Plain representative of the value mod p^M; requires val >= 0 or zero.
    mpz_class residue() const;

    PadicScalar operator-() const;
    PadicScalar operator+(const PadicScalar& o) const;
    PadicScalar operator-(const PadicScalar& o) const;
    PadicScalar operator*(const PadicScalar& o) const;
    PadicScalar operator/(const PadicScalar& o) const;

    PadicScalar mul_mpz(const mpz_class& k) const;   // exact integer factor
    PadicScalar inv() const;
    PadicScalar pow(long e) const;                   // e may be negative
    PadicScalar shift(long k) const;                 // * p^k (k may be negative)

    // Reduce to absolute precision m <= M.
    PadicScalar with_precision(long m) const;
    // Arbitrary lift to absolute precision m >= M (keeps the stored residue).
    PadicScalar lift_precision(long m) const;

    // v_p(*this - o) >= k, with both operands certified to precision >= k.
    bool congruent(const PadicScalar& o, long k) const;

    std::string render() const;                      // "val=v residue=r mod p^M"
    static PadicScalar parse(long p, const std::string& s);

private:
    long p_;
    long val_;
    long M_;
    bool zero_;
    mpz_class u_;

    void normalize();
};

// Teichmuller lift: the (p-1)-st root of unity congruent to a mod p.
PadicScalar teichmuller(long p, long a, long M);

// log on 1 + pZ_p (alternating series with certified tail).
PadicScalar plog(const PadicScalar& x);

// exp on pZ_p (p odd; certified tail).
PadicScalar pexp(const PadicScalar& x);

// binom(a, k) = a(a-1)...(a-k+1)/k!.
PadicScalar padic_binomial(const PadicScalar& a, long k);

} // namespace padicl
