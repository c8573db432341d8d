#pragma once

#include "padic.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace padicl {

/**
 * Immutable descriptor of L_n = Q_p(zeta_{p^n}) with the power basis in
 * pi_n = zeta_{p^n} - 1. Carries the defining (Eisenstein) polynomial E_n,
 * exact integer reduction rows for pi^{d+k}, and the table of zeta powers
 * (1+pi)^j in the pi basis. Levels are cached and shared.
 */
class CycloLevel {
public:
    long p;
    long n;       // level >= 0
    long d;       // degree p^{n-1}(p-1), or 1 at level 0
    long pn;      // p^n
    std::vector<mpz_class> E;                    // monic, length d+1
    std::vector<std::vector<mpz_class>> red;     // pi^{d+k} mod E, k = 0..d-2
    std::vector<std::vector<mpz_class>> zt;      // (1+pi)^j mod E, j = 0..pn-1

    static const CycloLevel* get(long p, long n);

    // r_n = v_p(pi_n) = 1/(p^{n-1}(p-1)); level 0 has no uniformizer, returns 1.
    Rat r() const { return n == 0 ? Rat(1) : Rat(1, d); }

private:
    CycloLevel(long p_, long n_);
};

/** Element of L_n as sum c_k pi_n^k, coefficients precision-tracked. */
class CycloElem {
public:
    const CycloLevel* lv = nullptr;
    std::vector<PadicScalar> c;

    CycloElem() = default;
    CycloElem(const CycloLevel* level) : lv(level), c(level->d) {
        for (auto& x : c) x = PadicScalar::zero(level->p, 1);
    }

    static CycloElem zero(const CycloLevel* lv, long M);
    static CycloElem from_scalar(const CycloLevel* lv, const PadicScalar& s); // constant
    static CycloElem pi(const CycloLevel* lv, long M);

    long p() const { return lv->p; }

    CycloElem operator+(const CycloElem& o) const;
    CycloElem operator-(const CycloElem& o) const;
    CycloElem operator-() const;
    CycloElem operator*(const CycloElem& o) const;
    CycloElem mul_scalar(const PadicScalar& s) const;
    CycloElem mul_mpz(const mpz_class& k) const;
    CycloElem shift(long k) const;                 // * p^k
    CycloElem inverse() const;                     // Newton; requires unit of O_{L_n}

    // v_p as a rational in (1/d_n)Z; nullopt when zero to stated precision.
    std::optional<Rat> val() const;
    // certified absolute precision (min over coords of M_k + k r_n)
    Rat prec() const;

    PadicScalar to_scalar() const;                 // level-0 round trip
    bool congruent(const CycloElem& o, long k) const;

    std::string render() const;                    // "level=n [c0, ...] mod p^M"
};

// zeta_{p^n}^a as a CycloElem (any integer a; n >= 1).
CycloElem zeta_power(long p, long n, long long a, long M);

// Embedding L_n -> L_m, pi_n -> (1+pi_m)^{p^{m-n}} - 1.
CycloElem lift_level(const CycloElem& x, long m);

// Galois action zeta -> zeta^a, a a unit mod p^n.
CycloElem galois(long long a, const CycloElem& x);

// Tr_{L_m/L_n} down to level n <= m (not normalized).
CycloElem trace_down(const CycloElem& x, long n);

// pi-basis -> zeta-power coordinates (f(pi) = sum g_k zeta^k, k < d).
std::vector<PadicScalar> to_zeta_coords(const CycloElem& x);
// zeta-power coordinates (any indices 0..p^n-1) -> pi basis.
CycloElem from_zeta_coords(const CycloLevel* lv, const std::vector<PadicScalar>& g);

} // namespace padicl
