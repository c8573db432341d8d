#include "padicl/padic.hpp"

#include <sstream>

namespace padicl {

void PadicScalar::normalize() {
    if (zero_) {
        u_ = 0;
        val_ = 0;
        return;
    }
    if (u_ == 0) {
        zero_ = true;
        val_ = 0;
        return;
    }
    long t = val_p(u_, p_);
    if (t > 0) {
        mpz_class pt = pow_p(p_, t);
        mpz_divexact(u_.get_mpz_t(), u_.get_mpz_t(), pt.get_mpz_t());
        val_ += t;
    }
    if (val_ >= M_) {
        zero_ = true;
        u_ = 0;
        val_ = 0;
        return;
    }
    mpz_class mod = pow_p(p_, M_ - val_);
    mpz_fdiv_r(u_.get_mpz_t(), u_.get_mpz_t(), mod.get_mpz_t());
    if (u_ == 0) {
        zero_ = true;
        val_ = 0;
    }
}

PadicScalar PadicScalar::zero(long p, long M) {
    PadicScalar r;
    r.p_ = p;
    r.M_ = M;
    r.zero_ = true;
    return r;
}

PadicScalar PadicScalar::from_mpz(long p, const mpz_class& v, long M) {
    PadicScalar r;
    r.p_ = p;
    r.M_ = M;
    r.zero_ = false;
    r.val_ = 0;
    r.u_ = v;
    r.normalize();
    return r;
}

PadicScalar PadicScalar::from_unit(long p, long val, const mpz_class& u, long M) {
    PadicScalar r;
    r.p_ = p;
    r.M_ = M;
    r.zero_ = false;
    r.val_ = val;
    r.u_ = u;
    r.normalize();
    return r;
}

PadicScalar PadicScalar::from_mpq(long p, const mpq_class& v, long M) {
    if (v == 0) return zero(p, M);
    mpz_class num = v.get_num(), den = v.get_den();
    long vn = val_p(num, p), vd = val_p(den, p);
    mpz_class pn = pow_p(p, vn), pd = pow_p(p, vd);
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), pn.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), pd.get_mpz_t());
    long val = vn - vd;
    if (val >= M) return zero(p, M);
    mpz_class mod = pow_p(p, M - val);
    mpz_class di;
    if (mpz_invert(di.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw NotAUnit();
    return from_unit(p, val, num * di, M);
}

mpz_class PadicScalar::residue() const {
    if (zero_) return mpz_class(0);
    if (val_ < 0) throw PadicError("residue of negative-valuation value");
    mpz_class r = u_ * pow_p(p_, val_);
    mpz_class mod = pow_p(p_, M_);
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    return r;
}

PadicScalar PadicScalar::operator-() const {
    if (zero_) return *this;
    PadicScalar r = *this;
    mpz_class mod = pow_p(p_, M_ - val_);
    r.u_ = mod - u_;
    r.normalize();
    return r;
}

PadicScalar PadicScalar::operator+(const PadicScalar& o) const {
    if (p_ != o.p_) throw PadicError("prime mismatch");
    long Mo = std::min(M_, o.M_);
    if (zero_ && o.zero_) return zero(p_, Mo);
    if (zero_) return o.with_precision(Mo);
    if (o.zero_) return with_precision(Mo);
    long v0 = std::min(val_, o.val_);
    if (v0 >= Mo) return zero(p_, Mo);
    mpz_class s = u_ * pow_p(p_, val_ - v0) + o.u_ * pow_p(p_, o.val_ - v0);
    return from_unit(p_, v0, s, Mo);
}

PadicScalar PadicScalar::operator-(const PadicScalar& o) const { return *this + (-o); }

PadicScalar PadicScalar::operator*(const PadicScalar& o) const {
    if (p_ != o.p_) throw PadicError("prime mismatch");
    if (zero_ || o.zero_) {
        long Mz;
        if (zero_ && o.zero_) Mz = M_ + o.M_;
        else if (zero_) Mz = M_ + o.val_;
        else Mz = o.M_ + val_;
        return zero(p_, Mz);
    }
    long R = std::min(M_ - val_, o.M_ - o.val_);
    long v = val_ + o.val_;
    mpz_class mod = pow_p(p_, R);
    mpz_class u = u_ * o.u_;
    mpz_fdiv_r(u.get_mpz_t(), u.get_mpz_t(), mod.get_mpz_t());
    PadicScalar r;
    r.p_ = p_;
    r.val_ = v;
    r.M_ = v + R;
    r.zero_ = false;
    r.u_ = u;
    r.normalize();
    return r;
}

PadicScalar PadicScalar::mul_mpz(const mpz_class& k) const {
    if (k == 0) return zero(p_, M_);
    if (zero_) return zero(p_, M_ + val_p(k, p_));
    long vk = val_p(k, p_);
    mpz_class ku = k;
    if (vk > 0) {
        mpz_class pv = pow_p(p_, vk);
        mpz_divexact(ku.get_mpz_t(), ku.get_mpz_t(), pv.get_mpz_t());
    }
    PadicScalar r;
    r.p_ = p_;
    r.val_ = val_ + vk;
    r.M_ = M_ + vk;
    r.zero_ = false;
    r.u_ = u_ * ku;
    r.normalize();
    return r;
}

PadicScalar PadicScalar::operator/(const PadicScalar& o) const {
    if (p_ != o.p_) throw PadicError("prime mismatch");
    if (o.zero_) throw DivisionByZeroPrecision();
    if (zero_) return zero(p_, M_ - o.val_);
    long R = std::min(M_ - val_, o.M_ - o.val_);
    long v = val_ - o.val_;
    mpz_class mod = pow_p(p_, R);
    mpz_class oi;
    if (mpz_invert(oi.get_mpz_t(), o.u_.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw NotAUnit();
    PadicScalar r;
    r.p_ = p_;
    r.val_ = v;
    r.M_ = v + R;
    r.zero_ = false;
    r.u_ = u_ * oi;
    r.normalize();
    return r;
}

PadicScalar PadicScalar::inv() const {
    return from_int(p_, 1, zero_ ? M_ : M_ - val_ + 1) / *this;
}

PadicScalar PadicScalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    PadicScalar r = from_int(p_, 1, zero_ ? M_ : M_ + (e > 0 ? (e - 1) * std::max(val_, 0L) : 0));
    PadicScalar b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = (e >>= 1) ? b * b : b;
    }
    return r;
}

PadicScalar PadicScalar::shift(long k) const {
    PadicScalar r = *this;
    r.M_ += k;
    if (!r.zero_) r.val_ += k;
    if (r.M_ <= (r.zero_ ? 0 : r.val_)) throw InsufficientPrecision();
    return r;
}

PadicScalar PadicScalar::with_precision(long m) const {
    if (m >= M_) return *this;
    PadicScalar r = *this;
    r.M_ = m;
    if (r.zero_) return r;
    r.normalize();
    return r;
}

PadicScalar PadicScalar::lift_precision(long m) const {
    if (m <= M_) return *this;
    PadicScalar r = *this;
    r.M_ = m;
    if (r.zero_) {
        // lift 0 mod p^M as the exact representative 0
        r.M_ = m;
    }
    return r;
}

bool PadicScalar::congruent(const PadicScalar& o, long k) const {
    if (M_ < k || o.M_ < k) return false;
    return (*this - o).val() >= k;
}

std::string PadicScalar::render() const {
    std::ostringstream os;
    if (zero_)
        os << "val=inf residue=0";
    else
        os << "val=" << val_ << " residue=" << (val_ >= 0 ? residue() : u_);
    os << " mod " << p_ << "^" << M_;
    return os.str();
}

PadicScalar PadicScalar::parse(long p, const std::string& s) {
    std::istringstream is(s);
    std::string vtok, rtok, modtok, ptok;
    is >> vtok >> rtok >> modtok >> ptok;
    if (vtok.rfind("val=", 0) != 0 || rtok.rfind("residue=", 0) != 0 || modtok != "mod")
        throw ConfigError("bad scalar literal: " + s);
    auto caret = ptok.find('^');
    if (caret == std::string::npos) throw ConfigError("bad modulus: " + ptok);
    long pp = std::stol(ptok.substr(0, caret));
    long M = std::stol(ptok.substr(caret + 1));
    if (pp != p) throw ConfigError("prime mismatch in literal");
    std::string vs = vtok.substr(4);
    mpz_class r(rtok.substr(8));
    if (vs == "inf") return zero(p, M);
    long v = std::stol(vs);
    if (v >= 0) return from_mpz(p, r, M);
    return from_unit(p, v, r, M);
}

PadicScalar teichmuller(long p, long a, long M) {
    if (a % p == 0) throw NotAUnit();
    mpz_class mod = pow_p(p, M);
    mpz_class x(a);
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
    for (long i = 0; i <= M + 1; ++i) {
        mpz_class y;
        mpz_powm_ui(y.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p), mod.get_mpz_t());
        if (y == x) break;
        x = y;
    }
    return PadicScalar::from_mpz(p, x, M);
}

PadicScalar plog(const PadicScalar& x) {
    long p = x.p(), M = x.prec();
    PadicScalar u = x - PadicScalar::from_int(p, 1, M);
    if (u.is_zero()) return PadicScalar::zero(p, M);
    if (u.val() < 1) throw OutsideLogDomain();
    long W = M + 8;   // slack for the 1/k denominators (log_p k <= 8 at desk scale)
    PadicScalar ul = u.lift_precision(W);
    PadicScalar sum = PadicScalar::zero(p, W);
    PadicScalar pw = PadicScalar::from_int(p, 1, W);
    long v = u.val();
    double lp = std::log(static_cast<double>(p));
    for (long k = 1;; ++k) {
        long bound = k * v - static_cast<long>(std::log(static_cast<double>(k)) / lp);
        if (bound >= W) break;
        pw = pw * ul;
        PadicScalar term = pw / PadicScalar::from_int(p, k, W + 8);
        sum = (k % 2 == 1) ? sum + term : sum - term;
    }
    return sum.with_precision(M);
}

PadicScalar pexp(const PadicScalar& x) {
    long p = x.p(), M = x.prec();
    if (x.is_zero()) return PadicScalar::from_int(p, 1, M);
    if (x.val() < 1) throw OutsideExpDomain();
    long v = x.val();
    long guard = 0;
    for (int it = 0; it < 3; ++it) {
        long W = M + guard;
        long K = static_cast<long>(std::ceil(W / (v - 1.0 / (p - 1)))) + 2;
        guard = K / (p - 1) + 2;
    }
    long W = M + guard;
    PadicScalar xl = x.lift_precision(W);
    PadicScalar sum = PadicScalar::from_int(p, 1, W);
    PadicScalar term = sum;
    for (long k = 1;; ++k) {
        double bound = k * (v - 1.0 / (p - 1));
        if (bound >= W) break;
        term = term * xl / PadicScalar::from_int(p, k, W + guard);
        sum = sum + term;
    }
    return sum.with_precision(M);
}

PadicScalar padic_binomial(const PadicScalar& a, long k) {
    long p = a.p();
    if (k == 0) return PadicScalar::from_int(p, 1, a.prec());
    PadicScalar num = a;
    for (long i = 1; i < k; ++i)
        num = num * (a - PadicScalar::from_int(p, i, a.prec()));
    mpz_class kf;
    mpz_fac_ui(kf.get_mpz_t(), static_cast<unsigned long>(k));
    long vk = val_p(kf, p);
    PadicScalar den = PadicScalar::from_mpz(p, kf, std::max(num.prec(), 0L) + vk + 1);
    return num / den;
}

} // namespace padicl
