#include "ramsey/interval.hpp"

#include <gmp.h>

#include <cassert>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

namespace {

// exact transfer of big integers / rationals into mpfr with a chosen
// rounding direction (string round-trip; gmp parses decimal exactly)
void set_from_int(mpfr_t rop, const Int& v, mpfr_rnd_t rnd) {
    mpz_t z;
    mpz_init(z);
    mpz_set_str(z, v.str().c_str(), 10);
    mpfr_set_z(rop, z, rnd);
    mpz_clear(z);
}

void set_from_rat(mpfr_t rop, const Rat& v, mpfr_rnd_t rnd) {
    mpq_t q;
    mpq_init(q);
    mpq_set_str(q, rat_str(v).c_str(), 10);
    mpq_canonicalize(q);
    mpfr_set_q(rop, q, rnd);
    mpq_clear(q);
}

}  // namespace

Iv::Iv(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Iv::Iv(const Iv& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Iv::Iv(Iv&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Iv& Iv::operator=(const Iv& o) {
    if (this != &o) {
        Iv tmp(o);
        *this = std::move(tmp);
    }
    return *this;
}

Iv& Iv::operator=(Iv&& o) noexcept {
    if (this != &o) {
        std::swap(prec_, o.prec_);
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    return *this;
}

Iv::~Iv() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void Iv::check() const {
    assert(!mpfr_nan_p(lo_) && !mpfr_nan_p(hi_));
    assert(!(mpfr_inf_p(lo_) && mpfr_sgn(lo_) > 0));  // +inf lower bound is a bug
    assert(mpfr_lessequal_p(lo_, hi_));
}

Iv Iv::of_long(long v, mpfr_prec_t prec) {
    Iv r(prec);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    r.check();
    return r;
}

Iv Iv::of_int(const Int& v, mpfr_prec_t prec) {
    Iv r(prec);
    set_from_int(r.lo_, v, MPFR_RNDD);
    set_from_int(r.hi_, v, MPFR_RNDU);
    r.check();
    return r;
}

Iv Iv::of_rat(const Rat& v, mpfr_prec_t prec) {
    Iv r(prec);
    set_from_rat(r.lo_, v, MPFR_RNDD);
    set_from_rat(r.hi_, v, MPFR_RNDU);
    r.check();
    return r;
}

Iv operator+(const Iv& a, const Iv& b) {
    Iv r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    r.check();
    return r;
}

Iv operator-(const Iv& a, const Iv& b) {
    Iv r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    r.check();
    return r;
}

Iv operator*(const Iv& a, const Iv& b) {
    Iv r(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_srcptr as[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(t, as[i], bs[j], MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, as[i], bs[j], MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    r.check();
    return r;
}

Iv operator/(const Iv& a, const Iv& b) {
    assert(mpfr_sgn(b.lo_) > 0 || mpfr_sgn(b.hi_) < 0);  // no zero straddling
    Iv r(std::max(a.prec_, b.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    const mpfr_srcptr as[2] = {a.lo_, a.hi_};
    const mpfr_srcptr bs[2] = {b.lo_, b.hi_};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_div(t, as[i], bs[j], MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_div(t, as[i], bs[j], MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    mpfr_clear(t);
    r.check();
    return r;
}

Iv Iv::neg() const {
    Iv r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    r.check();
    return r;
}

Iv Iv::sqrt() const {
    assert(mpfr_sgn(hi_) >= 0);
    Iv r(prec_);
    if (mpfr_sgn(lo_) < 0)
        mpfr_set_zero(r.lo_, 1);
    else
        mpfr_sqrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_sqrt(r.hi_, hi_, MPFR_RNDU);
    r.check();
    return r;
}

Iv Iv::cbrt() const {
    Iv r(prec_);
    mpfr_cbrt(r.lo_, lo_, MPFR_RNDD);
    mpfr_cbrt(r.hi_, hi_, MPFR_RNDU);
    r.check();
    return r;
}

Iv Iv::log2() const {
    assert(mpfr_sgn(hi_) > 0);
    Iv r(prec_);
    if (mpfr_sgn(lo_) <= 0)
        mpfr_set_inf(r.lo_, -1);
    else
        mpfr_log2(r.lo_, lo_, MPFR_RNDD);
    mpfr_log2(r.hi_, hi_, MPFR_RNDU);
    r.check();
    return r;
}

Iv Iv::exp2() const {
    Iv r(prec_);
    // on positive overflow RNDD yields the largest finite number -- still a
    // sound lower bound -- and RNDU yields +inf
    mpfr_exp2(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp2(r.hi_, hi_, MPFR_RNDU);
    r.check();
    return r;
}

bool Iv::ge(const Iv& o) const { return mpfr_greaterequal_p(lo_, o.hi_); }
bool Iv::gt(const Iv& o) const { return mpfr_greater_p(lo_, o.hi_); }
bool Iv::le(const Iv& o) const { return mpfr_lessequal_p(hi_, o.lo_); }
bool Iv::lt(const Iv& o) const { return mpfr_less_p(hi_, o.lo_); }
bool Iv::ge_long(long v) const { return mpfr_cmp_si(lo_, v) >= 0; }
bool Iv::le_long(long v) const { return mpfr_cmp_si(hi_, v) <= 0; }

bool Iv::upper_is_inf() const { return mpfr_inf_p(hi_); }

bool Iv::contains_rat(const Rat& x) const {
    mpq_t q;
    mpq_init(q);
    mpq_set_str(q, rat_str(x).c_str(), 10);
    mpq_canonicalize(q);
    bool ok = mpfr_cmp_q(lo_, q) <= 0 && mpfr_cmp_q(hi_, q) >= 0;
    mpq_clear(q);
    return ok;
}

namespace {

// round an mpfr value to an integer in the given direction, exactly; mpz has
// unbounded precision so huge magnitudes survive intact
Int mpfr_to_int(const mpfr_t x, mpfr_rnd_t dir, const char* who) {
    if (!mpfr_number_p(x)) throw error(std::string(who) + ": endpoint not finite");
    mpz_t z;
    mpz_init(z);
    mpfr_get_z(z, x, dir);
    std::vector<char> buf(mpz_sizeinbase(z, 10) + 2);
    mpz_get_str(buf.data(), 10, z);
    mpz_clear(z);
    return Int(buf.data());
}

}  // namespace

Int Iv::floor_lo() const { return mpfr_to_int(lo_, MPFR_RNDD, "floor_lo"); }
Int Iv::ceil_hi() const { return mpfr_to_int(hi_, MPFR_RNDU, "ceil_hi"); }

std::string Iv::str_lo(int sig_digits) const {
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*RDg", sig_digits, lo_);
    return buf;
}

std::string Iv::str_hi(int sig_digits) const {
    char buf[128];
    mpfr_snprintf(buf, sizeof buf, "%.*RUg", sig_digits, hi_);
    return buf;
}

double Iv::approx() const { return mpfr_get_d(lo_, MPFR_RNDN); }

// ---- XNum -----------------------------------------------------------------

Iv XNum::iv(mpfr_prec_t prec) const {
    if (ex_) return Iv::of_rat(*ex_, prec);
    return *iv_;
}

XNum operator+(const XNum& a, const XNum& b) {
    if (a.exact() && b.exact()) return XNum(a.rat() + b.rat());
    return XNum(a.iv() + b.iv());
}

XNum operator-(const XNum& a, const XNum& b) {
    if (a.exact() && b.exact()) return XNum(a.rat() - b.rat());
    return XNum(a.iv() - b.iv());
}

XNum operator*(const XNum& a, const XNum& b) {
    if (a.exact() && b.exact()) return XNum(a.rat() * b.rat());
    return XNum(a.iv() * b.iv());
}

XNum operator/(const XNum& a, const XNum& b) {
    if (a.exact() && b.exact()) {
        if (b.rat() == 0) throw precondition_error("XNum division by zero");
        return XNum(a.rat() / b.rat());
    }
    return XNum(a.iv() / b.iv());
}

XNum XNum::sqrt(mpfr_prec_t prec) const {
    if (ex_) {
        Int np, dp;
        if (is_perfect_square(numerator(*ex_), &np) &&
            is_perfect_square(denominator(*ex_), &dp))
            return XNum(Rat(np, dp));
    }
    return XNum(iv(prec).sqrt());
}

XNum XNum::cbrt(mpfr_prec_t prec) const {
    if (ex_) {
        Int np, dp;
        if (is_perfect_cube(numerator(*ex_), &np) &&
            is_perfect_cube(denominator(*ex_), &dp))
            return XNum(Rat(np, dp));
    }
    return XNum(iv(prec).cbrt());
}

XNum XNum::log2(mpfr_prec_t prec) const {
    if (ex_ && *ex_ > 0) {
        // exact when numerator and denominator are both powers of two
        const Int &n = numerator(*ex_), &d = denominator(*ex_);
        if ((n & (n - 1)) == 0 && (d & (d - 1)) == 0)
            return XNum(Rat(Int(msb(n)) - Int(msb(d))));
    }
    return XNum(iv(prec).log2());
}

XNum XNum::exp2(mpfr_prec_t prec) const {
    if (ex_ && denominator(*ex_) == 1) {
        const Int& e = numerator(*ex_);
        if (e >= -(1 << 20) && e <= (1 << 20)) {
            if (e >= 0) return XNum(Rat(Int(1) << (unsigned long)e));
            return XNum(Rat(1, Int(1) << (unsigned long)(-e)));
        }
    }
    return XNum(iv(prec).exp2());
}

XNum::Cmp XNum::ge(const XNum& o) const {
    if (exact() && o.exact()) return rat() >= o.rat() ? Cmp::yes : Cmp::no;
    Iv a = iv(), b = o.iv();
    if (a.ge(b)) return Cmp::yes;
    if (a.lt(b)) return Cmp::no;
    return Cmp::unknown;
}

XNum::Cmp XNum::gt(const XNum& o) const {
    if (exact() && o.exact()) return rat() > o.rat() ? Cmp::yes : Cmp::no;
    Iv a = iv(), b = o.iv();
    if (a.gt(b)) return Cmp::yes;
    if (a.le(b)) return Cmp::no;
    return Cmp::unknown;
}

std::optional<Int> XNum::certified_ceil() const {
    if (exact()) return ceil_rat(rat());
    const Iv& v = *iv_;
    if (v.upper_is_inf()) return std::nullopt;
    mpfr_t cl, ch;
    mpfr_init2(cl, v.prec_);
    mpfr_init2(ch, v.prec_);
    mpfr_ceil(cl, v.lo_);
    mpfr_ceil(ch, v.hi_);
    std::optional<Int> out;
    if (mpfr_equal_p(cl, ch)) {
        char buf[512];
        mpfr_snprintf(buf, sizeof buf, "%.0RNf", cl);
        out = Int(buf);
    }
    mpfr_clear(cl);
    mpfr_clear(ch);
    return out;
}

Int XNum::ceil_upper() const {
    if (exact()) return ceil_rat(rat());
    return iv_->ceil_hi();
}

Int XNum::floor_lower() const {
    if (exact()) return floor_rat(rat());
    return iv_->floor_lo();
}

std::string XNum::str() const {
    if (exact()) return rat_str(rat());
    return iv_->str_lo(20);
}

}  // namespace ramsey
