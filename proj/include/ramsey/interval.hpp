#pragma once
#include <mpfr.h>

#include <optional>
#include <string>

#include "ramsey/numbers.hpp"

namespace ramsey {

inline constexpr mpfr_prec_t kDefaultPrec = 128;

// closed interval [lo, hi] with outward-rounded endpoints; every operation
// returns an interval containing the exact result, so a comparison that
// certifies over the whole interval is a proof.  Positive overflow degrades
// gracefully: the lower endpoint becomes the largest finite number (still a
// valid lower bound) and the upper endpoint +inf.
class Iv {
  public:
    explicit Iv(mpfr_prec_t prec = kDefaultPrec);
    Iv(const Iv&);
    Iv(Iv&&) noexcept;
    Iv& operator=(const Iv&);
    Iv& operator=(Iv&&) noexcept;
    ~Iv();

    static Iv of_long(long v, mpfr_prec_t prec = kDefaultPrec);
    static Iv of_int(const Int& v, mpfr_prec_t prec = kDefaultPrec);
    static Iv of_rat(const Rat& v, mpfr_prec_t prec = kDefaultPrec);

    mpfr_prec_t prec() const { return prec_; }

    friend Iv operator+(const Iv& a, const Iv& b);
    friend Iv operator-(const Iv& a, const Iv& b);
    friend Iv operator*(const Iv& a, const Iv& b);
    friend Iv operator/(const Iv& a, const Iv& b);  // divisor must not straddle 0
    Iv neg() const;

    Iv sqrt() const;  // requires hi >= 0; lo clamped to 0 if negative
    Iv cbrt() const;
    Iv log2() const;  // requires hi > 0; lo <= 0 gives -inf lower endpoint
    Iv exp2() const;

    // certified (whole-interval) comparisons; false means "not certified",
    // not "certified false"
    bool ge(const Iv& o) const;  // every x here >= every y there
    bool gt(const Iv& o) const;
    bool le(const Iv& o) const;
    bool lt(const Iv& o) const;
    bool ge_long(long v) const;
    bool le_long(long v) const;

    bool upper_is_inf() const;
    bool contains_rat(const Rat& x) const;

    Int floor_lo() const;  // exact floor of the lower endpoint (finite required)
    Int ceil_hi() const;   // exact ceiling of the upper endpoint (finite required)

    // deterministic decimal rendering of the endpoints (round-down / round-up)
    std::string str_lo(int sig_digits = 17) const;
    std::string str_hi(int sig_digits = 17) const;

    double approx() const;  // midpoint-ish, for diagnostics only

  private:
    friend class XNum;
    mpfr_prec_t prec_;
    mpfr_t lo_, hi_;
    void check() const;  // asserts lo<=hi, no NaN, lo != +inf
};

// exact rational while the computation permits, outward interval after the
// first irrational step.  The exact side matters: two of the proof's
// inequalities hold with equality and no interval can certify those.
class XNum {
  public:
    XNum(const Rat& r) : ex_(r) {}
    XNum(long v) : ex_(Rat(v)) {}
    explicit XNum(Iv iv) : iv_(std::move(iv)) {}

    bool exact() const { return ex_.has_value(); }
    const Rat& rat() const { return *ex_; }
    Iv iv(mpfr_prec_t prec = kDefaultPrec) const;

    friend XNum operator+(const XNum& a, const XNum& b);
    friend XNum operator-(const XNum& a, const XNum& b);
    friend XNum operator*(const XNum& a, const XNum& b);
    friend XNum operator/(const XNum& a, const XNum& b);

    XNum sqrt(mpfr_prec_t prec = kDefaultPrec) const;  // exact for perfect squares
    XNum cbrt(mpfr_prec_t prec = kDefaultPrec) const;  // exact for perfect cubes
    XNum log2(mpfr_prec_t prec = kDefaultPrec) const;  // exact for powers of two
    // exact for integer exponents of sane size, interval otherwise
    XNum exp2(mpfr_prec_t prec = kDefaultPrec) const;

    enum class Cmp { yes, no, unknown };
    Cmp ge(const XNum& o) const;
    Cmp le(const XNum& o) const { return o.ge(*this); }
    Cmp gt(const XNum& o) const;
    Cmp lt(const XNum& o) const { return o.gt(*this); }

    // integer ceiling certified across the interval; nullopt when the two
    // endpoints disagree (caller escalates precision)
    std::optional<Int> certified_ceil() const;

    // one-sided integer bounds: never wrong, possibly loose
    Int ceil_upper() const;   // some integer >= the true value
    Int floor_lower() const;  // some integer <= the true value

    std::string str() const;  // exact -> "p/q"; interval -> lower endpoint

  private:
    std::optional<Rat> ex_;
    std::optional<Iv> iv_;
};

}  // namespace ramsey
