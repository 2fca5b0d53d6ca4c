#pragma once

#include <mpfr.h>

#include <string>

#include "carleman/rational.hpp"

namespace carleman {

/// Working precision for the high-precision paths, in bits. Read once from
/// CARLEMAN_PRECISION_BITS (default 256, minimum 64).
mpfr_prec_t default_precision();

/// Closed interval [lo, hi] of MPFR floats with outward (directed) rounding.
/// Every operation returns an interval guaranteed to contain the exact result.
class Interval {
public:
    explicit Interval(mpfr_prec_t prec = default_precision());
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(Interval other) noexcept;
    ~Interval();

    static Interval from_rational(const Rational& q, mpfr_prec_t prec = default_precision());
    static Interval from_integer(const Integer& z, mpfr_prec_t prec = default_precision());
    /// Euler's number e.
    static Interval euler_e(mpfr_prec_t prec = default_precision());

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
    const __mpfr_struct* lo() const { return lo_; }
    const __mpfr_struct* hi() const { return hi_; }

    long double lower() const { return mpfr_get_ld(lo_, MPFR_RNDD); }
    long double upper() const { return mpfr_get_ld(hi_, MPFR_RNDU); }
    long double midpoint() const;
    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool is_positive() const { return mpfr_sgn(lo_) > 0; }

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);
    Interval& operator+=(const Interval& b) { return *this = *this + b; }

    friend Interval log(const Interval& a);
    friend Interval exp(const Interval& a);

    /// Certified comparisons: true only when the whole intervals are ordered.
    friend bool certainly_less(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi_, b.lo_); }
    friend bool certainly_less_equal(const Interval& a, const Interval& b) { return mpfr_lessequal_p(a.hi_, b.lo_); }

    /// Decimal rendering of the lower (or upper) end with `digits` significant digits.
    std::string lower_string(int digits = 20) const;
    std::string upper_string(int digits = 20) const;

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

/// Decimal rendering of exp(x) for a long double logarithm x; handles values
/// outside the double range ("1.2345e+4000").
std::string exp_to_string(long double log_value, int digits = 12);

}  // namespace carleman
