#include "carleman/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "carleman/error.hpp"

namespace carleman {

mpfr_prec_t default_precision() {
    static const mpfr_prec_t prec = [] {
        const char* env = std::getenv("CARLEMAN_PRECISION_BITS");
        long bits = 256;
        if (env != nullptr && *env != '\0') {
            char* end = nullptr;
            bits = std::strtol(env, &end, 10);
            if (end == env || *end != '\0') bits = 256;
        }
        return static_cast<mpfr_prec_t>(std::clamp(bits, 64L, 65536L));
    }();
    return prec;
}

Interval::Interval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Interval& other) {
    mpfr_init2(lo_, other.precision());
    mpfr_init2(hi_, other.precision());
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
    mpfr_init2(lo_, mpfr_get_prec(other.lo_));
    mpfr_init2(hi_, mpfr_get_prec(other.hi_));
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval other) noexcept {
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_rational(const Rational& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_integer(const Integer& z, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_z(r.lo_, z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, z.get_mpz_t(), MPFR_RNDU);
    return r;
}

Interval Interval::euler_e(mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_ui(r.lo_, 1, MPFR_RNDN);
    mpfr_set_ui(r.hi_, 1, MPFR_RNDN);
    mpfr_exp(r.lo_, r.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, r.hi_, MPFR_RNDU);
    return r;
}

long double Interval::midpoint() const {
    mpfr_t mid;
    mpfr_init2(mid, precision() + 1);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    long double v = mpfr_get_ld(mid, MPFR_RNDN);
    mpfr_clear(mid);
    return v;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a) {
    Interval r(a.precision());
    mpfr_neg(r.lo_, a.hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, a.lo_, MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t prec = std::max(a.precision(), b.precision());
    Interval r(prec);
    mpfr_t t;
    mpfr_init2(t, prec);
    const __mpfr_struct* xs[2] = {a.lo_, a.hi_};
    const __mpfr_struct* ys[2] = {b.lo_, b.hi_};
    bool first = true;
    for (auto* x : xs) {
        for (auto* y : ys) {
            mpfr_mul(t, x, y, MPFR_RNDD);
            if (first || mpfr_less_p(t, r.lo_)) mpfr_set(r.lo_, t, MPFR_RNDD);
            mpfr_mul(t, x, y, MPFR_RNDU);
            if (first || mpfr_greater_p(t, r.hi_)) mpfr_set(r.hi_, t, MPFR_RNDU);
            first = false;
        }
    }
    mpfr_clear(t);
    return r;
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw Error(ErrorKind::PrecisionExhausted, "interval division by an interval containing 0");
    const mpfr_prec_t prec = std::max(a.precision(), b.precision());
    Interval inv(prec);
    // 1/[l,h] = [1/h, 1/l] when 0 is outside [l,h]
    mpfr_ui_div(inv.lo_, 1, b.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, b.lo_, MPFR_RNDU);
    return a * inv;
}

Interval log(const Interval& a) {
    if (!a.is_positive()) throw Error(ErrorKind::PrecisionExhausted, "logarithm of an interval reaching 0");
    Interval r(a.precision());
    mpfr_log(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_log(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

Interval exp(const Interval& a) {
    Interval r(a.precision());
    mpfr_exp(r.lo_, a.lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, a.hi_, MPFR_RNDU);
    return r;
}

namespace {

std::string render(const __mpfr_struct* v, int digits, mpfr_rnd_t rnd) {
    if (mpfr_zero_p(v)) return "0";
    char* buf = nullptr;
    mpfr_asprintf(&buf, rnd == MPFR_RNDD ? "%.*RDg" : "%.*RUg", digits, v);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

}  // namespace

std::string Interval::lower_string(int digits) const { return render(lo_, digits, MPFR_RNDD); }
std::string Interval::upper_string(int digits) const { return render(hi_, digits, MPFR_RNDU); }

std::string exp_to_string(long double log_value, int digits) {
    mpfr_t v;
    mpfr_init2(v, 128);
    mpfr_set_ld(v, log_value, MPFR_RNDN);
    mpfr_exp(v, v, MPFR_RNDN);
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v);
    std::string out(buf);
    mpfr_free_str(buf);
    mpfr_clear(v);
    return out;
}

}  // namespace carleman
