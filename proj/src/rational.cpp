#include "carleman/rational.hpp"

#include <cctype>

#include "carleman/error.hpp"

namespace carleman {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotDivisible: return "NotDivisible";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
        case ErrorKind::TableNotNormalized: return "TableNotNormalized";
        case ErrorKind::InsufficientTable: return "InsufficientTable";
        case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
        case ErrorKind::OrderBoundExceeded: return "OrderBoundExceeded";
        case ErrorKind::SingularGenerator: return "SingularGenerator";
        case ErrorKind::NotInvariant: return "NotInvariant";
        case ErrorKind::NotInAlgebra: return "NotInAlgebra";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::NotSymmetric: return "NotSymmetric";
        case ErrorKind::NotBlockSymmetric: return "NotBlockSymmetric";
        case ErrorKind::NotLogConvex: return "NotLogConvex";
        case ErrorKind::SizeBoundExceeded: return "SizeBoundExceeded";
        case ErrorKind::DeltaDivisionFailed: return "DeltaDivisionFailed";
        case ErrorKind::NotASubgroup: return "NotASubgroup";
        case ErrorKind::BasisNotStable: return "BasisNotStable";
        case ErrorKind::NotEquivariant: return "NotEquivariant";
        case ErrorKind::NotInModule: return "NotInModule";
    }
    return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    Rational result;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        auto num = s.substr(0, slash);
        auto den = s.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) {
            throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
        }
        Integer d{std::string(den)};
        if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
        result = Rational(Integer(std::string(num)), d);
        result.canonicalize();
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        auto whole = s.substr(0, dot);
        auto frac = s.substr(dot + 1);
        if ((!whole.empty() && !all_digits(whole)) || !all_digits(frac)) {
            throw Error(ErrorKind::ParseError, "malformed decimal '" + std::string(text) + "'");
        }
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        Integer digits(std::string(whole.empty() ? "0" : whole) + std::string(frac));
        result = Rational(digits, scale);
        result.canonicalize();
    } else {
        if (!all_digits(s)) throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
        result = Rational(Integer(std::string(s)));
    }
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer factorial(unsigned long k) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), k);
    return out;
}

bool exact_sqrt(const Rational& value, Rational& root) {
    if (value < 0) return false;
    const Integer& num = value.get_num();
    const Integer& den = value.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return false;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    root.canonicalize();
    return true;
}

Rational sqrt_upper(const Rational& value, unsigned bits) {
    Rational exact;
    if (exact_sqrt(value, exact)) return exact;
    // sqrt(a/b) = sqrt(a*b*4^bits) / (b*2^bits)
    Integer scaled = value.get_num() * value.get_den();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * bits);
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    if (root * root < scaled) root += 1;
    Integer den = value.get_den();
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
    Rational out(root, den);
    out.canonicalize();
    return out;
}

Integer lcm_of_denominators(std::span<const Rational> values) {
    Integer l = 1;
    for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    return l;
}

}  // namespace carleman
