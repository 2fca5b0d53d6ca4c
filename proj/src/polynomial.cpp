#include "carleman/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "carleman/error.hpp"

namespace carleman {

std::uint32_t total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    const auto da = total_degree(a);
    const auto db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw Error(ErrorKind::IndexOutOfRange, "variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(e);
}

Polynomial Polynomial::monomial(const Exponents& e, const Rational& c) {
    Polynomial p(e.size());
    p.add_term(e, c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.rbegin()->first));
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

Rational Polynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Exponents& Polynomial::leading_exponents() const {
    if (terms_.empty()) throw Error(ErrorKind::ParameterOutOfRange, "leading term of the zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw Error(ErrorKind::ParameterOutOfRange, "leading term of the zero polynomial");
    return terms_.rbegin()->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "exponent vector length differs from nvars");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::require_same_space(const Polynomial& other, const char* op) const {
    if (nvars_ != other.nvars_) {
        throw Error(ErrorKind::DimensionMismatch, std::string(op) + ": " + std::to_string(nvars_) + " vs " +
                                                      std::to_string(other.nvars_) + " variables");
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    require_same_space(other, "add");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    require_same_space(other, "subtract");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_same_space(b, "multiply");
    Polynomial out(a.nvars_);
    Exponents e(a.nvars_);
    Rational prod;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            prod = ca * cb;
            out.add_term(e, prod);
        }
    }
    return out;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
    auto ia = a.terms_.rbegin();
    auto ib = b.terms_.rbegin();
    GrlexLess less;
    for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
        if (ia->first != ib->first) return less(ia->first, ib->first);
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ib != b.terms_.rend();
}

Polynomial scale(const Polynomial& f, const Rational& c) { return f * c; }

Polynomial pow(const Polynomial& f, unsigned exponent) {
    Polynomial result = Polynomial::constant(f.nvars(), 1);
    Polynomial base = f;
    while (exponent) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent) base = base * base;
    }
    return result;
}

Polynomial partial_derivative(const Polynomial& f, std::size_t i) {
    if (i >= f.nvars()) throw Error(ErrorKind::IndexOutOfRange, "derivative variable out of range");
    Polynomial out(f.nvars());
    for (const auto& [e, c] : f.terms()) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        out.add_term(d, c * e[i]);
    }
    return out;
}

Rational evaluate(const Polynomial& f, std::span<const Rational> point) {
    if (point.size() != f.nvars()) throw Error(ErrorKind::DimensionMismatch, "evaluation point has wrong length");
    Rational sum = 0;
    Rational term;
    Rational power;
    for (const auto& [e, c] : f.terms()) {
        term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            mpz_pow_ui(power.get_num_mpz_t(), point[i].get_num_mpz_t(), e[i]);
            mpz_pow_ui(power.get_den_mpz_t(), point[i].get_den_mpz_t(), e[i]);
            term *= power;
        }
        sum += term;
    }
    return sum;
}

Polynomial compose(const Polynomial& f, std::span<const Polynomial> gs) {
    if (gs.size() != f.nvars()) {
        throw Error(ErrorKind::DimensionMismatch, "compose: expected " + std::to_string(f.nvars()) +
                                                      " substitutions, got " + std::to_string(gs.size()));
    }
    std::size_t target = gs.empty() ? 0 : gs.front().nvars();
    for (const auto& g : gs) {
        if (g.nvars() != target) throw Error(ErrorKind::DimensionMismatch, "compose: substitutions differ in nvars");
    }
    // powers[i][k] = gs[i]^k, filled lazily
    std::vector<std::vector<Polynomial>> powers(gs.size());
    auto power_of = [&](std::size_t i, std::uint32_t k) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
        while (cache.size() <= k) cache.push_back(cache.back() * gs[i]);
        return cache[k];
    };
    Polynomial out(target);
    for (const auto& [e, c] : f.terms()) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            term = term * power_of(i, e[i]);
        }
        out += term;
    }
    return out;
}

Polynomial substitute_linear(const Polynomial& f, const RationalMatrix& a) {
    if (!a.is_square() || a.rows() != f.nvars()) {
        throw Error(ErrorKind::DimensionMismatch, "linear substitution matrix does not match nvars");
    }
    const std::size_t n = f.nvars();
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial row(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (a(i, j) == 0) continue;
            Exponents e(n, 0);
            e[j] = 1;
            row.add_term(e, a(i, j));
        }
        images.push_back(std::move(row));
    }
    return compose(f, images);
}

Polynomial relabel(const Polynomial& f, std::size_t new_nvars, std::span<const std::size_t> target) {
    if (target.size() != f.nvars()) throw Error(ErrorKind::DimensionMismatch, "relabel map has wrong length");
    Polynomial out(new_nvars);
    for (const auto& [e, c] : f.terms()) {
        Exponents ne(new_nvars, 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (target[i] >= new_nvars) throw Error(ErrorKind::IndexOutOfRange, "relabel target out of range");
            ne[target[i]] += e[i];
        }
        out.add_term(ne, c);
    }
    return out;
}

std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g) {
    if (g.is_zero()) throw Error(ErrorKind::ParameterOutOfRange, "division by the zero polynomial");
    if (f.nvars() != g.nvars()) throw Error(ErrorKind::DimensionMismatch, "divide: variable counts differ");
    const Exponents& lg = g.leading_exponents();
    const Rational& cg = g.leading_coefficient();
    Polynomial quotient(f.nvars());
    Polynomial remainder = f;
    Exponents shift(f.nvars());
    while (!remainder.is_zero()) {
        const Exponents& lr = remainder.leading_exponents();
        for (std::size_t i = 0; i < shift.size(); ++i) {
            if (lr[i] < lg[i]) return std::nullopt;
            shift[i] = lr[i] - lg[i];
        }
        Rational c = remainder.leading_coefficient() / cg;
        quotient.add_term(shift, c);
        Exponents e(f.nvars());
        for (const auto& [eg, coef] : g.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = eg[i] + shift[i];
            remainder.add_term(e, -c * coef);
        }
    }
    return quotient;
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
    auto q = try_divide(f, g);
    if (!q) throw Error(ErrorKind::NotDivisible, to_string(g) + " does not divide " + to_string(f));
    return std::move(*q);
}

std::vector<std::pair<int, Polynomial>> homogeneous_components(const Polynomial& f) {
    std::vector<std::pair<int, Polynomial>> out;
    for (const auto& [e, c] : f.terms()) {
        int d = static_cast<int>(total_degree(e));
        if (out.empty() || out.back().first != d) out.emplace_back(d, Polynomial(f.nvars()));
        out.back().second.add_term(e, c);
    }
    return out;
}

Polynomial homogeneous_part(const Polynomial& f, int degree) {
    Polynomial out(f.nvars());
    for (const auto& [e, c] : f.terms())
        if (static_cast<int>(total_degree(e)) == degree) out.add_term(e, c);
    return out;
}

Polynomial primitive_part(const Polynomial& f) {
    if (f.is_zero()) return f;
    Integer den_lcm = 1;
    Integer num_gcd = 0;
    for (const auto& [e, c] : f.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    }
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (f.leading_coefficient() < 0) factor = -factor;
    return f * factor;
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree) {
    std::vector<Exponents> out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    Exponents e(nvars, 0);
    // enumerate compositions of `degree` into nvars parts
    auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
        if (pos + 1 == nvars) {
            e[pos] = left;
            out.push_back(e);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

Polynomial LinearForm::to_polynomial() const {
    const std::size_t n = coefficients.size();
    Polynomial p(n);
    for (std::size_t i = 0; i < n; ++i) {
        Exponents e(n, 0);
        e[i] = 1;
        p.add_term(e, coefficients[i]);
    }
    return p;
}

LinearForm make_linear_form(std::vector<Rational> coefficients) {
    if (std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c == 0; })) {
        throw Error(ErrorKind::ParameterOutOfRange, "linear form with all coefficients zero");
    }
    return LinearForm{std::move(coefficients)};
}

namespace {

std::string monomial_text(const Exponents& e, std::string_view prefix) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += prefix;
        out += std::to_string(i + 1);
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

class PolyParser {
public:
    PolyParser(std::string_view text, std::string_view prefix) : text_(text), prefix_(prefix) {}

    struct RawTerm {
        Rational coeff;
        std::map<std::size_t, std::uint32_t> powers;
    };

    std::vector<RawTerm> parse() {
        std::vector<RawTerm> terms;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            RawTerm t = parse_term();
            if (sign < 0) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            first = false;
            skip_ws();
        }
        return terms;
    }

private:
    RawTerm parse_term() {
        RawTerm t{1, {}};
        while (true) {
            skip_ws();
            if (at_end()) fail("dangling operator");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                t.coeff *= parse_number();
            } else if (text_.substr(pos_, prefix_.size()) == prefix_) {
                pos_ += prefix_.size();
                std::size_t start = pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                if (start == pos_) fail("variable without index");
                unsigned long idx = std::stoul(std::string(text_.substr(start, pos_ - start)));
                if (idx == 0) fail("variable indices start at 1");
                std::uint32_t power = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    ++pos_;
                    skip_ws();
                    std::size_t ps = pos_;
                    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                    if (ps == pos_) fail("missing exponent");
                    power = static_cast<std::uint32_t>(std::stoul(std::string(text_.substr(ps, pos_ - ps))));
                }
                t.powers[idx - 1] += power;
            } else {
                fail("unexpected character");
            }
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                continue;
            }
            return t;
        }
    }

    Rational parse_number() {
        std::size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) ++pos_;
        if (!at_end() && peek() == '/') {
            ++pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        }
        return parse_rational(text_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw Error(ErrorKind::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }
    char peek() const { return text_[pos_]; }
    bool at_end() const { return pos_ >= text_.size(); }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    std::string_view text_;
    std::string_view prefix_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const Polynomial& f, std::string_view prefix) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        Rational magnitude = abs(c);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string mono = monomial_text(e, prefix);
        if (mono.empty()) {
            out += to_string(magnitude);
        } else if (magnitude == 1) {
            out += mono;
        } else {
            out += to_string(magnitude) + "*" + mono;
        }
    }
    return out;
}

Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> nvars, std::string_view prefix) {
    auto raw = PolyParser(text, prefix).parse();
    std::size_t max_index = 0;
    for (const auto& t : raw)
        for (const auto& [i, p] : t.powers) max_index = std::max(max_index, i + 1);
    const std::size_t n = nvars.value_or(max_index);
    if (max_index > n) {
        throw Error(ErrorKind::DimensionMismatch, "polynomial uses " + std::to_string(max_index) +
                                                      " variables but only " + std::to_string(n) + " are declared");
    }
    Polynomial p(n);
    for (const auto& t : raw) {
        Exponents e(n, 0);
        for (const auto& [i, pw] : t.powers) e[i] = pw;
        p.add_term(e, t.coeff);
    }
    return p;
}

nlohmann::json to_json(const Polynomial& f) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        arr.push_back({{"coeff", to_string(it->second)}, {"exps", it->first}});
    }
    return arr;
}

Polynomial polynomial_from_json(const nlohmann::json& j, std::optional<std::size_t> nvars) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "polynomial JSON must be a list of terms");
    std::optional<std::size_t> n = nvars;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("exps") || !term["exps"].is_array()) {
            throw Error(ErrorKind::ParseError, "polynomial term must be {coeff, exps}");
        }
        if (!n) n = term["exps"].size();
    }
    Polynomial p(n.value_or(0));
    for (const auto& term : j) {
        Exponents e;
        for (const auto& v : term["exps"]) {
            if (!v.is_number_unsigned()) throw Error(ErrorKind::ParseError, "exponents must be non-negative integers");
            e.push_back(v.get<std::uint32_t>());
        }
        if (e.size() != p.nvars()) throw Error(ErrorKind::DimensionMismatch, "exponent vector length mismatch");
        const auto& coeff = term["coeff"];
        Rational c = coeff.is_string() ? parse_rational(coeff.get<std::string>())
                     : coeff.is_number_integer() ? Rational(coeff.get<long>())
                                                 : throw Error(ErrorKind::ParseError, "coeff must be a \"p/q\" string");
        p.add_term(e, c);
    }
    return p;
}

Polynomial random_polynomial(std::size_t nvars, unsigned max_degree, std::size_t terms, std::mt19937_64& rng,
                             int coeff_bound) {
    Polynomial p(nvars);
    if (nvars == 0) return p;
    std::uniform_int_distribution<unsigned> degree_dist(0, max_degree);
    std::uniform_int_distribution<std::size_t> var_dist(0, nvars - 1);
    std::uniform_int_distribution<int> coeff_dist(-coeff_bound, coeff_bound);
    for (std::size_t t = 0; t < terms; ++t) {
        Exponents e(nvars, 0);
        unsigned d = degree_dist(rng);
        for (unsigned k = 0; k < d; ++k) e[var_dist(rng)] += 1;
        p.add_term(e, coeff_dist(rng));
    }
    return p;
}

}  // namespace carleman
