#include "carleman/weight_sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "carleman/error.hpp"

namespace carleman {

std::string_view to_string(Family f) {
    switch (f) {
        case Family::Constant: return "constant";
        case Family::Gevrey: return "gevrey";
        case Family::LogPower: return "logpow";
        case Family::QGevrey: return "qgevrey";
        case Family::Table: return "table";
        case Family::Dilated: return "dilate";
    }
    return "unknown";
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Holds: return "Holds";
        case Status::Fails: return "Fails";
        case Status::EvidenceOnly: return "EvidenceOnly";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Construction and evaluation

WeightSequence WeightSequence::constant() { return WeightSequence{}; }

WeightSequence WeightSequence::gevrey(const Rational& delta) {
    if (delta <= 0) throw Error(ErrorKind::ParameterOutOfRange, "Gevrey exponent must be positive");
    WeightSequence s;
    s.family_ = Family::Gevrey;
    s.parameter_ = delta;
    return s;
}

WeightSequence WeightSequence::log_power(const Rational& delta) {
    if (delta <= 0) throw Error(ErrorKind::ParameterOutOfRange, "log-power exponent must be positive");
    WeightSequence s;
    s.family_ = Family::LogPower;
    s.parameter_ = delta;
    return s;
}

WeightSequence WeightSequence::q_gevrey(const Rational& q) {
    if (q <= 1) throw Error(ErrorKind::ParameterOutOfRange, "q-Gevrey base must exceed 1");
    WeightSequence s;
    s.family_ = Family::QGevrey;
    s.parameter_ = q;
    return s;
}

WeightSequence WeightSequence::table(std::vector<Rational> values) {
    if (values.empty()) throw Error(ErrorKind::ParameterOutOfRange, "empty table");
    for (const auto& v : values) {
        if (v <= 0) throw Error(ErrorKind::ParameterOutOfRange, "table values must be positive");
    }
    if (values.front() != 1) throw Error(ErrorKind::TableNotNormalized, "table must start with M_0 = 1");
    for (std::size_t k = 0; k + 1 < values.size(); ++k) {
        if (values[k + 1] < values[k]) {
            throw Error(ErrorKind::ParameterOutOfRange,
                        "table is not increasing at index " + std::to_string(k + 1));
        }
    }
    WeightSequence s;
    s.family_ = Family::Table;
    s.table_ = std::move(values);
    s.table_logs_.reserve(s.table_.size());
    for (const auto& v : s.table_) s.table_logs_.push_back(log(Interval::from_rational(v, 128)).midpoint());
    return s;
}

WeightSequence dilate(const WeightSequence& base, unsigned m) {
    if (m == 0) throw Error(ErrorKind::ParameterOutOfRange, "dilation factor must be positive");
    if (m == 1) return base;
    switch (base.family_) {
        case Family::LogPower: {
            WeightSequence s;
            s.family_ = Family::Dilated;
            s.parameter_ = base.parameter_;
            s.dilation_ = m;
            return s;
        }
        case Family::Dilated: {
            WeightSequence s = base;
            s.dilation_ *= m;
            return s;
        }
        case Family::Table: {
            std::vector<Rational> values;
            for (std::size_t k = 0; k * m < base.table_.size(); ++k) values.push_back(base.table_[k * m]);
            return WeightSequence::table(std::move(values));
        }
        default:
            throw Error(ErrorKind::ParameterOutOfRange, "dilation is only represented lazily for log-power tables");
    }
}

std::optional<std::size_t> WeightSequence::length() const {
    if (family_ == Family::Table) return table_.size();
    return std::nullopt;
}

void WeightSequence::require_index(std::size_t k) const {
    if (!has_index(k)) {
        throw Error(ErrorKind::InsufficientTable, "index " + std::to_string(k) + " beyond table of length " +
                                                      std::to_string(table_.size()));
    }
}

std::optional<PowerValue> WeightSequence::exact(std::size_t k) const {
    require_index(k);
    switch (family_) {
        case Family::Constant: return PowerValue{1, 1};
        case Family::Gevrey: return PowerValue{Rational(factorial(k)), parameter_};
        case Family::QGevrey: {
            Rational b;
            const unsigned long e = static_cast<unsigned long>(k) * k;
            mpz_pow_ui(b.get_num_mpz_t(), parameter_.get_num_mpz_t(), e);
            mpz_pow_ui(b.get_den_mpz_t(), parameter_.get_den_mpz_t(), e);
            return PowerValue{b, 1};
        }
        case Family::Table: return PowerValue{table_[k], 1};
        case Family::LogPower:
        case Family::Dilated: return std::nullopt;
    }
    return std::nullopt;
}

std::optional<Rational> WeightSequence::exact_rational(std::size_t k) const {
    auto pv = exact(k);
    if (!pv) return std::nullopt;
    if (pv->exponent.get_den() != 1) return std::nullopt;
    const Integer& e = pv->exponent.get_num();
    if (!e.fits_ulong_p()) return std::nullopt;
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), pv->base.get_num_mpz_t(), e.get_ui());
    mpz_pow_ui(out.get_den_mpz_t(), pv->base.get_den_mpz_t(), e.get_ui());
    return out;
}

Interval WeightSequence::log_interval(std::size_t k, mpfr_prec_t prec) const {
    require_index(k);
    switch (family_) {
        case Family::Constant: return Interval(prec);
        case Family::Gevrey:
            if (k < 2) return Interval(prec);
            return Interval::from_rational(parameter_, prec) * log(Interval::from_integer(factorial(k), prec));
        case Family::QGevrey: {
            Integer kk = static_cast<unsigned long>(k);
            return Interval::from_integer(kk * kk, prec) * log(Interval::from_rational(parameter_, prec));
        }
        case Family::Table: return log(Interval::from_rational(table_[k], prec));
        case Family::LogPower:
        case Family::Dilated: {
            const Integer index = Integer(static_cast<unsigned long>(k)) * dilation_;
            if (index == 0) return Interval(prec);
            Interval inner = log(Interval::from_integer(index, prec) + Interval::euler_e(prec));
            return Interval::from_rational(parameter_, prec) * Interval::from_integer(index, prec) * log(inner);
        }
    }
    return Interval(prec);
}

long double WeightSequence::log_value(std::size_t k) const {
    require_index(k);
    const long double p = parameter_.get_d();
    switch (family_) {
        case Family::Constant: return 0.0L;
        case Family::Gevrey: return p * std::lgamma(static_cast<long double>(k) + 1.0L);
        case Family::QGevrey: {
            const long double kk = static_cast<long double>(k);
            return kk * kk * std::log(static_cast<long double>(parameter_.get_d()));
        }
        case Family::Table: return table_logs_[k];
        case Family::LogPower:
        case Family::Dilated: {
            const long double x = static_cast<long double>(k) * dilation_;
            return p * x * std::log(std::log(x + std::numbers::e_v<long double>));
        }
    }
    return 0.0L;
}

long double WeightSequence::log_ratio(std::size_t k) const {
    require_index(k + 1);
    const long double p = parameter_.get_d();
    switch (family_) {
        case Family::Constant: return 0.0L;
        case Family::Gevrey: return p * std::log(static_cast<long double>(k) + 1.0L);
        case Family::QGevrey:
            return (2.0L * static_cast<long double>(k) + 1.0L) * std::log(static_cast<long double>(parameter_.get_d()));
        case Family::Table: return table_logs_[k + 1] - table_logs_[k];
        case Family::LogPower:
        case Family::Dilated: {
            // sum over the dilated block of log(M'_{i+1}/M'_i) for the base sequence M'
            constexpr long double e = std::numbers::e_v<long double>;
            long double total = 0.0L;
            const std::size_t start = k * dilation_;
            for (std::size_t i = start; i < start + dilation_; ++i) {
                const long double x = static_cast<long double>(i);
                const long double l0 = std::log(x + e);
                const long double ll1 = std::log(std::log(x + 1.0L + e));
                const long double dll = std::log1p(std::log1p(1.0L / (x + e)) / l0);
                total += p * (ll1 + x * dll);
            }
            return total;
        }
    }
    return 0.0L;
}

std::string WeightSequence::describe() const {
    switch (family_) {
        case Family::Constant: return "constant";
        case Family::Gevrey: return "gevrey:" + to_string(parameter_);
        case Family::LogPower: return "logpow:" + to_string(parameter_);
        case Family::QGevrey: return "qgevrey:" + to_string(parameter_);
        case Family::Dilated: return "dilate(logpow:" + to_string(parameter_) + "," + std::to_string(dilation_) + ")";
        case Family::Table: {
            std::string out = "table:[";
            for (std::size_t i = 0; i < table_.size(); ++i) {
                if (i) out += ',';
                out += to_string(table_[i]);
            }
            return out + "]";
        }
    }
    return "?";
}

WeightSequence parse_sequence(std::string_view text) {
    auto colon = text.find(':');
    std::string_view head = text.substr(0, colon);
    std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (head == "constant" && colon == std::string_view::npos) return WeightSequence::constant();
    if (colon == std::string_view::npos || arg.empty()) {
        throw Error(ErrorKind::ParseError, "unknown sequence spec '" + std::string(text) + "'");
    }
    if (head == "gevrey") return WeightSequence::gevrey(parse_rational(arg));
    if (head == "logpow") return WeightSequence::log_power(parse_rational(arg));
    if (head == "qgevrey") return WeightSequence::q_gevrey(parse_rational(arg));
    if (head == "table") {
        if (arg.size() < 2 || arg.front() != '[' || arg.back() != ']') {
            throw Error(ErrorKind::ParseError, "table spec must look like table:[v0,v1,...]");
        }
        arg = arg.substr(1, arg.size() - 2);
        std::vector<Rational> values;
        while (!arg.empty()) {
            auto comma = arg.find(',');
            values.push_back(parse_rational(arg.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            arg.remove_prefix(comma + 1);
        }
        return WeightSequence::table(std::move(values));
    }
    throw Error(ErrorKind::ParseError, "unknown sequence family '" + std::string(head) + "'");
}

// ---------------------------------------------------------------------------
// Verdict plumbing

std::optional<std::string> ConditionVerdict::sup_estimate() const {
    if (!log_estimate) return std::nullopt;
    return exp_to_string(*log_estimate);
}

bool ConditionVerdict::trend_strictly_increasing() const {
    if (trend.size() < 2) return false;
    for (std::size_t i = 1; i < trend.size(); ++i)
        if (!(trend[i].second > trend[i - 1].second)) return false;
    return true;
}

nlohmann::json to_json(const ConditionVerdict& v) {
    nlohmann::json j;
    j["condition"] = v.condition;
    j["status"] = std::string(to_string(v.status));
    j["witness"] = v.witness ? nlohmann::json(*v.witness) : nlohmann::json(nullptr);
    auto est = v.sup_estimate();
    j["sup_estimate"] = est ? nlohmann::json(*est) : nlohmann::json(nullptr);
    j["prefix_K"] = v.prefix_K;
    nlohmann::json trend = nlohmann::json::array();
    for (const auto& [k, lv] : v.trend) trend.push_back({{"k", k}, {"estimate", exp_to_string(lv)}});
    j["trend"] = trend;
    j["detail"] = v.detail;
    return j;
}

ConditionVerdict verdict_from_json(const nlohmann::json& j) {
    ConditionVerdict v;
    try {
        v.condition = j.at("condition").get<std::string>();
        const auto status = j.at("status").get<std::string>();
        if (status == "Holds") v.status = Status::Holds;
        else if (status == "Fails") v.status = Status::Fails;
        else if (status == "EvidenceOnly") v.status = Status::EvidenceOnly;
        else throw Error(ErrorKind::ParseError, "unknown status '" + status + "'");
        if (!j.at("witness").is_null()) v.witness = j.at("witness").get<std::size_t>();
        if (!j.at("sup_estimate").is_null()) {
            v.log_estimate = std::log(std::stold(j.at("sup_estimate").get<std::string>()));
        }
        v.prefix_K = j.at("prefix_K").get<std::size_t>();
        if (j.contains("trend")) {
            for (const auto& t : j["trend"]) {
                v.trend.emplace_back(t.at("k").get<std::size_t>(), std::log(std::stold(t.at("estimate").get<std::string>())));
            }
        }
        if (j.contains("detail")) v.detail = j["detail"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("verdict JSON: ") + e.what());
    }
    return v;
}

// ---------------------------------------------------------------------------
// Analytic decisions

namespace {

// Leading asymptotic behaviour of log(M_{km}) / k as k -> infinity:
//   scale 0: bounded (constant family)
//   scale 1: coeff * log log k   (log-power)
//   scale 2: coeff * log k       (Gevrey)
//   scale 3: k * log(coeff)      (q-Gevrey, coeff = q^{m^2})
// Within one scale, equal coefficients leave a bounded difference, so
// (M_{km}/N_k)^{1/k} is bounded exactly when profile(M, m) <= profile(N, 1).
struct GrowthProfile {
    int scale;
    Rational coeff;
};

GrowthProfile growth_profile(const WeightSequence& s, unsigned m) {
    switch (s.family()) {
        case Family::Constant: return {0, 0};
        case Family::LogPower: return {1, s.parameter() * m};
        case Family::Dilated: return {1, s.parameter() * s.dilation() * m};
        case Family::Gevrey: return {2, s.parameter() * m};
        case Family::QGevrey: {
            Rational b;
            const unsigned long e = static_cast<unsigned long>(m) * m;
            mpz_pow_ui(b.get_num_mpz_t(), s.parameter().get_num_mpz_t(), e);
            mpz_pow_ui(b.get_den_mpz_t(), s.parameter().get_den_mpz_t(), e);
            return {3, b};
        }
        case Family::Table: break;
    }
    throw Error(ErrorKind::ParameterOutOfRange, "tables have no asymptotic profile");
}

bool profile_bounded(const GrowthProfile& a, const GrowthProfile& b) {
    if (a.scale != b.scale) return a.scale < b.scale;
    return a.coeff <= b.coeff;
}

// Effective log-power exponent of a LogPower/Dilated sequence: the dilated
// sequence defines the same class as logpow:(delta * m).
Rational log_power_exponent(const WeightSequence& s) { return s.parameter() * s.dilation(); }

std::vector<std::size_t> checkpoints(std::size_t K) {
    std::vector<std::size_t> out;
    for (std::size_t div : {8U, 4U, 2U, 1U}) {
        std::size_t c = K / div;
        if (c >= 1 && (out.empty() || out.back() != c)) out.push_back(c);
    }
    return out;
}

// Running maximum of values v(k), k = first..last, sampled at checkpoints.
template <class Fn>
void fill_running_sup(ConditionVerdict& v, std::size_t first, std::size_t last, Fn&& value) {
    auto cps = checkpoints(last);
    std::size_t next_cp = 0;
    while (next_cp < cps.size() && cps[next_cp] < first) ++next_cp;
    long double best = -INFINITY;
    for (std::size_t k = first; k <= last; ++k) {
        long double x = value(k);
        if (x > best) {
            best = x;
            v.witness = k;
        }
        if (next_cp < cps.size() && cps[next_cp] == k) {
            v.trend.emplace_back(k, best);
            ++next_cp;
        }
    }
    v.log_estimate = best;
    v.prefix_K = last;
}

bool same_sequence(const WeightSequence& a, const WeightSequence& b) { return a.describe() == b.describe(); }

std::string_view holds_text(bool b) { return b ? "Holds" : "Fails"; }

}  // namespace

ConditionVerdict is_log_convex(const WeightSequence& m, std::size_t K) {
    if (K < 2) throw Error(ErrorKind::ParameterOutOfRange, "log-convexity check needs K >= 2");
    if (m.is_table() && *m.length() < K + 1) {
        throw Error(ErrorKind::InsufficientTable, "log-convexity to K=" + std::to_string(K) + " needs " +
                                                      std::to_string(K + 1) + " table entries");
    }
    ConditionVerdict v;
    v.condition = "log_convex";
    v.prefix_K = K;
    for (std::size_t k = 1; k + 1 <= K; ++k) {
        bool ok;
        if (auto mid = m.exact(k)) {
            // all values of one sequence share the exponent, so compare bases
            auto lo = m.exact(k - 1);
            auto hi = m.exact(k + 1);
            ok = mid->base * mid->base <= lo->base * hi->base;
        } else {
            Interval gap = m.log_interval(k - 1) + m.log_interval(k + 1) - m.log_interval(k) - m.log_interval(k);
            Interval zero;
            if (certainly_less_equal(zero, gap)) {
                ok = true;
            } else if (certainly_less(gap, zero)) {
                ok = false;
            } else {
                throw Error(ErrorKind::PrecisionExhausted,
                            "log-convexity at k=" + std::to_string(k) + " undecided at the working precision");
            }
        }
        if (!ok) {
            v.status = Status::Fails;
            v.witness = k;
            v.detail = "M_k^2 > M_{k-1} M_{k+1} at k=" + std::to_string(k);
            return v;
        }
    }
    v.status = Status::Holds;
    v.detail = "M_k^2 <= M_{k-1} M_{k+1} checked exactly for 1 <= k <= " + std::to_string(K - 1);
    if (!m.is_table()) v.detail += "; every built-in family is log-convex for valid parameters";
    return v;
}

ConditionVerdict is_derivation_closed(const WeightSequence& m, std::size_t K) {
    ConditionVerdict v;
    v.condition = "derivation_closed";
    std::size_t last = K;
    if (m.is_table()) last = std::min(K, *m.length() >= 2 ? *m.length() - 2 : 0);
    if (last >= 1) fill_running_sup(v, 1, last, [&](std::size_t k) { return m.log_ratio(k) / k; });
    switch (m.family()) {
        case Family::Table:
            v.status = Status::EvidenceOnly;
            v.detail = "finite table: prefix sup of (M_{k+1}/M_k)^{1/k} only";
            break;
        case Family::Constant:
            v.status = Status::Holds;
            v.detail = "ratio is 1, sup = 1";
            break;
        case Family::Gevrey:
            v.status = Status::Holds;
            v.detail = "(M_{k+1}/M_k)^{1/k} = (k+1)^{delta/k}, maximal at k=1 with value 2^delta";
            break;
        case Family::QGevrey:
            v.status = Status::Holds;
            v.detail = "(M_{k+1}/M_k)^{1/k} = q^{2+1/k}, decreasing, bounded by q^3";
            break;
        case Family::LogPower:
        case Family::Dilated:
            v.status = Status::Holds;
            v.detail = "(M_{k+1}/M_k)^{1/k} -> 1 for log-power growth";
            break;
    }
    return v;
}

ConditionVerdict inclusion_index(const WeightSequence& m, const WeightSequence& n, std::size_t K) {
    for (const auto* s : {&m, &n}) {
        if (s->is_table() && *s->length() < K + 1) {
            throw Error(ErrorKind::InsufficientTable, "inclusion to K=" + std::to_string(K) + " needs " +
                                                          std::to_string(K + 1) + " table entries");
        }
    }
    ConditionVerdict v;
    v.condition = "inclusion";
    if (K >= 1) fill_running_sup(v, 1, K, [&](std::size_t k) { return (m.log_value(k) - n.log_value(k)) / k; });
    if (same_sequence(m, n)) {
        v.status = Status::Holds;
        v.log_estimate = 0.0L;
        v.detail = "identical sequences, sup = 1";
    } else if (m.is_table() || n.is_table()) {
        v.status = Status::EvidenceOnly;
        v.detail = "finite table: prefix sup of (M_k/N_k)^{1/k} only";
    } else {
        const bool bounded = profile_bounded(growth_profile(m, 1), growth_profile(n, 1));
        v.status = bounded ? Status::Holds : Status::Fails;
        v.detail = "asymptotic growth comparison of log M_k / k: " + std::string(holds_text(bounded));
    }
    return v;
}

ConditionVerdict loss_condition(const WeightSequence& m, const WeightSequence& n, unsigned mult, std::size_t K) {
    if (mult == 0) throw Error(ErrorKind::ParameterOutOfRange, "m must be at least 1");
    ConditionVerdict v;
    v.condition = "loss_condition";
    std::size_t last = K;
    if (m.is_table()) last = std::min(last, (*m.length() - 1) / mult);
    if (n.is_table()) last = std::min(last, *n.length() - 1);
    if (last >= 1) {
        fill_running_sup(v, 1, last, [&](std::size_t k) { return (m.log_value(k * mult) - n.log_value(k)) / k; });
    } else {
        v.prefix_K = 0;
    }
    if (mult == 1 && same_sequence(m, n)) {
        v.status = Status::Holds;
        v.log_estimate = 0.0L;
        v.detail = "m = 1 and N = M, sup = 1";
    } else if (m.is_table() || n.is_table()) {
        v.status = Status::EvidenceOnly;
        v.detail = "finite table: prefix sup of (M_{km}/N_k)^{1/k} only";
    } else {
        const bool bounded = profile_bounded(growth_profile(m, mult), growth_profile(n, 1));
        v.status = bounded ? Status::Holds : Status::Fails;
        v.detail = "asymptotic growth comparison of log M_{km} / k against log N_k / k";
        if (m.family() == Family::Gevrey && n.family() == Family::Gevrey) {
            v.detail += ": Gevrey pair holds iff delta' >= delta*m = " + to_string(m.parameter() * mult);
        }
    }
    return v;
}

WeightSequence minimal_loss_sequence(const WeightSequence& m, unsigned mult) {
    if (mult == 0) throw Error(ErrorKind::ParameterOutOfRange, "m must be at least 1");
    if (mult == 1) return m;
    switch (m.family()) {
        case Family::Constant: return m;
        // ((km)!)^delta and (k!)^{delta m} differ by at most C^k: same class
        case Family::Gevrey: return WeightSequence::gevrey(m.parameter() * mult);
        case Family::QGevrey: {
            Rational q;
            const unsigned long e = static_cast<unsigned long>(mult) * mult;
            mpz_pow_ui(q.get_num_mpz_t(), m.parameter().get_num_mpz_t(), e);
            mpz_pow_ui(q.get_den_mpz_t(), m.parameter().get_den_mpz_t(), e);
            return WeightSequence::q_gevrey(q);
        }
        case Family::LogPower:
        case Family::Dilated:
        case Family::Table: return dilate(m, mult);
    }
    return m;
}

namespace {

// a_k = M_k / ((k+1) M_{k+1}) for k < count.
std::vector<long double> series_terms(const WeightSequence& m, std::size_t count) {
    std::vector<long double> a(count);
    for (std::size_t k = 0; k < count; ++k)
        a[k] = std::exp(-m.log_ratio(k) - std::log(static_cast<long double>(k) + 1.0L));
    return a;
}

std::size_t quasianalytic_terms(const WeightSequence& m, std::size_t K) {
    return m.is_table() ? std::min(K, *m.length() - 1) : K;
}

std::size_t snqa_terms(const WeightSequence& m, std::size_t tail) { return m.is_table() ? *m.length() - 1 : tail; }

ConditionVerdict quasianalytic_from(const WeightSequence& m, const std::vector<long double>& a, std::size_t terms) {
    ConditionVerdict v;
    v.condition = "quasianalytic";
    auto cps = checkpoints(terms);
    std::size_t next_cp = 0;
    long double sum = 0.0L;
    for (std::size_t k = 0; k < terms; ++k) {
        sum += a[k];
        if (next_cp < cps.size() && cps[next_cp] == k + 1) {
            v.trend.emplace_back(k + 1, std::log(sum));
            ++next_cp;
        }
    }
    v.prefix_K = terms;
    if (terms > 0) v.log_estimate = std::log(sum);
    switch (m.family()) {
        case Family::Table:
            v.status = Status::EvidenceOnly;
            v.detail = "finite table: partial sum of M_k/((k+1)M_{k+1}) only";
            break;
        case Family::Constant:
            v.status = Status::Holds;
            v.detail = "terms 1/(k+1): harmonic series diverges";
            break;
        case Family::Gevrey:
            v.status = Status::Fails;
            v.detail = "terms (k+1)^{-1-delta}: convergent p-series";
            break;
        case Family::QGevrey:
            v.status = Status::Fails;
            v.detail = "terms q^{-(2k+1)}/(k+1): geometric decay";
            break;
        case Family::LogPower:
        case Family::Dilated: {
            const bool qa = log_power_exponent(m) <= 1;
            v.status = qa ? Status::Holds : Status::Fails;
            v.detail = qa ? "log-power exponent <= 1: series diverges (slowly)"
                          : "log-power exponent > 1: series converges";
            break;
        }
    }
    return v;
}

ConditionVerdict snqa_from(const WeightSequence& m, const std::vector<long double>& a, std::size_t J,
                           std::size_t terms) {
    ConditionVerdict v;
    v.condition = "strong_nonquasianalytic";
    std::size_t last_j = terms == 0 ? 0 : std::min(J, terms - 1);
    // suffix sums T_j = sum_{k=j}^{terms-1} a_k for j <= last_j
    std::vector<long double> suffix(last_j + 1, 0.0L);
    long double acc = 0.0L;
    for (std::size_t k = terms; k-- > 0;) {
        acc += a[k];
        if (k <= last_j) suffix[k] = acc;
    }
    if (terms > 0) {
        fill_running_sup(v, 0, last_j, [&](std::size_t j) { return std::log(suffix[j]) + m.log_ratio(j); });
    }
    v.prefix_K = last_j;
    switch (m.family()) {
        case Family::Table:
            v.status = Status::EvidenceOnly;
            v.detail = "finite table: max over j of truncated tail / (M_j/M_{j+1}) only";
            break;
        case Family::Constant:
            v.status = Status::Fails;
            v.detail = "tails of the harmonic series diverge";
            break;
        case Family::Gevrey:
            v.status = Status::Holds;
            v.detail = "tail ~ (j+1)^{-delta}/delta against M_j/M_{j+1} = (j+1)^{-delta}";
            break;
        case Family::QGevrey:
            v.status = Status::Holds;
            v.detail = "tail dominated by its first term, quotient <= 1/(1-q^{-2})";
            break;
        case Family::LogPower:
        case Family::Dilated:
            v.status = Status::Fails;
            v.detail = log_power_exponent(m) <= 1 ? "series diverges (quasianalytic)"
                                                  : "quotient grows like log j: not strongly non-quasianalytic";
            break;
    }
    return v;
}

}  // namespace

ConditionVerdict quasianalytic(const WeightSequence& m, std::size_t K) {
    const std::size_t terms = quasianalytic_terms(m, K);
    return quasianalytic_from(m, series_terms(m, terms), terms);
}

ConditionVerdict strong_nonquasianalytic(const WeightSequence& m, std::size_t J, std::size_t tail) {
    const std::size_t terms = snqa_terms(m, tail);
    return snqa_from(m, series_terms(m, terms), J, terms);
}

ConditionVerdict moderate_growth(const WeightSequence& m, std::size_t K) {
    ConditionVerdict v;
    v.condition = "moderate_growth";
    std::size_t last = K;
    if (m.is_table()) last = std::min(K, *m.length() - 1);
    std::vector<long double> logs(last + 1);
    for (std::size_t k = 0; k <= last; ++k) logs[k] = m.log_value(k);
    if (last >= 2) {
        fill_running_sup(v, 2, last, [&](std::size_t s) {
            long double best = -INFINITY;
            for (std::size_t j = 1; j < s; ++j) best = std::max(best, (logs[s] - logs[j] - logs[s - j]) / s);
            return best;
        });
    }
    v.prefix_K = last;
    switch (m.family()) {
        case Family::Table:
            v.status = Status::EvidenceOnly;
            v.detail = "finite table: prefix sup over j+k <= K only";
            break;
        case Family::Constant:
            v.status = Status::Holds;
            v.detail = "all quotients equal 1";
            break;
        case Family::Gevrey:
            v.status = Status::Holds;
            v.detail = "binomial bound (j+k)! <= 2^{j+k} j! k!, sup <= 2^delta";
            break;
        case Family::QGevrey:
            v.status = Status::Fails;
            v.detail = "quotient q^{2jk/(j+k)} unbounded along j = k";
            break;
        case Family::LogPower:
        case Family::Dilated:
            v.status = Status::Holds;
            v.detail = "(L(j+k)/L(j))^{j/(j+k)} with L(x)=log(x+e) stays bounded";
            break;
    }
    return v;
}

ConditionVerdict strongly_regular(const WeightSequence& m, std::size_t K) {
    ConditionVerdict mg = moderate_growth(m, K);
    ConditionVerdict snqa = strong_nonquasianalytic(m, K);
    ConditionVerdict v;
    v.condition = "strongly_regular";
    v.prefix_K = K;
    if (mg.status == Status::Fails || snqa.status == Status::Fails) {
        v.status = Status::Fails;
    } else if (mg.status == Status::EvidenceOnly || snqa.status == Status::EvidenceOnly) {
        v.status = Status::EvidenceOnly;
    } else {
        v.status = Status::Holds;
    }
    v.detail = "moderate_growth: " + std::string(to_string(mg.status)) +
               ", strong_nonquasianalytic: " + std::string(to_string(snqa.status));
    return v;
}

Classification classify(const WeightSequence& m, std::size_t K, std::size_t sum_bound) {
    const std::size_t lc_K = m.is_table() ? std::min(K, *m.length() - 1) : K;
    Classification c{
        lc_K >= 2 ? is_log_convex(m, lc_K) : ConditionVerdict{"log_convex", Status::EvidenceOnly, {}, {}, lc_K, {},
                                                               "table too short to test log-convexity"},
        is_derivation_closed(m, K),
        {},
        {},
        moderate_growth(m, K),
        {},
    };
    {
        const std::size_t qa_terms = quasianalytic_terms(m, sum_bound);
        const std::size_t sn_terms = snqa_terms(m, sum_bound);
        const auto a = series_terms(m, std::max(qa_terms, sn_terms));
        c.quasianalytic = quasianalytic_from(m, a, qa_terms);
        c.strong_nonquasianalytic = snqa_from(m, a, K, sn_terms);
    }
    ConditionVerdict sr;
    sr.condition = "strongly_regular";
    sr.prefix_K = K;
    const auto& mg = c.moderate_growth;
    const auto& sn = c.strong_nonquasianalytic;
    if (mg.status == Status::Fails || sn.status == Status::Fails) sr.status = Status::Fails;
    else if (mg.status == Status::EvidenceOnly || sn.status == Status::EvidenceOnly) sr.status = Status::EvidenceOnly;
    else sr.status = Status::Holds;
    sr.detail = "moderate_growth: " + std::string(to_string(mg.status)) +
                ", strong_nonquasianalytic: " + std::string(to_string(sn.status));
    c.strongly_regular = sr;
    return c;
}

}  // namespace carleman
