#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "carleman/interval.hpp"
#include "carleman/rational.hpp"

namespace carleman {

enum class Family {
    Constant,  // M_k = 1
    Gevrey,    // M_k = (k!)^delta
    LogPower,  // M_k = log(k + e)^(delta k)
    QGevrey,   // M_k = q^(k^2)
    Table,     // finite list of values
    Dilated,   // k -> M_{k m} of a LogPower base, produced by minimal_loss_sequence
};

std::string_view to_string(Family f);

/// A value base^exponent with base > 0 and exponent > 0, both rational.
struct PowerValue {
    Rational base;
    Rational exponent;
};

/// A weight sequence M = (M_k) with M_0 = 1, given as a symbolic family or
/// a finite table. Immutable; cheap to copy.
class WeightSequence {
public:
    static WeightSequence constant();
    static WeightSequence gevrey(const Rational& delta);
    static WeightSequence log_power(const Rational& delta);
    static WeightSequence q_gevrey(const Rational& q);
    /// Values must be positive, start with 1 and be non-decreasing.
    static WeightSequence table(std::vector<Rational> values);

    Family family() const noexcept { return family_; }
    /// delta for Gevrey/LogPower, q for QGevrey, delta of the base for Dilated.
    const Rational& parameter() const noexcept { return parameter_; }
    /// Dilation factor m for Dilated (1 otherwise).
    unsigned dilation() const noexcept { return dilation_; }
    const std::vector<Rational>& table_values() const noexcept { return table_; }
    bool is_table() const noexcept { return family_ == Family::Table; }
    /// Number of evaluable indices; std::nullopt for infinite sequences.
    std::optional<std::size_t> length() const;
    bool has_index(std::size_t k) const { return !length() || k < *length(); }

    /// Exact M_k as base^exponent; std::nullopt for LogPower-based sequences.
    std::optional<PowerValue> exact(std::size_t k) const;
    /// Exact rational M_k when it is rational (integer exponent).
    std::optional<Rational> exact_rational(std::size_t k) const;
    /// log M_k enclosed with directed rounding.
    Interval log_interval(std::size_t k, mpfr_prec_t prec = default_precision()) const;
    /// Fast floating log M_k (evidence only, not certified).
    long double log_value(std::size_t k) const;
    /// Fast floating log(M_{k+1} / M_k).
    long double log_ratio(std::size_t k) const;

    /// Grammar form: constant, gevrey:<q>, logpow:<q>, qgevrey:<q>, table:[..]; Dilated prints as dilate(<base>,m).
    std::string describe() const;

    friend WeightSequence dilate(const WeightSequence& base, unsigned m);

private:
    WeightSequence() = default;
    void require_index(std::size_t k) const;

    Family family_ = Family::Constant;
    Rational parameter_ = 0;
    unsigned dilation_ = 1;
    std::vector<Rational> table_;
    std::vector<long double> table_logs_;
};

/// Parses the CLI grammar: constant | gevrey:<r> | logpow:<r> | qgevrey:<r> | table:[v0,v1,...].
WeightSequence parse_sequence(std::string_view text);

enum class Status { Holds, Fails, EvidenceOnly };
std::string_view to_string(Status s);

struct ConditionVerdict {
    std::string condition;
    Status status = Status::EvidenceOnly;
    std::optional<std::size_t> witness;
    /// Natural log of the numeric estimate (prefix sup, partial sum, or max quotient).
    std::optional<long double> log_estimate;
    std::size_t prefix_K = 0;
    /// (checkpoint index, log of running estimate) pairs, increasing index.
    std::vector<std::pair<std::size_t, long double>> trend;
    std::string detail;

    std::optional<std::string> sup_estimate() const;
    /// True when every checkpoint value strictly exceeds the previous one.
    bool trend_strictly_increasing() const;
};

nlohmann::json to_json(const ConditionVerdict& v);
ConditionVerdict verdict_from_json(const nlohmann::json& j);

inline constexpr std::size_t kDefaultPrefixBound = 200;
inline constexpr std::size_t kDefaultSumBound = 1'000'000;

/// Exact check of M_k^2 <= M_{k-1} M_{k+1} for 1 <= k <= K-1.
ConditionVerdict is_log_convex(const WeightSequence& m, std::size_t K = kDefaultPrefixBound);
/// sup_k (M_{k+1}/M_k)^{1/k} < infinity.
ConditionVerdict is_derivation_closed(const WeightSequence& m, std::size_t K = kDefaultPrefixBound);
/// sup_k (M_k/N_k)^{1/k} < infinity, i.e. C^M is contained in C^N.
ConditionVerdict inclusion_index(const WeightSequence& m, const WeightSequence& n,
                                 std::size_t K = kDefaultPrefixBound);
/// Divergence of sum M_k / ((k+1) M_{k+1}).
ConditionVerdict quasianalytic(const WeightSequence& m, std::size_t K = kDefaultSumBound);
/// sum_{k>=j} M_k/((k+1)M_{k+1}) <= C M_j/M_{j+1} for all j.
ConditionVerdict strong_nonquasianalytic(const WeightSequence& m, std::size_t J = kDefaultPrefixBound,
                                         std::size_t tail = kDefaultSumBound);
/// sup_{j,k} (M_{j+k}/(M_j M_k))^{1/(j+k)} < infinity.
ConditionVerdict moderate_growth(const WeightSequence& m, std::size_t K = kDefaultPrefixBound);
/// Moderate growth together with strong non-quasianalyticity.
ConditionVerdict strongly_regular(const WeightSequence& m, std::size_t K = kDefaultPrefixBound);
/// sup_k (M_{km}/N_k)^{1/k} < infinity: the loss of regularity allowed for f = F o sigma.
ConditionVerdict loss_condition(const WeightSequence& m, const WeightSequence& n, unsigned mult,
                                std::size_t K = kDefaultPrefixBound);
/// A sequence N with loss_condition(M, N, m) holding; N_k = M_{km} up to equivalence.
WeightSequence minimal_loss_sequence(const WeightSequence& m, unsigned mult);

struct Classification {
    ConditionVerdict log_convex;
    ConditionVerdict derivation_closed;
    ConditionVerdict quasianalytic;
    ConditionVerdict strong_nonquasianalytic;
    ConditionVerdict moderate_growth;
    ConditionVerdict strongly_regular;
};

Classification classify(const WeightSequence& m, std::size_t K = kDefaultPrefixBound,
                        std::size_t sum_bound = kDefaultSumBound);

}  // namespace carleman
