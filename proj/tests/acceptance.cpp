// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "carleman/coinvariants.hpp"
#include "carleman/equivariant.hpp"
#include "carleman/error.hpp"
#include "carleman/invariant_theory.hpp"
#include "carleman/symmetric.hpp"
#include "carleman/weight_sequence.hpp"
#include "cli_run.hpp"

using namespace carleman;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;
};

const std::vector<std::string> kGroups{"sign:1", "sym:2", "sym:3", "rot4", "blocks:2,2"};

void expect(Outcome& o, bool cond, const std::string& what) {
    if (!cond && o.ok) o.note = what;
    o.ok = o.ok && cond;
}

Outcome classification_table() {
    Outcome o;
    auto c = classify(WeightSequence::constant());
    expect(o, c.quasianalytic.status == Status::Holds, "constant quasianalytic");
    expect(o, c.strongly_regular.status == Status::Fails, "constant not strongly regular");
    for (const auto& d : {make_rational(1, 2), Rational(1), Rational(2)}) {
        c = classify(WeightSequence::gevrey(d));
        expect(o, c.log_convex.status == Status::Holds, "gevrey log-convex");
        expect(o, c.quasianalytic.status == Status::Fails, "gevrey non-quasianalytic");
        expect(o, c.strongly_regular.status == Status::Holds, "gevrey strongly regular " + to_string(d));
    }
    c = classify(WeightSequence::log_power(1));
    expect(o, c.quasianalytic.status == Status::Holds, "logpow:1 quasianalytic");
    c = classify(WeightSequence::log_power(2));
    expect(o, c.quasianalytic.status == Status::Fails, "logpow:2 non-quasianalytic");
    expect(o, c.strongly_regular.status == Status::Fails, "logpow:2 not strongly regular");
    c = classify(WeightSequence::q_gevrey(2));
    expect(o, c.strong_nonquasianalytic.status == Status::Holds, "qgevrey:2 strongly non-quasianalytic");
    expect(o, c.moderate_growth.status == Status::Fails, "qgevrey:2 no moderate growth");
    return o;
}

// Growth of the running log-sup between K/2 and K, per doubling of K.
long double doubling_slope(const ConditionVerdict& v) {
    const auto& t = v.trend;
    if (t.size() < 2) return 0;
    return (t[t.size() - 1].second - t[t.size() - 2].second) / std::log(2.0L);
}

Outcome gevrey_loss_law() {
    Outcome o;
    constexpr long double kSlopeThreshold = 1.0L / 16;
    const Rational step = make_rational(1, 4);
    for (const auto& delta : {make_rational(1, 2), Rational(1)}) {
        for (unsigned m = 1; m <= 3; ++m) {
            const Rational gamma = delta * m;
            for (int i = -2; i <= 2; ++i) {
                const Rational target = gamma + step * i;
                if (target <= 0) continue;
                const auto v = loss_condition(WeightSequence::gevrey(delta), WeightSequence::gevrey(target), m, 200);
                const bool should_hold = target >= gamma;
                const std::string tag = "delta=" + to_string(delta) + " m=" + std::to_string(m) +
                                        " target=" + to_string(target);
                expect(o, v.status == (should_hold ? Status::Holds : Status::Fails), "verdict " + tag);
                const long double g = doubling_slope(v);
                if (should_hold) {
                    expect(o, g < kSlopeThreshold, "bounded prefix sup " + tag);
                } else {
                    expect(o, v.trend_strictly_increasing() && g > kSlopeThreshold, "increasing prefix sup " + tag);
                }
            }
        }
    }
    return o;
}

Outcome invariant_round_trip() {
    Outcome o;
    std::size_t failures = 0;
    for (const auto& spec : kGroups) {
        const auto g = builtin_group(spec);
        const auto s = invariant_generators(g);
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            std::mt19937_64 rng(seed);
            const Polynomial f = reynolds(random_polynomial(g.dimension(), 8, 8, rng), g);
            if (compose(rewrite_invariant(f, s), s.generators) != f) ++failures;
        }
    }
    expect(o, failures == 0, std::to_string(failures) + " round trip failures");
    return o;
}

Outcome weyl_section() {
    Outcome o;
    std::size_t checked = 0;
    for (const auto& spec : kGroups) {
        const auto g = builtin_group(spec);
        const WeylEmbedding w(g);
        std::set<Polynomial> seen;
        for (unsigned d = 0; d <= 6; ++d) {
            for (const auto& e : monomials_of_degree(g.dimension(), d)) {
                const Polynomial f = reynolds(Polynomial::monomial(e), g);
                if (f.is_zero() || !seen.insert(f).second) continue;
                ++checked;
                expect(o, w.pullback(w.lift(f)) == f, "L^* J f != f for " + spec);
            }
        }
    }
    o.note = o.ok ? std::to_string(checked) + " averages" : o.note;
    return o;
}

Outcome coinvariant_decomposition() {
    Outcome o;
    std::mt19937_64 rng(20240117);
    for (const auto& blocks : {std::vector<std::size_t>{2}, std::vector<std::size_t>{3}, std::vector<std::size_t>{2, 2}}) {
        const auto b = artin_basis(blocks);
        const auto rep = delta_divisibility_check(b);
        expect(o, rep.pass && rep.cofactor.is_constant(), "Delta factorization");
        for (int t = 0; t < 30; ++t) {
            const Polynomial f = random_polynomial(b.nvars, 6, 8, rng);
            try {
                const auto parts = cramer_decompose(f, b);
                Polynomial sum(b.nvars);
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    expect(o, is_w_invariant(parts[j], b), "f_j not W-invariant");
                    sum += b.basis[j] * parts[j];
                }
                expect(o, sum == f, "sum h_j f_j != f");
            } catch (const Error& e) {
                expect(o, false, e.what());
            }
        }
    }
    return o;
}

Outcome bronshtein_identity() {
    Outcome o;
    std::size_t identities = 0;
    for (std::size_t n : {2u, 3u}) {
        for (unsigned deg = 1; deg <= 6; ++deg) {
            for (const auto& e : monomials_of_degree(n, deg)) {
                if (!std::is_sorted(e.rbegin(), e.rend())) continue;
                Exponents perm = e;
                std::sort(perm.begin(), perm.end());
                Polynomial f(n);
                do {
                    f.add_term(perm, 1);
                } while (std::next_permutation(perm.begin(), perm.end()));
                for (std::size_t k = 1; k <= n; ++k) {
                    ++identities;
                    expect(o, bronshtein_partial(f, k, OperatorOrder::AscendingProduct) == newton_partial_oracle(f, k),
                           "identity fails for " + to_string(f));
                }
            }
        }
    }
    if (o.ok) o.note = std::to_string(identities) + " identities, A_{n-1} applied first";
    return o;
}

Outcome necessity_inequality() {
    Outcome o;
    const auto r = necessity_report(WeightSequence::gevrey(1), 3, 5, 40);
    expect(o, r.rows.size() == 5 && r.all_certified(), "uncertified row");
    return o;
}

Outcome equivariant_reconstruction() {
    Outcome o;
    std::mt19937_64 rng(20240117);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (const char* spec : {"sign:1", "sym:2"}) {
        const auto gens = builtin_generators(spec);
        const auto rep = RepresentationPair::from_generators(gens, gens);
        const auto sigma = invariant_generators(rep.source_group());
        const auto mod = equivariant_module_generators(rep, sigma);
        for (int t = 0; t < 30; ++t) {
            EquivariantMap f(rep.target_dim(), Polynomial(rep.source_dim()));
            for (std::size_t j = 0; j < mod.maps.size(); ++j) {
                Polynomial c(sigma.size());
                for (int d = 0; d + mod.degrees[j] <= 6; ++d)
                    for (const auto& beta : weighted_monomials(sigma.degrees, d))
                        if (coeff(rng) > 0) c.add_term(beta, coeff(rng));
                const auto term = multiply(compose(c, sigma.generators), mod.maps[j]);
                for (std::size_t i = 0; i < f.size(); ++i) f[i] += term[i];
            }
            const auto direct = decompose_equivariant(f, sigma, mod, rep);
            const auto dual = decompose_equivariant_dual(f, sigma, mod, rep);
            expect(o, reconstruct(direct, sigma, mod) == f, std::string("direct path on ") + spec);
            expect(o, reconstruct(dual, sigma, mod) == f, std::string("H_f path on ") + spec);
        }
    }
    return o;
}

Outcome determinism() {
    Outcome o;
    const std::vector<std::string> commands{
        "seq classify gevrey:1",
        "seq compare logpow:1 gevrey:1",
        "seq loss gevrey:1 gevrey:2 --m 2",
        "inv generators --group rot4",
        "inv rewrite --group sym:3 --poly \"x1^2 + x2^2 + x3^2\"",
        "inv reynolds --group blocks:2,2 --poly \"x1*x3^2\"",
        "inv weyl-check --group sym:2",
        "coinv basis --blocks 2,2",
        "coinv decompose --blocks 3 --poly \"x1^3*x2\"",
        "coinv delta-check --blocks 2,2",
        "sym rewrite --poly \"x1^3 + x2^3\"",
        "sym bronshtein-check --n 2 --max-degree 4",
        "sym necessity",
        "equiv generators --group sym:2",
        "equiv decompose --group sign:1 --map '[\"x1^3\"]'",
        "demo gevrey-loss",
        "demo gevrey-loss --seed 99 --group rot4",
    };
    for (const auto& c : commands) {
        const auto a = run_cli(c);
        const auto b = run_cli(c);
        expect(o, a.code == 0 && a.out == b.out && !a.out.empty(), "'" + c + "'");
    }
    if (o.ok) o.note = std::to_string(commands.size()) + " commands";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        std::string name;
        double limit_s;  // 0 means no runtime bound
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "classification table", 5, classification_table},
        {2, "gevrey loss law", 10, gevrey_loss_law},
        {3, "invariant rewrite round trip", 120, invariant_round_trip},
        {4, "weyl section identity", 60, weyl_section},
        {5, "coinvariant decomposition", 120, coinvariant_decomposition},
        {6, "bronshtein operator identity", 120, bronshtein_identity},
        {7, "necessity inequality", 5, necessity_inequality},
        {8, "equivariant reconstruction", 60, equivariant_reconstruction},
        {9, "cli determinism", 0, determinism},
    };
    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_s > 0 && secs >= c.limit_s) {
            out.ok = false;
            out.note = "runtime over " + std::to_string(static_cast<int>(c.limit_s)) + " s";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (out.ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << "  (" << secs << " s";
        if (!out.note.empty()) line << "; " << out.note;
        line << ")";
        std::cout << line.str() << std::endl;
        all = all && out.ok;
    }
    return all ? 0 : 1;
}
