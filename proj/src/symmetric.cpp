#include "carleman/symmetric.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "carleman/error.hpp"

namespace carleman {

std::string_view to_string(SymmetricBasis b) { return b == SymmetricBasis::Elementary ? "elementary" : "newton"; }
std::string_view variable_prefix(SymmetricBasis b) { return b == SymmetricBasis::Elementary ? "s" : "u"; }

std::string_view to_string(OperatorOrder o) {
    return o == OperatorOrder::AscendingProduct ? "A_1...A_{n-1} (A_{n-1} applied first)"
                                                : "A_{n-1}...A_1 (A_1 applied first)";
}

Polynomial elementary_symmetric(std::size_t n, std::size_t i) {
    if (i < 1 || i > n) {
        throw Error(ErrorKind::IndexOutOfRange, "elementary symmetric index " + std::to_string(i) +
                                                    " outside 1.." + std::to_string(n));
    }
    Polynomial out(n);
    // walk all i-subsets via a selection mask
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(i), true);
    do {
        Exponents e(n, 0);
        for (std::size_t v = 0; v < n; ++v) e[v] = mask[v] ? 1 : 0;
        out.add_term(e, 1);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return out;
}

Polynomial newton_power_sum(std::size_t n, std::size_t i) {
    if (i < 1) throw Error(ErrorKind::IndexOutOfRange, "power sum index must be at least 1");
    Polynomial out(n);
    for (std::size_t v = 0; v < n; ++v) {
        Exponents e(n, 0);
        e[v] = static_cast<std::uint32_t>(i);
        out.add_term(e, 1);
    }
    return out;
}

std::vector<Polynomial> symmetric_generators(std::size_t n, SymmetricBasis basis) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 1; i <= n; ++i)
        gens.push_back(basis == SymmetricBasis::Elementary ? elementary_symmetric(n, i) : newton_power_sum(n, i));
    return gens;
}

namespace {

// p_1..p_n written in the elementary coordinates s_1..s_n.
std::vector<Polynomial> power_sums_in_elementary(std::size_t n) {
    std::vector<Polynomial> s, p;
    for (std::size_t i = 0; i < n; ++i) s.push_back(Polynomial::variable(n, i));
    for (std::size_t k = 1; k <= n; ++k) {
        Polynomial pk = scale(s[k - 1], Rational(k % 2 == 1 ? long(k) : -long(k)));
        for (std::size_t i = 1; i < k; ++i) {
            Polynomial t = s[i - 1] * p[k - i - 1];
            if (i % 2 == 1) pk += t;
            else pk -= t;
        }
        p.push_back(std::move(pk));
    }
    return p;
}

// e_1..e_n written in the power-sum coordinates u_1..u_n.
std::vector<Polynomial> elementary_in_power_sums(std::size_t n) {
    std::vector<Polynomial> u, e;
    for (std::size_t i = 0; i < n; ++i) u.push_back(Polynomial::variable(n, i));
    e.push_back(Polynomial::constant(n, 1));
    for (std::size_t k = 1; k <= n; ++k) {
        Polynomial ek(n);
        for (std::size_t i = 1; i <= k; ++i) {
            Polynomial t = e[k - i] * u[i - 1];
            if (i % 2 == 1) ek += t;
            else ek -= t;
        }
        ek *= Rational(1, static_cast<unsigned long>(k));
        e.push_back(std::move(ek));
    }
    e.erase(e.begin());
    return e;
}

Polynomial swap_variables(const Polynomial& f, std::size_t a, std::size_t b) {
    std::vector<std::size_t> target(f.nvars());
    std::iota(target.begin(), target.end(), 0);
    std::swap(target[a], target[b]);
    return relabel(f, f.nvars(), target);
}

bool invariant_under_block_swaps(const Polynomial& f, const std::vector<std::size_t>& block_sizes) {
    std::size_t offset = 0;
    for (std::size_t s : block_sizes) {
        for (std::size_t i = 0; i + 1 < s; ++i)
            if (swap_variables(f, offset + i, offset + i + 1) != f) return false;
        offset += s;
    }
    return true;
}

// Leading-monomial subtraction against products of per-block elementary symmetrics.
Polynomial leading_term_rewrite(Polynomial f, const std::vector<std::size_t>& block_sizes) {
    const std::size_t nv = f.nvars();
    auto gens = block_generators(block_sizes);
    Polynomial out(nv);
    while (!f.is_zero()) {
        const Exponents alpha = f.leading_exponents();
        const Rational c = f.leading_coefficient();
        Exponents beta(nv, 0);
        Polynomial product = Polynomial::constant(nv, c);
        std::size_t offset = 0;
        for (std::size_t s : block_sizes) {
            for (std::size_t i = 0; i < s; ++i) {
                const std::uint32_t next = i + 1 < s ? alpha[offset + i + 1] : 0;
                if (alpha[offset + i] < next) {
                    throw Error(ErrorKind::NotBlockSymmetric, "leading monomial is not block-sorted");
                }
                beta[offset + i] = alpha[offset + i] - next;
                if (beta[offset + i] > 0) product *= pow(gens[offset + i], beta[offset + i]);
            }
            offset += s;
        }
        out.add_term(beta, c);
        f -= product;
    }
    return out;
}

}  // namespace

Polynomial change_basis(const Polynomial& f, SymmetricBasis from, SymmetricBasis to) {
    if (from == to) return f;
    const std::size_t n = f.nvars();
    auto images = from == SymmetricBasis::Newton ? power_sums_in_elementary(n) : elementary_in_power_sums(n);
    return compose(f, images);
}

std::vector<Polynomial> block_generators(const std::vector<std::size_t>& block_sizes) {
    const std::size_t nv = std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
    std::vector<Polynomial> gens;
    std::size_t offset = 0;
    for (std::size_t s : block_sizes) {
        std::vector<std::size_t> target(s);
        std::iota(target.begin(), target.end(), offset);
        for (std::size_t i = 1; i <= s; ++i) gens.push_back(relabel(elementary_symmetric(s, i), nv, target));
        offset += s;
    }
    return gens;
}

Polynomial rewrite_symmetric(const Polynomial& f, SymmetricBasis basis) {
    const std::vector<std::size_t> blocks{f.nvars()};
    if (!invariant_under_block_swaps(f, blocks)) throw Error(ErrorKind::NotSymmetric, "polynomial is not symmetric");
    Polynomial e = leading_term_rewrite(f, blocks);
    return change_basis(e, SymmetricBasis::Elementary, basis);
}

Polynomial block_rewrite(const Polynomial& f, const std::vector<std::size_t>& block_sizes) {
    const std::size_t nv = std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
    if (nv != f.nvars()) throw Error(ErrorKind::DimensionMismatch, "block sizes do not add up to the variable count");
    if (!invariant_under_block_swaps(f, block_sizes)) {
        throw Error(ErrorKind::NotBlockSymmetric, "polynomial is not invariant under the block permutations");
    }
    return leading_term_rewrite(f, block_sizes);
}

// ---------------------------------------------------------------------------
// Divided-difference operators

Polynomial bronshtein_A(const Polynomial& h, std::size_t j, std::size_t first, std::size_t block_size) {
    const std::size_t nv = h.nvars();
    if (first >= nv) throw Error(ErrorKind::IndexOutOfRange, "block start outside the variables");
    if (block_size == 0) block_size = nv - first;
    if (first + block_size > nv) throw Error(ErrorKind::IndexOutOfRange, "block extends past the variables");
    if (j < 1 || j + 1 > block_size) {
        throw Error(ErrorKind::IndexOutOfRange, "A_j needs 1 <= j <= " + std::to_string(block_size - 1) +
                                                    ", got j=" + std::to_string(j));
    }
    const std::size_t a = first + j - 1;
    const std::size_t b = a + 1;
    Polynomial d = partial_derivative(h, a) - partial_derivative(h, b);
    if (d.is_zero()) return Polynomial(nv);

    // path x + t (P x - x) in nv+1 variables, t last
    const std::size_t t = nv;
    std::vector<Polynomial> path;
    for (std::size_t i = 0; i < nv; ++i) path.push_back(Polynomial::variable(nv + 1, i));
    Polynomial xa = Polynomial::variable(nv + 1, a);
    Polynomial xb = Polynomial::variable(nv + 1, b);
    Polynomial tv = Polynomial::variable(nv + 1, t);
    path[a] = xa + tv * (xb - xa);
    path[b] = xb + tv * (xa - xb);
    Polynomial along = compose(d, path);

    Polynomial out(nv);
    for (const auto& [e, c] : along.terms()) {
        Exponents reduced(e.begin(), e.end() - 1);
        out.add_term(reduced, c / Rational(e.back() + 1));
    }
    return out;
}

Polynomial bronshtein_g(const Polynomial& f, std::size_t k) {
    const std::size_t n = f.nvars();
    if (k < 1 || k > n) throw Error(ErrorKind::IndexOutOfRange, "k must satisfy 1 <= k <= n");
    Polynomial sigma = Polynomial::constant(n, 1);
    if (n - k >= 1) {
        std::vector<std::size_t> target(n - 1);
        std::iota(target.begin(), target.end(), 0);
        sigma = relabel(elementary_symmetric(n - 1, n - k), n, target);
    }
    Rational coeff(k % 2 == 1 ? 1 : -1, static_cast<unsigned long>(k));
    return scale(sigma * partial_derivative(f, n - 1), coeff);
}

Polynomial bronshtein_partial(const Polynomial& f, std::size_t k, OperatorOrder order) {
    const std::size_t n = f.nvars();
    if (!invariant_under_block_swaps(f, {n})) throw Error(ErrorKind::NotSymmetric, "polynomial is not symmetric");
    Polynomial g = bronshtein_g(f, k);
    if (order == OperatorOrder::AscendingProduct) {
        for (std::size_t j = n - 1; j >= 1; --j) g = bronshtein_A(g, j);
    } else {
        for (std::size_t j = 1; j + 1 <= n; ++j) g = bronshtein_A(g, j);
    }
    return g;
}

Polynomial newton_partial_oracle(const Polynomial& f, std::size_t k) {
    const std::size_t n = f.nvars();
    if (k < 1 || k > n) throw Error(ErrorKind::IndexOutOfRange, "k must satisfy 1 <= k <= n");
    Polynomial big_f = rewrite_symmetric(f, SymmetricBasis::Newton);
    return compose(partial_derivative(big_f, k - 1), symmetric_generators(n, SymmetricBasis::Newton));
}

std::vector<BronshteinCheck> bronshtein_check(const Polynomial& f) {
    const std::size_t n = f.nvars();
    std::vector<BronshteinCheck> out;
    for (std::size_t k = 1; k <= n; ++k) {
        const Polynomial oracle = newton_partial_oracle(f, k);
        BronshteinCheck c;
        c.n = n;
        c.k = k;
        c.ascending_ok = bronshtein_partial(f, k, OperatorOrder::AscendingProduct) == oracle;
        c.descending_ok = bronshtein_partial(f, k, OperatorOrder::DescendingProduct) == oracle;
        out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Necessity series

std::string NecessityRow::ratio_string(int digits) const { return (truncated_sum / lower_bound).lower_string(digits); }

bool NecessityReport::all_certified() const {
    return std::all_of(rows.begin(), rows.end(), [](const NecessityRow& r) { return r.certified; });
}

NecessityReport necessity_report(const WeightSequence& seq, std::size_t n, std::size_t m_max, std::size_t truncation,
                                 mpfr_prec_t prec) {
    if (n < 3) throw Error(ErrorKind::ParameterOutOfRange, "the necessity series needs n >= 3");
    if (m_max < 1) throw Error(ErrorKind::ParameterOutOfRange, "m_max must be at least 1");
    if (truncation < m_max) throw Error(ErrorKind::ParameterOutOfRange, "truncation K must be at least m_max");
    const std::size_t top = truncation * n + 1;
    if (!seq.has_index(top)) {
        throw Error(ErrorKind::InsufficientTable, "the series needs M up to index " + std::to_string(top));
    }
    if (is_log_convex(seq, top).status == Status::Fails) {
        throw Error(ErrorKind::NotLogConvex, seq.describe() + " is not log-convex");
    }

    NecessityReport report;
    report.sequence = seq.describe();
    report.n = n;
    report.m_max = m_max;
    report.truncation = truncation;

    const Interval log2 = log(Interval::from_integer(2, prec));
    std::vector<Interval> log_m_kn, log_rho;
    for (std::size_t k = 0; k <= truncation; ++k) {
        Interval a = seq.log_interval(k * n, prec);
        Interval b = seq.log_interval(k * n + 1, prec);
        log_rho.push_back(b - a);
        log_m_kn.push_back(std::move(a));
    }
    for (std::size_t m = 1; m <= m_max; ++m) {
        const Interval log_fact = log(Interval::from_integer(factorial(m), prec));
        Interval sum(prec);
        for (std::size_t k = 0; k <= truncation; ++k) {
            // log(c_k rho_k^{mn} m!) = log M_{kn} - k log 2 + (m - k) n log rho_k + log m!
            const long shift = (static_cast<long>(m) - static_cast<long>(k)) * static_cast<long>(n);
            Interval term = log_m_kn[k] - Interval::from_integer(Integer(static_cast<unsigned long>(k)), prec) * log2 +
                            Interval::from_integer(Integer(shift), prec) * log_rho[k] + log_fact;
            sum += exp(term);
        }
        Interval bound = exp(log_fact + seq.log_interval(m * n, prec) -
                             Interval::from_integer(Integer(static_cast<unsigned long>(m)), prec) * log2);
        NecessityRow row{m, sum, bound, certainly_less_equal(bound, sum)};
        report.rows.push_back(std::move(row));
    }
    return report;
}

nlohmann::json to_json(const NecessityReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows) {
        rows.push_back({{"m", row.m},
                        {"truncated_sum", row.truncated_sum.lower_string(20)},
                        {"lower_bound", row.lower_bound.upper_string(20)},
                        {"ratio", row.ratio_string()},
                        {"certified", row.certified}});
    }
    return {{"sequence", r.sequence}, {"n", r.n},   {"m_max", r.m_max},
            {"truncation", r.truncation}, {"rows", rows}, {"all_certified", r.all_certified()}};
}

std::string to_text(const NecessityReport& r) {
    std::string out = "necessity series for " + r.sequence + ", n=" + std::to_string(r.n) +
                      ", K=" + std::to_string(r.truncation) + "\n";
    char line[256];
    std::snprintf(line, sizeof line, "%4s  %-26s  %-26s  %-14s  %s\n", "m", "truncated_sum", "lower_bound", "ratio",
                  "certified");
    out += line;
    for (const auto& row : r.rows) {
        std::snprintf(line, sizeof line, "%4zu  %-26s  %-26s  %-14s  %s\n", row.m,
                      row.truncated_sum.lower_string(20).c_str(), row.lower_bound.upper_string(20).c_str(),
                      row.ratio_string().c_str(), row.certified ? "yes" : "NO");
        out += line;
    }
    return out;
}

}  // namespace carleman
