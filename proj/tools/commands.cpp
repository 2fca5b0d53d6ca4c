#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "carleman/coinvariants.hpp"
#include "carleman/equivariant.hpp"
#include "carleman/error.hpp"
#include "carleman/invariant_theory.hpp"
#include "carleman/symmetric.hpp"
#include "carleman/weight_sequence.hpp"

namespace cli {

using namespace carleman;
using nlohmann::json;

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

std::string read_file(const std::string& path, Result& r) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot read file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    r.file_material += path;
    r.file_material.push_back('\0');
    r.file_material += ss.str();
    r.file_material.push_back('\0');
    return ss.str();
}

json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, what + " is not valid JSON: " + e.what());
    }
}

bool is_file(const std::string& path) { return std::filesystem::is_regular_file(path); }

// A group argument is either a JSON file of generator matrices or a built-in spec.
std::vector<RationalMatrix> load_generators(const std::string& spec, Result& r) {
    if (spec.empty()) throw Error(ErrorKind::ParseError, "--group is required");
    if (is_file(spec)) return matrices_from_json(parse_json_text(read_file(spec, r), spec));
    return builtin_generators(spec);
}

FiniteMatrixGroup load_group(const std::string& spec, std::size_t max_order, Result& r) {
    return FiniteMatrixGroup::close(load_generators(spec, r), max_order);
}

Polynomial load_poly(const Options& o, std::optional<std::size_t> nvars, Result& r) {
    if (!o.poly.empty() && !o.poly_file.empty()) {
        throw Error(ErrorKind::ParseError, "give either --poly or --poly-file, not both");
    }
    if (o.poly.empty() && o.poly_file.empty()) throw Error(ErrorKind::ParseError, "--poly or --poly-file is required");
    if (!o.poly.empty()) return parse_polynomial(o.poly, nvars);
    std::string text = read_file(o.poly_file, r);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[') {
        return polynomial_from_json(parse_json_text(text, o.poly_file), nvars);
    }
    return parse_polynomial(text, nvars);
}

std::vector<std::size_t> parse_blocks(const std::string& text) {
    if (text.empty()) throw Error(ErrorKind::ParseError, "--blocks is required, e.g. --blocks 2,2");
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw Error(ErrorKind::ParseError, "bad --blocks value '" + text + "'");
        }
        out.push_back(std::stoul(item));
    }
    return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

json poly_list(const std::vector<Polynomial>& ps, std::string_view prefix = "x") {
    json out = json::array();
    for (const auto& p : ps) out.push_back(to_string(p, prefix));
    return out;
}

std::string verdict_line(const ConditionVerdict& v) {
    std::string line = v.condition + ": " + std::string(to_string(v.status));
    if (auto est = v.sup_estimate()) line += " (estimate " + *est + " at K=" + std::to_string(v.prefix_K) + ")";
    return line;
}

void add_verdict(Result& r, const ConditionVerdict& v) {
    r.verdicts.push_back(to_json(v));
    r.text.push_back(verdict_line(v));
}

void add_check(Result& r, const std::string& name, bool ok, const std::string& detail = {}) {
    r.verdicts.push_back({{"check", name}, {"status", ok ? "PASS" : "FAIL"}, {"detail", detail}});
    r.text.push_back(name + ": " + (ok ? "PASS" : "FAIL") + (detail.empty() ? "" : " (" + detail + ")"));
    if (!ok) r.failed = true;
}

WeightSequence positional_sequence(const Options& o, std::size_t i) {
    if (o.sequences.size() <= i) throw Error(ErrorKind::ParseError, "missing weight sequence argument");
    return parse_sequence(o.sequences[i]);
}

SymmetricBasis parse_basis(const std::string& s) {
    if (s == "elementary") return SymmetricBasis::Elementary;
    if (s == "newton") return SymmetricBasis::Newton;
    throw Error(ErrorKind::ParseError, "--basis must be elementary or newton");
}

json matrix_list(const std::vector<RationalMatrix>& ms) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(to_json(m));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// seq

Result seq_classify(const Options& o) {
    Result r;
    const WeightSequence m = positional_sequence(o, 0);
    r.outputs["sequence"] = m.describe();
    r.text.push_back("sequence " + m.describe());
    Classification c = classify(m, o.K, o.sum_bound);
    for (const auto* v : {&c.log_convex, &c.derivation_closed, &c.quasianalytic, &c.strong_nonquasianalytic,
                          &c.moderate_growth, &c.strongly_regular}) {
        add_verdict(r, *v);
    }
    return r;
}

Result seq_compare(const Options& o) {
    Result r;
    const WeightSequence m = positional_sequence(o, 0);
    const WeightSequence n = positional_sequence(o, 1);
    r.outputs["M"] = m.describe();
    r.outputs["N"] = n.describe();
    r.text.push_back("inclusion of C^M in C^N for M=" + m.describe() + ", N=" + n.describe());
    const ConditionVerdict v = inclusion_index(m, n, o.K);
    add_verdict(r, v);
    r.failed = v.status == Status::Fails;
    return r;
}

Result seq_loss(const Options& o) {
    Result r;
    const WeightSequence m = positional_sequence(o, 0);
    const WeightSequence n = positional_sequence(o, 1);
    if (o.m == 0) throw Error(ErrorKind::ParameterOutOfRange, "--m must be at least 1");
    r.outputs["M"] = m.describe();
    r.outputs["N"] = n.describe();
    r.outputs["m"] = o.m;
    r.text.push_back("loss condition sup (M_{km}/N_k)^{1/k} for M=" + m.describe() + ", N=" + n.describe() +
                     ", m=" + std::to_string(o.m));
    const ConditionVerdict v = loss_condition(m, n, o.m, o.K);
    add_verdict(r, v);
    const WeightSequence minimal = minimal_loss_sequence(m, o.m);
    r.outputs["minimal_target"] = minimal.describe();
    r.text.push_back("minimal target sequence: " + minimal.describe());
    r.failed = v.status == Status::Fails;
    return r;
}

// ---------------------------------------------------------------------------
// inv

Result inv_generators(const Options& o) {
    Result r;
    const FiniteMatrixGroup g = load_group(o.group, o.max_order, r);
    const GeneratorSystem s = invariant_generators(g);
    r.outputs["order"] = g.order();
    r.outputs["dimension"] = g.dimension();
    r.outputs["generators"] = poly_list(s.generators);
    r.outputs["degrees"] = s.degrees;
    r.text.push_back("group of order " + std::to_string(g.order()) + " on R^" + std::to_string(g.dimension()));
    for (std::size_t i = 0; i < s.size(); ++i)
        r.text.push_back("s" + std::to_string(i + 1) + " = " + to_string(s.generators[i]) + "   (degree " +
                         std::to_string(s.degrees[i]) + ")");
    return r;
}

Result inv_rewrite(const Options& o) {
    Result r;
    const FiniteMatrixGroup g = load_group(o.group, o.max_order, r);
    const Polynomial f = load_poly(o, g.dimension(), r);
    const GeneratorSystem s = invariant_generators(g);
    const Polynomial big_f = rewrite_invariant(f, s);
    r.outputs["generators"] = poly_list(s.generators);
    r.outputs["F"] = to_string(big_f, "s");
    r.outputs["F_json"] = to_json(big_f);
    for (std::size_t i = 0; i < s.size(); ++i)
        r.text.push_back("s" + std::to_string(i + 1) + " = " + to_string(s.generators[i]));
    r.text.push_back("F = " + to_string(big_f, "s"));
    add_check(r, "round_trip", compose(big_f, s.generators) == f, "F o sigma = f");
    return r;
}

Result inv_reynolds(const Options& o) {
    Result r;
    const FiniteMatrixGroup g = load_group(o.group, o.max_order, r);
    const Polynomial f = load_poly(o, g.dimension(), r);
    const Polynomial avg = reynolds(f, g);
    r.outputs["order"] = g.order();
    r.outputs["reynolds"] = to_string(avg);
    r.outputs["input_invariant"] = avg == f;
    r.text.push_back("R(f) = " + to_string(avg));
    r.text.push_back(std::string("f is invariant: ") + (avg == f ? "yes" : "no"));
    return r;
}

Result inv_weyl_check(const Options& o) {
    Result r;
    const FiniteMatrixGroup g = load_group(o.group, o.max_order, r);
    const WeylEmbedding w = weyl_embedding(g);
    std::set<Polynomial> seen;
    std::size_t checked = 0, section_failures = 0, block_failures = 0;
    for (unsigned d = 0; d <= o.max_degree; ++d) {
        for (const auto& e : monomials_of_degree(g.dimension(), d)) {
            Polynomial f = reynolds(Polynomial::monomial(e), g);
            if (f.is_zero() || !seen.insert(f).second) continue;
            ++checked;
            const Polynomial lifted = w.lift(f);
            if (w.pullback(lifted) != f) ++section_failures;
            if (!w.is_block_invariant(lifted)) ++block_failures;
        }
    }
    r.outputs["order"] = g.order();
    r.outputs["E_dimension"] = w.matrix().rows();
    r.outputs["invariants_checked"] = checked;
    r.outputs["max_degree"] = o.max_degree;
    r.text.push_back("L : R^" + std::to_string(g.dimension()) + " -> R^" + std::to_string(w.matrix().rows()) + ", " +
                     std::to_string(checked) + " invariant monomial averages of degree <= " +
                     std::to_string(o.max_degree));
    add_check(r, "section_identity", section_failures == 0, "L^* J(f) = f, failures: " + std::to_string(section_failures));
    add_check(r, "block_invariance", block_failures == 0, "J(f) invariant under block permutations, failures: " +
                                                               std::to_string(block_failures));
    return r;
}

// ---------------------------------------------------------------------------
// coinv

namespace {

CoinvariantBasis build_basis(const Options& o, CoinvariantKind fallback) {
    const auto blocks = parse_blocks(o.blocks);
    CoinvariantKind kind = fallback;
    if (o.kind == "artin") kind = CoinvariantKind::Artin;
    else if (o.kind == "harmonic") kind = CoinvariantKind::Harmonic;
    else if (!o.kind.empty()) throw Error(ErrorKind::ParseError, "--kind must be artin or harmonic");
    return kind == CoinvariantKind::Artin ? artin_basis(blocks, o.cap) : harmonic_basis(blocks, o.cap);
}

std::string one_line_word(const RationalMatrix& m) {
    std::string out;
    for (std::size_t v : m.permutation_image()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v + 1);
    }
    return out;
}

}  // namespace

Result coinv_basis(const Options& o) {
    Result r;
    const CoinvariantBasis b = build_basis(o, CoinvariantKind::Artin);
    json words = json::array();
    for (const auto& w : b.elements) words.push_back(one_line_word(w));
    r.outputs["kind"] = std::string(to_string(b.kind));
    r.outputs["order"] = b.order();
    r.outputs["basis"] = poly_list(b.basis);
    r.outputs["elements"] = words;
    r.outputs["delta"] = to_string(b.delta);
    r.text.push_back(std::string(to_string(b.kind)) + " basis, |W| = " + std::to_string(b.order()));
    for (std::size_t j = 0; j < b.basis.size(); ++j)
        r.text.push_back("h" + std::to_string(j + 1) + " = " + to_string(b.basis[j]));
    r.text.push_back("Delta = " + to_string(b.delta));
    return r;
}

Result coinv_decompose(const Options& o) {
    Result r;
    if (o.subgroup.empty()) {
        const CoinvariantBasis b = build_basis(o, CoinvariantKind::Artin);
        const Polynomial f = load_poly(o, b.nvars, r);
        const auto parts = cramer_decompose(f, b);
        json pairs = json::array();
        Polynomial sum(b.nvars);
        bool invariant = true;
        for (std::size_t j = 0; j < parts.size(); ++j) {
            pairs.push_back({{"h", to_string(b.basis[j])}, {"f", to_string(parts[j])}});
            r.text.push_back("h" + std::to_string(j + 1) + " = " + to_string(b.basis[j]) + "   f" +
                             std::to_string(j + 1) + " = " + to_string(parts[j]));
            sum += b.basis[j] * parts[j];
            invariant = invariant && is_w_invariant(parts[j], b);
        }
        r.outputs["kind"] = std::string(to_string(b.kind));
        r.outputs["terms"] = pairs;
        add_check(r, "round_trip", sum == f, "sum h_j f_j = f");
        add_check(r, "coefficients_W_invariant", invariant);
        return r;
    }
    const CoinvariantBasis b = build_basis(o, CoinvariantKind::Harmonic);
    const FiniteMatrixGroup g = load_group(o.subgroup, o.max_order, r);
    const Polynomial f = load_poly(o, b.nvars, r);
    const auto terms = invariant_decompose(f, b, g);
    json pairs = json::array();
    Polynomial sum(b.nvars);
    bool invariant = true;
    for (const auto& t : terms) {
        pairs.push_back({{"h", to_string(t.h)}, {"f", to_string(t.coefficient)}});
        r.text.push_back("h = " + to_string(t.h) + "   f = " + to_string(t.coefficient));
        sum += t.h * t.coefficient;
        invariant = invariant && is_w_invariant(t.coefficient, b);
    }
    r.outputs["kind"] = std::string(to_string(b.kind));
    r.outputs["subgroup_order"] = g.order();
    r.outputs["terms"] = pairs;
    add_check(r, "round_trip", sum == f, "sum h f_h = f over the H^G basis");
    add_check(r, "coefficients_W_invariant", invariant);
    return r;
}

Result coinv_delta_check(const Options& o) {
    Result r;
    const CoinvariantBasis b = build_basis(o, CoinvariantKind::Artin);
    const DeltaReport rep = delta_divisibility_check(b);
    json factors = json::array();
    for (const auto& f : rep.factors) {
        const std::string form = "x" + std::to_string(f.first + 1) + " - x" + std::to_string(f.second + 1);
        factors.push_back({{"form", form}, {"exponent", f.exponent}});
        r.text.push_back("(" + form + ")^" + std::to_string(f.exponent));
    }
    r.outputs["kind"] = std::string(to_string(b.kind));
    r.outputs["factors"] = factors;
    r.outputs["cofactor"] = to_string(rep.cofactor);
    r.text.push_back("cofactor " + to_string(rep.cofactor));
    add_check(r, "delta_shape", rep.pass, "Delta = c * product of block linear forms");
    return r;
}

// ---------------------------------------------------------------------------
// sym

Result sym_rewrite(const Options& o) {
    Result r;
    const Polynomial f = load_poly(o, std::nullopt, r);
    if (!o.blocks.empty()) {
        const auto blocks = parse_blocks(o.blocks);
        const Polynomial big_f = block_rewrite(f.nvars() == 0 ? f : f, blocks);
        const auto gens = block_generators(blocks);
        r.outputs["F"] = to_string(big_f, "s");
        r.outputs["generators"] = poly_list(gens);
        r.text.push_back("F = " + to_string(big_f, "s"));
        add_check(r, "round_trip", compose(big_f, gens) == f);
        return r;
    }
    const SymmetricBasis basis = parse_basis(o.basis);
    const Polynomial big_f = rewrite_symmetric(f, basis);
    r.outputs["basis"] = std::string(to_string(basis));
    r.outputs["F"] = to_string(big_f, variable_prefix(basis));
    r.text.push_back("F = " + to_string(big_f, variable_prefix(basis)));
    add_check(r, "round_trip", compose(big_f, symmetric_generators(f.nvars(), basis)) == f);
    return r;
}

namespace {

// Monomial symmetric polynomials m_lambda for partitions with at most n parts, 1 <= |lambda| <= d.
std::vector<Polynomial> monomial_symmetrizations(std::size_t n, std::size_t d) {
    std::vector<Polynomial> out;
    for (unsigned deg = 1; deg <= d; ++deg) {
        for (const auto& e : monomials_of_degree(n, deg)) {
            if (!std::is_sorted(e.rbegin(), e.rend())) continue;  // weakly decreasing only
            Exponents perm = e;
            std::sort(perm.begin(), perm.end());
            Polynomial m(n);
            do {
                m.add_term(perm, 1);
            } while (std::next_permutation(perm.begin(), perm.end()));
            // add_term accumulates; each distinct rearrangement is visited once
            out.push_back(std::move(m));
        }
    }
    return out;
}

}  // namespace

Result sym_bronshtein_check(const Options& o) {
    Result r;
    std::vector<Polynomial> inputs;
    if (!o.poly.empty() || !o.poly_file.empty()) {
        inputs.push_back(load_poly(o, std::nullopt, r));
    } else {
        if (o.n < 1) throw Error(ErrorKind::ParameterOutOfRange, "--n must be positive");
        inputs = monomial_symmetrizations(o.n, o.max_degree);
    }
    std::size_t identities = 0, asc = 0, desc = 0;
    for (const auto& f : inputs) {
        for (const auto& c : bronshtein_check(f)) {
            ++identities;
            asc += c.ascending_ok;
            desc += c.descending_ok;
        }
    }
    std::string convention = "none";
    if (asc == identities) convention = std::string(to_string(OperatorOrder::AscendingProduct));
    else if (desc == identities) convention = std::string(to_string(OperatorOrder::DescendingProduct));
    r.outputs["polynomials"] = inputs.size();
    r.outputs["identities"] = identities;
    r.outputs["ascending_product_valid"] = asc;
    r.outputs["descending_product_valid"] = desc;
    r.outputs["validated_convention"] = convention;
    r.text.push_back(std::to_string(identities) + " identities over " + std::to_string(inputs.size()) +
                     " symmetric polynomials");
    r.text.push_back("A_{n-1} applied first: " + std::to_string(asc) + " valid; A_1 applied first: " +
                     std::to_string(desc) + " valid");
    add_check(r, "operator_identity", convention != "none", "validated order: " + convention);
    return r;
}

Result sym_necessity(const Options& o) {
    Result r;
    const WeightSequence m = parse_sequence(o.seq);
    const NecessityReport rep = necessity_report(m, o.n, o.m_max, o.truncation);
    r.outputs["report"] = to_json(rep);
    std::string text = to_text(rep);
    if (!text.empty() && text.back() == '\n') text.pop_back();
    r.text.push_back(text);
    add_check(r, "necessity_inequality", rep.all_certified(), "sum >= m! M_{mn} / 2^m certified for every row");
    return r;
}

// ---------------------------------------------------------------------------
// equiv

namespace {

RepresentationPair load_pair(const Options& o, Result& r) {
    const auto gens1 = load_generators(o.group, r);
    const auto gens2 = o.rep2 == "same" ? gens1 : load_generators(o.rep2, r);
    return RepresentationPair::from_generators(gens1, gens2, o.max_order);
}

json map_json(const EquivariantMap& f) {
    json out = json::array();
    for (const auto& c : f) out.push_back(to_string(c));
    return out;
}

std::string map_text(const EquivariantMap& f) {
    std::vector<std::string> parts;
    for (const auto& c : f) parts.push_back(to_string(c));
    return "(" + join(parts, ", ") + ")";
}

EquivariantMap load_map(const Options& o, std::size_t nvars, Result& r) {
    if (!o.map.empty() && !o.map_file.empty()) throw Error(ErrorKind::ParseError, "give either --map or --map-file");
    if (o.map.empty() && o.map_file.empty()) throw Error(ErrorKind::ParseError, "--map or --map-file is required");
    const std::string text = o.map.empty() ? read_file(o.map_file, r) : o.map;
    const json j = parse_json_text(text, "--map");
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "--map must be a JSON list of components");
    EquivariantMap f;
    for (const auto& c : j) {
        if (c.is_string()) f.push_back(parse_polynomial(c.get<std::string>(), nvars));
        else f.push_back(polynomial_from_json(c, nvars));
    }
    return f;
}

}  // namespace

Result equiv_generators(const Options& o) {
    Result r;
    const RepresentationPair rep = load_pair(o, r);
    const GeneratorSystem sigma = invariant_generators(rep.source_group());
    const ModuleGenerators mod = equivariant_module_generators(rep, sigma);
    json maps = json::array();
    for (const auto& p : mod.maps) maps.push_back(map_json(p));
    r.outputs["order"] = rep.group().order();
    r.outputs["sigma"] = poly_list(sigma.generators);
    r.outputs["module_generators"] = maps;
    r.outputs["degrees"] = mod.degrees;
    r.outputs["validated_degree"] = mod.validated_degree;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        r.text.push_back("s" + std::to_string(i + 1) + " = " + to_string(sigma.generators[i]));
    for (std::size_t j = 0; j < mod.maps.size(); ++j)
        r.text.push_back("P" + std::to_string(j + 1) + " = " + map_text(mod.maps[j]));
    r.text.push_back("generation validated up to degree " + std::to_string(mod.validated_degree));
    return r;
}

Result equiv_decompose(const Options& o) {
    Result r;
    const RepresentationPair rep = load_pair(o, r);
    const EquivariantMap f = load_map(o, rep.source_dim(), r);
    const GeneratorSystem sigma = invariant_generators(rep.source_group());
    const ModuleGenerators mod = equivariant_module_generators(rep, sigma);
    const auto direct = decompose_equivariant(f, sigma, mod, rep);
    const auto dual = decompose_equivariant_dual(f, sigma, mod, rep);
    json maps = json::array();
    for (const auto& p : mod.maps) maps.push_back(map_json(p));
    r.outputs["sigma"] = poly_list(sigma.generators);
    r.outputs["module_generators"] = maps;
    r.outputs["L_direct"] = poly_list(direct, "s");
    r.outputs["L_dual"] = poly_list(dual, "s");
    for (std::size_t j = 0; j < mod.maps.size(); ++j) {
        r.text.push_back("P" + std::to_string(j + 1) + " = " + map_text(mod.maps[j]) + "   L" + std::to_string(j + 1) +
                         " = " + to_string(direct[j], "s") + "   (H_f path: " + to_string(dual[j], "s") + ")");
    }
    add_check(r, "direct_reconstruction", reconstruct(direct, sigma, mod) == f);
    add_check(r, "dual_reconstruction", reconstruct(dual, sigma, mod) == f);
    return r;
}

// ---------------------------------------------------------------------------
// demo

Result demo_gevrey_loss(const Options& o) {
    Result r;
    const Rational delta = parse_rational(o.delta);
    const FiniteMatrixGroup g = load_group(o.group.empty() ? "sym:3" : o.group, o.max_order, r);
    const unsigned order = static_cast<unsigned>(g.order());
    const WeightSequence m = WeightSequence::gevrey(delta);
    const WeightSequence n = minimal_loss_sequence(m, order);
    const Rational gamma = delta * order;
    r.outputs["group_order"] = order;
    r.outputs["delta"] = to_string(delta);
    r.outputs["gamma"] = to_string(gamma);
    r.outputs["target"] = n.describe();
    r.text.push_back("f in G^{1+" + to_string(delta) + "} invariant under a group of order " + std::to_string(order) +
                     " gives F in G^{1+" + to_string(gamma) + "}");

    const ConditionVerdict loss = loss_condition(m, n, order, o.K);
    add_verdict(r, loss);
    const ConditionVerdict reg = strongly_regular(n, o.K);
    add_verdict(r, reg);
    add_check(r, "loss_condition_holds", loss.status == Status::Holds);
    add_check(r, "target_strongly_regular", reg.status == Status::Holds);
    const Rational sharper = gamma - delta / 2;
    const ConditionVerdict tighter = loss_condition(m, WeightSequence::gevrey(sharper), order, o.K);
    r.outputs["sharper_target"] = "gevrey:" + to_string(sharper);
    r.text.push_back("against gevrey:" + to_string(sharper) + ": " + std::string(to_string(tighter.status)));
    r.verdicts.push_back(to_json(tighter));

    std::mt19937_64 rng(o.seed);
    const Polynomial f = reynolds(random_polynomial(g.dimension(), static_cast<unsigned>(o.degree), 6, rng), g);
    const GeneratorSystem s = invariant_generators(g);
    const Polynomial big_f = rewrite_invariant(f, s);
    r.outputs["seed"] = o.seed;
    r.outputs["f"] = to_string(f);
    r.outputs["sigma"] = poly_list(s.generators);
    r.outputs["F"] = to_string(big_f, "s");
    r.text.push_back("f = " + to_string(f));
    r.text.push_back("F = " + to_string(big_f, "s"));
    add_check(r, "round_trip", compose(big_f, s.generators) == f, "f = F o sigma");
    return r;
}

}  // namespace cli
