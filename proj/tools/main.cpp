#include <chrono>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "carleman/error.hpp"
#include "commands.hpp"

namespace {

using nlohmann::json;
using carleman::ErrorKind;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotInvariant:
        case ErrorKind::NotSymmetric:
        case ErrorKind::NotBlockSymmetric:
        case ErrorKind::NotEquivariant:
        case ErrorKind::NotLogConvex:
        case ErrorKind::NotInAlgebra:
        case ErrorKind::NotInModule:
        case ErrorKind::DeltaDivisionFailed:
        case ErrorKind::PrecisionExhausted:
        case ErrorKind::NotDivisible:
            return 1;
        default:
            return 2;
    }
}

int report_error(const std::string& kind, const std::string& detail, int code) {
    std::cerr << json{{"error", kind}, {"detail", detail}}.dump() << '\n';
    return code;
}

struct Leaf {
    CLI::App* app;
    std::string name;
    cli::Handler handler;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariant theory and Denjoy-Carleman weight sequence toolkit", "carleman"};
    app.require_subcommand(1);
    app.fallthrough();

    cli::Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    app.add_option("--seed", o.seed, "Seed for randomized commands")->capture_default_str();
    app.add_option("--max-order", o.max_order, "Upper bound on group orders during closure")->capture_default_str();
    app.add_flag("--timing", o.timing, "Include wall-clock timing in the report");

    std::vector<Leaf> leaves;
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, cli::Handler h) {
        CLI::App* sub = parent->add_subcommand(name, help);
        leaves.push_back({sub, parent->get_name() + " " + name, h});
        return sub;
    };
    auto poly_opts = [&](CLI::App* sub) {
        sub->add_option("--poly", o.poly, "Polynomial in the text grammar, e.g. x1^2 + x2^2");
        sub->add_option("--poly-file", o.poly_file, "File holding a polynomial (text or JSON)");
    };
    auto group_opt = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--group", o.group,
                                    "JSON file of generator matrices, or trivial:n sign:n sym:n cyclic:n rot4 blocks:a,b");
        if (required) opt->required();
    };

    CLI::App* seq = app.add_subcommand("seq", "Weight sequence analysis");
    seq->require_subcommand(1);
    {
        auto* s = leaf(seq, "classify", "Decide every regularity condition for one sequence", cli::seq_classify);
        s->add_option("sequence", o.sequences, "constant | gevrey:r | logpow:r | qgevrey:r | table:[..]")
            ->required()
            ->expected(1);
        s->add_option("--K", o.K, "Prefix bound")->capture_default_str();
        s->add_option("--sum-bound", o.sum_bound, "Partial sum bound")->capture_default_str();

        s = leaf(seq, "compare", "Inclusion of C^M in C^N", cli::seq_compare);
        s->add_option("sequences", o.sequences, "M N")->required()->expected(2);
        s->add_option("--K", o.K, "Prefix bound")->capture_default_str();

        s = leaf(seq, "loss", "Loss of regularity sup (M_{km}/N_k)^{1/k}", cli::seq_loss);
        s->add_option("sequences", o.sequences, "M N")->required()->expected(2);
        s->add_option("--m", o.m, "Multiplier m")->capture_default_str();
        s->add_option("--K", o.K, "Prefix bound")->capture_default_str();
    }

    CLI::App* inv = app.add_subcommand("inv", "Invariants of finite matrix groups");
    inv->require_subcommand(1);
    {
        auto* s = leaf(inv, "generators", "Hilbert generators of the invariant ring", cli::inv_generators);
        group_opt(s, true);
        s = leaf(inv, "rewrite", "Write an invariant as F o sigma", cli::inv_rewrite);
        group_opt(s, true);
        poly_opts(s);
        s = leaf(inv, "reynolds", "Average a polynomial over the group", cli::inv_reynolds);
        group_opt(s, true);
        poly_opts(s);
        s = leaf(inv, "weyl-check", "Check L^* J = id on invariant monomial averages", cli::inv_weyl_check);
        group_opt(s, true);
        s->add_option("--max-degree", o.max_degree, "Degree bound")->capture_default_str();
    }

    CLI::App* coinv = app.add_subcommand("coinv", "Coinvariant bases of products of symmetric groups");
    coinv->require_subcommand(1);
    {
        auto block_opts = [&](CLI::App* s) {
            s->add_option("--blocks", o.blocks, "Block sizes, e.g. 2,2")->required();
            s->add_option("--kind", o.kind, "artin or harmonic")->check(CLI::IsMember({"artin", "harmonic"}));
            s->add_option("--cap", o.cap, "Bound on |W|")->capture_default_str();
        };
        auto* s = leaf(coinv, "basis", "Coinvariant basis and Delta", cli::coinv_basis);
        block_opts(s);
        s = leaf(coinv, "decompose", "f = sum h_j f_j with W-invariant f_j", cli::coinv_decompose);
        block_opts(s);
        poly_opts(s);
        s->add_option("--subgroup", o.subgroup, "JSON file of subgroup generators, or a built-in spec");
        s = leaf(coinv, "delta-check", "Factor Delta into block linear forms", cli::coinv_delta_check);
        block_opts(s);
    }

    CLI::App* sym = app.add_subcommand("sym", "Symmetric polynomials");
    sym->require_subcommand(1);
    {
        auto* s = leaf(sym, "rewrite", "Rewrite in elementary or Newton generators", cli::sym_rewrite);
        poly_opts(s);
        s->add_option("--basis", o.basis, "elementary or newton")
            ->check(CLI::IsMember({"elementary", "newton"}))
            ->capture_default_str();
        s->add_option("--blocks", o.blocks, "Rewrite block-symmetric input over these block sizes");
        s = leaf(sym, "bronshtein-check", "Check the divided difference operator identity", cli::sym_bronshtein_check);
        poly_opts(s);
        s->add_option("--n", o.n, "Number of variables")->capture_default_str();
        s->add_option("--max-degree", o.max_degree, "Degree bound")->capture_default_str();
        s = leaf(sym, "necessity", "Certified lower bounds for the necessity inequality", cli::sym_necessity);
        s->add_option("--seq", o.seq, "Weight sequence")->capture_default_str();
        s->add_option("--n", o.n, "Number of variables")->capture_default_str();
        s->add_option("--m-max", o.m_max, "Largest m")->capture_default_str();
        s->add_option("--K", o.truncation, "Truncation index")->capture_default_str();
    }

    CLI::App* equiv = app.add_subcommand("equiv", "Equivariant polynomial maps");
    equiv->require_subcommand(1);
    {
        auto rep_opts = [&](CLI::App* s) {
            group_opt(s, true);
            s->add_option("--rep2", o.rep2, "Target representation: same, a JSON file, or a built-in spec")
                ->capture_default_str();
        };
        auto* s = leaf(equiv, "generators", "Module generators over the invariant ring", cli::equiv_generators);
        rep_opts(s);
        s = leaf(equiv, "decompose", "Coefficients L(f)_j with f = sum (L_j o sigma) P_j", cli::equiv_decompose);
        rep_opts(s);
        s->add_option("--map", o.map, "JSON list of component polynomials");
        s->add_option("--map-file", o.map_file, "File holding the JSON list");
    }

    CLI::App* demo = app.add_subcommand("demo", "Bundled walkthroughs");
    demo->require_subcommand(1);
    {
        auto* s = leaf(demo, "gevrey-loss", "Gevrey invariant f = F o sigma with F in G^{1+delta m}", cli::demo_gevrey_loss);
        s->add_option("--delta", o.delta, "Gevrey exponent")->capture_default_str();
        group_opt(s, false);
        s->add_option("--degree", o.degree, "Degree of the random invariant")->capture_default_str();
        s->add_option("--K", o.K, "Prefix bound")->capture_default_str();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error("UsageError", e.what(), 2);
    }

    const Leaf* chosen = nullptr;
    for (const auto& l : leaves)
        if (l.app->parsed()) chosen = &l;
    if (!chosen) return report_error("UsageError", "no subcommand selected", 2);

    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a != "--timing") args.push_back(a);
    }

    const auto start = std::chrono::steady_clock::now();
    cli::Result result;
    try {
        result = chosen->handler(o);
    } catch (const carleman::Error& e) {
        return report_error(std::string(carleman::to_string(e.kind())), e.detail(), exit_code_for(e.kind()));
    } catch (const std::exception& e) {
        return report_error("InternalError", e.what(), 2);
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::string material;
    for (const auto& a : args) {
        material += a;
        material.push_back('\0');
    }
    material += result.file_material;

    if (o.format == "text") {
        for (const auto& line : result.text) std::cout << line << '\n';
        std::cout << "status: " << (result.failed ? "FAIL" : "PASS") << '\n';
        if (o.timing) std::cout << "timing_ms: " << ms << '\n';
    } else {
        json report;
        report["command"] = chosen->name;
        report["arguments"] = args;
        report["inputs_digest"] = cli::fnv1a_hex(material);
        report["outputs"] = std::move(result.outputs);
        report["verdicts"] = std::move(result.verdicts);
        report["status"] = result.failed ? "FAIL" : "PASS";
        if (o.timing) report["timing_ms"] = ms;
        std::cout << report.dump(2) << '\n';
    }
    return result.failed ? 1 : 0;
}
