#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace cli {

struct Options {
    std::string format = "json";
    std::uint64_t seed = 20240117;
    std::size_t max_order = 1024;
    bool timing = false;

    std::vector<std::string> sequences;  // positional weight sequence specs
    std::string group;
    std::string rep2 = "same";
    std::string poly;
    std::string poly_file;
    std::string map;
    std::string map_file;
    std::string subgroup;
    std::string blocks;
    std::string basis = "elementary";
    std::string kind;
    std::string seq = "gevrey:1";
    std::string delta = "1";
    unsigned m = 1;
    std::size_t K = 200;
    std::size_t sum_bound = 1'000'000;
    std::size_t n = 3;
    std::size_t m_max = 5;
    std::size_t truncation = 40;
    std::size_t max_degree = 6;
    std::size_t degree = 4;
    std::size_t cap = 720;
};

/// What a subcommand hands back to the driver. `failed` selects exit code 1.
struct Result {
    nlohmann::json outputs = nlohmann::json::object();
    nlohmann::json verdicts = nlohmann::json::array();
    bool failed = false;
    std::vector<std::string> text;
    /// Contents of files read, folded into the inputs digest.
    std::string file_material;
};

using Handler = Result (*)(const Options&);

Result seq_classify(const Options& o);
Result seq_compare(const Options& o);
Result seq_loss(const Options& o);
Result inv_generators(const Options& o);
Result inv_rewrite(const Options& o);
Result inv_reynolds(const Options& o);
Result inv_weyl_check(const Options& o);
Result coinv_basis(const Options& o);
Result coinv_decompose(const Options& o);
Result coinv_delta_check(const Options& o);
Result sym_rewrite(const Options& o);
Result sym_bronshtein_check(const Options& o);
Result sym_necessity(const Options& o);
Result equiv_generators(const Options& o);
Result equiv_decompose(const Options& o);
Result demo_gevrey_loss(const Options& o);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(const std::string& data);

}  // namespace cli
