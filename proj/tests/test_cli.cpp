#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "cli_run.hpp"

using nlohmann::json;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / ("carleman_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

}  // namespace

TEST_CASE("sequence commands") {
    auto r = run_cli("seq classify gevrey:1");
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["command"] == "seq classify");
    bool found = false;
    for (const auto& v : j["verdicts"])
        if (v["condition"] == "strongly_regular") found = v["status"] == "Holds";
    CHECK(found);

    r = run_cli("seq loss gevrey:1 gevrey:2 --m 2");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["verdicts"][0]["status"] == "Holds");
    CHECK(run_cli("seq loss gevrey:1 gevrey:1 --m 2").code == 1);
    CHECK(run_cli("seq compare gevrey:1 gevrey:2").code == 0);
}

TEST_CASE("invariant rewrite output") {
    const auto r = run_cli("inv rewrite --group sym:2 --poly \"x1^2 + x2^2\"");
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["outputs"]["F"] == "s1^2 - 2*s2");
    const auto t = run_cli("--format text inv rewrite --group sym:2 --poly \"x1^2 + x2^2\"");
    CHECK(t.out.find("F = s1^2 - 2*s2") != std::string::npos);
}

TEST_CASE("group and polynomial files") {
    const std::string group = temp_file("swap.json", R"([[["0","1"],["1","0"]]])");
    const std::string poly = temp_file("poly.txt", "x1^3 + x2^3");
    const auto r = run_cli("inv rewrite --group " + group + " --poly-file " + poly);
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["outputs"]["F"] == "s1^3 - 3*s1*s2");
    CHECK(run_cli("inv rewrite --group " + group + " --poly x1 --poly-file " + poly).code == 2);
}

TEST_CASE("exit codes and structured errors") {
    auto r = run_cli("inv rewrite --group sym:2 --poly x1", true);
    CHECK(r.code == 1);
    CHECK(json::parse(r.out)["error"] == "NotInvariant");
    r = run_cli("seq classify bessel:1", true);
    CHECK(r.code == 2);
    CHECK(json::parse(r.out)["error"] == "ParseError");
    CHECK(run_cli("nonsense").code == 2);
    CHECK(run_cli("coinv basis --blocks 7").code == 2);
    CHECK(run_cli("inv generators --group sym:5 --max-order 10").code == 2);
}

TEST_CASE("remaining subcommands succeed") {
    const std::string sub = temp_file("sub.json", "[[[0,1,0,0],[1,0,0,0],[0,0,0,1],[0,0,1,0]]]");
    for (const std::string args :
         {"inv generators --group rot4", "inv reynolds --group sign:1 --poly \"x1^3 + x1^2\"",
          "inv weyl-check --group sym:3", "coinv basis --blocks 2,2 --kind harmonic",
          "coinv decompose --blocks 3 --poly \"x1^2*x3\"", "coinv delta-check --blocks 3",
          "sym rewrite --poly \"x1^2 + x2^2 + x3^2\" --basis newton", "sym bronshtein-check --n 3 --max-degree 4",
          "sym necessity --seq gevrey:1 --n 3 --m-max 5 --K 40", "equiv generators --group sym:2",
          "equiv decompose --group sym:2 --map '[\"x1^2\",\"x2^2\"]'", "demo gevrey-loss --delta 1/2 --group sym:2"}) {
        CAPTURE(args);
        const auto r = run_cli(args);
        CHECK(r.code == 0);
        CHECK(json::parse(r.out)["status"] == "PASS");
    }
    const auto r = run_cli("coinv decompose --blocks 2,2 --subgroup " + sub + " --poly \"x1*x3 + x2*x4\"");
    CHECK(r.code == 0);
}

TEST_CASE("identical runs are byte-identical") {
    for (const std::string args : {"demo gevrey-loss --seed 7", "seq classify logpow:2", "inv generators --group rot4"}) {
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
    const auto timed = json::parse(run_cli("--timing seq classify constant").out);
    CHECK(timed.contains("timing_ms"));
    CHECK_FALSE(json::parse(run_cli("seq classify constant").out).contains("timing_ms"));
}
