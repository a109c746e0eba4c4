#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "rado/colorability.hpp"
#include "rado/errors.hpp"
#include "rado/harness.hpp"
#include "rado/solutions.hpp"

using namespace rado;

namespace {

ExperimentConfig config(const std::string& text) { return parse_config_text(text); }

std::string artifact(const CommandOutput& out, const std::string& name)
{
    const Artifact* a = out.find(name);
    REQUIRE(a != nullptr);
    return a->content;
}

void same_artifacts(const CommandOutput& x, const CommandOutput& y)
{
    REQUIRE(x.artifacts.size() == y.artifacts.size());
    for (std::size_t i = 0; i < x.artifacts.size(); ++i) {
        CHECK(x.artifacts[i].name == y.artifacts[i].name);
        CHECK(x.artifacts[i].content == y.artifacts[i].content);
    }
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

const char* kAsym = R"({"A": "x+y-z=0", "B": "x+y+z-w=0")";

}  // namespace

TEST_SUITE("harness")
{
    TEST_CASE("config parsing")
    {
        const auto c = config(std::string(kAsym) + R"(, "n": "100", "c": "0.25", "exponent": "5/9", "trials": "3"})");
        CHECK(c.a == "x+y-z=0");
        CHECK(*c.n == 100);
        CHECK(c.c == Rational(1, 4));
        CHECK(*c.exponent == Rational(5, 9));
        CHECK(c.trials == 3);
        CHECK_THROWS_AS(config(R"({"A": "x+y-z=0", "colour": "red"})"), ConfigError);
        CHECK_THROWS_AS(config(R"({"A": "x+y-z=0", "n": 100})"), ConfigError);
        CHECK_THROWS_AS(config(R"({"A": "x+y-z=0", "n_grid": ["100", "10"]})"), ConfigError);
        CHECK_THROWS_AS(config(R"({"A": "x+y-z=0", "trials": "0"})"), ConfigError);
        CHECK_THROWS_AS(config(R"({"B": "x+y-z=0"})"), ConfigError);
        CHECK_THROWS_AS(config("not json"), ConfigError);
    }

    TEST_CASE("provenance ignores the output directory")
    {
        auto a = config(std::string(kAsym) + R"(, "n": "50", "out": "one"})");
        auto b = config(std::string(kAsym) + R"(, "n": "50", "out": "two"})");
        CHECK(a.to_json() == b.to_json());
        CHECK(provenance(a, "sample") == provenance(b, "sample"));
    }

    TEST_CASE("probability rule")
    {
        auto c = config(std::string(kAsym) + R"(, "n": "512", "c": "1/10"})");
        const auto pair = resolve_pair(c);
        CHECK(pair_exponent(pair) == Rational(5, 9));
        // 512^(5/9) = 32 exactly.
        CHECK(probability_for(c, pair, 512) == Rational(1, 320));
        c.c = 0;
        CHECK(probability_for(c, pair, 512) == 0);
        c.c = 1;
        c.exponent = Rational(0);
        CHECK(probability_for(c, pair, 512) == 1);
        c.p = Rational(1, 7);
        CHECK(probability_for(c, pair, 512) == Rational(1, 7));
        CHECK(cap_for(c, 1000) == 7);
    }

    TEST_CASE("params examples")
    {
        auto out = cmd_params(config(std::string(kAsym) + "}"));
        auto j = nlohmann::json::parse(artifact(out, "params.json"));
        CHECK(j["m_AB"] == "9/5");
        CHECK(j["exponent"] == "5/9");
        out = cmd_params(config(R"({"A": "x+y-z=0"})"));
        j = nlohmann::json::parse(artifact(out, "params.json"));
        CHECK(j["A"]["m"] == "2");
        out = cmd_params(config(R"({"A": "2x+2y-z=0"})"));
        j = nlohmann::json::parse(artifact(out, "params.json"));
        CHECK(j["A"]["partition_regular"] == "no");
    }

    TEST_CASE("sample at p = 1 lists every solution")
    {
        const auto c = config(std::string(kAsym) + R"(, "n": "30", "p": "1", "seed_base": "7"})");
        const auto out = cmd_sample(c, {});
        const std::string text = artifact(out, "hypergraph.txt");
        const Hypergraph h = parse_hypergraph_text(text);
        CHECK(h.vertex_count() == 30);
        std::set<std::vector<long long>> a_sets, b_sets;
        std::vector<long long> all;
        for (long long i = 1; i <= 30; ++i)
            all.push_back(i);
        for (auto s : oracle::naive_solutions({{1, 1, -1}}, {0}, all)) {
            std::sort(s.begin(), s.end());
            a_sets.insert(s);
        }
        for (auto s : oracle::naive_solutions({{1, 1, 1, -1}}, {0}, all)) {
            std::sort(s.begin(), s.end());
            b_sets.insert(s);
        }
        std::set<std::vector<long long>> got_a, got_b;
        for (const auto& e : h.edges()) {
            if (e.is_a())
                got_a.insert(e.vertices);
            if (e.is_b())
                got_b.insert(e.vertices);
        }
        CHECK(got_a == a_sets);
        CHECK(got_b == b_sets);
        CHECK(text == read_file(std::string(RADO_TEST_DATA) + "/sample_n30_p1.txt"));
    }

    TEST_CASE("check on the powers of two fixture")
    {
        const auto c = config(R"({"A": "x-2y=0", "B": "x-4y=0", "n": "16", "set": ["1","2","4","8","16"]})");
        const auto j = nlohmann::json::parse(artifact(cmd_check(c, {}), "verdict.json"));
        CHECK(j["is_rado"] == true);
    }

    TEST_CASE("audit of an empty hypergraph is vacuous")
    {
        const auto c = config(std::string(kAsym) + R"(, "n": "20", "p": "0"})");
        const auto out = cmd_audit(c, {});
        CHECK(out.exit_code == kExitOk);
        const auto j = nlohmann::json::parse(artifact(out, "audit.json"));
        CHECK(j["vacuous"] == true);
        CHECK(j["claim21"]["pass"] == true);
    }

    TEST_CASE("sweep degenerate controls")
    {
        auto c = config(std::string(kAsym) + R"(, "n_grid": ["20", "40"], "c": "0", "trials": "5"})");
        for (const auto& row : sweep_rows(c, {})) {
            CHECK(row.p == 0);
            CHECK(row.rado_count == 0);
            CHECK(row.rado_fraction() == 0);
        }
        c = config(std::string(kAsym) + R"(, "n_grid": ["10", "40"], "c": "1", "exponent": "0", "trials": "3"})");
        const auto rows = sweep_rows(c, {});
        REQUIRE(rows.size() == 2);
        const auto pair = resolve_pair(c);
        for (const auto& row : rows) {
            CHECK(row.p == 1);
            std::vector<long long> all;
            for (long long i = 1; i <= row.n; ++i)
                all.push_back(i);
            const bool full = is_rado(build_hypergraph(pair.a, pair.b, explicit_set(row.n, all))).is_rado;
            CHECK(row.rado_count == (full ? row.trials : 0));
        }
    }

    TEST_CASE("sweep output carries exact p and the schema line")
    {
        const auto c = config(std::string(kAsym) + R"j(, "n_grid": ["100", "300"], "trials": "4", "kinds": ["A_CYCLE(3)"]})j");
        const auto out = cmd_sweep(c, {});
        const std::string csv = artifact(out, "sweep.csv");
        CHECK(csv.rfind("# schema=1\nn,p,trials,rado_count,rado_fraction,errors,mean_A_CYCLE(s=3)\n", 0) == 0);
        CHECK(csv.find("/") != std::string::npos);
        CHECK(artifact(out, "sweep.svg").rfind("<svg", 0) == 0);
    }

    TEST_CASE("commands are deterministic across runs and worker counts")
    {
        const std::string base = std::string(kAsym) +
                                 R"(, "n": "120", "n_grid": ["60", "120"], "p": "0.3", "trials": "4", "seed_base": "3",)"
                                 R"j( "kinds": ["A_CYCLE(3)", "AB_SET"])j";
        for (const char* cmd : {"params", "sample", "check", "minimal", "audit", "expect", "sweep"}) {
            INFO(cmd);
            const auto c = config(base + "}");
            const auto a = run_command(cmd, c, {1});
            const auto b = run_command(cmd, c, {1});
            const auto d = run_command(cmd, c, {4});
            same_artifacts(a, b);
            same_artifacts(a, d);
        }
    }

    TEST_CASE("write_output writes artifacts and the timing sidecar")
    {
        const auto dir = std::filesystem::temp_directory_path() / "rado_harness_test";
        std::filesystem::remove_all(dir);
        const auto out = cmd_params(config(std::string(kAsym) + "}"));
        write_output(out, dir.string());
        CHECK(read_file((dir / "params.json").string()) == artifact(out, "params.json"));
        CHECK(std::filesystem::exists(dir / "timing.json"));
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("unknown command")
    {
        CHECK_THROWS_AS(run_command("bogus", config(std::string(kAsym) + "}"), {}), ConfigError);
    }
}
