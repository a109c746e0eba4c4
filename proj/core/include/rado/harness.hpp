#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rado/config.hpp"
#include "rado/equations.hpp"
#include "rado/hypergraph.hpp"
#include "rado/random.hpp"

namespace rado {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kExitOk = 0, kExitConfig = 2, kExitPrecondition = 3, kExitPartial = 4 };

struct Artifact {
    std::string name;     // file name inside the output directory
    std::string content;  // byte-identical across reruns of the same config
};

struct CommandOutput {
    std::vector<Artifact> artifacts;
    nlohmann::json timing = nlohmann::json::object();  // sidecar, never compared
    std::string summary;                               // printed to stdout
    int exit_code = kExitOk;

    const Artifact* find(const std::string& name) const;
};

struct RunOptions {
    unsigned threads = 1;
};

struct ResolvedPair {
    LinearSystem a;
    LinearSystem b;
    std::string a_text;
    std::string b_text;
    bool same = false;  // B is A
    // For an `equations` family: literal and m, in the order used.
    std::vector<std::pair<std::string, Rational>> ordering;
};

ResolvedPair resolve_pair(const ExperimentConfig& config);

// Threshold exponent of the pair: 1 / m(A,B).
Rational pair_exponent(const ResolvedPair& pair);

// p(n) = c n^-e, evaluated with 50 significant digits and returned exactly as
// the rational the sampler uses; an explicit `p` in the config wins.
Rational probability_for(const ExperimentConfig& config, const ResolvedPair& pair, long long n);

int cap_for(const ExperimentConfig& config, long long n);

// The set for single-n commands: an explicit `set`, or [n]_p with seed_base.
SampledSet set_for(const ExperimentConfig& config, const ResolvedPair& pair);

// The input hypergraph when `input` is set, else the sampled one.
Hypergraph hypergraph_for(const ExperimentConfig& config, const ResolvedPair& pair);

nlohmann::json provenance(const ExperimentConfig& config, const std::string& command);

CommandOutput cmd_params(const ExperimentConfig& config);
CommandOutput cmd_sample(const ExperimentConfig& config, const RunOptions& options);
CommandOutput cmd_check(const ExperimentConfig& config, const RunOptions& options);
CommandOutput cmd_minimal(const ExperimentConfig& config, const RunOptions& options);
CommandOutput cmd_audit(const ExperimentConfig& config, const RunOptions& options);
CommandOutput cmd_expect(const ExperimentConfig& config, const RunOptions& options);
CommandOutput cmd_sweep(const ExperimentConfig& config, const RunOptions& options);

CommandOutput run_command(const std::string& name, const ExperimentConfig& config, const RunOptions& options);

// Writes every artifact plus timing.json into `dir`, creating it if needed.
void write_output(const CommandOutput& output, const std::string& dir);

struct SweepRow {
    long long n = 0;
    Rational p;
    int trials = 0;
    int rado_count = 0;
    int errors = 0;
    std::vector<Rational> mean_counts;  // per audited kind, over non-truncated trials
    double wall_seconds = 0;

    Rational rado_fraction() const { return Rational(rado_count, trials); }
};

std::vector<SweepRow> sweep_rows(const ExperimentConfig& config, const RunOptions& options,
                                 std::vector<std::string>* errors = nullptr);

}  // namespace rado
