#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rado/rational.hpp"

namespace rado {

// Experiment description. The on-disk form is a JSON object whose values are
// strings or arrays of strings; numbers are parsed exactly and unknown keys
// are rejected.
struct ExperimentConfig {
    std::string a;                       // equation literal for A
    std::string b;                       // defaults to A
    std::vector<std::string> equations;  // r >= 2 literals, reduced to a pair
    bool order_by_m = false;
    std::optional<long long> n;
    std::vector<long long> n_grid;       // ascending
    std::optional<Rational> p;           // explicit p overrides c and exponent
    Rational c = Rational(1, 10);
    std::optional<Rational> exponent;    // empty means the pair's threshold exponent
    int trials = 1;
    std::uint64_t seed_base = 0;
    std::optional<int> cap;              // empty means ceil(ln n)
    std::vector<std::string> kinds;
    std::optional<std::vector<long long>> set;  // explicit set instead of sampling
    std::string input;                   // hypergraph file instead of sampling
    long long irredundancy_bound = 10000;
    std::size_t count_limit = 1'000'000;
    std::string out = ".";

    // Everything except `out`, so provenance does not depend on where files go.
    nlohmann::json to_json() const;
};

// Throws ConfigError.
ExperimentConfig parse_config(const nlohmann::json& doc);
ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig load_config(const std::string& path);

}  // namespace rado
