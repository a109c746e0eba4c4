#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rado/hypergraph.hpp"

namespace rado {

enum class Color : std::uint8_t { red, blue };

// Total on the hypergraph's vertices, indexed like Hypergraph::vertices().
struct Coloring {
    std::vector<long long> vertices;
    std::vector<Color> colors;

    Color of(long long v) const;
    std::string to_text() const;  // "vertex color" lines
};

struct SolverStats {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
    std::uint64_t pure = 0;
};

struct RadoVerdict {
    bool is_rado = false;
    std::optional<Coloring> witness;  // set when not Rado
    // When Rado: tags whose constraints alone already force the verdict.
    std::vector<EdgeTag> core;
    SolverStats stats;
};

// Good coloring: no A-edge entirely red and no B-edge entirely blue.
bool is_good_coloring(const Hypergraph& h, const Coloring& c);

RadoVerdict is_rado(const Hypergraph& h);

struct MinimalStats {
    std::uint64_t solver_calls = 0;
};

// Canonical Rado-minimal spanning subgraph, or the edgeless graph on the same
// vertices when `g` is not Rado.
Hypergraph rado_minimal(const Hypergraph& g, MinimalStats* stats = nullptr);

struct Claim21Report {
    bool pass = true;
    std::size_t checked = 0;
    std::optional<std::size_t> edge;  // first violation
    std::optional<Family> family;
    std::optional<long long> vertex;
    nlohmann::json to_json() const;
};

Claim21Report audit_claim21(const Hypergraph& h);

struct TreeReport {
    bool precondition_ok = true;
    std::string precondition;  // which precondition failed
    bool trees_ok = true;      // A-edges form vertex-disjoint A-trees
    bool b_edges_ok = true;    // every B-edge meets distinct trees
    std::size_t tree_count = 0;
    std::optional<std::size_t> offending_edge;
    bool pass() const { return precondition_ok && trees_ok && b_edges_ok; }
    nlohmann::json to_json() const;
};

TreeReport audit_tree_claims(const Hypergraph& h, int cap);

}  // namespace rado
