#pragma once

// Comparisons between library routines and the brute-force oracles, shared
// by the unit tests and the acceptance binary.

#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rado/hypergraph.hpp"

namespace agreement {

struct Mismatch {
    std::string kind;
    std::string detail;
};

// Compares detect, count and all_matches against exhaustive subset
// enumeration for BAD_TRIPLE, PASCH, BAD_TIGHT_PATH, AB_SET and A_CYCLE.
// Every reported match is also re-verified.
std::vector<Mismatch> structure_mismatches(const rado::Hypergraph& h);

// valid_edge_order versus all |E|! orders; a returned order must be valid.
bool edge_order_agrees(const std::vector<std::vector<long long>>& edges);

// The random corpus: instances alternate between (k_A, k_B) = (3, 4) and
// (3, 3), each with at most 12 edge records and one planted structure.
std::vector<rado::Hypergraph> structure_corpus(std::uint64_t seed, int instances);

// Random edge lists of at most `max_edges` edges over a small vertex pool.
std::vector<std::vector<long long>> random_edge_list(std::mt19937_64& rng, std::size_t max_edges);

// is_rado versus exhaustive coloring; the verdict's witness must verify.
bool rado_agrees(const rado::Hypergraph& h);

// Hypergraph of homogeneous solution sets of A and B inside `set`, built
// from the naive solution filter.
rado::Hypergraph solution_hypergraph(const std::vector<long long>& set, const oracle::Rows& a, const oracle::Rows& b);

// Mixed A/B instances with edge sizes 3 and 4 and at most `max_active`
// vertices lying in edges.
std::vector<rado::Hypergraph> coloring_corpus(std::uint64_t seed, int instances, int max_active, int first_case = 0);

}  // namespace agreement
