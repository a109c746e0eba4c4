#pragma once

#include <functional>
#include <string>
#include <vector>

#include "rado/equations.hpp"
#include "rado/hypergraph.hpp"
#include "rado/params.hpp"
#include "rado/random.hpp"

namespace rado {

using OrderedSolution = std::vector<long long>;

// Calls `emit` for every k-distinct solution with entries in `set`, in
// lexicographic order of the free (non-pivot) variables. Returning false from
// `emit` stops the enumeration.
void for_each_solution(const LinearSystem& sys, const SampledSet& set,
                       const std::function<bool(const OrderedSolution&)>& emit);

// All k-distinct solutions, sorted lexicographically.
std::vector<OrderedSolution> enumerate_solutions(const LinearSystem& sys, const SampledSet& set);

Hypergraph build_hypergraph(const LinearSystem& a, const LinearSystem& b, const SampledSet& set);

// Same as build_hypergraph with a single family; edges carry `family`.
std::vector<Edge> solution_edges(const LinearSystem& sys, const SampledSet& set, Family family);

struct ReducedSystem {
    LinearSystem system;    // C x = a'
    CoreResult core;
    std::vector<std::size_t> kept_cols;  // positions in the original system, ascending
};

struct ReducedPair {
    ReducedSystem a;
    ReducedSystem b;
};

// Restricts a system to its core: C is the core of the underlying matrix and
// a' makes C x_K = a' a consequence of the original system on the kept
// columns K. Rows are rescaled to integers.
ReducedSystem reduce_to_core(const LinearSystem& sys, const IrredundancyOptions& options = {});

ReducedPair reduce_to_cores(const LinearSystem& a, const LinearSystem& b, const IrredundancyOptions& options = {});

}  // namespace rado
