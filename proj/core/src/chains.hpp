#pragma once

// Enumeration of AB-paths, AB-cycles and AB-cycle-paths by growing the chain
// one B-edge (with its fresh A-edges) at a time.

#include <cstddef>
#include <functional>
#include <vector>

#include "rado/hypergraph.hpp"

namespace rado::detail {

struct ChainRanges {
    int s_min = 0, s_max = 0;  // cycle length; 0 allowed only as "no cycle"
    int t_min = 0, t_max = 0;  // path length
    int variant = -1;          // required |b_1 ∩ b_s|, -1 for either
};

// A cycle-path P as seen by the visitor. Vectors are indexed by local vertex.
struct ChainView {
    int s = 0;
    int t = 0;
    int variant = -1;
    int anchor = -1;                        // index into cycle A-list, -1 without cycle
    std::vector<std::size_t> layout;        // cycle part then path part (path a_1 omitted when attached)
    std::vector<std::size_t> a_edges;       // all A-edges of P
    std::vector<std::size_t> b_edges;       // all B-edges of P
    const std::vector<int>* in_p = nullptr;     // number of P-edges containing v
    const std::vector<int>* b_cover = nullptr;  // number of P B-edges containing v
};

// Calls `visit` for every cycle-path with parameters inside `ranges`
// (s == 0 means a plain AB-path, t == 0 a plain AB-cycle). The same edge set
// may be visited several times. Returning false stops the enumeration.
void for_each_chain(const Hypergraph& h, const ChainRanges& ranges, const std::function<bool(const ChainView&)>& visit);

// Layout checks used by verification; `edges` start at the structure.
bool check_ab_set(const Hypergraph& h, std::size_t b, const std::vector<std::size_t>& a_edges);
bool check_ab_path(const Hypergraph& h, const std::vector<std::size_t>& layout, int t);
bool check_ab_cycle(const Hypergraph& h, const std::vector<std::size_t>& layout, int s, int variant);
bool check_ab_cycle_path(const Hypergraph& h, const std::vector<std::size_t>& layout, int s, int t, int anchor);

// Splits a cycle-path layout into its A-edges and B-edges.
void split_layout(const Hypergraph& h, const std::vector<std::size_t>& layout, int s, int t, int anchor,
                  std::vector<std::size_t>& a_edges, std::vector<std::size_t>& b_edges);

std::size_t chain_layout_size(int k_b, int s, int t, bool attached);

}  // namespace rado::detail
