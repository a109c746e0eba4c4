#pragma once

// Declarative pattern templates: ordered edge slots with intersection-size
// rules, matched by backtracking over the incidence index.

#include <cstdint>
#include <functional>
#include <vector>

#include "rado/hypergraph.hpp"

namespace rado::detail {

inline constexpr int kAny = -1;

struct Slot {
    std::uint8_t family = kFamilyAB;  // required tag(s); AB means "either"
    int size = 0;                      // 0 = any
    int anchor = -1;                   // earlier slot whose vertices seed candidates
    int pin = -1;                      // if set, the edge must contain vertex `pin` of the anchor
};

struct PairRule {
    int i, j;          // i < j
    int lo, hi;        // |e_i ∩ e_j| in [lo, hi]; hi = kAny for no upper bound
};

struct TripleRule {
    int i, j, k;       // i < j < k
    int lo, hi;
};

// |e_slot ∩ union(others)| in [lo, size(e_slot) - hi_gap] (hi_gap < 0 ignores the upper bound).
struct UnionRule {
    int slot;
    std::vector<int> others;
    int lo;
    int hi_gap;
};

struct OrderRule {
    int i, j;          // id(e_i) < id(e_j)
};

struct Template {
    std::vector<Slot> slots;
    std::vector<PairRule> pairs;
    std::vector<TripleRule> triples;
    std::vector<UnionRule> unions;
    std::vector<OrderRule> orders;
    std::function<bool(const Hypergraph&, const std::vector<std::size_t>&)> extra;

    int add(std::uint8_t family, int size = 0, int anchor = -1, int pin = -1)
    {
        slots.push_back({family, size, anchor, pin});
        return static_cast<int>(slots.size()) - 1;
    }
    void pair(int i, int j, int lo, int hi)
    {
        if (i > j)
            std::swap(i, j);
        pairs.push_back({i, j, lo, hi});
    }
    void exact(int i, int j, int v) { pair(i, j, v, v); }
    void disjoint(int i, int j) { pair(i, j, 0, 0); }
    void triple(int i, int j, int k, int lo, int hi);
};

std::size_t intersection_size(const std::vector<int>& a, const std::vector<int>& b);

// Per-thread cap on search nodes. Negative instances of the long-chain
// patterns can take astronomically long to refute, so bounded detection
// gives up and says so instead. A limit of 0 means unlimited.
class BudgetScope {
public:
    explicit BudgetScope(std::size_t limit);
    ~BudgetScope();
    BudgetScope(const BudgetScope&) = delete;
    BudgetScope& operator=(const BudgetScope&) = delete;
    bool exhausted() const;

private:
    std::size_t saved_limit_, saved_used_;
    bool saved_exhausted_;
};

// Counts one search node; false once the active budget is spent.
bool node_tick();

// Checks every rule of `t` on a complete ordered assignment.
bool satisfies(const Hypergraph& h, const Template& t, const std::vector<std::size_t>& edges);

// Visits every assignment satisfying `t`; `visit` returns false to stop.
// `seed` pre-assigns the first seed.size() slots.
void match(const Hypergraph& h, const Template& t, const std::vector<std::size_t>& seed,
           const std::function<bool(const std::vector<std::size_t>&)>& visit);

}  // namespace rado::detail
