#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rado/equations.hpp"
#include "rado/hypergraph.hpp"
#include "rado/params.hpp"
#include "rado/rational.hpp"
#include "rado/structures.hpp"

namespace rado {

// Catalogue shapes with closed-form vertex and edge counts.
enum class Shape {
    single_edge,     // one A-edge of size k_A
    a_path,          // s
    a_tree,          // s
    t_pair,          // two A-edges sharing s vertices
    a_cycle,         // s
    ab_set,
    ab_path,         // s = length
    ab_cycle,        // s = length
    l22_v,           // x
    l22_vi,          // s = |e ∩ b|, t = |e ∩ V(S)| - s
    l22_vii,         // s, x
    l22_viii,        // s, t, x
    l22_ix,          // s, t, q, x
    bad_triple,      // k, s = |e_x ∩ e_y|
    pasch,
    bad_tight_path,
    simple_path,     // k, t
    simple_cycle,    // k, t
    faulty_simple_path,  // t, shared
};

struct ShapeParams {
    int s = 0;
    int t = 0;
    int q = 0;
    int x = 0;
    int k = 0;            // uniform edge size for the family-agnostic shapes
    bool shared = false;  // faulty simple path: e_x and e_z share their outside vertex
};

struct ShapeStats {
    std::string name;
    long long vertices = 0;
    long long edges = 0;
    bool valid_order = true;
};

ShapeStats shape_stats(Shape shape, int k_a, int k_b, const ShapeParams& params);
// Counts read off a concrete sub-hypergraph; valid_order from valid_edge_order.
ShapeStats shape_of(const Hypergraph& h, const std::vector<std::size_t>& edges, std::string name = "");

// (k_B!)^|E| * n^(|V|-|E|); PreconditionError without a valid edge order.
Rational copies_upper_bound(const ShapeStats& s, long long n, int k_b);

struct ExpectedBound {
    Rational value;      // copies_upper_bound * p^|V|
    Rational exponent;   // n-exponent at p = c n^-theta
    long long c_power = 0;
};

ExpectedBound expected_copies_bound(const ShapeStats& s, long long n, const Rational& p, int k_a, int k_b);
// (k_B!)^|E| c^|V| n^exponent, the same bound written at the threshold scale.
Decimal bound_at_threshold(const ShapeStats& s, long long n, const Rational& c, int k_a, int k_b);

// Closed-form shapes realising a pattern kind (each admissible parameter
// value up to the cap), used to bound its expected count.
std::vector<ShapeStats> kind_shapes(const PatternKind& kind, int k_a, int k_b, int cap);
// Sum of expected_copies_bound over kind_shapes, times 2^|E| per shape when
// the kind ignores families and A, B are distinct systems of equal size.
Rational kind_expected_bound(const PatternKind& kind, long long n, const Rational& p, int k_a, int k_b, int cap,
                             bool distinct_families);

struct SystemCountBound {
    Rational total;
    bool q2_checked = false;  // q == 2 and rank(M_{W-bar}) == l for every W
    bool q2_within = false;   // total <= 2 k! n^(k-l-2)
    Rational q2_bound;
};

SystemCountBound system_count_bound(int q, const RationalMatrix& core_a, const RationalMatrix& core_b, long long n);

// l (k - |W|) - (k - 1) rank(M restricted to the complement of W).
Rational strictly_balanced_margin(const RationalMatrix& m, const ColumnSet& w);

struct BoundReport {
    std::string kind;
    long long n = 0;
    std::string p;
    int k_a = 0;
    int k_b = 0;
    int trials = 0;
    int truncated_trials = 0;
    Integer total;           // summed over non-truncated trials
    Rational mean;           // total / (trials - truncated_trials)
    Rational bound;
    std::vector<std::size_t> counts;  // per trial
    std::vector<bool> truncated;

    std::string csv_row() const;
    nlohmann::json to_json() const;
};

std::string bound_csv_header();

struct EmpiricalOptions {
    long long n = 0;
    Rational p;
    std::string p_text;
    std::uint64_t seed_base = 0;
    int trials = 1;
    std::vector<PatternKind> kinds;
    int cap = 1;
    std::size_t limit = 1'000'000;
    unsigned threads = 1;
};

// Trial t samples [n]_p with seed seed_base + t.
std::vector<BoundReport> empirical_counts(const LinearSystem& a, const LinearSystem& b, const EmpiricalOptions& options);

// Exact E[count] = sum over copies C in the full hypergraph on [n] of p^|V(C)|.
Rational exact_expectation(const LinearSystem& a, const LinearSystem& b, long long n, const Rational& p,
                           const PatternKind& kind, int cap);

}  // namespace rado
