#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rado/hypergraph.hpp"

namespace rado {

enum class PatternTag {
    A_PATH,
    A_CYCLE,
    A_TREE,
    AB_SET,
    AB_PATH,
    AB_CYCLE,
    AB_CYCLE_PATH,
    L22_I,
    L22_II,
    L22_III,
    L22_IV,
    L22_V,
    L22_VI,
    L22_VII,
    L22_VIII,
    L22_IX,
    SIMPLE_PATH,
    FAIRLY_SIMPLE_CYCLE,
    SIMPLE_CYCLE,
    SPOILED_SIMPLE_PATH,
    HANDLE,
    BAD_TRIPLE,
    PASCH,
    FAULTY_SIMPLE_PATH,
    BAD_TIGHT_PATH,
};

std::string to_string(PatternTag tag);
std::optional<PatternTag> parse_pattern_tag(const std::string& name);
const std::vector<PatternTag>& all_pattern_tags();

// Unset parameters (-1) mean "every admissible value up to the cap".
// s: length / edge count (A_PATH, A_CYCLE, A_TREE, cycle part of AB_CYCLE_PATH)
// t: length (AB_PATH, AB_CYCLE, path part of AB_CYCLE_PATH, SIMPLE_PATH family)
// variant: |b_1 ∩ b_t| for AB_CYCLE
// size: required edge size for the family-agnostic kinds (0 = any)
struct PatternKind {
    PatternTag tag = PatternTag::A_PATH;
    int s = -1;
    int t = -1;
    int variant = -1;
    int size = 0;

    PatternKind() = default;
    PatternKind(PatternTag tag_, int s_ = -1, int t_ = -1, int variant_ = -1, int size_ = 0)
        : tag(tag_), s(s_), t(t_), variant(variant_), size(size_)
    {
    }

    // Throws PreconditionError for parameters outside the definition's range.
    void validate() const;
    std::string label() const;
};

// "A_CYCLE", "A_CYCLE(3)", "AB_CYCLE_PATH(2,1)", "SIMPLE_PATH(t=4,size=3)".
PatternKind parse_pattern_kind(const std::string& text);

struct MatchParams {
    int s = -1;
    int t = -1;
    int q = -1;
    int x = -1;
    int variant = -1;
    int anchor = -1;  // attachment index of the path inside the cycle
};

struct StructureMatch {
    PatternKind kind;
    MatchParams params;
    std::vector<std::size_t> edges;  // ordered; roles are kind-specific
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;      // distinct edges

    nlohmann::json to_json(const Hypergraph& h) const;
    std::string to_text(const Hypergraph& h) const;
};

struct EdgeOrder {
    std::vector<std::size_t> order;
    std::vector<long long> new_vertex;  // one new vertex per edge in `order`
};

std::optional<EdgeOrder> valid_edge_order(const std::vector<std::vector<long long>>& edges);

// Natural-log cap: ceil(ln n), at least 1.
int default_cap(long long n);

std::optional<StructureMatch> detect(const Hypergraph& h, const PatternKind& kind, int cap);

// Detection with at most `node_limit` search nodes (0 = unlimited).
// `complete` is false when the limit ran out before any match was found.
struct BoundedDetection {
    std::optional<StructureMatch> match;
    bool complete = true;
};
BoundedDetection detect_bounded(const Hypergraph& h, const PatternKind& kind, int cap, std::size_t node_limit);

struct CountResult {
    std::size_t count = 0;
    bool truncated = false;
};

CountResult count(const Hypergraph& h, const PatternKind& kind, int cap, std::size_t limit = 1'000'000);

// Distinct matches (by edge set) in discovery order, at most `limit`.
std::vector<StructureMatch> all_matches(const Hypergraph& h, const PatternKind& kind, int cap,
                                        std::size_t limit = 1'000'000);

// Re-checks a match against the definition of its kind using only the
// ordered edge list and parameters.
bool verify(const Hypergraph& h, const StructureMatch& m, int cap);

// Search nodes allowed per case in the lemma audits. Refuting a long
// AB-path in a dense minimal hypergraph is a long-path search; past this
// many nodes the case is reported as undetermined rather than absent.
inline constexpr std::size_t kAuditNodeLimit = 2'000'000;

struct LemmaReport {
    bool precondition_ok = true;
    std::string precondition;
    std::vector<std::pair<std::string, std::optional<StructureMatch>>> cases;
    std::vector<std::string> undetermined;  // no match found within the node limit
    std::size_t node_limit = 0;
    bool any() const;
    nlohmann::json to_json(const Hypergraph& h) const;
    void add(const std::string& name, const Hypergraph& h, const PatternKind& kind, int cap);
};

LemmaReport audit_lemma22(const Hypergraph& h, int cap, std::size_t node_limit = kAuditNodeLimit);
LemmaReport audit_lemma33(const Hypergraph& h, int cap, std::size_t node_limit = kAuditNodeLimit);

struct ExploreStep {
    std::size_t b_edge = 0;
    std::vector<long long> new_vertices;
    std::vector<std::size_t> new_a_edges;
    std::size_t q = 0;
};

enum class ExploreCase { cycle_start, edge_start };
enum class Termination { few_new_vertices, hit_previous_a_edge, step_cap };
enum class TerminalShape { viii, ix, none };

struct ExploreTrace {
    ExploreCase start_case = ExploreCase::edge_start;
    std::vector<std::size_t> start_edges;  // the AB-cycle layout or the single A-edge
    long long start_vertex = 0;
    std::vector<ExploreStep> steps;
    Termination termination = Termination::step_cap;
    TerminalShape shape = TerminalShape::none;
    nlohmann::json to_json(const Hypergraph& h) const;
};

ExploreTrace iterative_explore(const Hypergraph& h, int cap);

std::string to_string(Termination t);
std::string to_string(TerminalShape s);

}  // namespace rado
