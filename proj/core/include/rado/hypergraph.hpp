#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace rado {

enum Family : std::uint8_t { kFamilyA = 1, kFamilyB = 2, kFamilyAB = 3 };

std::string family_name(std::uint8_t families);  // "A", "B" or "AB"

struct Edge {
    std::vector<long long> vertices;  // sorted, distinct
    std::uint8_t families = 0;

    bool has(Family f) const noexcept { return (families & f) != 0; }
    bool is_a() const noexcept { return has(kFamilyA); }
    bool is_b() const noexcept { return has(kFamilyB); }
};

// One family tag on one edge record; the unit removed during minimization.
struct EdgeTag {
    std::size_t edge = 0;
    Family family = kFamilyA;
};

struct Provenance {
    long long n = 0;
    std::string p = "explicit";
    std::uint64_t seed = 0;
};

// Vertex set with family-tagged edges. Edge records are kept in canonical
// order (size, then lexicographic vertex list) with no two records on the
// same vertex set. Immutable once built.
class Hypergraph {
public:
    Hypergraph() = default;

    // Merges duplicate vertex sets, validates sizes against k_a / k_b (0 means
    // unconstrained), and sorts edges canonically.
    static Hypergraph build(std::vector<long long> vertices, std::vector<Edge> edges, int k_a, int k_b,
                            Provenance provenance = {});

    const std::vector<long long>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return edges_.empty(); }
    int k_a() const noexcept { return k_a_; }
    int k_b() const noexcept { return k_b_; }
    const Provenance& provenance() const noexcept { return provenance_; }

    // Local vertex index in [0, vertex_count()); -1 when absent.
    int local(long long v) const;
    const std::vector<int>& local_edge(std::size_t e) const { return local_edges_[e]; }
    // Edge indices containing local vertex i, ascending.
    const std::vector<int>& incident(int i) const { return incidence_[static_cast<std::size_t>(i)]; }

    std::size_t tag_count() const;
    // Tags in canonical order: edge order, A before B.
    std::vector<EdgeTag> tags() const;

    Hypergraph with_tags(const std::vector<EdgeTag>& keep) const;
    Hypergraph without_tag(const EdgeTag& tag) const;
    Hypergraph with_vertices(std::vector<long long> vertices) const;

    // Index of the record on exactly this vertex set, or -1.
    int find(const std::vector<long long>& sorted_vertices) const;

    std::string to_text() const;
    nlohmann::json to_json() const;

    friend bool operator==(const Hypergraph& a, const Hypergraph& b)
    {
        return a.vertices_ == b.vertices_ && a.edges_.size() == b.edges_.size() &&
               [&] {
                   for (std::size_t i = 0; i < a.edges_.size(); ++i)
                       if (a.edges_[i].vertices != b.edges_[i].vertices ||
                           a.edges_[i].families != b.edges_[i].families)
                           return false;
                   return true;
               }();
    }

private:
    void index();

    std::vector<long long> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> local_edges_;
    std::vector<std::vector<int>> incidence_;
    int k_a_ = 0;
    int k_b_ = 0;
    Provenance provenance_;
};

Hypergraph parse_hypergraph_text(std::string_view text);
Hypergraph hypergraph_from_json(const nlohmann::json& doc);

}  // namespace rado
