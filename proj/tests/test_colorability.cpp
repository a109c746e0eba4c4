#include <doctest.h>

#include <random>

#include "agreement.hpp"
#include "oracles.hpp"
#include "rado/colorability.hpp"
#include "rado/equations.hpp"
#include "rado/solutions.hpp"

using namespace rado;

namespace {

Edge edge(std::vector<long long> v, std::uint8_t f) { return Edge{std::move(v), f}; }

std::vector<long long> vertices_of(const std::vector<Edge>& edges)
{
    std::vector<long long> out;
    for (const auto& e : edges)
        out.insert(out.end(), e.vertices.begin(), e.vertices.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Hypergraph make(std::vector<Edge> edges, int ka, int kb) { return Hypergraph::build(vertices_of(edges), edges, ka, kb); }

Hypergraph powers_fixture()
{
    return make({edge({1, 2}, kFamilyA), edge({2, 4}, kFamilyA), edge({4, 8}, kFamilyA), edge({8, 16}, kFamilyA),
                 edge({1, 4}, kFamilyB), edge({2, 8}, kFamilyB), edge({4, 16}, kFamilyB)},
                2, 2);
}

// Points v_ij for 1 <= i < j <= 4 labelled ij; line i holds the three points naming i.
Hypergraph pasch_fixture()
{
    return make({edge({12, 13, 14}, kFamilyAB), edge({12, 23, 24}, kFamilyAB), edge({13, 23, 34}, kFamilyAB),
                 edge({14, 24, 34}, kFamilyAB)},
                3, 3);
}

// One deletion pass in canonical tag order, decided by exhaustive coloring.
Hypergraph sequential_minimal(const Hypergraph& g)
{
    if (!oracle::brute_force_rado(g))
        return g.with_tags({});
    Hypergraph cur = g;
    for (const EdgeTag& t : g.tags()) {
        const int idx = cur.find(g.edges()[t.edge].vertices);
        const Hypergraph next = cur.without_tag(EdgeTag{static_cast<std::size_t>(idx), t.family});
        if (oracle::brute_force_rado(next))
            cur = next;
    }
    return cur;
}

Hypergraph random_instance(std::mt19937_64& rng, int max_vertices)
{
    return agreement::coloring_corpus(rng(), 1, max_vertices, static_cast<int>(rng() % 4)).front();
}

}  // namespace

TEST_SUITE("colorability")
{
    TEST_CASE("empty hypergraph is not Rado")
    {
        const auto v = is_rado(Hypergraph::build({1, 2, 3}, {}, 3, 4));
        CHECK_FALSE(v.is_rado);
        REQUIRE(v.witness.has_value());
        CHECK(v.witness->vertices.size() == 3);
    }

    TEST_CASE("powers of two fixture is Rado")
    {
        const auto h = powers_fixture();
        CHECK(is_rado(h).is_rado);
        CHECK(oracle::brute_force_rado(h));
        // The same fixture through the solution enumerator.
        const auto built = build_hypergraph(parse_system("x - 2y = 0"), parse_system("x - 4y = 0"),
                                            explicit_set(16, {1, 2, 4, 8, 16}));
        CHECK(built == h);
    }

    TEST_CASE("doubly tagged Pasch configuration is not Rado")
    {
        const auto h = pasch_fixture();
        const auto v = is_rado(h);
        CHECK_FALSE(v.is_rado);
        REQUIRE(v.witness.has_value());
        CHECK(is_good_coloring(h, *v.witness));
        Coloring known{h.vertices(), {}};
        for (long long x : h.vertices())
            known.colors.push_back(x == 12 || x == 13 || x == 34 ? Color::red : Color::blue);
        CHECK(is_good_coloring(h, known));
        known.colors[0] = Color::blue;  // 12 blue leaves line {12,23,24} all blue
        CHECK_FALSE(is_good_coloring(h, known));
    }

    TEST_CASE("is_rado matches exhaustive coloring")
    {
        std::mt19937_64 rng(51);
        int rado = 0;
        for (int it = 0; it < 150; ++it) {
            const auto h = random_instance(rng, 14);
            const auto v = is_rado(h);
            CHECK(v.is_rado == oracle::brute_force_rado(h));
            if (v.is_rado)
                ++rado;
            else if (v.witness) {
                CHECK(is_good_coloring(h, *v.witness));
            }
            CHECK(v.is_rado != v.witness.has_value());
        }
        CHECK(rado > 10);
        CHECK(rado < 140);
    }

    TEST_CASE("adding an edge keeps a Rado hypergraph Rado")
    {
        std::mt19937_64 rng(52);
        for (int it = 0; it < 120; ++it) {
            const auto h = random_instance(rng, 12);
            if (!is_rado(h).is_rado)
                continue;
            auto edges = h.edges();
            const bool a = rng() % 2;
            edges.push_back(edge(oracle::random_subset(rng, static_cast<int>(h.vertices().back()), a ? h.k_a() : h.k_b()),
                                 a ? kFamilyA : kFamilyB));
            auto vs = h.vertices();
            for (long long x : edges.back().vertices)
                vs.push_back(x);
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
            CHECK(is_rado(Hypergraph::build(vs, edges, h.k_a(), h.k_b())).is_rado);
        }
    }

    TEST_CASE("coloring text form")
    {
        Coloring c{{1, 5, 9}, {Color::red, Color::blue, Color::red}};
        CHECK(c.to_text() == "1 red\n5 blue\n9 red\n");
        CHECK(c.of(5) == Color::blue);
    }

    TEST_CASE("rado_minimal on the powers fixture")
    {
        const auto g = powers_fixture();
        MinimalStats stats;
        const auto h = rado_minimal(g, &stats);
        CHECK(is_rado(h).is_rado);
        for (const auto& t : h.tags())
            CHECK_FALSE(oracle::brute_force_rado(h.without_tag(t)));
        CHECK(h == sequential_minimal(g));
        CHECK(rado_minimal(h) == h);
        CHECK(h.vertices() == g.vertices());
    }

    TEST_CASE("rado_minimal of a non-Rado hypergraph is edgeless")
    {
        const auto g = pasch_fixture();
        const auto h = rado_minimal(g);
        CHECK(h.empty());
        CHECK(h.vertices() == g.vertices());
    }

    TEST_CASE("rado_minimal equals the sequential deletion pass")
    {
        std::mt19937_64 rng(53);
        int rado = 0;
        for (int it = 0; it < 120; ++it) {
            const auto g = random_instance(rng, 12);
            const auto h = rado_minimal(g);
            CHECK(h == sequential_minimal(g));
            if (!h.empty()) {
                ++rado;
                CHECK(is_rado(h).is_rado);
                for (const auto& t : h.tags())
                    CHECK_FALSE(is_rado(h.without_tag(t)).is_rado);
                CHECK(rado_minimal(h) == h);
                CHECK(audit_claim21(h).pass);
            }
        }
        CHECK(rado > 10);
    }

    TEST_CASE("claim21 audit")
    {
        CHECK(audit_claim21(Hypergraph::build({}, {}, 3, 4)).pass);
        const auto single = make({edge({1, 2, 3}, kFamilyA)}, 3, 4);
        const auto r = audit_claim21(single);
        CHECK_FALSE(r.pass);
        REQUIRE(r.edge.has_value());
        CHECK(*r.edge == 0);
        CHECK(*r.family == kFamilyA);
        CHECK(*r.vertex == 1);
    }

    TEST_CASE("tree claims")
    {
        const auto overlap = make({edge({1, 2, 3}, kFamilyA), edge({2, 3, 4}, kFamilyA)}, 3, 4);
        auto r = audit_tree_claims(overlap, 5);
        CHECK_FALSE(r.precondition_ok);
        CHECK_FALSE(r.pass());

        std::vector<Edge> forest{edge({1, 2, 3}, kFamilyA), edge({3, 4, 5}, kFamilyA), edge({10, 11, 12}, kFamilyA),
                                 edge({20, 21, 22}, kFamilyA), edge({30, 31, 32}, kFamilyA)};
        auto good = forest;
        good.push_back(edge({1, 10, 20, 30}, kFamilyB));
        r = audit_tree_claims(make(good, 3, 4), 5);
        CHECK(r.pass());
        CHECK(r.tree_count == 4);

        auto bad = forest;
        bad.push_back(edge({1, 5, 10, 20}, kFamilyB));
        r = audit_tree_claims(make(bad, 3, 4), 5);
        CHECK(r.precondition_ok);
        CHECK(r.trees_ok);
        CHECK_FALSE(r.b_edges_ok);
        REQUIRE(r.offending_edge.has_value());

        CHECK_FALSE(audit_tree_claims(pasch_fixture(), 5).precondition_ok);
    }
}
