#include <doctest.h>

#include <numeric>
#include <random>

#include "agreement.hpp"
#include "oracles.hpp"
#include "rado/errors.hpp"
#include "rado/structures.hpp"

using namespace rado;

namespace {

Hypergraph make(const std::vector<std::vector<long long>>& a, const std::vector<std::vector<long long>>& b, int ka,
                int kb)
{
    std::vector<Edge> edges;
    std::vector<long long> vs;
    for (const auto& e : a)
        edges.push_back(Edge{e, kFamilyA});
    for (const auto& e : b)
        edges.push_back(Edge{e, kFamilyB});
    for (auto& e : edges) {
        std::sort(e.vertices.begin(), e.vertices.end());
        vs.insert(vs.end(), e.vertices.begin(), e.vertices.end());
    }
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return Hypergraph::build(vs, edges, ka, kb);
}

std::vector<long long> a_edge(int j) { return {3LL * j - 2, 3LL * j - 1, 3LL * j}; }

// A-edges a_1..a_m with a_j = {3j-2, 3j-1, 3j}. Each B-edge takes the second
// vertex of the A-edge it shares with its predecessor and the first vertex
// of every other A-edge in its block.
std::vector<long long> b_block(const std::vector<int>& a_edges, bool shares_first)
{
    std::vector<long long> b;
    for (std::size_t i = 0; i < a_edges.size(); ++i)
        b.push_back(a_edge(a_edges[i])[i == 0 && shares_first ? 1 : 0]);
    return b;
}

// k_A = 3, k_B = 4.
Hypergraph ab_path(int t)
{
    std::vector<std::vector<long long>> a, b;
    for (int j = 1; j <= 3 * t + 1; ++j)
        a.push_back(a_edge(j));
    for (int i = 1; i <= t; ++i)
        b.push_back(b_block({3 * i - 2, 3 * i - 1, 3 * i, 3 * i + 1}, i > 1));
    return make(a, b, 3, 4);
}

Hypergraph ab_cycle(int t, int variant)
{
    std::vector<std::vector<long long>> a, b;
    for (int j = 1; j <= 3 * t; ++j)
        a.push_back(a_edge(j));
    for (int i = 1; i < t; ++i)
        b.push_back(b_block({3 * i - 2, 3 * i - 1, 3 * i, 3 * i + 1}, true));
    auto last = b_block({3 * t - 2, 3 * t - 1, 3 * t}, true);
    last.push_back(a_edge(1)[variant == 1 ? 1 : 2]);
    b.push_back(last);
    return make(a, b, 3, 4);
}

std::vector<std::vector<long long>> edge_lists(const Hypergraph& h)
{
    std::vector<std::vector<long long>> out;
    for (const auto& e : h.edges())
        out.push_back(e.vertices);
    return out;
}

bool flagged(const LemmaReport& r, const std::string& name)
{
    for (const auto& [n, m] : r.cases)
        if (n == name)
            return m.has_value();
    return false;
}

}  // namespace

TEST_SUITE("structures")
{
    TEST_CASE("valid_edge_order examples")
    {
        const std::vector<std::vector<long long>> path{{1, 2, 3}, {3, 4, 5}, {5, 6, 7}};
        const auto o = valid_edge_order(path);
        REQUIRE(o.has_value());
        CHECK(oracle::order_is_valid(path, o->order));
        CHECK_FALSE(valid_edge_order({{1, 2, 3}, {1, 2, 3}}).has_value());
        const std::vector<std::vector<long long>> pasch{{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}};
        // The last line of a Pasch configuration has all three points covered.
        CHECK_FALSE(valid_edge_order(pasch).has_value());
        CHECK_FALSE(oracle::has_valid_order_brute(pasch));
        CHECK(valid_edge_order({}).has_value());
    }

    TEST_CASE("valid_edge_order agrees with all orders")
    {
        std::mt19937_64 rng(61);
        int none = 0;
        for (int it = 0; it < 400; ++it) {
            const auto edges = agreement::random_edge_list(rng, 7);
            CHECK(agreement::edge_order_agrees(edges));
            none += valid_edge_order(edges) ? 0 : 1;
        }
        CHECK(none > 20);
    }

    TEST_CASE("catalogue structures admit valid orders")
    {
        CHECK(valid_edge_order(edge_lists(ab_path(3))).has_value());
        CHECK(valid_edge_order(edge_lists(ab_cycle(4, 0))).has_value());
        CHECK(valid_edge_order(edge_lists(ab_cycle(4, 1))).has_value());
        CHECK(valid_edge_order({{1, 2, 3}, {3, 4, 5}, {5, 6, 1}}).has_value());
    }

    TEST_CASE("detectors agree with subset enumeration")
    {
        int hits = 0;
        for (const auto& h : agreement::structure_corpus(62, 40)) {
            const auto m = agreement::structure_mismatches(h);
            for (const auto& x : m)
                INFO(x.kind << ": " << x.detail);
            CHECK(m.empty());
            hits += count(h, PatternKind(PatternTag::BAD_TRIPLE), 4).count > 0 ? 1 : 0;
        }
        CHECK(hits > 0);
    }

    TEST_CASE("count examples")
    {
        auto h = make({{1, 2, 3}, {1, 4, 5}, {2, 4, 5}, {10, 11, 12}, {20, 21, 22}}, {}, 3, 3);
        CHECK(count(h, PatternKind(PatternTag::BAD_TRIPLE), 3).count == 1);
        h = make({{1, 2, 3}, {1, 4, 5}, {2, 4, 6}, {3, 5, 6}}, {}, 3, 3);
        CHECK(count(h, PatternKind(PatternTag::PASCH), 3).count == 1);
        const auto empty = Hypergraph::build({}, {}, 3, 4);
        for (PatternTag t : all_pattern_tags())
            CHECK(count(empty, PatternKind(t), 3).count == 0);
    }

    TEST_CASE("count truncates at the limit")
    {
        std::vector<std::vector<long long>> a;
        for (int i = 0; i < 6; ++i)
            a.push_back({1, 10 + 2LL * i, 11 + 2LL * i});
        const auto h = make(a, {}, 3, 4);
        const auto full = count(h, PatternKind(PatternTag::A_PATH, 2), 2);
        CHECK(full.count == 15);
        CHECK_FALSE(full.truncated);
        const auto cut = count(h, PatternKind(PatternTag::A_PATH, 2), 2, 4);
        CHECK(cut.count == 4);
        CHECK(cut.truncated);
    }

    TEST_CASE("AB-path detection")
    {
        const auto h = ab_path(3);
        const auto m = detect(h, PatternKind(PatternTag::AB_PATH), 2);
        REQUIRE(m.has_value());
        CHECK(m->params.t >= 2);
        CHECK(verify(h, *m, 2));
        CHECK(detect(h, PatternKind(PatternTag::AB_PATH, -1, 3), 5).has_value());
        CHECK_FALSE(detect(h, PatternKind(PatternTag::AB_PATH, -1, 4), 5).has_value());
        CHECK(count(h, PatternKind(PatternTag::AB_SET), 3).count == 3);
    }

    TEST_CASE("bounded detection reports an exhausted budget")
    {
        const auto h = ab_path(3);
        const PatternKind absent(PatternTag::AB_PATH, -1, 4);
        auto d = detect_bounded(h, absent, 5, 0);
        CHECK_FALSE(d.match.has_value());
        CHECK(d.complete);
        d = detect_bounded(h, absent, 5, 3);
        CHECK_FALSE(d.match.has_value());
        CHECK_FALSE(d.complete);
        d = detect_bounded(h, PatternKind(PatternTag::AB_PATH, -1, 3), 5, 1'000'000);
        CHECK(d.match.has_value());
        CHECK(d.complete);
        // The budget is scoped: unbounded detection afterwards still completes.
        CHECK(detect(h, PatternKind(PatternTag::AB_PATH, -1, 3), 5).has_value());
        const auto r = audit_lemma22(h, 4, 5);
        CHECK(r.node_limit == 5);
        CHECK_FALSE(r.undetermined.empty());
        for (const auto& name : r.undetermined) {
            const auto it = std::find_if(r.cases.begin(), r.cases.end(), [&](const auto& c) { return c.first == name; });
            REQUIRE(it != r.cases.end());
            CHECK_FALSE(it->second.has_value());
        }
    }

    TEST_CASE("AB-cycle of length 4 and its two variants")
    {
        for (int variant : {0, 1}) {
            const auto h = ab_cycle(4, variant);
            CHECK(h.vertex_count() == 36);
            CHECK(h.edge_count() == 16);
            const auto m = detect(h, PatternKind(PatternTag::AB_CYCLE), 4);
            REQUIRE(m.has_value());
            CHECK(m->params.t == 4);
            CHECK(m->params.variant == variant);
            CHECK(verify(h, *m, 4));
            CHECK(count(h, PatternKind(PatternTag::AB_CYCLE, -1, -1, variant), 4).count == 1);
            CHECK(count(h, PatternKind(PatternTag::AB_CYCLE, -1, -1, 1 - variant), 4).count == 0);
            CHECK(count(h, PatternKind(PatternTag::AB_CYCLE), 4).count == 1);
        }
        CHECK_FALSE(detect(ab_cycle(4, 0), PatternKind(PatternTag::AB_CYCLE), 3).has_value());
    }

    TEST_CASE("two A-edges sharing two vertices")
    {
        const auto h = make({{1, 2, 3}, {2, 3, 4}}, {}, 3, 4);
        const auto m = detect(h, PatternKind(PatternTag::L22_III), 3);
        REQUIRE(m.has_value());
        CHECK(verify(h, *m, 3));
    }

    TEST_CASE("lemma audits flag constructed structures")
    {
        const auto cyc = make({{1, 2, 3}, {3, 4, 5}, {5, 6, 1}}, {{1, 7, 8, 9}}, 3, 4);
        const auto r22 = audit_lemma22(cyc, 3);
        CHECK(r22.precondition_ok);
        CHECK(flagged(r22, "iv"));
        CHECK(r22.any());

        const auto tight = make({{1, 2, 3}, {2, 3, 4}, {3, 4, 5}}, {}, 3, 3);
        CHECK(flagged(audit_lemma33(tight, 3), "vi"));

        const auto path = make({{1, 2, 3}, {3, 4, 5}, {5, 6, 7}, {7, 8, 9}}, {}, 3, 3);
        CHECK(flagged(audit_lemma33(path, 4), "iv"));
        CHECK_FALSE(flagged(audit_lemma33(path, 5), "iv"));

        const auto empty = Hypergraph::build({}, {}, 3, 4);
        CHECK_FALSE(audit_lemma22(empty, 3).precondition_ok);
        CHECK_FALSE(audit_lemma22(empty, 3).any());
        CHECK_FALSE(audit_lemma33(empty, 3).precondition_ok);
    }

    TEST_CASE("iterative exploration preconditions")
    {
        CHECK_THROWS_AS(iterative_explore(Hypergraph::build({}, {}, 3, 4), 3), PreconditionError);
        CHECK_THROWS_AS(iterative_explore(make({{1, 2, 3}}, {}, 3, 3), 3), PreconditionError);
    }

    TEST_CASE("pattern kind parsing")
    {
        CHECK(parse_pattern_kind("A_CYCLE").tag == PatternTag::A_CYCLE);
        CHECK(parse_pattern_kind("A_CYCLE(3)").s == 3);
        CHECK(parse_pattern_kind("A_CYCLE(3)").label() == "A_CYCLE(s=3)");
        for (PatternTag t : all_pattern_tags())
            CHECK(parse_pattern_tag(to_string(t)) == t);
        CHECK_THROWS(parse_pattern_kind("NOPE"));
        CHECK_THROWS(parse_pattern_kind("A_CYCLE(2)"));
    }
}
