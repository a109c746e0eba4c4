#include "rado/colorability.hpp"

#include "cdcl.hpp"

#include "rado/errors.hpp"
#include "rado/structures.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rado {

Color Coloring::of(long long v) const
{
    auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (it == vertices.end() || *it != v)
        throw PreconditionError("vertex " + std::to_string(v) + " not colored");
    return colors[static_cast<std::size_t>(it - vertices.begin())];
}

std::string Coloring::to_text() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        out << vertices[i] << ' ' << (colors[i] == Color::red ? "red" : "blue") << '\n';
    return out.str();
}

bool is_good_coloring(const Hypergraph& h, const Coloring& c)
{
    if (c.vertices != h.vertices() || c.colors.size() != c.vertices.size())
        return false;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const auto& loc = h.local_edge(e);
        bool all_red = true, all_blue = true;
        for (int i : loc) {
            all_red &= c.colors[static_cast<std::size_t>(i)] == Color::red;
            all_blue &= c.colors[static_cast<std::size_t>(i)] == Color::blue;
        }
        if (h.edges()[e].is_a() && all_red)
            return false;
        if (h.edges()[e].is_b() && all_blue)
            return false;
    }
    return true;
}

namespace {

constexpr std::int8_t kUnset = -1;

// Monotone CSP: each clause needs one of its vertices in `want`.
class Solver {
public:
    explicit Solver(const Hypergraph& h) : h_(h)
    {
        const std::size_t nv = h.vertex_count();
        value_.assign(nv, kUnset);
        occurs_.assign(nv, {});
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
            const auto& ed = h.edges()[e];
            for (Family f : {kFamilyA, kFamilyB}) {
                if (!ed.has(f))
                    continue;
                Clause c;
                c.tag = {e, f};
                c.vars = h.local_edge(e);
                c.want = f == kFamilyA ? static_cast<std::int8_t>(Color::blue) : static_cast<std::int8_t>(Color::red);
                c.open = static_cast<int>(c.vars.size());
                const int id = static_cast<int>(clauses_.size());
                for (int v : c.vars)
                    occurs_[static_cast<std::size_t>(v)].push_back(id);
                clauses_.push_back(std::move(c));
            }
        }
        unsatisfied_ = static_cast<int>(clauses_.size());
        reason_.assign(nv, -1);
        seen_.assign(clauses_.size(), 0);
    }

    RadoVerdict run()
    {
        RadoVerdict verdict;
        bool ok = preprocess() && search();
        verdict.stats = stats_;
        if (!ok) {
            verdict.is_rado = true;
            for (const Clause& c : clauses_)
                if (c.used)
                    verdict.core.push_back(c.tag);
            return verdict;
        }
        Coloring c;
        c.vertices = h_.vertices();
        c.colors.resize(c.vertices.size());
        for (std::size_t i = 0; i < c.colors.size(); ++i)
            c.colors[i] = value_[i] == static_cast<std::int8_t>(Color::red) ? Color::red : Color::blue;
        verdict.is_rado = false;
        verdict.witness = std::move(c);
        return verdict;
    }

private:
    struct Clause {
        std::vector<int> vars;
        EdgeTag tag;
        bool used = false;  // part of the refutation
        std::int8_t want = 0;
        int open = 0;      // unassigned vars
        int satisfied = 0; // vars assigned `want`
    };

    // Returns false on conflict; all effects are recorded on the trail.
    bool assign(int v, std::int8_t color)
    {
        struct Item {
            int var;
            std::int8_t color;
            int reason;
        };
        std::vector<Item> queue{{v, color, -1}};
        std::size_t head = 0;
        while (head < queue.size()) {
            const Item it = queue[head++];
            const std::size_t xi = static_cast<std::size_t>(it.var);
            if (value_[xi] != kUnset) {
                if (value_[xi] != it.color) {
                    analyze(it.reason);
                    return false;
                }
                continue;
            }
            value_[xi] = it.color;
            reason_[xi] = it.reason;
            trail_.push_back(it.var);
            int conflict = -1;
            for (int id : occurs_[xi]) {
                Clause& c = clauses_[static_cast<std::size_t>(id)];
                --c.open;
                if (c.want == it.color) {
                    if (c.satisfied++ == 0)
                        --unsatisfied_;
                    continue;
                }
                if (c.satisfied > 0)
                    continue;
                if (c.open == 0) {
                    if (conflict < 0)
                        conflict = id;
                } else if (c.open == 1) {
                    for (int y : c.vars)
                        if (value_[static_cast<std::size_t>(y)] == kUnset) {
                            queue.push_back({y, c.want, id});
                            ++stats_.propagations;
                            break;
                        }
                }
            }
            if (conflict >= 0) {
                analyze(conflict);
                return false;
            }
        }
        return true;
    }

    // Marks the falsified clause and, transitively, the reasons of its
    // assignments: exactly the clauses a tree refutation resolves on.
    void analyze(int conflict)
    {
        ++stamp_;
        std::vector<int> stack{conflict};
        seen_[static_cast<std::size_t>(conflict)] = stamp_;
        while (!stack.empty()) {
            Clause& c = clauses_[static_cast<std::size_t>(stack.back())];
            stack.pop_back();
            c.used = true;
            for (int y : c.vars) {
                const int r = reason_[static_cast<std::size_t>(y)];
                if (r >= 0 && value_[static_cast<std::size_t>(y)] != kUnset &&
                    seen_[static_cast<std::size_t>(r)] != stamp_) {
                    seen_[static_cast<std::size_t>(r)] = stamp_;
                    stack.push_back(r);
                }
            }
        }
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            const int x = trail_.back();
            trail_.pop_back();
            const std::size_t xi = static_cast<std::size_t>(x);
            const std::int8_t col = value_[xi];
            for (int id : occurs_[xi]) {
                Clause& c = clauses_[static_cast<std::size_t>(id)];
                ++c.open;
                if (c.want == col && --c.satisfied == 0)
                    ++unsatisfied_;
            }
            value_[xi] = kUnset;
        }
    }

    // Pure-literal elimination to a fixpoint, counting only open clauses.
    bool preprocess()
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t v = 0; v < value_.size(); ++v) {
                if (value_[v] != kUnset || occurs_[v].empty())
                    continue;
                bool wants_red = false, wants_blue = false;
                for (int id : occurs_[v]) {
                    const Clause& c = clauses_[static_cast<std::size_t>(id)];
                    if (c.satisfied > 0)
                        continue;
                    (c.want == static_cast<std::int8_t>(Color::red) ? wants_red : wants_blue) = true;
                }
                if (wants_red && wants_blue)
                    continue;
                const std::int8_t col =
                    wants_red ? static_cast<std::int8_t>(Color::red) : static_cast<std::int8_t>(Color::blue);
                ++stats_.pure;
                if (!assign(static_cast<int>(v), col))
                    return false;
                changed = true;
            }
        }
        // Static branching order: incidence degree descending, then vertex value.
        for (std::size_t v = 0; v < value_.size(); ++v)
            if (!occurs_[v].empty())
                order_.push_back(static_cast<int>(v));
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return occurs_[static_cast<std::size_t>(a)].size() > occurs_[static_cast<std::size_t>(b)].size();
        });
        return true;
    }

    bool search()
    {
        ++stats_.nodes;
        if (unsatisfied_ == 0)
            return true;
        int pick = -1;
        for (int v : order_)
            if (value_[static_cast<std::size_t>(v)] == kUnset) {
                pick = v;
                break;
            }
        if (pick < 0)
            return false;
        // Try the color that satisfies more of the vertex's clauses first.
        int blue_votes = 0;
        for (int id : occurs_[static_cast<std::size_t>(pick)])
            blue_votes += clauses_[static_cast<std::size_t>(id)].want == static_cast<std::int8_t>(Color::blue) ? 1 : -1;
        const std::int8_t first =
            blue_votes >= 0 ? static_cast<std::int8_t>(Color::blue) : static_cast<std::int8_t>(Color::red);
        for (std::int8_t col : {first, static_cast<std::int8_t>(1 - first)}) {
            const std::size_t mark = trail_.size();
            if (assign(pick, col) && search())
                return true;
            undo(mark);
        }
        return false;
    }

    const Hypergraph& h_;
    std::vector<Clause> clauses_;
    std::vector<std::vector<int>> occurs_;
    std::vector<std::int8_t> value_;
    std::vector<int> trail_;
    std::vector<int> order_;
    std::vector<int> reason_;
    std::vector<unsigned> seen_;
    unsigned stamp_ = 0;
    int unsatisfied_ = 0;
    SolverStats stats_;
};

}  // namespace

RadoVerdict is_rado(const Hypergraph& h)
{
    return Solver(h).run();
}

Hypergraph rado_minimal(const Hypergraph& g, MinimalStats* stats)
{
    MinimalStats local;
    MinimalStats& st = stats ? *stats : local;

    // One selector variable per tag switches its constraint on. Each test is
    // exact, so this is the plain sequential pass; the incremental solver
    // only keeps what it learned between the tests.
    const std::vector<EdgeTag> all = g.tags();
    const int nv = static_cast<int>(g.vertex_count());
    detail::IncrementalSat sat(nv + static_cast<int>(all.size()), nv);
    auto selector = [&](std::size_t i) { return nv + static_cast<int>(i); };
    for (std::size_t i = 0; i < all.size(); ++i) {
        std::vector<int> lits;
        // variable true = red; A-edges need a blue vertex, B-edges a red one
        for (int v : g.local_edge(all[i].edge))
            lits.push_back(detail::make_lit(v, all[i].family == kFamilyA));
        lits.push_back(detail::make_lit(selector(i), true));
        sat.add_clause(std::move(lits));
    }
    std::vector<bool> kept(all.size(), true);
    std::vector<bool> in_core(all.size(), false);
    auto assumptions = [&](std::size_t skip) {
        std::vector<int> a;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (kept[i])
                a.push_back(detail::make_lit(selector(i), i == skip));
        return a;
    };
    // A tag outside the last refutation's failed assumptions can go without
    // a test: the remaining tags still contain that refutation.
    auto load_core = [&] {
        std::fill(in_core.begin(), in_core.end(), false);
        for (int lit : sat.failed_assumptions())
            if (!(lit & 1) && detail::lit_var(lit) >= nv)
                in_core[static_cast<std::size_t>(detail::lit_var(lit) - nv)] = true;
    };

    ++st.solver_calls;
    if (sat.solve(assumptions(all.size())))
        return g.with_tags({});
    load_core();
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (in_core[i]) {
            ++st.solver_calls;
            if (sat.solve(assumptions(i)))
                continue;
            load_core();
        }
        kept[i] = false;
        sat.add_clause({detail::make_lit(selector(i), true)});
    }
    std::vector<EdgeTag> keep;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (kept[i])
            keep.push_back(all[i]);
    return g.with_tags(keep);
}

nlohmann::json Claim21Report::to_json() const
{
    nlohmann::json j{{"pass", pass}, {"checked", checked}};
    if (edge) {
        j["edge"] = *edge;
        j["family"] = family_name(*family);
        j["vertex"] = *vertex;
    }
    return j;
}

Claim21Report audit_claim21(const Hypergraph& h)
{
    Claim21Report report;
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        const Edge& ed = h.edges()[e];
        for (Family f : {kFamilyA, kFamilyB}) {
            if (!ed.has(f))
                continue;
            const Family other = f == kFamilyA ? kFamilyB : kFamilyA;
            const auto& loc = h.local_edge(e);
            for (std::size_t i = 0; i < loc.size(); ++i) {
                ++report.checked;
                bool found = false;
                for (int o : h.incident(loc[i])) {
                    if (!h.edges()[static_cast<std::size_t>(o)].has(other))
                        continue;
                    const auto& ol = h.local_edge(static_cast<std::size_t>(o));
                    std::size_t common = 0;
                    for (int x : ol)
                        common += std::binary_search(loc.begin(), loc.end(), x) ? 1 : 0;
                    if (common == 1) {
                        found = true;
                        break;
                    }
                }
                if (!found) {
                    report.pass = false;
                    report.edge = e;
                    report.family = f;
                    report.vertex = ed.vertices[i];
                    return report;
                }
            }
        }
    }
    return report;
}

nlohmann::json TreeReport::to_json() const
{
    nlohmann::json j{{"pass", pass()},   {"precondition_ok", precondition_ok}, {"trees_ok", trees_ok},
                     {"b_edges_ok", b_edges_ok}, {"tree_count", tree_count}};
    if (!precondition.empty())
        j["precondition"] = precondition;
    if (offending_edge)
        j["offending_edge"] = *offending_edge;
    return j;
}

TreeReport audit_tree_claims(const Hypergraph& h, int cap)
{
    TreeReport report;
    if (h.k_b() <= h.k_a()) {
        report.precondition_ok = false;
        report.precondition = "needs kB > kA";
        return report;
    }
    for (PatternTag tag : {PatternTag::L22_II, PatternTag::L22_III, PatternTag::L22_IV}) {
        if (detect(h, PatternKind{tag}, cap)) {
            report.precondition_ok = false;
            report.precondition = "contains " + to_string(tag);
            return report;
        }
    }

    const std::size_t nv = h.vertex_count();
    std::vector<int> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::vector<bool> in_a(nv, false);
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        if (!h.edges()[e].is_a())
            continue;
        const auto& loc = h.local_edge(e);
        for (int v : loc)
            in_a[static_cast<std::size_t>(v)] = true;
        for (std::size_t i = 1; i < loc.size(); ++i)
            parent[static_cast<std::size_t>(find(loc[i]))] = find(loc[0]);
    }
    // A component with s edges is a tree iff it has 1 + s(kA - 1) vertices.
    std::vector<long long> comp_vertices(nv, 0), comp_edges(nv, 0);
    for (std::size_t v = 0; v < nv; ++v)
        if (in_a[v])
            ++comp_vertices[static_cast<std::size_t>(find(static_cast<int>(v)))];
    for (std::size_t e = 0; e < h.edge_count(); ++e)
        if (h.edges()[e].is_a())
            ++comp_edges[static_cast<std::size_t>(find(h.local_edge(e)[0]))];
    for (std::size_t r = 0; r < nv; ++r) {
        if (comp_edges[r] == 0)
            continue;
        ++report.tree_count;
        if (comp_vertices[r] != 1 + comp_edges[r] * (h.k_a() - 1))
            report.trees_ok = false;
    }
    for (std::size_t e = 0; e < h.edge_count(); ++e) {
        if (!h.edges()[e].is_b())
            continue;
        std::vector<int> roots;
        for (int v : h.local_edge(e))
            if (in_a[static_cast<std::size_t>(v)])
                roots.push_back(find(v));
        std::sort(roots.begin(), roots.end());
        if (std::adjacent_find(roots.begin(), roots.end()) != roots.end()) {
            report.b_edges_ok = false;
            report.offending_edge = e;
            break;
        }
    }
    return report;
}

}  // namespace rado
