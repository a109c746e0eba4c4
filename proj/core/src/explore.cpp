#include "rado/structures.hpp"

#include "chains.hpp"
#include "patterns.hpp"
#include "rado/errors.hpp"

#include <algorithm>
#include <set>

namespace rado {

using detail::intersection_size;

std::string to_string(Termination t)
{
    switch (t) {
    case Termination::few_new_vertices: return "few_new_vertices";
    case Termination::hit_previous_a_edge: return "hit_previous_a_edge";
    case Termination::step_cap: return "step_cap";
    }
    return "unknown";
}

std::string to_string(TerminalShape s)
{
    switch (s) {
    case TerminalShape::viii: return "viii";
    case TerminalShape::ix: return "ix";
    case TerminalShape::none: return "none";
    }
    return "unknown";
}

namespace {

nlohmann::json edge_json(const Hypergraph& h, std::size_t e)
{
    return {{"family", family_name(h.edges()[e].families)}, {"vertices", h.edges()[e].vertices}};
}

int smallest_uncovered(const Hypergraph& h, std::size_t a, const std::vector<int>& b_cover)
{
    for (int v : h.local_edge(a))
        if (!b_cover[static_cast<std::size_t>(v)])
            return v;
    return -1;
}

}  // namespace

nlohmann::json ExploreTrace::to_json(const Hypergraph& h) const
{
    nlohmann::json start = nlohmann::json::array();
    for (std::size_t e : start_edges)
        start.push_back(edge_json(h, e));
    nlohmann::json st = nlohmann::json::array();
    for (const auto& s : steps) {
        nlohmann::json as = nlohmann::json::array();
        for (std::size_t a : s.new_a_edges)
            as.push_back(edge_json(h, a));
        st.push_back({{"b_edge", edge_json(h, s.b_edge)},
                      {"new_vertices", s.new_vertices},
                      {"new_a_edges", as},
                      {"q", s.q}});
    }
    return {{"case", start_case == ExploreCase::cycle_start ? "cycle" : "edge"},
            {"start_edges", start},
            {"start_vertex", start_vertex},
            {"steps", st},
            {"termination", to_string(termination)},
            {"shape", to_string(shape)}};
}

ExploreTrace iterative_explore(const Hypergraph& h, int cap)
{
    if (h.empty())
        throw PreconditionError("iterative exploration needs a non-empty hypergraph");
    if (!(h.k_b() > h.k_a()))
        throw PreconditionError("iterative exploration needs k_B > k_A");
    if (cap < 1)
        throw PreconditionError("cap must be at least 1");
    const int kb = h.k_b();
    const std::size_t nv = h.vertex_count();
    std::vector<int> in_j(nv, 0), b_cover(nv, 0), a_cover(nv, 0);
    auto add = [&](std::size_t e) {
        for (int v : h.local_edge(e)) {
            ++in_j[static_cast<std::size_t>(v)];
            if (h.edges()[e].is_b())
                ++b_cover[static_cast<std::size_t>(v)];
            if (h.edges()[e].is_a())
                ++a_cover[static_cast<std::size_t>(v)];
        }
    };

    ExploreTrace tr;
    std::vector<std::size_t> p_layout;  // the cycle-path built so far
    std::vector<std::size_t> cycle_a;
    int s = 0;
    int anchor = -1;
    int variant = -1;
    std::size_t link = 0;
    int v = -1;

    const auto cycle = detect(h, PatternKind(PatternTag::AB_CYCLE), cap);
    if (cycle) {
        tr.start_case = ExploreCase::cycle_start;
        tr.start_edges = cycle->edges;
        s = cycle->params.t;
        variant = cycle->params.variant;
        for (std::size_t e : cycle->edges)
            add(e);
        std::vector<std::size_t> cb;
        detail::split_layout(h, cycle->edges, s, 0, -1, cycle_a, cb);
        for (std::size_t j = 0; j < cycle_a.size() && v < 0; ++j) {
            v = smallest_uncovered(h, cycle_a[j], b_cover);
            if (v >= 0) {
                link = cycle_a[j];
                anchor = static_cast<int>(j);
            }
        }
        if (v < 0)
            throw Error("no A-edge of the AB-cycle has a vertex outside its B-edges");
        p_layout = cycle->edges;
    } else {
        tr.start_case = ExploreCase::edge_start;
        std::size_t a0 = h.edge_count();
        for (std::size_t e = 0; e < h.edge_count(); ++e)
            if (h.edges()[e].is_a()) {
                a0 = e;
                break;
            }
        if (a0 == h.edge_count())
            throw PreconditionError("hypergraph has no A-edge");
        tr.start_edges = {a0};
        add(a0);
        link = a0;
        v = h.local_edge(a0).front();
        p_layout = {a0};
    }
    tr.start_vertex = h.vertices()[static_cast<std::size_t>(v)];

    int path_len = 0;
    std::vector<std::size_t> p_before;  // P at the start of the last step
    std::vector<std::size_t> last_new;
    std::size_t last_b = 0;
    std::size_t last_link = link;
    int last_v = v;
    tr.termination = Termination::step_cap;
    for (int step = 1; step <= cap; ++step) {
        std::optional<std::size_t> b;
        for (int e : h.incident(v))
            if (h.edges()[static_cast<std::size_t>(e)].is_b()) {
                b = static_cast<std::size_t>(e);
                break;
            }
        if (!b)
            throw Error("vertex " + std::to_string(h.vertices()[static_cast<std::size_t>(v)]) +
                        " of an A-edge lies in no B-edge; the hypergraph is not Rado-minimal");
        const auto& lb = h.local_edge(*b);
        ExploreStep st;
        st.b_edge = *b;
        std::vector<int> fresh;
        for (int u : lb)
            if (!in_j[static_cast<std::size_t>(u)])
                fresh.push_back(u);
        st.q = fresh.size();
        std::vector<std::size_t> chosen;
        bool hit_previous = false;
        for (int u : fresh) {
            st.new_vertices.push_back(h.vertices()[static_cast<std::size_t>(u)]);
            std::optional<std::size_t> pick, fallback;
            for (int e : h.incident(u)) {
                const std::size_t a = static_cast<std::size_t>(e);
                if (!h.edges()[a].is_a() || intersection_size(h.local_edge(a), lb) != 1)
                    continue;
                if (!fallback)
                    fallback = a;
                bool clash = false;
                for (std::size_t c : chosen)
                    clash = clash || intersection_size(h.local_edge(c), h.local_edge(a)) != 0;
                if (!clash) {
                    pick = a;
                    break;
                }
            }
            if (!pick)
                pick = fallback;
            if (!pick)
                throw Error("vertex " + std::to_string(h.vertices()[static_cast<std::size_t>(u)]) +
                            " of a B-edge lies in no A-edge meeting it once; the hypergraph is not Rado-minimal");
            for (int w : h.local_edge(*pick))
                hit_previous = hit_previous || a_cover[static_cast<std::size_t>(w)] > 0;
            chosen.push_back(*pick);
        }
        st.new_a_edges = chosen;
        tr.steps.push_back(st);
        p_before = p_layout;
        last_new = chosen;
        last_b = *b;
        last_link = link;
        last_v = v;
        add(*b);
        for (std::size_t a : chosen)
            add(a);
        if (static_cast<int>(st.q) <= kb - 2) {
            tr.termination = Termination::few_new_vertices;
            break;
        }
        if (hit_previous) {
            tr.termination = Termination::hit_previous_a_edge;
            break;
        }
        // Grow P by this AB-set; the last fresh A-edge becomes the link.
        p_layout.push_back(*b);
        p_layout.insert(p_layout.end(), chosen.begin(), chosen.end());
        ++path_len;
        link = chosen.back();
        v = smallest_uncovered(h, link, b_cover);
        if (v < 0)
            throw Error("link A-edge fully covered by B-edges");
    }
    if (tr.termination == Termination::step_cap)
        return tr;

    // Classify the terminal configuration against (viii) and (ix).
    const int t = path_len;
    const int cap_used = std::max(cap, std::max(s, t));
    MatchParams base;
    base.s = s;
    base.t = t;
    base.variant = s >= 2 ? variant : -1;
    base.anchor = s >= 2 && t >= 1 ? anchor : -1;
    if (s == 0 && t == 0)
        return tr;
    std::vector<std::size_t> layout = p_before;
    if (s == 0 && !layout.empty() && layout.front() != tr.start_edges.front())
        return tr;
    std::set<int> vp;
    for (std::size_t e : layout)
        for (int x : h.local_edge(e))
            vp.insert(x);
    for (std::size_t a : last_new) {
        int c = 0;
        for (int x : h.local_edge(a))
            c += vp.count(x) ? 1 : 0;
        if (c >= 2 && c <= static_cast<int>(h.local_edge(a).size()) - 1) {
            StructureMatch m;
            m.kind = PatternKind(PatternTag::L22_VIII);
            m.params = base;
            m.params.x = c;
            m.edges = layout;
            m.edges.push_back(a);
            if (verify(h, m, cap_used)) {
                tr.shape = TerminalShape::viii;
                return tr;
            }
        }
    }
    // (ix): P's A-edges through the old vertices of b, with the link last.
    std::vector<std::size_t> pa, pb;
    detail::split_layout(h, layout, s, t, base.anchor, pa, pb);
    StructureMatch m;
    m.kind = PatternKind(PatternTag::L22_IX);
    m.params = base;
    m.params.q = static_cast<int>(last_new.size());
    m.edges = layout;
    m.edges.push_back(last_b);
    m.edges.insert(m.edges.end(), last_new.begin(), last_new.end());
    const auto& lb = h.local_edge(last_b);
    for (int u : lb) {
        if (!vp.count(u) || u == last_v)
            continue;
        for (std::size_t a : pa) {
            const auto& la = h.local_edge(a);
            if (std::binary_search(la.begin(), la.end(), u)) {
                m.edges.push_back(a);
                break;
            }
        }
    }
    m.edges.push_back(last_link);
    if (verify(h, m, cap_used))
        tr.shape = TerminalShape::ix;
    return tr;
}

}  // namespace rado
