#include "chains.hpp"

#include "patterns.hpp"

#include <algorithm>
#include <set>

namespace rado::detail {

namespace {

class ChainSearch {
public:
    ChainSearch(const Hypergraph& h, const ChainRanges& r, const std::function<bool(const ChainView&)>& visit)
        : h_(h), r_(r), visit_(visit), kb_(h.k_b())
    {
        const std::size_t nv = h.vertex_count();
        in_p_.assign(nv, 0);
        b_cover_.assign(nv, 0);
        a_mark_.assign(nv, 0);
        seg_b_.assign(nv, 0);
        forbidden_.assign(nv, 0);
        view_.in_p = &in_p_;
        view_.b_cover = &b_cover_;
    }

    void run()
    {
        if (kb_ < 2)
            return;
        for (std::size_t a = 0; a < h_.edge_count() && !stop_; ++a) {
            if (!h_.edges()[a].is_a())
                continue;
            add_a(a);
            view_.layout.push_back(a);
            if (r_.s_min == 0 && r_.t_max >= 1) {
                view_.s = 0;
                view_.anchor = -1;
                view_.variant = -1;
                path_from(a, 1, false);
            }
            if (r_.s_max >= 2 && !stop_)
                cycle_from(a);
            view_.layout.pop_back();
            remove_a(a);
        }
    }

private:
    void add_a(std::size_t e)
    {
        for (int v : h_.local_edge(e)) {
            ++a_mark_[static_cast<std::size_t>(v)];
            ++in_p_[static_cast<std::size_t>(v)];
        }
        view_.a_edges.push_back(e);
    }
    void remove_a(std::size_t e)
    {
        for (int v : h_.local_edge(e)) {
            --a_mark_[static_cast<std::size_t>(v)];
            --in_p_[static_cast<std::size_t>(v)];
        }
        view_.a_edges.pop_back();
    }
    void add_b(std::size_t e)
    {
        for (int v : h_.local_edge(e)) {
            ++b_cover_[static_cast<std::size_t>(v)];
            ++seg_b_[static_cast<std::size_t>(v)];
            ++in_p_[static_cast<std::size_t>(v)];
        }
        view_.b_edges.push_back(e);
    }
    void remove_b(std::size_t e)
    {
        for (int v : h_.local_edge(e)) {
            --b_cover_[static_cast<std::size_t>(v)];
            --seg_b_[static_cast<std::size_t>(v)];
            --in_p_[static_cast<std::size_t>(v)];
        }
        view_.b_edges.pop_back();
    }

    bool emit()
    {
        if (!visit_(view_))
            stop_ = true;
        return !stop_;
    }

    // Candidate A-edges meeting b exactly in u and free of P and `forbidden_`.
    std::vector<std::size_t> fresh_a(std::size_t b, int u) const
    {
        std::vector<std::size_t> out;
        const auto& lb = h_.local_edge(b);
        for (int e : h_.incident(u)) {
            const std::size_t ei = static_cast<std::size_t>(e);
            if (!h_.edges()[ei].is_a() || ei == b)
                continue;
            const auto& le = h_.local_edge(ei);
            if (intersection_size(le, lb) != 1)
                continue;
            bool ok = true;
            for (int v : le)
                if (a_mark_[static_cast<std::size_t>(v)] || forbidden_[static_cast<std::size_t>(v)]) {
                    ok = false;
                    break;
                }
            if (ok)
                out.push_back(ei);
        }
        return out;
    }

    // Assigns pairwise disjoint fresh A-edges to `need` (vertices of b), then
    // calls `done` with them in ascending id order.
    void assign_fresh(std::size_t b, const std::vector<int>& need, std::size_t i, std::vector<std::size_t>& chosen,
                      const std::function<void(const std::vector<std::size_t>&)>& done)
    {
        if (stop_)
            return;
        if (!node_tick()) {
            stop_ = true;
            return;
        }
        if (i == need.size()) {
            std::vector<std::size_t> sorted = chosen;
            std::sort(sorted.begin(), sorted.end());
            done(sorted);
            return;
        }
        for (std::size_t e : fresh_a(b, need[i])) {
            bool clash = false;
            for (std::size_t c : chosen)
                if (intersection_size(h_.local_edge(c), h_.local_edge(e)) != 0) {
                    clash = true;
                    break;
                }
            if (clash)
                continue;
            chosen.push_back(e);
            assign_fresh(b, need, i + 1, chosen, done);
            chosen.pop_back();
            if (stop_)
                return;
        }
    }

    // B-edges through `link` that could start the next AB-set of a segment.
    std::vector<std::size_t> next_b(std::size_t link, bool uncovered_only) const
    {
        std::vector<std::size_t> out;
        std::set<std::size_t> seen;
        const auto& ll = h_.local_edge(link);
        for (int v : ll) {
            if (uncovered_only && b_cover_[static_cast<std::size_t>(v)])
                continue;
            for (int e : h_.incident(v)) {
                const std::size_t ei = static_cast<std::size_t>(e);
                if (!h_.edges()[ei].is_b() || ei == link || !seen.insert(ei).second)
                    continue;
                if (intersection_size(h_.local_edge(ei), ll) != 1)
                    continue;
                out.push_back(ei);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool b_clear(std::size_t b) const
    {
        for (int v : h_.local_edge(b))
            if (seg_b_[static_cast<std::size_t>(v)] || forbidden_[static_cast<std::size_t>(v)])
                return false;
        return true;
    }

    // Extends the current segment as an AB-path from `link`; `depth` is the
    // length after this step.
    void path_from(std::size_t link, int depth, bool first_uncovered)
    {
        if (depth > r_.t_max || stop_)
            return;
        if (!node_tick()) {
            stop_ = true;
            return;
        }
        for (std::size_t b : next_b(link, first_uncovered)) {
            if (!b_clear(b))
                continue;
            std::vector<int> need;
            bool ok = true;
            const auto& ll = h_.local_edge(link);
            for (int u : h_.local_edge(b)) {
                if (std::binary_search(ll.begin(), ll.end(), u))
                    continue;
                if (a_mark_[static_cast<std::size_t>(u)]) {
                    ok = false;
                    break;
                }
                need.push_back(u);
            }
            if (!ok)
                continue;
            add_b(b);
            view_.layout.push_back(b);
            std::vector<std::size_t> chosen;
            assign_fresh(b, need, 0, chosen, [&](const std::vector<std::size_t>& fresh) {
                for (std::size_t e : fresh)
                    add_a(e);
                const std::size_t base = view_.layout.size();
                view_.layout.insert(view_.layout.end(), fresh.begin(), fresh.end());
                view_.t = depth;
                if (depth >= r_.t_min && depth >= 1)
                    emit();
                if (depth < r_.t_max && !stop_) {
                    // Each fresh edge may serve as the link; it moves to the end of its set.
                    for (std::size_t li = 0; li < fresh.size() && !stop_; ++li) {
                        std::vector<std::size_t> order;
                        for (std::size_t k = 0; k < fresh.size(); ++k)
                            if (k != li)
                                order.push_back(fresh[k]);
                        order.push_back(fresh[li]);
                        std::copy(order.begin(), order.end(), view_.layout.begin() + static_cast<std::ptrdiff_t>(base));
                        path_from(fresh[li], depth + 1, false);
                    }
                    std::copy(fresh.begin(), fresh.end(), view_.layout.begin() + static_cast<std::ptrdiff_t>(base));
                }
                view_.layout.resize(base);
                for (auto it = fresh.rbegin(); it != fresh.rend(); ++it)
                    remove_a(*it);
            });
            view_.layout.pop_back();
            remove_b(b);
            if (stop_)
                return;
        }
    }

    void cycle_from(std::size_t a1)
    {
        cycle_start_ = a1;
        cycle_step(a1, 1);
    }

    // Open cycle chain; `depth` is the index of the B-edge being added.
    void cycle_step(std::size_t link, int depth)
    {
        if (stop_ || depth > r_.s_max)
            return;
        if (!node_tick()) {
            stop_ = true;
            return;
        }
        if (depth >= 2 && depth >= r_.s_min)
            close_cycle(link, depth);
        if (depth == r_.s_max || stop_)
            return;
        // Open step identical to an AB-path step.
        for (std::size_t b : next_b(link, false)) {
            if (!b_clear(b))
                continue;
            std::vector<int> need;
            bool ok = true;
            const auto& ll = h_.local_edge(link);
            for (int u : h_.local_edge(b)) {
                if (std::binary_search(ll.begin(), ll.end(), u))
                    continue;
                if (a_mark_[static_cast<std::size_t>(u)]) {
                    ok = false;
                    break;
                }
                need.push_back(u);
            }
            if (!ok)
                continue;
            add_b(b);
            view_.layout.push_back(b);
            if (depth == 1)
                first_b_ = b;
            std::vector<std::size_t> chosen;
            assign_fresh(b, need, 0, chosen, [&](const std::vector<std::size_t>& fresh) {
                for (std::size_t e : fresh)
                    add_a(e);
                const std::size_t base = view_.layout.size();
                view_.layout.insert(view_.layout.end(), fresh.begin(), fresh.end());
                for (std::size_t li = 0; li < fresh.size() && !stop_; ++li) {
                    std::vector<std::size_t> order;
                    for (std::size_t k = 0; k < fresh.size(); ++k)
                        if (k != li)
                            order.push_back(fresh[k]);
                    order.push_back(fresh[li]);
                    std::copy(order.begin(), order.end(), view_.layout.begin() + static_cast<std::ptrdiff_t>(base));
                    cycle_step(fresh[li], depth + 1);
                }
                view_.layout.resize(base);
                for (auto it = fresh.rbegin(); it != fresh.rend(); ++it)
                    remove_a(*it);
            });
            view_.layout.pop_back();
            remove_b(b);
            if (stop_)
                return;
        }
    }

    void close_cycle(std::size_t link, int s)
    {
        const std::size_t a1 = cycle_start_;
        const auto& la1 = h_.local_edge(a1);
        const auto& ll = h_.local_edge(link);
        const auto& lb1 = h_.local_edge(first_b_);
        for (std::size_t b : next_b(link, false)) {
            if (stop_)
                return;
            if (b == first_b_)
                continue;
            const auto& lb = h_.local_edge(b);
            if (intersection_size(lb, la1) != 1)
                continue;
            const int with_first = static_cast<int>(intersection_size(lb, lb1));
            if (with_first > 1 || (r_.variant >= 0 && with_first != r_.variant))
                continue;
            // Disjoint from b_2..b_{s-1}: count segment marks not explained by b_1.
            bool ok = true;
            std::vector<int> need;
            for (int u : lb) {
                const bool in_b1 = std::binary_search(lb1.begin(), lb1.end(), u);
                if (seg_b_[static_cast<std::size_t>(u)] - (in_b1 ? 1 : 0) > 0) {
                    ok = false;
                    break;
                }
                if (std::binary_search(ll.begin(), ll.end(), u) || std::binary_search(la1.begin(), la1.end(), u))
                    continue;
                if (a_mark_[static_cast<std::size_t>(u)]) {
                    ok = false;
                    break;
                }
                need.push_back(u);
            }
            if (!ok)
                continue;
            add_b(b);
            view_.layout.push_back(b);
            std::vector<std::size_t> chosen;
            assign_fresh(b, need, 0, chosen, [&](const std::vector<std::size_t>& fresh) {
                for (std::size_t e : fresh)
                    add_a(e);
                const std::size_t base = view_.layout.size();
                view_.layout.insert(view_.layout.end(), fresh.begin(), fresh.end());
                view_.s = s;
                view_.variant = with_first;
                on_cycle();
                view_.layout.resize(base);
                for (auto it = fresh.rbegin(); it != fresh.rend(); ++it)
                    remove_a(*it);
            });
            view_.layout.pop_back();
            remove_b(b);
        }
    }

    void on_cycle()
    {
        if (r_.t_min == 0) {
            view_.t = 0;
            view_.anchor = -1;
            if (!emit())
                return;
        }
        if (r_.t_max < 1)
            return;
        // Attach an AB-path at each cycle A-edge through a vertex not covered
        // by the cycle's B-edges; the path must avoid V(S) outside that edge.
        const std::vector<std::size_t> cycle_a = view_.a_edges;
        std::vector<int> saved_seg = seg_b_;
        std::fill(seg_b_.begin(), seg_b_.end(), 0);
        for (std::size_t j = 0; j < cycle_a.size() && !stop_; ++j) {
            const std::size_t aj = cycle_a[j];
            const auto& la = h_.local_edge(aj);
            for (std::size_t v = 0; v < forbidden_.size(); ++v)
                forbidden_[v] = in_p_[v] > 0 && !std::binary_search(la.begin(), la.end(), static_cast<int>(v));
            view_.anchor = static_cast<int>(j);
            path_from(aj, 1, true);
        }
        std::fill(forbidden_.begin(), forbidden_.end(), 0);
        seg_b_ = std::move(saved_seg);
        view_.anchor = -1;
        view_.t = 0;
    }

    const Hypergraph& h_;
    ChainRanges r_;
    const std::function<bool(const ChainView&)>& visit_;
    int kb_;
    std::vector<int> in_p_, b_cover_, a_mark_, seg_b_, forbidden_;
    ChainView view_;
    std::size_t cycle_start_ = 0;
    std::size_t first_b_ = 0;
    bool stop_ = false;
};

}  // namespace

void for_each_chain(const Hypergraph& h, const ChainRanges& ranges, const std::function<bool(const ChainView&)>& visit)
{
    ChainSearch(h, ranges, visit).run();
}

std::size_t chain_layout_size(int k_b, int s, int t, bool attached)
{
    const std::size_t kb = static_cast<std::size_t>(k_b);
    std::size_t n = 0;
    if (s >= 2)
        n += 1 + static_cast<std::size_t>(s) * kb - 1;  // a1 + s B-edges + s(kB-1)-1 more A-edges
    if (t >= 1)
        n += (attached ? 0 : 1) + static_cast<std::size_t>(t) * kb;
    return n;
}

bool check_ab_set(const Hypergraph& h, std::size_t b, const std::vector<std::size_t>& a_edges)
{
    if (b >= h.edge_count() || !h.edges()[b].is_b())
        return false;
    const auto& lb = h.local_edge(b);
    if (a_edges.size() != lb.size())
        return false;
    std::vector<int> hit;
    for (std::size_t i = 0; i < a_edges.size(); ++i) {
        const std::size_t a = a_edges[i];
        if (a >= h.edge_count() || !h.edges()[a].is_a())
            return false;
        const auto& la = h.local_edge(a);
        if (intersection_size(la, lb) != 1)
            return false;
        for (int v : la)
            if (std::binary_search(lb.begin(), lb.end(), v))
                hit.push_back(v);
        for (std::size_t j = 0; j < i; ++j)
            if (a_edges[j] == a || intersection_size(h.local_edge(a_edges[j]), la) != 0)
                return false;
    }
    std::sort(hit.begin(), hit.end());
    return std::adjacent_find(hit.begin(), hit.end()) == hit.end() && hit.size() == lb.size();
}

namespace {

bool pairwise_disjoint(const Hypergraph& h, const std::vector<std::size_t>& edges)
{
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (edges[i] == edges[j] || intersection_size(h.local_edge(edges[i]), h.local_edge(edges[j])) != 0)
                return false;
    return true;
}

// Reads an AB-path layout [a1, b1, N1, ..., bt, Nt] (a1 supplied separately
// when attached) into its A-list and B-list.
bool read_path(const Hypergraph& h, const std::vector<std::size_t>& layout, std::size_t pos, std::size_t a1, int t,
               std::vector<std::size_t>& a_list, std::vector<std::size_t>& b_list)
{
    const std::size_t kb = static_cast<std::size_t>(h.k_b());
    a_list.push_back(a1);
    for (int i = 0; i < t; ++i) {
        if (pos + kb > layout.size())
            return false;
        b_list.push_back(layout[pos++]);
        for (std::size_t k = 0; k + 1 < kb; ++k)
            a_list.push_back(layout[pos++]);
    }
    return pos == layout.size();
}

bool path_sets_ok(const Hypergraph& h, const std::vector<std::size_t>& a_list, const std::vector<std::size_t>& b_list)
{
    const std::size_t kb = static_cast<std::size_t>(h.k_b());
    if (!pairwise_disjoint(h, a_list) || !pairwise_disjoint(h, b_list))
        return false;
    for (std::size_t i = 0; i < b_list.size(); ++i) {
        std::vector<std::size_t> set(a_list.begin() + static_cast<std::ptrdiff_t>(i * (kb - 1)),
                                     a_list.begin() + static_cast<std::ptrdiff_t>((i + 1) * (kb - 1) + 1));
        if (!check_ab_set(h, b_list[i], set))
            return false;
    }
    return true;
}

bool read_cycle(const Hypergraph& h, const std::vector<std::size_t>& layout, int s, std::vector<std::size_t>& a_list,
                std::vector<std::size_t>& b_list, std::size_t& end)
{
    const std::size_t kb = static_cast<std::size_t>(h.k_b());
    std::size_t pos = 0;
    if (layout.empty())
        return false;
    a_list.push_back(layout[pos++]);
    for (int i = 0; i < s; ++i) {
        const std::size_t fresh = i + 1 < s ? kb - 1 : kb - 2;
        if (pos + 1 + fresh > layout.size())
            return false;
        b_list.push_back(layout[pos++]);
        for (std::size_t k = 0; k < fresh; ++k)
            a_list.push_back(layout[pos++]);
    }
    end = pos;
    return true;
}

bool cycle_sets_ok(const Hypergraph& h, const std::vector<std::size_t>& a_list, const std::vector<std::size_t>& b_list,
                   int variant)
{
    const std::size_t kb = static_cast<std::size_t>(h.k_b());
    const std::size_t s = b_list.size();
    if (s < 2 || a_list.size() != s * (kb - 1) || !pairwise_disjoint(h, a_list))
        return false;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = i + 1; j < s; ++j) {
            if (b_list[i] == b_list[j])
                return false;
            const std::size_t c = intersection_size(h.local_edge(b_list[i]), h.local_edge(b_list[j]));
            if (i == 0 && j == s - 1) {
                if (c > 1 || (variant >= 0 && static_cast<int>(c) != variant))
                    return false;
            } else if (c != 0) {
                return false;
            }
        }
    for (std::size_t i = 0; i + 1 < s; ++i) {
        std::vector<std::size_t> set(a_list.begin() + static_cast<std::ptrdiff_t>(i * (kb - 1)),
                                     a_list.begin() + static_cast<std::ptrdiff_t>((i + 1) * (kb - 1) + 1));
        if (!check_ab_set(h, b_list[i], set))
            return false;
    }
    std::vector<std::size_t> last(a_list.begin() + static_cast<std::ptrdiff_t>((s - 1) * (kb - 1)), a_list.end());
    last.push_back(a_list[0]);
    return check_ab_set(h, b_list[s - 1], last);
}

}  // namespace

bool check_ab_path(const Hypergraph& h, const std::vector<std::size_t>& layout, int t)
{
    if (t < 1 || layout.empty())
        return false;
    std::vector<std::size_t> a_list, b_list;
    if (!read_path(h, layout, 1, layout[0], t, a_list, b_list))
        return false;
    return path_sets_ok(h, a_list, b_list);
}

bool check_ab_cycle(const Hypergraph& h, const std::vector<std::size_t>& layout, int s, int variant)
{
    std::vector<std::size_t> a_list, b_list;
    std::size_t end = 0;
    if (!read_cycle(h, layout, s, a_list, b_list, end) || end != layout.size())
        return false;
    return cycle_sets_ok(h, a_list, b_list, variant);
}

void split_layout(const Hypergraph& h, const std::vector<std::size_t>& layout, int s, int t, int anchor,
                  std::vector<std::size_t>& a_edges, std::vector<std::size_t>& b_edges)
{
    a_edges.clear();
    b_edges.clear();
    if (s >= 2) {
        std::size_t end = 0;
        read_cycle(h, layout, s, a_edges, b_edges, end);
        if (t >= 1 && anchor >= 0 && static_cast<std::size_t>(anchor) < a_edges.size()) {
            std::vector<std::size_t> ta, tb;
            read_path(h, layout, end, a_edges[static_cast<std::size_t>(anchor)], t, ta, tb);
            a_edges.insert(a_edges.end(), ta.begin() + 1, ta.end());
            b_edges.insert(b_edges.end(), tb.begin(), tb.end());
        }
    } else if (!layout.empty()) {
        read_path(h, layout, 1, layout[0], t, a_edges, b_edges);
    }
}

bool check_ab_cycle_path(const Hypergraph& h, const std::vector<std::size_t>& layout, int s, int t, int anchor)
{
    if (s == 1 || s < 0 || t < 0 || (s == 0 && t == 0))
        return false;
    if (s == 0)
        return check_ab_path(h, layout, t);
    std::vector<std::size_t> ca, cb;
    std::size_t end = 0;
    if (!read_cycle(h, layout, s, ca, cb, end) || !cycle_sets_ok(h, ca, cb, -1))
        return false;
    if (t == 0)
        return end == layout.size();
    if (anchor < 0 || static_cast<std::size_t>(anchor) >= ca.size())
        return false;
    const std::size_t aj = ca[static_cast<std::size_t>(anchor)];
    std::vector<std::size_t> ta, tb;
    if (!read_path(h, layout, end, aj, t, ta, tb) || !path_sets_ok(h, ta, tb))
        return false;
    // V(S) ∩ V(T) = a_j and E(S) ∩ E(T) = {a_j}
    std::set<int> vs, vt;
    std::set<std::size_t> es, et;
    for (auto e : ca) {
        es.insert(e);
        for (int v : h.local_edge(e))
            vs.insert(v);
    }
    for (auto e : cb) {
        es.insert(e);
        for (int v : h.local_edge(e))
            vs.insert(v);
    }
    for (auto e : ta) {
        et.insert(e);
        for (int v : h.local_edge(e))
            vt.insert(v);
    }
    for (auto e : tb) {
        et.insert(e);
        for (int v : h.local_edge(e))
            vt.insert(v);
    }
    std::vector<int> common;
    std::set_intersection(vs.begin(), vs.end(), vt.begin(), vt.end(), std::back_inserter(common));
    if (common != h.local_edge(aj))
        return false;
    std::vector<std::size_t> shared;
    std::set_intersection(es.begin(), es.end(), et.begin(), et.end(), std::back_inserter(shared));
    if (shared != std::vector<std::size_t>{aj})
        return false;
    // a_j ∩ b_1(T) lies in no B-edge of S
    for (int v : h.local_edge(tb[0])) {
        const auto& la = h.local_edge(aj);
        if (!std::binary_search(la.begin(), la.end(), v))
            continue;
        for (auto b : cb) {
            const auto& lb = h.local_edge(b);
            if (std::binary_search(lb.begin(), lb.end(), v))
                return false;
        }
    }
    return true;
}

}  // namespace rado::detail
