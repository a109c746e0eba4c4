#include "patterns.hpp"

#include <algorithm>

namespace rado::detail {

void Template::triple(int i, int j, int k, int lo, int hi)
{
    int v[3] = {i, j, k};
    std::sort(v, v + 3);
    triples.push_back({v[0], v[1], v[2], lo, hi});
}

std::size_t intersection_size(const std::vector<int>& a, const std::vector<int>& b)
{
    std::size_t n = 0;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else {
            ++n;
            ++i;
            ++j;
        }
    }
    return n;
}

namespace {

bool in_range(std::size_t v, int lo, int hi)
{
    return static_cast<int>(v) >= lo && (hi == kAny || static_cast<int>(v) <= hi);
}

std::size_t triple_size(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& c)
{
    std::size_t n = 0;
    for (int x : a)
        if (std::binary_search(b.begin(), b.end(), x) && std::binary_search(c.begin(), c.end(), x))
            ++n;
    return n;
}

bool slot_ok(const Hypergraph& h, const Slot& s, std::size_t e)
{
    const Edge& ed = h.edges()[e];
    if ((ed.families & s.family) == 0)
        return false;
    return s.size == 0 || static_cast<int>(ed.vertices.size()) == s.size;
}

bool union_ok(const Hypergraph& h, const UnionRule& u, const std::vector<std::size_t>& edges)
{
    const auto& own = h.local_edge(edges[static_cast<std::size_t>(u.slot)]);
    std::size_t hit = 0;
    for (int x : own) {
        for (int o : u.others) {
            const auto& other = h.local_edge(edges[static_cast<std::size_t>(o)]);
            if (std::binary_search(other.begin(), other.end(), x)) {
                ++hit;
                break;
            }
        }
    }
    if (static_cast<int>(hit) < u.lo)
        return false;
    return u.hi_gap < 0 || static_cast<int>(hit) <= static_cast<int>(own.size()) - u.hi_gap;
}

struct Compiled {
    std::vector<std::vector<PairRule>> pairs;     // by later slot
    std::vector<std::vector<TripleRule>> triples; // by last slot
    std::vector<std::vector<OrderRule>> orders;   // by later slot
    std::vector<std::vector<UnionRule>> unions;   // by max slot involved
};

Compiled compile(const Template& t)
{
    const std::size_t n = t.slots.size();
    Compiled c;
    c.pairs.resize(n);
    c.triples.resize(n);
    c.orders.resize(n);
    c.unions.resize(n);
    for (const auto& p : t.pairs)
        c.pairs[static_cast<std::size_t>(p.j)].push_back(p);
    for (const auto& p : t.triples)
        c.triples[static_cast<std::size_t>(p.k)].push_back(p);
    for (const auto& o : t.orders)
        c.orders[static_cast<std::size_t>(std::max(o.i, o.j))].push_back(o);
    for (const auto& u : t.unions) {
        int last = u.slot;
        for (int o : u.others)
            last = std::max(last, o);
        c.unions[static_cast<std::size_t>(last)].push_back(u);
    }
    return c;
}

bool check_slot(const Hypergraph& h, const Template& t, const Compiled& c, const std::vector<std::size_t>& edges,
                std::size_t i)
{
    const std::size_t e = edges[i];
    if (!slot_ok(h, t.slots[i], e))
        return false;
    const Slot& slot = t.slots[i];
    if (slot.pin >= 0) {
        const auto& la = h.local_edge(edges[static_cast<std::size_t>(slot.anchor)]);
        if (static_cast<std::size_t>(slot.pin) >= la.size())
            return false;
        const auto& own = h.local_edge(e);
        if (!std::binary_search(own.begin(), own.end(), la[static_cast<std::size_t>(slot.pin)]))
            return false;
    }
    for (std::size_t j = 0; j < i; ++j)
        if (edges[j] == e)
            return false;
    for (const auto& o : c.orders[i])
        if (!(edges[static_cast<std::size_t>(o.i)] < edges[static_cast<std::size_t>(o.j)]))
            return false;
    const auto& le = h.local_edge(e);
    for (const auto& p : c.pairs[i])
        if (!in_range(intersection_size(h.local_edge(edges[static_cast<std::size_t>(p.i)]), le), p.lo, p.hi))
            return false;
    for (const auto& p : c.triples[i])
        if (!in_range(triple_size(h.local_edge(edges[static_cast<std::size_t>(p.i)]),
                                  h.local_edge(edges[static_cast<std::size_t>(p.j)]), le),
                      p.lo, p.hi))
            return false;
    for (const auto& u : c.unions[i])
        if (!union_ok(h, u, edges))
            return false;
    return true;
}

}  // namespace

bool satisfies(const Hypergraph& h, const Template& t, const std::vector<std::size_t>& edges)
{
    if (edges.size() != t.slots.size())
        return false;
    for (std::size_t e : edges)
        if (e >= h.edge_count())
            return false;
    const Compiled c = compile(t);
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (!check_slot(h, t, c, edges, i))
            return false;
    return !t.extra || t.extra(h, edges);
}

namespace {

struct Budget {
    std::size_t limit = 0;
    std::size_t used = 0;
    bool exhausted = false;
};

thread_local Budget budget;

}  // namespace

BudgetScope::BudgetScope(std::size_t limit)
    : saved_limit_(budget.limit), saved_used_(budget.used), saved_exhausted_(budget.exhausted)
{
    budget = {limit, 0, false};
}

BudgetScope::~BudgetScope() { budget = {saved_limit_, saved_used_, saved_exhausted_}; }

bool BudgetScope::exhausted() const { return budget.exhausted; }

bool node_tick()
{
    if (budget.limit == 0)
        return true;
    if (budget.exhausted || ++budget.used > budget.limit) {
        budget.exhausted = true;
        return false;
    }
    return true;
}

void match(const Hypergraph& h, const Template& t, const std::vector<std::size_t>& seed,
           const std::function<bool(const std::vector<std::size_t>&)>& visit)
{
    const std::size_t n = t.slots.size();
    if (n == 0 || h.edge_count() == 0)
        return;
    const Compiled c = compile(t);
    std::vector<std::size_t> edges(n, 0);
    for (std::size_t i = 0; i < seed.size(); ++i) {
        edges[i] = seed[i];
        if (!check_slot(h, t, c, edges, i))
            return;
    }
    std::vector<unsigned> stamp(h.edge_count(), 0);
    unsigned clock = 0;
    bool stop = false;

    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (stop)
            return;
        if (!node_tick()) {
            stop = true;
            return;
        }
        if (i == n) {
            if (t.extra && !t.extra(h, edges))
                return;
            if (!visit(edges))
                stop = true;
            return;
        }
        const int anchor = t.slots[i].anchor;
        if (anchor < 0) {
            for (std::size_t e = 0; e < h.edge_count() && !stop; ++e) {
                edges[i] = e;
                if (check_slot(h, t, c, edges, i))
                    self(self, i + 1);
            }
            return;
        }
        std::vector<std::size_t> cand;
        ++clock;
        const auto& la = h.local_edge(edges[static_cast<std::size_t>(anchor)]);
        const int pin = t.slots[i].pin;
        if (pin >= 0 && static_cast<std::size_t>(pin) >= la.size())
            return;
        for (std::size_t k = 0; k < la.size(); ++k) {
            if (pin >= 0 && static_cast<int>(k) != pin)
                continue;
            for (int e : h.incident(la[k]))
                if (stamp[static_cast<std::size_t>(e)] != clock) {
                    stamp[static_cast<std::size_t>(e)] = clock;
                    cand.push_back(static_cast<std::size_t>(e));
                }
        }
        std::sort(cand.begin(), cand.end());
        for (std::size_t e : cand) {
            if (stop)
                return;
            edges[i] = e;
            if (check_slot(h, t, c, edges, i))
                self(self, i + 1);
        }
    };
    rec(rec, seed.size());
}

}  // namespace rado::detail
