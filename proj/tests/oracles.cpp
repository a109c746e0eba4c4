#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace oracle {

using rado::Integer;

std::size_t bareiss_rank(const Rows& rows)
{
    if (rows.empty())
        return 0;
    std::vector<std::vector<Integer>> a;
    for (const auto& r : rows)
        a.emplace_back(r.begin(), r.end());
    const std::size_t m = a.size();
    const std::size_t n = a[0].size();
    std::size_t rank = 0;
    Integer prev = 1;
    for (std::size_t c = 0; c < n && rank < m; ++c) {
        std::size_t piv = rank;
        while (piv < m && a[piv][c] == 0)
            ++piv;
        if (piv == m)
            continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < m; ++r) {
            for (std::size_t j = c + 1; j < n; ++j)
                a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        ++rank;
    }
    return rank;
}

std::set<std::vector<long long>> naive_solutions(const Rows& rows, const std::vector<long long>& rhs,
                                                 const std::vector<long long>& set)
{
    std::set<std::vector<long long>> out;
    if (rows.empty() || set.empty())
        return out;
    const std::size_t k = rows[0].size();
    std::vector<std::size_t> idx(k, 0);
    std::vector<long long> x(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i)
            x[i] = set[idx[i]];
        bool ok = true;
        for (std::size_t i = 0; i < k && ok; ++i)
            for (std::size_t j = i + 1; j < k && ok; ++j)
                ok = x[i] != x[j];
        for (std::size_t r = 0; r < rows.size() && ok; ++r) {
            long long sum = 0;
            for (std::size_t i = 0; i < k; ++i)
                sum += rows[r][i] * x[i];
            ok = sum == rhs[r];
        }
        if (ok)
            out.insert(x);
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < set.size())
                break;
            idx[pos] = 0;
            if (pos == 0)
                return out;
        }
    }
}

bool brute_force_rado(const rado::Hypergraph& h)
{
    std::vector<long long> active;
    for (const auto& e : h.edges())
        active.insert(active.end(), e.vertices.begin(), e.vertices.end());
    std::sort(active.begin(), active.end());
    active.erase(std::unique(active.begin(), active.end()), active.end());
    std::vector<std::uint32_t> a_masks;
    std::vector<std::uint32_t> b_masks;
    for (const auto& e : h.edges()) {
        std::uint32_t mask = 0;
        for (long long v : e.vertices)
            mask |= 1u << (std::lower_bound(active.begin(), active.end(), v) - active.begin());
        if (e.is_a())
            a_masks.push_back(mask);
        if (e.is_b())
            b_masks.push_back(mask);
    }
    const std::uint32_t limit = 1u << active.size();
    for (std::uint32_t red = 0; red < limit; ++red) {
        bool good = true;
        for (std::uint32_t m : a_masks)
            if ((red & m) == m) {
                good = false;
                break;
            }
        for (std::size_t i = 0; good && i < b_masks.size(); ++i)
            if ((red & b_masks[i]) == 0)
                good = false;
        if (good)
            return false;
    }
    return true;
}

bool order_is_valid(const std::vector<std::vector<long long>>& edges, const std::vector<std::size_t>& order)
{
    if (order.size() != edges.size())
        return false;
    std::set<long long> seen;
    std::set<std::size_t> used;
    for (std::size_t e : order) {
        if (e >= edges.size() || !used.insert(e).second)
            return false;
        bool fresh = false;
        for (long long v : edges[e])
            fresh = fresh || !seen.count(v);
        if (!fresh)
            return false;
        seen.insert(edges[e].begin(), edges[e].end());
    }
    return true;
}

bool has_valid_order_brute(const std::vector<std::vector<long long>>& edges)
{
    std::vector<std::size_t> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    do {
        if (order_is_valid(edges, order))
            return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

namespace {

std::size_t meet(const std::vector<long long>& a, const std::vector<long long>& b)
{
    std::size_t c = 0;
    for (long long v : a)
        c += std::binary_search(b.begin(), b.end(), v) ? 1 : 0;
    return c;
}

std::size_t meet3(const std::vector<long long>& a, const std::vector<long long>& b, const std::vector<long long>& c)
{
    std::size_t n = 0;
    for (long long v : a)
        n += std::binary_search(b.begin(), b.end(), v) && std::binary_search(c.begin(), c.end(), v) ? 1 : 0;
    return n;
}

// Calls fn on every r-subset of {0..n-1}.
void subsets(std::size_t n, std::size_t r, const std::function<void(const EdgeSet&)>& fn)
{
    if (r > n)
        return;
    EdgeSet s(r);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        fn(s);
        std::size_t i = r;
        while (i > 0 && s[i - 1] == n - r + i - 1)
            --i;
        if (i == 0)
            return;
        ++s[i - 1];
        for (std::size_t j = i; j < r; ++j)
            s[j] = s[j - 1] + 1;
    }
}

// True when some ordering of `set` satisfies `pred`.
bool some_order(const EdgeSet& set, const std::function<bool(const EdgeSet&)>& pred)
{
    EdgeSet perm = set;
    do {
        if (pred(perm))
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace

std::set<EdgeSet> brute_bad_triples(const rado::Hypergraph& h, int size, int s)
{
    const auto& E = h.edges();
    std::set<EdgeSet> out;
    subsets(E.size(), 3, [&](const EdgeSet& set) {
        for (std::size_t e : set)
            if (size != 0 && static_cast<int>(E[e].vertices.size()) != size)
                return;
        const bool hit = some_order(set, [&](const EdgeSet& o) {
            const auto& e0 = E[o[0]].vertices;
            const auto& e1 = E[o[1]].vertices;
            const auto& e2 = E[o[2]].vertices;
            const std::size_t m12 = meet(e1, e2);
            const bool m_ok = s == -1 ? m12 >= 2 : m12 == static_cast<std::size_t>(s);
            return meet(e0, e1) == 1 && meet(e0, e2) == 1 && m_ok && meet3(e0, e1, e2) == 0;
        });
        if (hit)
            out.insert(set);
    });
    return out;
}

std::set<EdgeSet> brute_pasch(const rado::Hypergraph& h)
{
    const auto& E = h.edges();
    std::set<EdgeSet> out;
    subsets(E.size(), 4, [&](const EdgeSet& set) {
        for (std::size_t e : set)
            if (E[e].vertices.size() != 3)
                return;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) {
                if (meet(E[set[i]].vertices, E[set[j]].vertices) != 1)
                    return;
                for (std::size_t k = j + 1; k < 4; ++k)
                    if (meet3(E[set[i]].vertices, E[set[j]].vertices, E[set[k]].vertices) != 0)
                        return;
            }
        out.insert(set);
    });
    return out;
}

std::set<EdgeSet> brute_tight_paths(const rado::Hypergraph& h)
{
    const auto& E = h.edges();
    std::set<EdgeSet> out;
    subsets(E.size(), 3, [&](const EdgeSet& set) {
        for (std::size_t e : set)
            if (E[e].vertices.size() != 3)
                return;
        const bool hit = some_order(set, [&](const EdgeSet& o) {
            return meet(E[o[0]].vertices, E[o[1]].vertices) == 2 && meet(E[o[0]].vertices, E[o[2]].vertices) == 1 &&
                   meet(E[o[1]].vertices, E[o[2]].vertices) == 2;
        });
        if (hit)
            out.insert(set);
    });
    return out;
}

std::set<EdgeSet> brute_ab_sets(const rado::Hypergraph& h)
{
    const auto& E = h.edges();
    const std::size_t kb = static_cast<std::size_t>(h.k_b());
    const std::size_t ka = static_cast<std::size_t>(h.k_a());
    std::set<EdgeSet> out;
    subsets(E.size(), kb + 1, [&](const EdgeSet& set) {
        for (std::size_t bi = 0; bi < set.size(); ++bi) {
            const auto& b = E[set[bi]];
            if (!b.is_b() || b.vertices.size() != kb)
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < set.size() && ok; ++i) {
                if (i == bi)
                    continue;
                const auto& a = E[set[i]];
                ok = a.is_a() && a.vertices.size() == ka && meet(a.vertices, b.vertices) == 1;
                for (std::size_t j = i + 1; j < set.size() && ok; ++j)
                    if (j != bi)
                        ok = meet(a.vertices, E[set[j]].vertices) == 0;
            }
            if (ok) {
                out.insert(set);
                return;
            }
        }
    });
    return out;
}

std::set<EdgeSet> brute_a_cycles(const rado::Hypergraph& h, int s)
{
    const auto& E = h.edges();
    const std::size_t n = static_cast<std::size_t>(s);
    std::set<EdgeSet> out;
    subsets(E.size(), n, [&](const EdgeSet& set) {
        for (std::size_t e : set)
            if (!E[e].is_a() || static_cast<int>(E[e].vertices.size()) != h.k_a())
                return;
        const bool hit = some_order(set, [&](const EdgeSet& o) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
                    if (meet(E[o[i]].vertices, E[o[j]].vertices) != (adjacent ? 1u : 0u))
                        return false;
                }
            return n != 3 || meet3(E[o[0]].vertices, E[o[1]].vertices, E[o[2]].vertices) == 0;
        });
        if (hit)
            out.insert(set);
    });
    return out;
}

rado::Rational subset_weighted(const std::vector<std::uint32_t>& copy_masks, int n, const rado::Rational& p)
{
    std::vector<rado::Rational> weight(static_cast<std::size_t>(n) + 1);
    for (int s = 0; s <= n; ++s)
        weight[static_cast<std::size_t>(s)] =
            rado::pow(p, static_cast<unsigned>(s)) * rado::pow(1 - p, static_cast<unsigned>(n - s));
    std::vector<long long> per_size(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint32_t set = 0; set < (1u << n); ++set) {
        long long inside = 0;
        for (std::uint32_t m : copy_masks)
            inside += (m & set) == m ? 1 : 0;
        per_size[static_cast<std::size_t>(__builtin_popcount(set))] += inside;
    }
    rado::Rational total = 0;
    for (int s = 0; s <= n; ++s)
        total += weight[static_cast<std::size_t>(s)] * per_size[static_cast<std::size_t>(s)];
    return total;
}

std::uint32_t vertex_mask(const rado::Hypergraph& h, const EdgeSet& edges)
{
    std::uint32_t mask = 0;
    for (std::size_t e : edges)
        for (long long v : h.edges()[e].vertices)
            mask |= 1u << (v - 1);
    return mask;
}

std::vector<long long> random_subset(std::mt19937_64& rng, int universe, int size)
{
    std::vector<long long> all(static_cast<std::size_t>(universe));
    std::iota(all.begin(), all.end(), 1);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(size));
    std::sort(all.begin(), all.end());
    return all;
}

namespace {

using Layout = std::vector<std::vector<int>>;  // edges over abstract points 0..

Layout cycle_layout(int s, int k)
{
    Layout out;
    int next = s;
    for (int i = 0; i < s; ++i) {
        std::vector<int> e{i, (i + 1) % s};
        for (int j = 2; j < k; ++j)
            e.push_back(next++);
        out.push_back(e);
    }
    return out;
}

Layout ab_set_layout(int ka, int kb)
{
    Layout out;
    std::vector<int> b;
    for (int i = 0; i < kb; ++i)
        b.push_back(i);
    out.push_back(b);
    int next = kb;
    for (int i = 0; i < kb; ++i) {
        std::vector<int> a{i};
        for (int j = 1; j < ka; ++j)
            a.push_back(next++);
        out.push_back(a);
    }
    return out;
}

}  // namespace

rado::Hypergraph random_hypergraph(std::mt19937_64& rng, const CorpusOptions& o)
{
    using rado::Edge;
    std::vector<Edge> edges;
    const bool same = o.k_a == o.k_b;
    auto random_family = [&]() -> std::uint8_t {
        if (same)
            return static_cast<std::uint8_t>(1 + rng() % 3);
        return rng() % 2 ? rado::kFamilyA : rado::kFamilyB;
    };
    int universe = o.vertices;

    if (o.plant) {
        Layout layout;
        std::vector<std::uint8_t> fams;
        const int which = static_cast<int>(rng() % 5);
        if (which == 0) {
            layout = cycle_layout(3 + static_cast<int>(rng() % 3), o.k_a);
            fams.assign(layout.size(), rado::kFamilyA);
        } else if (which == 1) {
            layout = ab_set_layout(o.k_a, o.k_b);
            fams.assign(layout.size(), rado::kFamilyA);
            fams[0] = rado::kFamilyB;
        } else if (o.k_a == 3) {
            if (which == 2)
                layout = {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}};
            else if (which == 3)
                layout = {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}};
            else
                layout = {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}};
            for (std::size_t i = 0; i < layout.size(); ++i)
                fams.push_back(same ? random_family() : rado::kFamilyA);
        }
        int points = 0;
        for (const auto& e : layout)
            for (int v : e)
                points = std::max(points, v + 1);
        universe = std::max(universe, points);
        std::vector<long long> label = random_subset(rng, universe, universe);
        std::shuffle(label.begin(), label.end(), rng);
        for (std::size_t i = 0; i < layout.size(); ++i) {
            Edge e;
            for (int v : layout[i])
                e.vertices.push_back(label[static_cast<std::size_t>(v)]);
            std::sort(e.vertices.begin(), e.vertices.end());
            e.families = fams[i];
            edges.push_back(e);
        }
    }
    const std::size_t target = std::min<std::size_t>(o.max_edges, edges.size() + 1 + rng() % o.max_edges);
    while (edges.size() < target) {
        Edge e;
        e.families = random_family();
        const int size = e.families == rado::kFamilyB ? o.k_b : o.k_a;
        e.vertices = random_subset(rng, universe, size);
        edges.push_back(e);
    }
    std::vector<long long> vertices(static_cast<std::size_t>(universe));
    std::iota(vertices.begin(), vertices.end(), 1);
    return rado::Hypergraph::build(vertices, edges, o.k_a, o.k_b);
}

}  // namespace oracle
