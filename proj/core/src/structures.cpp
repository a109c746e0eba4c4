#include "rado/structures.hpp"

#include "chains.hpp"
#include "patterns.hpp"
#include "rado/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

namespace rado {

using detail::intersection_size;
using detail::kAny;
using detail::Template;

namespace {

const std::vector<std::pair<PatternTag, const char*>>& tag_table()
{
    static const std::vector<std::pair<PatternTag, const char*>> table = {
        {PatternTag::A_PATH, "A_PATH"},
        {PatternTag::A_CYCLE, "A_CYCLE"},
        {PatternTag::A_TREE, "A_TREE"},
        {PatternTag::AB_SET, "AB_SET"},
        {PatternTag::AB_PATH, "AB_PATH"},
        {PatternTag::AB_CYCLE, "AB_CYCLE"},
        {PatternTag::AB_CYCLE_PATH, "AB_CYCLE_PATH"},
        {PatternTag::L22_I, "L22_i"},
        {PatternTag::L22_II, "L22_ii"},
        {PatternTag::L22_III, "L22_iii"},
        {PatternTag::L22_IV, "L22_iv"},
        {PatternTag::L22_V, "L22_v"},
        {PatternTag::L22_VI, "L22_vi"},
        {PatternTag::L22_VII, "L22_vii"},
        {PatternTag::L22_VIII, "L22_viii"},
        {PatternTag::L22_IX, "L22_ix"},
        {PatternTag::SIMPLE_PATH, "SIMPLE_PATH"},
        {PatternTag::FAIRLY_SIMPLE_CYCLE, "FAIRLY_SIMPLE_CYCLE"},
        {PatternTag::SIMPLE_CYCLE, "SIMPLE_CYCLE"},
        {PatternTag::SPOILED_SIMPLE_PATH, "SPOILED_SIMPLE_PATH"},
        {PatternTag::HANDLE, "HANDLE"},
        {PatternTag::BAD_TRIPLE, "BAD_TRIPLE"},
        {PatternTag::PASCH, "PASCH"},
        {PatternTag::FAULTY_SIMPLE_PATH, "FAULTY_SIMPLE_PATH"},
        {PatternTag::BAD_TIGHT_PATH, "BAD_TIGHT_PATH"},
    };
    return table;
}

std::string upper(std::string s)
{
    for (char& c : s)
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return s;
}

bool is_l33(PatternTag t)
{
    switch (t) {
    case PatternTag::SIMPLE_PATH:
    case PatternTag::FAIRLY_SIMPLE_CYCLE:
    case PatternTag::SIMPLE_CYCLE:
    case PatternTag::SPOILED_SIMPLE_PATH:
    case PatternTag::HANDLE:
    case PatternTag::BAD_TRIPLE:
    case PatternTag::PASCH:
    case PatternTag::FAULTY_SIMPLE_PATH:
    case PatternTag::BAD_TIGHT_PATH: return true;
    default: return false;
    }
}

// Which kinds take t as their primary (first positional) parameter.
bool t_primary(PatternTag t)
{
    switch (t) {
    case PatternTag::AB_PATH:
    case PatternTag::AB_CYCLE:
    case PatternTag::SIMPLE_PATH:
    case PatternTag::FAIRLY_SIMPLE_CYCLE:
    case PatternTag::SIMPLE_CYCLE:
    case PatternTag::SPOILED_SIMPLE_PATH:
    case PatternTag::HANDLE:
    case PatternTag::FAULTY_SIMPLE_PATH: return true;
    default: return false;
    }
}

bool fixed_size_three(PatternTag t)
{
    return t == PatternTag::PASCH || t == PatternTag::FAULTY_SIMPLE_PATH || t == PatternTag::BAD_TIGHT_PATH;
}

}  // namespace

std::string to_string(PatternTag tag)
{
    for (const auto& [t, name] : tag_table())
        if (t == tag)
            return name;
    return "UNKNOWN";
}

std::optional<PatternTag> parse_pattern_tag(const std::string& name)
{
    const std::string u = upper(name);
    for (const auto& [t, n] : tag_table())
        if (upper(n) == u)
            return t;
    return std::nullopt;
}

const std::vector<PatternTag>& all_pattern_tags()
{
    static const std::vector<PatternTag> tags = [] {
        std::vector<PatternTag> v;
        for (const auto& entry : tag_table())
            v.push_back(entry.first);
        return v;
    }();
    return tags;
}

void PatternKind::validate() const
{
    auto fail = [&](const std::string& why) { throw PreconditionError(to_string(tag) + ": " + why); };
    auto at_least = [&](int v, int lo, const char* name) {
        if (v != -1 && v < lo)
            fail(std::string(name) + " must be at least " + std::to_string(lo));
    };
    if (size < 0)
        fail("size must be non-negative");
    if (size != 0 && !is_l33(tag))
        fail("size applies only to the family-agnostic kinds");
    if (size != 0 && size != 3 && fixed_size_three(tag))
        fail("edges have size 3 by definition");
    if (variant != -1 && variant != 0 && variant != 1)
        fail("variant must be 0 or 1");
    if (variant != -1 && tag != PatternTag::AB_CYCLE && tag != PatternTag::AB_CYCLE_PATH)
        fail("variant applies only to AB-cycles");
    switch (tag) {
    case PatternTag::A_PATH:
    case PatternTag::A_TREE:
        at_least(s, 1, "s");
        break;
    case PatternTag::A_CYCLE: at_least(s, 3, "s"); break;
    case PatternTag::AB_PATH:
    case PatternTag::SIMPLE_PATH:
    case PatternTag::SPOILED_SIMPLE_PATH: at_least(t, 1, "t"); break;
    case PatternTag::AB_CYCLE:
    case PatternTag::SIMPLE_CYCLE: at_least(t, 2, "t"); break;
    case PatternTag::FAIRLY_SIMPLE_CYCLE:
    case PatternTag::HANDLE:
        at_least(t, 2, "t");
        at_least(s, 1, "s");
        break;
    case PatternTag::FAULTY_SIMPLE_PATH: at_least(t, 3, "t"); break;
    case PatternTag::BAD_TRIPLE: at_least(s, 2, "s"); break;
    case PatternTag::AB_CYCLE_PATH:
        if (s == 1 || s < -1)
            fail("s must be 0 or at least 2");
        at_least(t, 0, "t");
        if (s == 0 && t == 0)
            fail("(s,t) = (0,0) is not a cycle-path");
        break;
    default: break;
    }
    // Parameters a kind does not use must stay unset.
    const bool uses_s = tag == PatternTag::A_PATH || tag == PatternTag::A_TREE || tag == PatternTag::A_CYCLE ||
                        tag == PatternTag::FAIRLY_SIMPLE_CYCLE || tag == PatternTag::HANDLE ||
                        tag == PatternTag::BAD_TRIPLE || tag == PatternTag::AB_CYCLE_PATH;
    const bool uses_t = t_primary(tag) || tag == PatternTag::AB_CYCLE_PATH;
    if (s != -1 && !uses_s)
        fail("parameter s is not used by this kind");
    if (t != -1 && !uses_t)
        fail("parameter t is not used by this kind");
}

std::string PatternKind::label() const
{
    std::vector<std::string> parts;
    if (s != -1)
        parts.push_back("s=" + std::to_string(s));
    if (t != -1)
        parts.push_back("t=" + std::to_string(t));
    if (variant != -1)
        parts.push_back("variant=" + std::to_string(variant));
    if (size != 0)
        parts.push_back("size=" + std::to_string(size));
    std::string out = to_string(tag);
    if (!parts.empty()) {
        out += "(";
        for (std::size_t i = 0; i < parts.size(); ++i)
            out += (i ? "," : "") + parts[i];
        out += ")";
    }
    return out;
}

PatternKind parse_pattern_kind(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    const auto open = s.find('(');
    const std::string name = s.substr(0, open);
    const auto tag = parse_pattern_tag(name);
    if (!tag)
        throw ParseError(0, "unknown pattern kind '" + name + "'");
    PatternKind k(*tag);
    if (open == std::string::npos)
        return (k.validate(), k);
    if (s.back() != ')')
        throw ParseError(s.size(), "expected ')'");
    const std::string body = s.substr(open + 1, s.size() - open - 2);
    std::vector<std::string> args;
    std::stringstream ss(body);
    for (std::string a; std::getline(ss, a, ',');)
        args.push_back(a);
    std::size_t pos = open + 1;
    int positional = 0;
    for (const auto& a : args) {
        std::string key;
        std::string value = a;
        if (const auto eq = a.find('='); eq != std::string::npos) {
            key = a.substr(0, eq);
            value = a.substr(eq + 1);
        } else {
            if (*tag == PatternTag::AB_CYCLE_PATH)
                key = positional == 0 ? "s" : "t";
            else
                key = t_primary(*tag) ? "t" : "s";
            if (positional > (*tag == PatternTag::AB_CYCLE_PATH ? 1 : 0))
                throw ParseError(pos, "too many positional parameters");
            ++positional;
        }
        int v = 0;
        try {
            std::size_t used = 0;
            v = std::stoi(value, &used);
            if (used != value.size())
                throw ParseError(pos, "bad integer '" + value + "'");
        } catch (const std::logic_error&) {
            throw ParseError(pos, "bad integer '" + value + "'");
        }
        if (key == "s")
            k.s = v;
        else if (key == "t")
            k.t = v;
        else if (key == "variant")
            k.variant = v;
        else if (key == "size")
            k.size = v;
        else
            throw ParseError(pos, "unknown parameter '" + key + "'");
        pos += a.size() + 1;
    }
    k.validate();
    return k;
}

int default_cap(long long n)
{
    if (n <= 1)
        return 1;
    return std::max(1, static_cast<int>(std::ceil(std::log(static_cast<double>(n)) - 1e-12)));
}

std::optional<EdgeOrder> valid_edge_order(const std::vector<std::vector<long long>>& edges)
{
    std::vector<std::vector<long long>> sorted = edges;
    for (auto& e : sorted) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
    std::map<long long, int> degree;
    for (const auto& e : sorted)
        for (long long v : e)
            ++degree[v];
    std::vector<char> alive(sorted.size(), 1);
    std::vector<std::size_t> rev;
    std::vector<long long> rev_new;
    for (std::size_t round = 0; round < sorted.size(); ++round) {
        std::optional<std::size_t> pick;
        long long witness = 0;
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            if (!alive[i])
                continue;
            for (long long v : sorted[i])
                if (degree[v] == 1) {
                    if (!pick || sorted[i] < sorted[*pick]) {
                        pick = i;
                        witness = v;
                    }
                    break;
                }
        }
        if (!pick)
            return std::nullopt;
        alive[*pick] = 0;
        for (long long v : sorted[*pick])
            --degree[v];
        rev.push_back(*pick);
        rev_new.push_back(witness);
    }
    EdgeOrder out;
    out.order.assign(rev.rbegin(), rev.rend());
    out.new_vertex.assign(rev_new.rbegin(), rev_new.rend());
    return out;
}

namespace {

using Emit = std::function<bool(StructureMatch)>;

std::size_t vertex_union(const Hypergraph& h, const std::vector<std::size_t>& edges, std::size_t* distinct = nullptr)
{
    std::set<int> vs;
    std::set<std::size_t> es(edges.begin(), edges.end());
    for (std::size_t e : edges)
        for (int v : h.local_edge(e))
            vs.insert(v);
    if (distinct)
        *distinct = es.size();
    return vs.size();
}

StructureMatch make_match(const Hypergraph& h, const PatternKind& kind, const MatchParams& params,
                          std::vector<std::size_t> edges)
{
    StructureMatch m;
    m.kind = kind;
    m.params = params;
    m.edges = std::move(edges);
    m.vertex_count = vertex_union(h, m.edges, &m.edge_count);
    return m;
}

int a_size(const Hypergraph& h) { return h.k_a(); }
int b_size(const Hypergraph& h) { return h.k_b(); }

// ---- templates --------------------------------------------------------------

Template a_path_template(const Hypergraph& h, int s)
{
    Template t;
    for (int i = 0; i < s; ++i)
        t.add(kFamilyA, a_size(h), i - 1);
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            t.pair(i, j, j == i + 1 ? 1 : 0, j == i + 1 ? 1 : 0);
    if (s >= 2)
        t.orders.push_back({0, s - 1});
    return t;
}

Template a_cycle_template(const Hypergraph& h, int s)
{
    Template t;
    for (int i = 0; i < s; ++i)
        t.add(kFamilyA, a_size(h), i - 1);
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) {
            const bool adjacent = j == i + 1 || (i == 0 && j == s - 1);
            t.pair(i, j, adjacent ? 1 : 0, adjacent ? 1 : 0);
        }
    if (s == 3)
        t.triple(0, 1, 2, 0, 0);
    for (int i = 1; i < s; ++i)
        t.orders.push_back({0, i});
    t.orders.push_back({1, s - 1});
    return t;
}

// b then a_1..a_kB with a_i pinned to the i-th vertex of b.
Template ab_set_template(const Hypergraph& h, bool disjoint)
{
    Template t;
    const int kb = b_size(h);
    t.add(kFamilyB, kb);
    for (int i = 0; i < kb; ++i) {
        const int a = t.add(kFamilyA, a_size(h), 0, i);
        t.exact(0, a, 1);
        for (int j = 1; j < a; ++j)
            t.pair(j, a, 0, disjoint ? 0 : 1);
    }
    return t;
}

// Berge-acyclic: some order adds each edge with at most one old vertex.
bool berge_forest(const Hypergraph& h, const std::vector<std::size_t>& edges)
{
    std::map<int, int> degree;
    for (std::size_t e : edges)
        for (int v : h.local_edge(e))
            ++degree[v];
    std::map<int, int> id;  // shared vertex -> union-find node
    const int ne = static_cast<int>(edges.size());
    for (const auto& [v, d] : degree)
        if (d >= 2)
            id[v] = ne + static_cast<int>(id.size());
    std::vector<int> parent(static_cast<std::size_t>(ne) + id.size());
    for (std::size_t i = 0; i < parent.size(); ++i)
        parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    for (int i = 0; i < ne; ++i)
        for (int v : h.local_edge(edges[static_cast<std::size_t>(i)])) {
            auto it = id.find(v);
            if (it == id.end())
                continue;
            const int a = find(i), b = find(it->second);
            if (a == b)
                return false;
            parent[static_cast<std::size_t>(a)] = b;
        }
    return true;
}

Template l22_v_template(const Hypergraph& h)
{
    Template t = ab_set_template(h, false);
    t.extra = [](const Hypergraph& hh, const std::vector<std::size_t>& e) {
        std::vector<std::size_t> as(e.begin() + 1, e.end());
        bool meet = false;
        for (std::size_t i = 0; i < as.size() && !meet; ++i)
            for (std::size_t j = i + 1; j < as.size() && !meet; ++j)
                meet = intersection_size(hh.local_edge(as[i]), hh.local_edge(as[j])) > 0;
        return meet && berge_forest(hh, as);
    };
    return t;
}

Template l22_vi_template(const Hypergraph& h)
{
    Template t = ab_set_template(h, true);
    const int e = t.add(kFamilyA, a_size(h), 0);
    t.pair(0, e, 2, kAny);
    for (int i = 1; i < e; ++i)
        t.pair(i, e, 0, 1);
    return t;
}

// AB-set (pinned) plus an A-path a_p, e_1..e_s, a_q meeting b only in v_p, v_q.
Template l22_vii_template(const Hypergraph& h, int p, int q, int s)
{
    Template t = ab_set_template(h, true);
    const int kb = b_size(h);
    const int ap = 1 + p, aq = 1 + q;
    const int first = kb + 1;
    for (int i = 0; i < s; ++i)
        t.add(kFamilyA, a_size(h), i == 0 ? ap : first + i - 1);
    for (int i = 0; i < s; ++i) {
        const int ei = first + i;
        for (int j = i + 1; j < s; ++j)
            t.pair(ei, first + j, j == i + 1 ? 1 : 0, j == i + 1 ? 1 : 0);
        const int with_p = i == 0 ? 1 : 0;
        const int with_q = i == s - 1 ? 1 : 0;
        t.pair(ap, ei, with_p, with_p);
        t.pair(aq, ei, with_q, with_q);
        for (int m = 0; m < kb; ++m)
            if (m != p && m != q)
                t.pair(1 + m, ei, 0, 1);
    }
    t.extra = [kb, p, q, s, first](const Hypergraph& hh, const std::vector<std::size_t>& e) {
        const auto& lb = hh.local_edge(e[0]);
        const int vp = lb[static_cast<std::size_t>(p)], vq = lb[static_cast<std::size_t>(q)];
        std::set<int> path;
        for (int i = 0; i < s; ++i)
            for (int v : hh.local_edge(e[static_cast<std::size_t>(first + i)])) {
                path.insert(v);
                if (std::binary_search(lb.begin(), lb.end(), v) && v != vp && v != vq)
                    return false;
            }
        for (int m = 0; m < kb; ++m) {
            if (m == p || m == q)
                continue;
            int hit = 0;
            for (int v : hh.local_edge(e[static_cast<std::size_t>(1 + m)]))
                hit += path.count(v) ? 1 : 0;
            if (hit > 1)
                return false;
        }
        return true;
    };
    return t;
}

Template simple_path_template(int size, int len)
{
    Template t;
    for (int i = 0; i < len; ++i)
        t.add(kFamilyAB, size, i - 1);
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
            t.pair(i, j, j == i + 1 ? 1 : 0, j == i + 1 ? 1 : 0);
    if (len >= 2)
        t.orders.push_back({0, len - 1});
    return t;
}

// e_1..e_t then e_0; `s` is |e_0 ∩ e_t| (-1 for any s >= 1).
Template fairly_cycle_template(int size, int len, int s)
{
    Template t;
    for (int i = 0; i < len; ++i)
        t.add(kFamilyAB, size, i - 1);
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j)
            t.pair(i, j, j == i + 1 ? 1 : 0, j == i + 1 ? 1 : 0);
    const int e0 = t.add(kFamilyAB, size, 0);
    t.exact(0, e0, 1);
    for (int i = 1; i + 1 < len; ++i)
        t.disjoint(i, e0);
    if (s == -1)
        t.pair(len - 1, e0, 1, kAny);
    else
        t.exact(len - 1, e0, s);
    if (len == 2)
        t.triple(0, 1, e0, 0, 0);
    return t;
}

Template bad_triple_template(int size, int s)
{
    Template t;
    t.add(kFamilyAB, size);
    t.add(kFamilyAB, size, 0);
    t.add(kFamilyAB, size, 0);
    t.exact(0, 1, 1);
    t.exact(0, 2, 1);
    t.pair(1, 2, s == -1 ? 2 : s, s == -1 ? kAny : s);
    t.triple(0, 1, 2, 0, 0);
    t.orders.push_back({1, 2});
    return t;
}

Template pasch_template()
{
    Template t;
    t.add(kFamilyAB, 3);
    for (int i = 1; i < 4; ++i)
        t.add(kFamilyAB, 3, 0);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            t.exact(i, j, 1);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            for (int k = j + 1; k < 4; ++k)
                t.triple(i, j, k, 0, 0);
    t.orders.push_back({0, 1});
    t.orders.push_back({1, 2});
    t.orders.push_back({2, 3});
    return t;
}

Template faulty_template(int len)
{
    Template t = simple_path_template(3, len);
    const int ex = t.add(kFamilyAB, 3, 0);
    const int ez = t.add(kFamilyAB, 3, len - 1);
    t.exact(0, ex, 1);
    t.exact(1, ex, 1);
    t.triple(0, 1, ex, 0, 0);
    for (int i = 2; i < len; ++i)
        t.disjoint(i, ex);
    t.exact(len - 1, ez, 1);
    t.exact(len - 2, ez, 1);
    t.triple(len - 2, len - 1, ez, 0, 0);
    for (int i = 0; i + 2 < len; ++i)
        t.disjoint(i, ez);
    return t;
}

Template tight_template()
{
    Template t;
    t.add(kFamilyAB, 3);
    t.add(kFamilyAB, 3, 0);
    t.add(kFamilyAB, 3, 1);
    t.exact(0, 1, 2);
    t.exact(0, 2, 1);
    t.exact(1, 2, 2);
    t.orders.push_back({0, 2});
    return t;
}

Template l22_iii_template(const Hypergraph& h)
{
    Template t;
    t.add(kFamilyA, a_size(h));
    t.add(kFamilyA, a_size(h), 0);
    t.pair(0, 1, 2, kAny);
    t.orders.push_back({0, 1});
    return t;
}

// ---- ranges -----------------------------------------------------------------

struct Range {
    int lo, hi;
};

Range length_range(const PatternKind& k, int cap)
{
    auto fixed_or = [](int v, int lo, int hi) { return v != -1 ? Range{v, v} : Range{lo, hi}; };
    switch (k.tag) {
    case PatternTag::A_PATH: return fixed_or(k.s, cap, cap);
    case PatternTag::A_CYCLE: return fixed_or(k.s, 3, 1 + cap);
    case PatternTag::A_TREE: return fixed_or(k.s, 2, cap);
    case PatternTag::AB_PATH: return fixed_or(k.t, cap, cap);
    case PatternTag::AB_CYCLE: return fixed_or(k.t, 2, cap);
    case PatternTag::L22_I: return {cap, cap};
    case PatternTag::L22_II: return {cap, cap};
    case PatternTag::L22_IV: return {3, 1 + cap};
    case PatternTag::L22_VII: return {1, cap};
    case PatternTag::SIMPLE_PATH: return fixed_or(k.t, cap, cap);
    case PatternTag::FAIRLY_SIMPLE_CYCLE:
    case PatternTag::SIMPLE_CYCLE:
    case PatternTag::HANDLE: return fixed_or(k.t, 2, cap);
    case PatternTag::SPOILED_SIMPLE_PATH: return fixed_or(k.t, 1, cap);
    case PatternTag::FAULTY_SIMPLE_PATH: return fixed_or(k.t, 3, cap);
    default: return {0, 0};
    }
}

detail::ChainRanges chain_ranges(const PatternKind& k, int cap)
{
    detail::ChainRanges r;
    switch (k.tag) {
    case PatternTag::AB_PATH:
    case PatternTag::L22_I: {
        const Range t = length_range(k, cap);
        r.s_min = r.s_max = 0;
        r.t_min = t.lo;
        r.t_max = t.hi;
        break;
    }
    case PatternTag::AB_CYCLE: {
        const Range s = length_range(k, cap);
        r.s_min = s.lo;
        r.s_max = s.hi;
        r.t_min = r.t_max = 0;
        r.variant = k.variant;
        break;
    }
    case PatternTag::AB_CYCLE_PATH:
        r.s_min = k.s == -1 ? 0 : k.s;
        r.s_max = k.s == -1 ? cap : k.s;
        r.t_min = k.t == -1 ? 0 : k.t;
        r.t_max = k.t == -1 ? cap : k.t;
        r.variant = k.variant;
        break;
    default:  // L22 (viii)/(ix)
        r.s_min = 0;
        r.s_max = cap;
        r.t_min = 0;
        r.t_max = cap;
        break;
    }
    return r;
}

// ---- enumeration ------------------------------------------------------------

void run_template(const Hypergraph& h, const Template& t, const PatternKind& kind, const MatchParams& params,
                  const Emit& emit, bool& stop)
{
    if (stop)
        return;
    detail::match(h, t, {}, [&](const std::vector<std::size_t>& edges) {
        if (!emit(make_match(h, kind, params, edges)))
            stop = true;
        return !stop;
    });
}

// Edges outside `base` whose intersection with V(base) satisfies `ok(c, size)`.
std::vector<std::size_t> outside_edges(const Hypergraph& h, const std::vector<std::size_t>& base,
                                       const std::function<bool(std::size_t, std::size_t)>& ok, std::uint8_t family)
{
    std::set<int> vs;
    for (std::size_t e : base)
        for (int v : h.local_edge(e))
            vs.insert(v);
    std::set<std::size_t> seen;
    std::vector<std::size_t> out;
    for (int v : vs)
        for (int e : h.incident(v)) {
            const std::size_t ei = static_cast<std::size_t>(e);
            if ((h.edges()[ei].families & family) == 0 || std::find(base.begin(), base.end(), ei) != base.end() ||
                !seen.insert(ei).second)
                continue;
            std::size_t c = 0;
            for (int u : h.local_edge(ei))
                c += vs.count(u);
            if (ok(c, h.local_edge(ei).size()))
                out.push_back(ei);
        }
    std::sort(out.begin(), out.end());
    return out;
}

void enumerate_tree(const Hypergraph& h, const PatternKind& kind, Range r, const Emit& emit, bool& stop)
{
    std::set<std::vector<std::size_t>> seen;
    std::vector<std::size_t> order;
    std::vector<int> cover(h.vertex_count(), 0);
    auto rec = [&](auto&& self) -> void {
        if (stop)
            return;
        if (!detail::node_tick()) {
            stop = true;
            return;
        }
        const int s = static_cast<int>(order.size());
        std::vector<std::size_t> key = order;
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second)
            return;
        if (s >= r.lo && s <= r.hi) {
            MatchParams p;
            p.s = s;
            if (!emit(make_match(h, kind, p, order))) {
                stop = true;
                return;
            }
        }
        if (s >= r.hi)
            return;
        std::set<std::size_t> cand;
        for (std::size_t e : order)
            for (int v : h.local_edge(e))
                for (int f : h.incident(v))
                    cand.insert(static_cast<std::size_t>(f));
        for (std::size_t f : cand) {
            if (!h.edges()[f].is_a() || std::find(order.begin(), order.end(), f) != order.end())
                continue;
            int old = 0;
            for (int v : h.local_edge(f))
                old += cover[static_cast<std::size_t>(v)] > 0 ? 1 : 0;
            if (old != 1)
                continue;
            for (int v : h.local_edge(f))
                ++cover[static_cast<std::size_t>(v)];
            order.push_back(f);
            self(self);
            order.pop_back();
            for (int v : h.local_edge(f))
                --cover[static_cast<std::size_t>(v)];
            if (stop)
                return;
        }
    };
    for (std::size_t e = 0; e < h.edge_count() && !stop; ++e) {
        if (!h.edges()[e].is_a())
            continue;
        for (int v : h.local_edge(e))
            ++cover[static_cast<std::size_t>(v)];
        order.push_back(e);
        rec(rec);
        order.pop_back();
        for (int v : h.local_edge(e))
            --cover[static_cast<std::size_t>(v)];
    }
}

MatchParams chain_params(const detail::ChainView& view)
{
    MatchParams p;
    p.s = view.s;
    p.t = view.t;
    p.variant = view.s >= 2 ? view.variant : -1;
    p.anchor = view.s >= 2 && view.t >= 1 ? view.anchor : -1;
    return p;
}

std::size_t view_vertex_count(const detail::ChainView& view)
{
    std::size_t n = 0;
    for (int c : *view.in_p)
        n += c > 0 ? 1 : 0;
    return n;
}

// (viii): an A-edge a with 2 <= |a ∩ V(P)| <= k_A - 1.
bool eval_viii(const Hypergraph& h, const detail::ChainView& view, const PatternKind& kind, const Emit& emit)
{
    const auto& in_p = *view.in_p;
    std::set<std::size_t> seen;
    for (std::size_t v = 0; v < in_p.size(); ++v) {
        if (!in_p[v])
            continue;
        for (int e : h.incident(static_cast<int>(v))) {
            const std::size_t ei = static_cast<std::size_t>(e);
            if (!h.edges()[ei].is_a() || !seen.insert(ei).second)
                continue;
            const auto& le = h.local_edge(ei);
            int c = 0;
            for (int u : le)
                c += in_p[static_cast<std::size_t>(u)] > 0 ? 1 : 0;
            if (c >= 2 && c <= static_cast<int>(le.size()) - 1) {
                MatchParams p = chain_params(view);
                p.x = c;
                std::vector<std::size_t> edges = view.layout;
                edges.push_back(ei);
                if (!emit(make_match(h, kind, p, edges)))
                    return false;
            }
        }
    }
    return true;
}

// (ix): a B-edge b outside P completed to an AB-set by q new A-edges (each
// meeting V(P) at most once) and k_B - q A-edges of P, one of which meets b in
// a vertex outside every B-edge of P; plus the three-way side condition.
bool eval_ix(const Hypergraph& h, const detail::ChainView& view, const PatternKind& kind, const Emit& emit)
{
    const auto& in_p = *view.in_p;
    const auto& b_cover = *view.b_cover;
    std::map<int, std::size_t> owner;  // vertex -> P A-edge containing it
    for (std::size_t a : view.a_edges)
        for (int v : h.local_edge(a))
            owner[v] = a;
    std::set<std::size_t> p_edges(view.layout.begin(), view.layout.end());
    std::set<std::size_t> seen;
    const int kb = h.k_b();
    for (const auto& [v0, a0] : owner) {
        (void)a0;
        for (int be : h.incident(v0)) {
            const std::size_t b = static_cast<std::size_t>(be);
            if (!h.edges()[b].is_b() || p_edges.count(b) || !seen.insert(b).second)
                continue;
            const auto& lb = h.local_edge(b);
            // Options per vertex of b: the owning P-edge, or fresh edges.
            std::vector<std::vector<std::pair<std::size_t, bool>>> options(lb.size());
            for (std::size_t i = 0; i < lb.size(); ++i) {
                const int u = lb[i];
                if (auto it = owner.find(u); it != owner.end() &&
                                             intersection_size(h.local_edge(it->second), lb) == 1)
                    options[i].push_back({it->second, true});
                for (int fe : h.incident(u)) {
                    const std::size_t f = static_cast<std::size_t>(fe);
                    if (f == b || !h.edges()[f].is_a() || p_edges.count(f))
                        continue;
                    const auto& lf = h.local_edge(f);
                    if (intersection_size(lf, lb) != 1)
                        continue;
                    int c = 0;
                    for (int w : lf)
                        c += in_p[static_cast<std::size_t>(w)] > 0 ? 1 : 0;
                    if (c <= 1)
                        options[i].push_back({f, false});
                }
            }
            std::vector<std::pair<std::size_t, bool>> chosen(lb.size());
            bool keep_going = true;
            auto rec = [&](auto&& self, std::size_t i) -> void {
                if (!keep_going)
                    return;
                if (!detail::node_tick()) {
                    keep_going = false;
                    return;
                }
                if (i == lb.size()) {
                    int q = 0;
                    bool new_meets_p = false;
                    int uncovered = -1;
                    for (std::size_t k = 0; k < chosen.size(); ++k) {
                        if (!chosen[k].second) {
                            ++q;
                            for (int w : h.local_edge(chosen[k].first))
                                new_meets_p = new_meets_p || in_p[static_cast<std::size_t>(w)] > 0;
                        } else if (!b_cover[static_cast<std::size_t>(lb[k])]) {
                            uncovered = static_cast<int>(k);
                        }
                    }
                    if (q > kb - 1 || uncovered < 0)
                        return;
                    const bool side = (view.s >= 2 && q <= kb - 2) || (view.s == 0 && q <= kb - 3) || new_meets_p;
                    if (!side)
                        return;
                    MatchParams p = chain_params(view);
                    p.q = q;
                    std::vector<std::size_t> edges = view.layout;
                    edges.push_back(b);
                    for (const auto& c : chosen)
                        if (!c.second)
                            edges.push_back(c.first);
                    for (std::size_t k = 0; k < chosen.size(); ++k)
                        if (chosen[k].second && static_cast<int>(k) != uncovered)
                            edges.push_back(chosen[k].first);
                    edges.push_back(chosen[static_cast<std::size_t>(uncovered)].first);
                    StructureMatch m = make_match(h, kind, p, edges);
                    m.params.x = static_cast<int>(view_vertex_count(view)) + q * h.k_a() -
                                 static_cast<int>(m.vertex_count);
                    if (!emit(std::move(m)))
                        keep_going = false;
                    return;
                }
                for (const auto& opt : options[i]) {
                    bool clash = false;
                    for (std::size_t k = 0; k < i && !clash; ++k)
                        clash = chosen[k].first == opt.first ||
                                intersection_size(h.local_edge(chosen[k].first), h.local_edge(opt.first)) != 0;
                    if (clash)
                        continue;
                    chosen[i] = opt;
                    self(self, i + 1);
                    if (!keep_going)
                        return;
                }
            };
            rec(rec, 0);
            if (!keep_going)
                return false;
        }
    }
    return true;
}

void enumerate_chain(const Hypergraph& h, const PatternKind& kind, int cap, const Emit& emit, bool& stop)
{
    if (h.k_b() < 2 || stop)
        return;
    const detail::ChainRanges r = chain_ranges(kind, cap);
    detail::for_each_chain(h, r, [&](const detail::ChainView& view) {
        switch (kind.tag) {
        case PatternTag::L22_VIII:
            if (!eval_viii(h, view, kind, emit))
                stop = true;
            break;
        case PatternTag::L22_IX:
            if (!eval_ix(h, view, kind, emit))
                stop = true;
            break;
        default: {
            MatchParams p = chain_params(view);
            if (kind.tag == PatternTag::AB_CYCLE) {
                p.t = view.s;
                p.s = -1;
            } else if (kind.tag == PatternTag::AB_PATH || kind.tag == PatternTag::L22_I) {
                p.s = -1;
            }
            if (!emit(make_match(h, kind, p, view.layout)))
                stop = true;
        }
        }
        return !stop;
    });
}

void enumerate(const Hypergraph& h, const PatternKind& kind, int cap, const Emit& emit)
{
    kind.validate();
    if (cap < 1)
        throw PreconditionError("cap must be at least 1");
    bool stop = false;
    if (h.empty())
        return;
    const int size = fixed_size_three(kind.tag) ? 3 : kind.size;
    switch (kind.tag) {
    case PatternTag::A_PATH:
    case PatternTag::L22_II: {
        const Range r = length_range(kind, cap);
        for (int s = r.lo; s <= r.hi && !stop; ++s) {
            MatchParams p;
            p.s = s;
            run_template(h, a_path_template(h, s), kind, p, emit, stop);
        }
        break;
    }
    case PatternTag::A_CYCLE:
    case PatternTag::L22_IV: {
        const Range r = length_range(kind, cap);
        for (int s = r.lo; s <= r.hi && !stop; ++s) {
            MatchParams p;
            p.s = s;
            run_template(h, a_cycle_template(h, s), kind, p, emit, stop);
        }
        break;
    }
    case PatternTag::A_TREE: enumerate_tree(h, kind, length_range(kind, cap), emit, stop); break;
    case PatternTag::AB_SET:
        if (h.k_b() >= 1)
            run_template(h, ab_set_template(h, true), kind, {}, emit, stop);
        break;
    case PatternTag::AB_PATH:
    case PatternTag::AB_CYCLE:
    case PatternTag::AB_CYCLE_PATH:
    case PatternTag::L22_I:
    case PatternTag::L22_VIII:
    case PatternTag::L22_IX: enumerate_chain(h, kind, cap, emit, stop); break;
    case PatternTag::L22_III: run_template(h, l22_iii_template(h), kind, {}, emit, stop); break;
    case PatternTag::L22_V: {
        if (h.k_b() < 1)
            break;
        const Template t = l22_v_template(h);
        detail::match(h, t, {}, [&](const std::vector<std::size_t>& edges) {
            StructureMatch m = make_match(h, kind, {}, edges);
            m.params.x = h.k_b() * h.k_a() - static_cast<int>(m.vertex_count);
            stop = !emit(std::move(m));
            return !stop;
        });
        break;
    }
    case PatternTag::L22_VI: {
        if (h.k_b() < 1)
            break;
        const Template t = l22_vi_template(h);
        detail::match(h, t, {}, [&](const std::vector<std::size_t>& edges) {
            const auto& le = h.local_edge(edges.back());
            std::vector<std::size_t> set(edges.begin(), edges.end() - 1);
            MatchParams p;
            p.s = static_cast<int>(intersection_size(le, h.local_edge(edges[0])));
            const std::size_t all = vertex_union(h, set);
            const std::size_t with = vertex_union(h, edges);
            p.t = static_cast<int>(le.size()) - static_cast<int>(with - all) - p.s;
            stop = !emit(make_match(h, kind, p, edges));
            return !stop;
        });
        break;
    }
    case PatternTag::L22_VII: {
        const int kb = h.k_b();
        const Range r = length_range(kind, cap);
        for (int s = r.lo; s <= r.hi && !stop; ++s)
            for (int pi = 0; pi < kb && !stop; ++pi)
                for (int qi = pi + 1; qi < kb && !stop; ++qi) {
                    const Template t = l22_vii_template(h, pi, qi, s);
                    detail::match(h, t, {}, [&](const std::vector<std::size_t>& edges) {
                        StructureMatch m = make_match(h, kind, {}, edges);
                        m.params.s = s;
                        m.params.x = kb * h.k_a() - 1 + s * (h.k_a() - 1) - static_cast<int>(m.vertex_count);
                        stop = !emit(std::move(m));
                        return !stop;
                    });
                }
        break;
    }
    case PatternTag::SIMPLE_PATH: {
        const Range r = length_range(kind, cap);
        for (int t = r.lo; t <= r.hi && !stop; ++t) {
            MatchParams p;
            p.t = t;
            run_template(h, simple_path_template(size, t), kind, p, emit, stop);
        }
        break;
    }
    case PatternTag::FAIRLY_SIMPLE_CYCLE:
    case PatternTag::SIMPLE_CYCLE: {
        const Range r = length_range(kind, cap);
        const int s = kind.tag == PatternTag::SIMPLE_CYCLE ? 1 : kind.s;
        for (int t = r.lo; t <= r.hi && !stop; ++t) {
            const Template tpl = fairly_cycle_template(size, t, s);
            detail::match(h, tpl, {}, [&](const std::vector<std::size_t>& edges) {
                MatchParams p;
                p.t = t;
                p.s = static_cast<int>(intersection_size(h.local_edge(edges[static_cast<std::size_t>(t - 1)]),
                                                         h.local_edge(edges.back())));
                stop = !emit(make_match(h, kind, p, edges));
                return !stop;
            });
        }
        break;
    }
    case PatternTag::SPOILED_SIMPLE_PATH: {
        const Range r = length_range(kind, cap);
        for (int t = r.lo; t <= r.hi && !stop; ++t)
            detail::match(h, simple_path_template(size, t), {}, [&](const std::vector<std::size_t>& edges) {
                for (std::size_t e : outside_edges(
                         h, edges, [](std::size_t c, std::size_t sz) { return c == sz; }, kFamilyAB)) {
                    MatchParams p;
                    p.t = t;
                    std::vector<std::size_t> all = edges;
                    all.push_back(e);
                    if (!emit(make_match(h, kind, p, all))) {
                        stop = true;
                        break;
                    }
                }
                return !stop;
            });
        break;
    }
    case PatternTag::HANDLE: {
        const Range r = length_range(kind, cap);
        for (int t = r.lo; t <= r.hi && !stop; ++t)
            detail::match(h, fairly_cycle_template(size, t, kind.s), {}, [&](const std::vector<std::size_t>& edges) {
                for (std::size_t e : outside_edges(
                         h, edges, [](std::size_t c, std::size_t sz) { return c >= 2 && c < sz; }, kFamilyAB)) {
                    MatchParams p;
                    p.t = t;
                    p.s = static_cast<int>(intersection_size(h.local_edge(edges[static_cast<std::size_t>(t - 1)]),
                                                             h.local_edge(edges[static_cast<std::size_t>(t)])));
                    std::vector<std::size_t> all = edges;
                    all.push_back(e);
                    if (!emit(make_match(h, kind, p, all))) {
                        stop = true;
                        break;
                    }
                }
                return !stop;
            });
        break;
    }
    case PatternTag::BAD_TRIPLE:
        detail::match(h, bad_triple_template(size, kind.s), {}, [&](const std::vector<std::size_t>& edges) {
            MatchParams p;
            p.s = static_cast<int>(intersection_size(h.local_edge(edges[1]), h.local_edge(edges[2])));
            stop = !emit(make_match(h, kind, p, edges));
            return !stop;
        });
        break;
    case PatternTag::PASCH: run_template(h, pasch_template(), kind, {}, emit, stop); break;
    case PatternTag::FAULTY_SIMPLE_PATH: {
        const Range r = length_range(kind, cap);
        for (int t = r.lo; t <= r.hi && !stop; ++t) {
            MatchParams p;
            p.t = t;
            run_template(h, faulty_template(t), kind, p, emit, stop);
        }
        break;
    }
    case PatternTag::BAD_TIGHT_PATH: run_template(h, tight_template(), kind, {}, emit, stop); break;
    }
}

bool in_range(int v, Range r) { return v >= r.lo && v <= r.hi; }

bool all_family(const Hypergraph& h, const std::vector<std::size_t>& edges, Family f)
{
    for (std::size_t e : edges)
        if (e >= h.edge_count() || !h.edges()[e].has(f))
            return false;
    return true;
}

bool verify_chain_part(const Hypergraph& h, const std::vector<std::size_t>& layout, const MatchParams& p)
{
    const int s = p.s == -1 ? 0 : p.s;
    return detail::check_ab_cycle_path(h, layout, s, p.t, p.anchor) &&
           (s < 2 || p.variant == -1 ||
            detail::check_ab_cycle(h, std::vector<std::size_t>(layout.begin(),
                                                               layout.begin() + static_cast<std::ptrdiff_t>(
                                                                                    detail::chain_layout_size(h.k_b(), s, 0, false))),
                                   s, p.variant));
}

bool verify_impl(const Hypergraph& h, const StructureMatch& m, int cap)
{
    const PatternKind& k = m.kind;
    const MatchParams& p = m.params;
    const auto& e = m.edges;
    for (std::size_t x : e)
        if (x >= h.edge_count())
            return false;
    const int size = fixed_size_three(k.tag) ? 3 : k.size;
    switch (k.tag) {
    case PatternTag::A_PATH:
    case PatternTag::L22_II:
        return in_range(p.s, length_range(k, cap)) && detail::satisfies(h, a_path_template(h, p.s), e);
    case PatternTag::A_CYCLE:
    case PatternTag::L22_IV:
        return in_range(p.s, length_range(k, cap)) && detail::satisfies(h, a_cycle_template(h, p.s), e);
    case PatternTag::A_TREE: {
        if (!in_range(p.s, length_range(k, cap)) || static_cast<int>(e.size()) != p.s || !all_family(h, e, kFamilyA))
            return false;
        std::set<int> seen;
        for (std::size_t i = 0; i < e.size(); ++i) {
            int old = 0;
            for (int v : h.local_edge(e[i]))
                old += seen.count(v) ? 1 : 0;
            if (i > 0 && old != 1)
                return false;
            for (int v : h.local_edge(e[i]))
                seen.insert(v);
        }
        return std::set<std::size_t>(e.begin(), e.end()).size() == e.size();
    }
    case PatternTag::AB_SET:
        return !e.empty() && detail::check_ab_set(h, e[0], std::vector<std::size_t>(e.begin() + 1, e.end()));
    case PatternTag::AB_PATH:
    case PatternTag::L22_I: return in_range(p.t, length_range(k, cap)) && detail::check_ab_path(h, e, p.t);
    case PatternTag::AB_CYCLE:
        return in_range(p.t, length_range(k, cap)) && (k.variant == -1 || k.variant == p.variant) &&
               detail::check_ab_cycle(h, e, p.t, p.variant);
    case PatternTag::AB_CYCLE_PATH: {
        const detail::ChainRanges r = chain_ranges(k, cap);
        if (p.s < r.s_min || p.s > r.s_max || p.t < r.t_min || p.t > r.t_max || p.s == 1 || (p.s == 0 && p.t == 0))
            return false;
        if (k.variant != -1 && p.variant != k.variant)
            return false;
        return verify_chain_part(h, e, p);
    }
    case PatternTag::L22_VIII:
    case PatternTag::L22_IX: {
        if (p.s < 0 || p.s == 1 || p.s > cap || p.t < 0 || p.t > cap || (p.s == 0 && p.t == 0))
            return false;
        const std::size_t n = detail::chain_layout_size(h.k_b(), p.s, p.t, p.s >= 2);
        if (e.size() <= n)
            return false;
        const std::vector<std::size_t> layout(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n));
        if (!verify_chain_part(h, layout, p))
            return false;
        std::vector<std::size_t> pa, pb;
        detail::split_layout(h, layout, p.s, p.t, p.anchor, pa, pb);
        std::set<int> vp;
        std::set<int> bcov;
        for (std::size_t x : layout)
            for (int v : h.local_edge(x))
                vp.insert(v);
        for (std::size_t x : pb)
            for (int v : h.local_edge(x))
                bcov.insert(v);
        auto meet_p = [&](std::size_t x) {
            int c = 0;
            for (int v : h.local_edge(x))
                c += vp.count(v) ? 1 : 0;
            return c;
        };
        if (k.tag == PatternTag::L22_VIII) {
            if (e.size() != n + 1 || !h.edges()[e[n]].is_a())
                return false;
            const int c = meet_p(e[n]);
            return c >= 2 && c <= static_cast<int>(h.local_edge(e[n]).size()) - 1 && c == p.x;
        }
        const int kb = h.k_b();
        if (e.size() != n + 1 + static_cast<std::size_t>(kb) || p.q < 0 || p.q > kb - 1)
            return false;
        const std::size_t b = e[n];
        if (std::find(layout.begin(), layout.end(), b) != layout.end())
            return false;
        const std::vector<std::size_t> as(e.begin() + static_cast<std::ptrdiff_t>(n + 1), e.end());
        // check_ab_set wants a_i in b's vertex order; sort by the meeting vertex.
        std::vector<std::size_t> by_vertex(as.size());
        const auto& lb = h.local_edge(b);
        std::vector<char> placed(as.size(), 0);
        for (std::size_t i = 0; i < lb.size(); ++i)
            for (std::size_t j = 0; j < as.size(); ++j) {
                const auto& la = h.local_edge(as[j]);
                if (!placed[j] && std::binary_search(la.begin(), la.end(), lb[i])) {
                    by_vertex[i] = as[j];
                    placed[j] = 1;
                    break;
                }
            }
        if (std::count(placed.begin(), placed.end(), 1) != static_cast<long>(as.size()) ||
            !detail::check_ab_set(h, b, by_vertex))
            return false;
        bool new_meets = false;
        for (int i = 0; i < kb; ++i) {
            const std::size_t a = as[static_cast<std::size_t>(i)];
            const bool in_p = std::find(pa.begin(), pa.end(), a) != pa.end();
            if (i < p.q) {
                if (in_p || std::find(layout.begin(), layout.end(), a) != layout.end() || meet_p(a) > 1)
                    return false;
                new_meets = new_meets || meet_p(a) > 0;
            } else if (!in_p) {
                return false;
            }
        }
        std::vector<int> v;
        const auto& last = h.local_edge(as.back());
        std::set_intersection(last.begin(), last.end(), lb.begin(), lb.end(), std::back_inserter(v));
        if (v.size() != 1 || bcov.count(v[0]))
            return false;
        return (p.s >= 2 && p.q <= kb - 2) || (p.s == 0 && p.q <= kb - 3) || new_meets;
    }
    case PatternTag::L22_III: return detail::satisfies(h, l22_iii_template(h), e);
    case PatternTag::L22_V: return detail::satisfies(h, l22_v_template(h), e);
    case PatternTag::L22_VI: return detail::satisfies(h, l22_vi_template(h), e);
    case PatternTag::L22_VII: {
        if (!in_range(p.s, length_range(k, cap)))
            return false;
        const int kb = h.k_b();
        for (int pi = 0; pi < kb; ++pi)
            for (int qi = pi + 1; qi < kb; ++qi)
                if (detail::satisfies(h, l22_vii_template(h, pi, qi, p.s), e))
                    return true;
        return false;
    }
    case PatternTag::SIMPLE_PATH:
        return in_range(p.t, length_range(k, cap)) && detail::satisfies(h, simple_path_template(size, p.t), e);
    case PatternTag::FAIRLY_SIMPLE_CYCLE:
    case PatternTag::SIMPLE_CYCLE:
        return in_range(p.t, length_range(k, cap)) &&
               detail::satisfies(h, fairly_cycle_template(size, p.t, k.tag == PatternTag::SIMPLE_CYCLE ? 1 : k.s), e);
    case PatternTag::SPOILED_SIMPLE_PATH:
    case PatternTag::HANDLE: {
        if (!in_range(p.t, length_range(k, cap)) || e.empty())
            return false;
        const std::vector<std::size_t> base(e.begin(), e.end() - 1);
        const bool spoiled = k.tag == PatternTag::SPOILED_SIMPLE_PATH;
        const Template t = spoiled ? simple_path_template(size, p.t) : fairly_cycle_template(size, p.t, k.s);
        if (!detail::satisfies(h, t, base) || std::find(base.begin(), base.end(), e.back()) != base.end())
            return false;
        std::set<int> vs;
        for (std::size_t x : base)
            for (int v : h.local_edge(x))
                vs.insert(v);
        std::size_t c = 0;
        for (int v : h.local_edge(e.back()))
            c += vs.count(v);
        const std::size_t sz = h.local_edge(e.back()).size();
        return spoiled ? c == sz : (c >= 2 && c < sz);
    }
    case PatternTag::BAD_TRIPLE: return detail::satisfies(h, bad_triple_template(size, k.s), e);
    case PatternTag::PASCH: return detail::satisfies(h, pasch_template(), e);
    case PatternTag::FAULTY_SIMPLE_PATH:
        return in_range(p.t, length_range(k, cap)) && detail::satisfies(h, faulty_template(p.t), e);
    case PatternTag::BAD_TIGHT_PATH: return detail::satisfies(h, tight_template(), e);
    }
    return false;
}

}  // namespace

std::optional<StructureMatch> detect(const Hypergraph& h, const PatternKind& kind, int cap)
{
    std::optional<StructureMatch> found;
    enumerate(h, kind, cap, [&](StructureMatch m) {
        found = std::move(m);
        return false;
    });
    return found;
}

BoundedDetection detect_bounded(const Hypergraph& h, const PatternKind& kind, int cap, std::size_t node_limit)
{
    detail::BudgetScope scope(node_limit);
    BoundedDetection r;
    r.match = detect(h, kind, cap);
    r.complete = r.match.has_value() || !scope.exhausted();
    return r;
}

CountResult count(const Hypergraph& h, const PatternKind& kind, int cap, std::size_t limit)
{
    CountResult r;
    std::set<std::vector<std::size_t>> seen;
    enumerate(h, kind, cap, [&](StructureMatch m) {
        std::vector<std::size_t> key = m.edges;
        std::sort(key.begin(), key.end());
        key.erase(std::unique(key.begin(), key.end()), key.end());
        if (seen.insert(std::move(key)).second)
            ++r.count;
        if (r.count >= limit) {
            r.truncated = true;
            return false;
        }
        return true;
    });
    return r;
}

std::vector<StructureMatch> all_matches(const Hypergraph& h, const PatternKind& kind, int cap, std::size_t limit)
{
    std::vector<StructureMatch> out;
    std::set<std::vector<std::size_t>> seen;
    if (limit == 0)
        return out;
    enumerate(h, kind, cap, [&](StructureMatch m) {
        std::vector<std::size_t> key = m.edges;
        std::sort(key.begin(), key.end());
        key.erase(std::unique(key.begin(), key.end()), key.end());
        if (seen.insert(std::move(key)).second)
            out.push_back(std::move(m));
        return out.size() < limit;
    });
    return out;
}

bool verify(const Hypergraph& h, const StructureMatch& m, int cap)
{
    try {
        m.kind.validate();
    } catch (const PreconditionError&) {
        return false;
    }
    return verify_impl(h, m, cap);
}

nlohmann::json StructureMatch::to_json(const Hypergraph& h) const
{
    nlohmann::json params_json = nlohmann::json::object();
    auto put = [&](const char* key, int v) {
        if (v != -1)
            params_json[key] = v;
    };
    put("s", params.s);
    put("t", params.t);
    put("q", params.q);
    put("x", params.x);
    put("variant", params.variant);
    put("anchor", params.anchor);
    nlohmann::json edge_list = nlohmann::json::array();
    for (std::size_t e : edges)
        edge_list.push_back({{"family", family_name(h.edges()[e].families)}, {"vertices", h.edges()[e].vertices}});
    return {{"kind", kind.label()},
            {"params", params_json},
            {"edges", edge_list},
            {"vertex_count", vertex_count},
            {"edge_count", edge_count}};
}

std::string StructureMatch::to_text(const Hypergraph& h) const
{
    std::ostringstream out;
    out << "kind " << kind.label() << "\n";
    out << "params";
    auto put = [&](const char* key, int v) {
        if (v != -1)
            out << " " << key << "=" << v;
    };
    put("s", params.s);
    put("t", params.t);
    put("q", params.q);
    put("x", params.x);
    put("variant", params.variant);
    put("anchor", params.anchor);
    out << "\n";
    for (std::size_t e : edges) {
        out << "edge " << family_name(h.edges()[e].families);
        for (long long v : h.edges()[e].vertices)
            out << " " << v;
        out << "\n";
    }
    out << "vertices " << vertex_count << " edges " << edge_count << "\n";
    return out.str();
}

bool LemmaReport::any() const
{
    for (const auto& c : cases)
        if (c.second)
            return true;
    return false;
}

nlohmann::json LemmaReport::to_json(const Hypergraph& h) const
{
    nlohmann::json cs = nlohmann::json::object();
    for (const auto& [name, m] : cases)
        cs[name] = m ? m->to_json(h) : nlohmann::json(nullptr);
    return {{"precondition_ok", precondition_ok}, {"precondition", precondition}, {"cases", cs}, {"any", any()},
            {"undetermined", undetermined}, {"node_limit", node_limit}};
}

void LemmaReport::add(const std::string& name, const Hypergraph& h, const PatternKind& kind, int cap)
{
    BoundedDetection d = detect_bounded(h, kind, cap, node_limit);
    if (!d.complete)
        undetermined.push_back(name);
    cases.emplace_back(name, std::move(d.match));
}

LemmaReport audit_lemma22(const Hypergraph& h, int cap, std::size_t node_limit)
{
    LemmaReport r;
    r.node_limit = node_limit;
    if (h.empty()) {
        r.precondition_ok = false;
        r.precondition = "empty hypergraph: the lemma is vacuous";
        return r;
    }
    if (!(h.k_b() > h.k_a())) {
        r.precondition_ok = false;
        r.precondition = "requires k_B > k_A";
        return r;
    }
    r.precondition = "non-empty, k_B > k_A";
    const std::vector<std::pair<std::string, PatternTag>> cases = {
        {"i", PatternTag::L22_I},   {"ii", PatternTag::L22_II}, {"iii", PatternTag::L22_III},
        {"iv", PatternTag::L22_IV}, {"v", PatternTag::L22_V},   {"vi", PatternTag::L22_VI},
        {"vii", PatternTag::L22_VII}, {"viii", PatternTag::L22_VIII}, {"ix", PatternTag::L22_IX},
    };
    for (const auto& [name, tag] : cases)
        r.add(name, h, PatternKind(tag), cap);
    return r;
}

LemmaReport audit_lemma33(const Hypergraph& h, int cap, std::size_t node_limit)
{
    LemmaReport r;
    r.node_limit = node_limit;
    if (h.empty()) {
        r.precondition_ok = false;
        r.precondition = "empty hypergraph: the lemma is vacuous";
        return r;
    }
    const std::size_t k = h.edges().front().vertices.size();
    for (const auto& e : h.edges())
        if (e.vertices.size() != k) {
            r.precondition_ok = false;
            r.precondition = "edges of different sizes";
            return r;
        }
    r.precondition = "non-empty, uniform edge size " + std::to_string(k);
    r.add("i", h, PatternKind(PatternTag::SPOILED_SIMPLE_PATH), cap);
    r.add("ii", h, PatternKind(PatternTag::HANDLE), cap);
    r.add("iii", h, PatternKind(PatternTag::BAD_TRIPLE), cap);
    r.add("iv", h, PatternKind(PatternTag::SIMPLE_PATH, -1, cap, -1, 3), cap);
    r.add("v", h, PatternKind(PatternTag::FAULTY_SIMPLE_PATH), cap);
    r.add("vi", h, PatternKind(PatternTag::BAD_TIGHT_PATH), cap);
    return r;
}

}  // namespace rado
