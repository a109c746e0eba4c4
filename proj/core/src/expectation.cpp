#include "rado/expectation.hpp"

#include "rado/errors.hpp"
#include "rado/parallel.hpp"
#include "rado/solutions.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rado {

ShapeStats shape_stats(Shape shape, int k_a, int k_b, const ShapeParams& p)
{
    const long long ka = k_a, kb = k_b, k = p.k, s = p.s, t = p.t, q = p.q, x = p.x;
    ShapeStats st;
    auto set = [&](const std::string& name, long long v, long long e) {
        st.name = name;
        st.vertices = v;
        st.edges = e;
    };
    switch (shape) {
    case Shape::single_edge: set("edge", ka, 1); break;
    case Shape::a_path: set("A_PATH(s=" + std::to_string(s) + ")", s * (ka - 1) + 1, s); break;
    case Shape::a_tree: set("A_TREE(s=" + std::to_string(s) + ")", s * (ka - 1) + 1, s); break;
    case Shape::t_pair: set("T(s=" + std::to_string(s) + ")", 2 * ka - s, 2); break;
    case Shape::a_cycle: set("A_CYCLE(s=" + std::to_string(s) + ")", s * (ka - 1), s); break;
    case Shape::ab_set: set("AB_SET", kb * ka, kb + 1); break;
    case Shape::ab_path: set("AB_PATH(t=" + std::to_string(s) + ")", s * ka * (kb - 1) + ka, s * kb + 1); break;
    case Shape::ab_cycle: set("AB_CYCLE(t=" + std::to_string(s) + ")", s * (kb - 1) * ka, s * kb); break;
    case Shape::l22_v: set("L22_v(x=" + std::to_string(x) + ")", kb * ka - x, kb + 1); break;
    case Shape::l22_vi:
        set("L22_vi(s=" + std::to_string(s) + ",t=" + std::to_string(t) + ")", kb * ka + (ka - s - t), kb + 2);
        break;
    case Shape::l22_vii:
        set("L22_vii(s=" + std::to_string(s) + ",x=" + std::to_string(x) + ")", kb * ka - 1 - x + s * (ka - 1),
            kb + s + 1);
        break;
    case Shape::l22_viii: {
        const std::string name =
            "L22_viii(s=" + std::to_string(s) + ",t=" + std::to_string(t) + ",x=" + std::to_string(x) + ")";
        if (s >= 2)
            set(name, (s + t) * (kb - 1) * ka + ka - x, (s + t) * kb + 1);
        else
            set(name, ka + t * (kb - 1) * ka + ka - x, t * kb + 2);
        break;
    }
    case Shape::l22_ix: {
        const std::string name = "L22_ix(s=" + std::to_string(s) + ",t=" + std::to_string(t) +
                                 ",q=" + std::to_string(q) + ",x=" + std::to_string(x) + ")";
        if (s >= 2)
            set(name, (s + t) * (kb - 1) * ka + q * ka - x, (s + t) * kb + 1 + q);
        else
            set(name, ka + t * (kb - 1) * ka + q * ka - x, t * kb + 2 + q);
        break;
    }
    case Shape::bad_triple: set("BAD_TRIPLE(s=" + std::to_string(s) + ")", 3 * k - s - 2, 3); break;
    case Shape::pasch: set("PASCH", 6, 4); break;
    case Shape::bad_tight_path: set("BAD_TIGHT_PATH", 5, 3); break;
    case Shape::simple_path: set("SIMPLE_PATH(t=" + std::to_string(t) + ")", t * (k - 1) + 1, t); break;
    case Shape::simple_cycle: set("SIMPLE_CYCLE(t=" + std::to_string(t) + ")", (t + 1) * (k - 1), t + 1); break;
    case Shape::faulty_simple_path:
        set("FAULTY_SIMPLE_PATH(t=" + std::to_string(t) + (p.shared ? ",shared" : "") + ")",
            p.shared ? 2 * t + 2 : 2 * t + 3, t + 2);
        break;
    }
    st.valid_order = st.vertices >= st.edges;
    return st;
}

ShapeStats shape_of(const Hypergraph& h, const std::vector<std::size_t>& edges, std::string name)
{
    ShapeStats st;
    st.name = std::move(name);
    std::set<long long> vs;
    std::set<std::size_t> es(edges.begin(), edges.end());
    std::vector<std::vector<long long>> lists;
    for (std::size_t e : es) {
        lists.push_back(h.edges()[e].vertices);
        vs.insert(h.edges()[e].vertices.begin(), h.edges()[e].vertices.end());
    }
    st.vertices = static_cast<long long>(vs.size());
    st.edges = static_cast<long long>(es.size());
    st.valid_order = valid_edge_order(lists).has_value();
    return st;
}

Rational copies_upper_bound(const ShapeStats& s, long long n, int k_b)
{
    if (!s.valid_order)
        throw PreconditionError("shape " + s.name + " has no valid edge order");
    if (n < 1 || k_b < 1)
        throw PreconditionError("copies_upper_bound needs n >= 1 and k_B >= 1");
    const Integer kf = factorial(static_cast<unsigned>(k_b));
    Rational out = pow(Rational(kf), static_cast<unsigned>(s.edges));
    const long long d = s.vertices - s.edges;
    if (d >= 0)
        out *= pow(Rational(n), static_cast<unsigned>(d));
    else
        out /= pow(Rational(n), static_cast<unsigned>(-d));
    return out;
}

namespace {

Rational theta_denominator(int k_a, int k_b) { return Rational(static_cast<long long>(k_a) * k_b - k_a); }

}  // namespace

ExpectedBound expected_copies_bound(const ShapeStats& s, long long n, const Rational& p, int k_a, int k_b)
{
    if (p < 0 || p > 1)
        throw PreconditionError("p must lie in [0,1]");
    ExpectedBound b;
    b.value = copies_upper_bound(s, n, k_b) * pow(p, static_cast<unsigned>(s.vertices));
    const Rational den = theta_denominator(k_a, k_b);
    if (den <= 0)
        throw PreconditionError("threshold exponent needs k_A k_B > k_A");
    b.exponent = (Rational(k_b) * s.vertices - den * s.edges) / den;
    b.c_power = s.vertices;
    return b;
}

Decimal bound_at_threshold(const ShapeStats& s, long long n, const Rational& c, int k_a, int k_b)
{
    const ExpectedBound b = expected_copies_bound(s, n, Rational(0), k_a, k_b);
    const Decimal pre = to_decimal(pow(Rational(factorial(static_cast<unsigned>(k_b))), static_cast<unsigned>(s.edges)) *
                                   pow(c, static_cast<unsigned>(s.vertices)));
    return pre * pow_rational(Rational(n), b.exponent);
}

std::vector<ShapeStats> kind_shapes(const PatternKind& kind, int k_a, int k_b, int cap)
{
    kind.validate();
    std::vector<ShapeStats> out;
    auto add = [&](Shape sh, ShapeParams p) { out.push_back(shape_stats(sh, k_a, k_b, p)); };
    const int k = kind.size != 0 ? kind.size : k_a;
    switch (kind.tag) {
    case PatternTag::A_PATH: {
        ShapeParams p;
        p.s = kind.s != -1 ? kind.s : cap;
        add(Shape::a_path, p);
        break;
    }
    case PatternTag::A_TREE:
        for (int s = kind.s != -1 ? kind.s : 2; s <= (kind.s != -1 ? kind.s : cap); ++s) {
            ShapeParams p;
            p.s = s;
            add(Shape::a_tree, p);
        }
        break;
    case PatternTag::A_CYCLE:
        for (int s = kind.s != -1 ? kind.s : 3; s <= (kind.s != -1 ? kind.s : 1 + cap); ++s) {
            ShapeParams p;
            p.s = s;
            add(Shape::a_cycle, p);
        }
        break;
    case PatternTag::AB_SET: add(Shape::ab_set, {}); break;
    case PatternTag::AB_PATH: {
        ShapeParams p;
        p.s = kind.t != -1 ? kind.t : cap;
        add(Shape::ab_path, p);
        break;
    }
    case PatternTag::AB_CYCLE:
        for (int s = kind.t != -1 ? kind.t : 2; s <= (kind.t != -1 ? kind.t : cap); ++s) {
            ShapeParams p;
            p.s = s;
            add(Shape::ab_cycle, p);
            if (kind.variant == -1)
                add(Shape::ab_cycle, p);  // both variants share the counts
        }
        break;
    case PatternTag::BAD_TRIPLE:
        for (int s = kind.s != -1 ? kind.s : 2; s <= (kind.s != -1 ? kind.s : k - 1); ++s) {
            ShapeParams p;
            p.k = k;
            p.s = s;
            add(Shape::bad_triple, p);
        }
        break;
    case PatternTag::PASCH: add(Shape::pasch, {}); break;
    case PatternTag::BAD_TIGHT_PATH: add(Shape::bad_tight_path, {}); break;
    case PatternTag::SIMPLE_PATH: {
        ShapeParams p;
        p.k = k;
        p.t = kind.t != -1 ? kind.t : cap;
        add(Shape::simple_path, p);
        break;
    }
    case PatternTag::SIMPLE_CYCLE:
        for (int t = kind.t != -1 ? kind.t : 2; t <= (kind.t != -1 ? kind.t : cap); ++t) {
            ShapeParams p;
            p.k = k;
            p.t = t;
            add(Shape::simple_cycle, p);
        }
        break;
    case PatternTag::FAULTY_SIMPLE_PATH:
        for (int t = kind.t != -1 ? kind.t : 3; t <= (kind.t != -1 ? kind.t : cap); ++t)
            for (bool shared : {false, true}) {
                ShapeParams p;
                p.t = t;
                p.shared = shared;
                add(Shape::faulty_simple_path, p);
            }
        break;
    default:
        throw PreconditionError("no closed-form shape family for " + kind.label());
    }
    return out;
}

Rational kind_expected_bound(const PatternKind& kind, long long n, const Rational& p, int k_a, int k_b, int cap,
                             bool distinct_families)
{
    Rational total = 0;
    const bool agnostic = kind.tag == PatternTag::BAD_TRIPLE || kind.tag == PatternTag::PASCH ||
                          kind.tag == PatternTag::BAD_TIGHT_PATH || kind.tag == PatternTag::SIMPLE_PATH ||
                          kind.tag == PatternTag::SIMPLE_CYCLE || kind.tag == PatternTag::FAULTY_SIMPLE_PATH;
    for (const auto& s : kind_shapes(kind, k_a, k_b, cap)) {
        Rational b = expected_copies_bound(s, n, p, k_a, k_b).value;
        if (agnostic && distinct_families && k_a == k_b)
            b *= pow(Rational(2), static_cast<unsigned>(s.edges));
        total += b;
    }
    return total;
}

SystemCountBound system_count_bound(int q, const RationalMatrix& core_a, const RationalMatrix& core_b, long long n)
{
    if (core_a.cols() != core_b.cols() || core_a.rows() != core_b.rows())
        throw DimensionError("cores must have equal dimensions");
    const std::size_t k = core_a.cols();
    const std::size_t l = core_a.rows();
    if (q < 0 || static_cast<std::size_t>(q) >= k)
        throw PreconditionError("q must satisfy 0 <= q < k");
    if (rank(core_a) != l || rank(core_b) != l)
        throw PreconditionError("cores must have full row rank");
    SystemCountBound out;
    const Rational qf(factorial(static_cast<unsigned>(q)));
    bool all_full = true;
    for (const RationalMatrix* m : {&core_a, &core_b})
        for (const auto& w : subsets_lex(k, static_cast<std::size_t>(q), static_cast<std::size_t>(q))) {
            std::vector<std::size_t> rest;
            for (std::size_t c = 0; c < k; ++c)
                if (!std::binary_search(w.begin(), w.end(), c))
                    rest.push_back(c);
            const std::size_t r = rank(restrict_columns(*m, rest));
            all_full = all_full && r == l;
            out.total += qf * pow(Rational(n), static_cast<unsigned>(k - static_cast<std::size_t>(q) - r));
        }
    if (q == 2 && all_full && k >= l + 2) {
        out.q2_checked = true;
        out.q2_bound = Rational(2) * Rational(factorial(static_cast<unsigned>(k))) *
                       pow(Rational(n), static_cast<unsigned>(k - l - 2));
        out.q2_within = out.total <= out.q2_bound;
    }
    return out;
}

Rational strictly_balanced_margin(const RationalMatrix& m, const ColumnSet& w)
{
    const std::size_t k = m.cols();
    std::set<std::size_t> ws(w.begin(), w.end());
    if (ws.size() != w.size() || ws.size() < 2 || ws.size() + 1 > k || (!ws.empty() && *ws.rbegin() >= k))
        throw PreconditionError("W must be a set of columns with 2 <= |W| <= k-1");
    std::vector<std::size_t> rest;
    for (std::size_t c = 0; c < k; ++c)
        if (!ws.count(c))
            rest.push_back(c);
    const long long l = static_cast<long long>(rank(m));
    const long long r = static_cast<long long>(rank(restrict_columns(m, rest)));
    return Rational(l * static_cast<long long>(k - ws.size()) - static_cast<long long>(k - 1) * r);
}

std::string bound_csv_header() { return "# schema=1\nkind,n,p,trials,mean,bound,truncated\n"; }

std::string BoundReport::csv_row() const
{
    std::ostringstream out;
    out << kind << "," << n << "," << p << "," << trials << "," << to_decimal_string(to_decimal(mean), 12) << ","
        << to_decimal_string(to_decimal(bound), 12) << "," << (truncated_trials > 0 ? 1 : 0) << "\n";
    return out.str();
}

nlohmann::json BoundReport::to_json() const
{
    return {{"kind", kind},
            {"n", n},
            {"p", p},
            {"k_a", k_a},
            {"k_b", k_b},
            {"trials", trials},
            {"truncated_trials", truncated_trials},
            {"total", total.str()},
            {"mean", to_string(mean)},
            {"mean_decimal", to_decimal_string(to_decimal(mean))},
            {"bound", to_string(bound)},
            {"bound_decimal", to_decimal_string(to_decimal(bound))},
            {"counts", counts}};
}

std::vector<BoundReport> empirical_counts(const LinearSystem& a, const LinearSystem& b, const EmpiricalOptions& o)
{
    if (o.trials < 1)
        throw PreconditionError("trials must be at least 1");
    const std::size_t nk = o.kinds.size();
    const std::size_t trials = static_cast<std::size_t>(o.trials);
    std::vector<std::vector<CountResult>> per_trial(trials);
    parallel_for(trials, o.threads, [&](std::size_t t) {
        const SampledSet set = sample_set(o.n, o.p, o.seed_base + t);
        const Hypergraph g = build_hypergraph(a, b, set);
        per_trial[t].resize(nk);
        for (std::size_t i = 0; i < nk; ++i)
            per_trial[t][i] = count(g, o.kinds[i], o.cap, o.limit);
    });
    const int k_a = static_cast<int>(a.cols()), k_b = static_cast<int>(b.cols());
    const bool distinct = !(a.matrix == b.matrix && a.rhs == b.rhs);
    std::vector<BoundReport> out;
    for (std::size_t i = 0; i < nk; ++i) {
        BoundReport r;
        r.kind = o.kinds[i].label();
        r.n = o.n;
        r.p = o.p_text.empty() ? to_string(o.p) : o.p_text;
        r.k_a = k_a;
        r.k_b = k_b;
        r.trials = o.trials;
        for (std::size_t t = 0; t < trials; ++t) {
            const CountResult& c = per_trial[t][i];
            r.counts.push_back(c.count);
            r.truncated.push_back(c.truncated);
            if (c.truncated)
                ++r.truncated_trials;
            else
                r.total += c.count;
        }
        const int used = r.trials - r.truncated_trials;
        r.mean = used > 0 ? Rational(r.total) / used : Rational(0);
        r.bound = kind_expected_bound(o.kinds[i], o.n, o.p, std::min(k_a, k_b), std::max(k_a, k_b), o.cap, distinct);
        out.push_back(std::move(r));
    }
    return out;
}

Rational exact_expectation(const LinearSystem& a, const LinearSystem& b, long long n, const Rational& p,
                           const PatternKind& kind, int cap)
{
    std::vector<long long> all;
    for (long long x = 1; x <= n; ++x)
        all.push_back(x);
    const Hypergraph k = build_hypergraph(a, b, explicit_set(n, all));
    Rational total = 0;
    for (const auto& m : all_matches(k, kind, cap, static_cast<std::size_t>(-1)))
        total += pow(p, static_cast<unsigned>(m.vertex_count));
    return total;
}

}  // namespace rado
