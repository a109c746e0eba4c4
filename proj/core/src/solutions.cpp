#include "rado/solutions.hpp"

#include "rado/errors.hpp"

#include <algorithm>

namespace rado {

namespace mp = boost::multiprecision;

void for_each_solution(const LinearSystem& sys, const SampledSet& set,
                       const std::function<bool(const OrderedSolution&)>& emit)
{
    const std::size_t k = sys.cols();
    const Echelon e = rref(sys.matrix);
    if (e.rank() != sys.rows())
        throw PreconditionError("system is not of full rank");
    if (k < sys.rows() + 1)
        throw PreconditionError("system needs k >= l + 1");

    std::vector<bool> pivot(k, false);
    for (std::size_t p : e.pivot_cols)
        pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < k; ++c)
        if (!pivot[c])
            free_cols.push_back(c);

    AffineSolver solver(sys.matrix, sys.rhs_rational(), free_cols);
    if (!solver.consistent() || set.members.empty())
        return;

    const auto& s = set.members;
    const std::size_t f = free_cols.size();
    std::vector<std::size_t> idx(f, 0);
    std::vector<long long> free_values(f);
    OrderedSolution x(k);
    bool stop = false;

    auto check = [&]() {
        for (std::size_t g = 0; g < f; ++g)
            x[free_cols[g]] = free_values[g];
        if (!solver.solve(free_values, x))
            return;
        for (std::size_t p : solver.pivot_cols())
            if (!set.contains(x[p]))
                return;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = i + 1; j < k; ++j)
                if (x[i] == x[j])
                    return;
        if (!emit(x))
            stop = true;
    };

    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (stop)
            return;
        if (depth == f) {
            check();
            return;
        }
        for (std::size_t i = 0; i < s.size() && !stop; ++i) {
            const long long v = s[i];
            bool used = false;
            for (std::size_t g = 0; g < depth; ++g)
                used |= free_values[g] == v;
            if (used)
                continue;
            free_values[depth] = v;
            self(self, depth + 1);
        }
    };
    rec(rec, 0);
}

std::vector<OrderedSolution> enumerate_solutions(const LinearSystem& sys, const SampledSet& set)
{
    std::vector<OrderedSolution> out;
    for_each_solution(sys, set, [&](const OrderedSolution& x) {
        out.push_back(x);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> solution_edges(const LinearSystem& sys, const SampledSet& set, Family family)
{
    std::vector<Edge> edges;
    for_each_solution(sys, set, [&](const OrderedSolution& x) {
        Edge e{x, family};
        std::sort(e.vertices.begin(), e.vertices.end());
        edges.push_back(std::move(e));
        return true;
    });
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.vertices < b.vertices; });
    edges.erase(std::unique(edges.begin(), edges.end(),
                            [](const Edge& a, const Edge& b) { return a.vertices == b.vertices; }),
                edges.end());
    return edges;
}

Hypergraph build_hypergraph(const LinearSystem& a, const LinearSystem& b, const SampledSet& set)
{
    std::vector<Edge> edges = solution_edges(a, set, kFamilyA);
    std::vector<Edge> b_edges = solution_edges(b, set, kFamilyB);
    edges.insert(edges.end(), std::make_move_iterator(b_edges.begin()), std::make_move_iterator(b_edges.end()));
    Provenance prov{set.n, set.p_text, set.seed};
    return Hypergraph::build(set.members, std::move(edges), static_cast<int>(a.cols()), static_cast<int>(b.cols()),
                             prov);
}

ReducedSystem reduce_to_core(const LinearSystem& sys, const IrredundancyOptions& options)
{
    ReducedSystem out;
    out.core = core_of(sys.matrix, options);
    if (!out.core.found)
        throw PreconditionError("no core found for " + to_string(sys));
    const auto& kept = out.core.kept_cols;
    out.kept_cols = kept;
    const std::size_t k = sys.cols();

    std::vector<std::size_t> deleted;
    for (std::size_t c = 0; c < k; ++c)
        if (!std::binary_search(kept.begin(), kept.end(), c))
            deleted.push_back(c);

    // Row combinations y of the system that vanish on the deleted columns give
    // relations y^T M_K x_K = y^T rhs on the kept columns.
    std::vector<std::vector<Rational>> ys;
    if (deleted.empty()) {
        for (std::size_t r = 0; r < sys.rows(); ++r) {
            std::vector<Rational> e(sys.rows());
            e[r] = 1;
            ys.push_back(std::move(e));
        }
    } else {
        ys = left_null_space(restrict_columns(sys.matrix, deleted));
    }
    const RationalMatrix mk = restrict_columns(sys.matrix, kept);
    const std::size_t kk = kept.size();
    const std::size_t m = ys.size();

    // Express each core row c as a combination z of the relation rows: z^T R = c.
    // R is m x kk with rows y^T M_K; solve R^T z = c.
    RationalMatrix rt(kk, m);
    std::vector<Rational> rel_rhs(m);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t c = 0; c < kk; ++c) {
            Rational acc = 0;
            for (std::size_t r = 0; r < sys.rows(); ++r)
                acc += ys[i][r] * mk(r, c);
            rt.at(c, i) = acc;
        }
        Rational acc = 0;
        for (std::size_t r = 0; r < sys.rows(); ++r)
            acc += ys[i][r] * Rational(sys.rhs[r]);
        rel_rhs[i] = acc;
    }

    const RationalMatrix& core = out.core.core;
    LinearSystem reduced;
    reduced.matrix = RationalMatrix(core.rows(), core.cols());
    for (std::size_t c : kept)
        reduced.variables.push_back(sys.variables[c]);
    for (std::size_t r = 0; r < core.rows(); ++r) {
        std::vector<Rational> target = core.row(r);
        Rational constant = 0;
        if (m == 0)
            throw PreconditionError("core row " + std::to_string(r + 1) + " is not implied by the system");
        std::vector<std::optional<Rational>> none(m);
        // Find any z with R^T z = target by fixing free components to zero.
        Echelon e = rref(rt);
        std::vector<bool> is_pivot(m, false);
        for (std::size_t p : e.pivot_cols)
            is_pivot[p] = true;
        for (std::size_t i = 0; i < m; ++i)
            if (!is_pivot[i])
                none[i] = Rational(0);
        SolveResult z = solve_right(rt, target, none);
        if (z.status != SolveStatus::unique)
            throw PreconditionError("core row " + std::to_string(r + 1) + " is not implied by the system");
        for (std::size_t i = 0; i < m; ++i)
            constant += z.values[i] * rel_rhs[i];
        Integer lcm = mp::denominator(constant);
        for (const Rational& v : target) {
            Integer d = mp::denominator(v);
            lcm = lcm / mp::gcd(lcm, d) * d;
        }
        for (std::size_t c = 0; c < core.cols(); ++c)
            reduced.matrix.at(r, c) = target[c] * lcm;
        reduced.rhs.push_back(mp::numerator(Rational(constant * lcm)));
    }
    out.system = std::move(reduced);
    return out;
}

ReducedPair reduce_to_cores(const LinearSystem& a, const LinearSystem& b, const IrredundancyOptions& options)
{
    ReducedPair pair{reduce_to_core(a, options), reduce_to_core(b, options)};
    const auto& ca = pair.a.core.core;
    const auto& cb = pair.b.core.core;
    if (ca.rows() != cb.rows() || ca.cols() != cb.cols())
        throw DimensionError("cores have different dimensions: " + std::to_string(ca.rows()) + "x" +
                             std::to_string(ca.cols()) + " vs " + std::to_string(cb.rows()) + "x" +
                             std::to_string(cb.cols()));
    return pair;
}

}  // namespace rado
