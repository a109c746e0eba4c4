#include "rado/params.hpp"

#include "rado/errors.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace rado {

std::string format_set(const ColumnSet& w)
{
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < w.size(); ++i)
        out << (i ? "," : "") << w[i] + 1;
    out << '}';
    return out.str();
}

std::vector<ColumnSet> subsets_lex(std::size_t k, std::size_t min_size, std::size_t max_size)
{
    std::vector<ColumnSet> out;
    ColumnSet cur;
    // Preorder DFS over increasing sequences visits sets in lexicographic order.
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (cur.size() >= min_size && cur.size() <= max_size)
            out.push_back(cur);
        if (cur.size() == max_size)
            return;
        for (std::size_t c = next; c < k; ++c) {
            cur.push_back(c);
            self(self, c + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

ColumnSet complement(const ColumnSet& w, std::size_t k)
{
    ColumnSet out;
    std::size_t j = 0;
    for (std::size_t c = 0; c < k; ++c) {
        if (j < w.size() && w[j] == c)
            ++j;
        else
            out.push_back(c);
    }
    return out;
}

void check_columns(const RationalMatrix& m)
{
    if (m.cols() < 2)
        throw PreconditionError("need at least 2 columns");
    if (m.cols() > kMaxColumns)
        throw PreconditionError("at most " + std::to_string(kMaxColumns) + " columns supported");
}

MResult maximize(const RationalMatrix& m, const std::optional<Rational>& inverse_mb)
{
    const std::size_t k = m.cols();
    const std::size_t r = rank(m);
    MResult best;
    bool have = false;
    for (const ColumnSet& w : subsets_lex(k, 2, k)) {
        PartitionScore s;
        s.W = w;
        s.size_minus_one = w.size() - 1;
        s.rank_complement = rank(restrict_columns(m, complement(w, k)));
        s.rank_full = r;
        s.inverse_m_b = inverse_mb;
        s.denominator = Rational(static_cast<long long>(s.size_minus_one + s.rank_complement)) -
                        Rational(static_cast<long long>(r));
        if (inverse_mb)
            s.denominator += *inverse_mb;
        if (s.denominator <= 0)
            throw PartitionViolation(w, "nonpositive denominator " + to_string(s.denominator) + " at W=" +
                                            format_set(w));
        const long long num = static_cast<long long>(inverse_mb ? w.size() : w.size() - 1);
        s.value = Rational(num) / s.denominator;
        if (!have || s.value > best.value) {
            best.value = s.value;
            best.argmax = s;
            have = true;
        }
    }
    return best;
}

}  // namespace

MResult m_of(const RationalMatrix& m)
{
    check_columns(m);
    if (!has_property_star(m))
        throw PreconditionError("matrix " + to_string(m) + " violates property (*)");
    return maximize(m, std::nullopt);
}

MResult m_asym(const RationalMatrix& ma, const RationalMatrix& mb)
{
    check_columns(ma);
    check_columns(mb);
    if (!has_property_star(ma))
        throw PreconditionError("first matrix violates property (*)");
    if (!has_property_star(mb))
        throw PreconditionError("second matrix violates property (*)");
    const Rational m_a = maximize(ma, std::nullopt).value;
    const Rational m_b = maximize(mb, std::nullopt).value;
    if (m_a < m_b)
        throw PreconditionError("argument order: m(A)=" + to_string(m_a) + " < m(B)=" + to_string(m_b));
    return maximize(ma, Rational(1) / m_b);
}

BalanceResult strictly_balanced(const RationalMatrix& m)
{
    const std::size_t k = m.cols();
    const std::size_t l = m.rows();
    if (rank(m) != l)
        throw PreconditionError("strict balance needs a full-rank matrix");
    if (k < l + 2)
        throw PreconditionError("strict balance needs k >= l + 2");
    if (k > kMaxColumns)
        throw PreconditionError("at most " + std::to_string(kMaxColumns) + " columns supported");
    const Rational target(static_cast<long long>(k - 1), static_cast<long long>(k - 1 - l));
    BalanceResult result;
    for (const ColumnSet& w : subsets_lex(k, 2, k - 1)) {
        const long long rc = static_cast<long long>(rank(restrict_columns(m, complement(w, k))));
        const long long denom = static_cast<long long>(w.size()) - 1 + rc - static_cast<long long>(l);
        if (denom <= 0) {
            result.balanced = false;
            result.violating = w;
            result.nonpositive_denominator = true;
            return result;
        }
        if (!(Rational(static_cast<long long>(w.size()) - 1, denom) < target)) {
            result.balanced = false;
            result.violating = w;
            return result;
        }
    }
    return result;
}

namespace {

struct Deletion {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    bool operator<(const Deletion& o) const { return std::tie(rows, cols) < std::tie(o.rows, o.cols); }
};

std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t size)
{
    std::vector<std::vector<std::size_t>> out;
    for (auto& s : subsets_lex(n, size, size))
        out.push_back(std::move(s));
    return out;
}

std::vector<std::size_t> others(const std::vector<std::size_t>& removed, std::size_t n)
{
    return complement(removed, n);
}

}  // namespace

CoreResult core_of(const RationalMatrix& m, const IrredundancyOptions& options)
{
    CoreResult result;
    const std::size_t l = m.rows();
    const std::size_t k = m.cols();
    const MResult target = m_of(m);
    result.m = target.value;

    for (std::size_t total = 0; total + 3 <= l + k; ++total) {
        std::vector<Deletion> candidates;
        for (std::size_t dr = 0; dr <= std::min(total, l - 1); ++dr) {
            const std::size_t dc = total - dr;
            if (dc > k)
                continue;
            for (const auto& rs : subsets_of_size(l, dr))
                for (const auto& cs : subsets_of_size(k, dc))
                    candidates.push_back({rs, cs});
        }
        std::sort(candidates.begin(), candidates.end());
        for (const Deletion& d : candidates) {
            const auto kept_rows = others(d.rows, l);
            const auto kept_cols = others(d.cols, k);
            if (kept_cols.size() < kept_rows.size() + 2)
                continue;
            RationalMatrix sub = restrict_columns(restrict_rows(m, kept_rows), kept_cols);
            if (rank(sub) != sub.rows())
                continue;
            if (!has_property_star(sub))
                continue;
            Rational value;
            try {
                value = m_of(sub).value;
            } catch (const PartitionViolation&) {
                continue;
            }
            if (value != target.value)
                continue;
            if (!strictly_balanced(sub).balanced)
                continue;
            LinearSystem hom;
            hom.matrix = sub;
            hom.rhs.assign(sub.rows(), Integer(0));
            for (std::size_t c = 0; c < sub.cols(); ++c)
                hom.variables.push_back("x" + std::to_string(kept_cols[c] + 1));
            Irredundancy irr = irredundant(hom, options);
            if (irr.verdict != Tri::yes)
                continue;
            result.found = true;
            result.core = std::move(sub);
            result.deleted_rows = d.rows;
            result.deleted_cols = d.cols;
            result.kept_rows = kept_rows;
            result.kept_cols = kept_cols;
            result.irredundant = true;
            result.full_rank = true;
            result.balanced = true;
            result.m_preserved = true;
            result.irredundancy = std::move(irr);
            return result;
        }
    }
    return result;
}

Rational threshold_exponent(long long k_a, long long k_b)
{
    if (k_a < 3 || k_b < k_a)
        throw PreconditionError("threshold exponent needs 3 <= kA <= kB");
    return Rational(k_a * k_b - k_a - k_b, k_a * k_b - k_a);
}

Rational threshold_exponent_system(long long k, long long l)
{
    if (l < 1 || k < l + 2)
        throw PreconditionError("threshold exponent needs l >= 1 and k >= l + 2");
    return Rational(k - l - 1, k - 1);
}

}  // namespace rado
