#include "rado/ratlin.hpp"

#include "rado/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rado {

namespace mp = boost::multiprecision;

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries))
{
    if (entries_.size() != rows * cols)
        throw DimensionError("matrix entry count does not match dimensions");
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Rational> entries;
    entries.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols)
            throw DimensionError("ragged matrix rows");
        entries.insert(entries.end(), r.begin(), r.end());
    }
    return RationalMatrix(rows.size(), cols, std::move(entries));
}

RationalMatrix RationalMatrix::from_int_rows(const std::vector<std::vector<long long>>& rows)
{
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rows) {
        std::vector<Rational> converted;
        for (long long v : r)
            converted.emplace_back(v);
        out.push_back(std::move(converted));
    }
    return from_rows(out);
}

std::vector<Rational> RationalMatrix::row(std::size_t r) const
{
    return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.at(c, r) = (*this)(r, c);
    return t;
}

bool RationalMatrix::all_integer() const
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& v) { return is_integer(v); });
}

std::string to_string(const RationalMatrix& m)
{
    std::ostringstream out;
    out << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r)
            out << ", ";
        out << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                out << ", ";
            out << to_string(m(r, c));
        }
        out << ']';
    }
    out << ']';
    return out.str();
}

Echelon rref(const RationalMatrix& m)
{
    RationalMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t found = a.rows();
        for (std::size_t r = row; r < a.rows(); ++r) {
            if (a(r, col) != 0) {
                found = r;
                break;
            }
        }
        if (found == a.rows())
            continue;
        if (found != row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a.at(found, c), a.at(row, c));
        Rational inv = 1 / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c)
            a.at(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0)
                continue;
            Rational factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a.at(r, c) -= factor * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const RationalMatrix& m)
{
    if (m.cols() == 0 || m.rows() == 0)
        return 0;
    return rref(m).rank();
}

RationalMatrix restrict_columns(const RationalMatrix& m, const std::vector<std::size_t>& keep)
{
    std::vector<std::size_t> cols = keep;
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    for (std::size_t c : cols)
        if (c >= m.cols())
            throw std::out_of_range("column index " + std::to_string(c) + " out of range");
    RationalMatrix out(m.rows(), cols.size());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t i = 0; i < cols.size(); ++i)
            out.at(r, i) = m(r, cols[i]);
    return out;
}

RationalMatrix restrict_rows(const RationalMatrix& m, const std::vector<std::size_t>& keep)
{
    std::vector<std::size_t> rows = keep;
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    for (std::size_t r : rows)
        if (r >= m.rows())
            throw std::out_of_range("row index " + std::to_string(r) + " out of range");
    RationalMatrix out(rows.size(), m.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out.at(i, c) = m(rows[i], c);
    return out;
}

std::vector<std::vector<Rational>> left_null_space(const RationalMatrix& m)
{
    // Left null space of M is the right null space of M^T.
    const RationalMatrix t = m.transpose();
    const std::size_t n = t.cols();  // = m.rows()
    std::vector<std::vector<Rational>> basis;
    if (t.rows() == 0) {
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Rational> e(n);
            e[i] = 1;
            basis.push_back(std::move(e));
        }
        return basis;
    }
    Echelon e = rref(t);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivot_cols)
        is_pivot[p] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(n);
        v[f] = 1;
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool left_support_pair_exists(const RationalMatrix& m, std::size_t i, std::size_t j)
{
    if (i == j || i >= m.cols() || j >= m.cols())
        return false;
    std::vector<std::size_t> others;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (c != i && c != j)
            others.push_back(c);
    auto basis = left_null_space(restrict_columns(m, others));
    // Values of the basis combinations on columns i and j.
    std::vector<Rational> on_i, on_j;
    for (const auto& y : basis) {
        Rational vi = 0, vj = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            vi += y[r] * m(r, i);
            vj += y[r] * m(r, j);
        }
        on_i.push_back(vi);
        on_j.push_back(vj);
    }
    // Some combination is nonzero on both iff neither coordinate functional
    // vanishes on the whole span (a vector space is never the union of two
    // proper subspaces).
    bool i_live = std::any_of(on_i.begin(), on_i.end(), [](const Rational& v) { return v != 0; });
    bool j_live = std::any_of(on_j.begin(), on_j.end(), [](const Rational& v) { return v != 0; });
    return i_live && j_live;
}

SolveResult solve_right(const RationalMatrix& m, const std::vector<Rational>& rhs,
                        const std::vector<std::optional<Rational>>& fixed)
{
    if (rhs.size() != m.rows())
        throw DimensionError("rhs length " + std::to_string(rhs.size()) + " does not match " +
                             std::to_string(m.rows()) + " rows");
    if (fixed.size() != m.cols())
        throw DimensionError("assignment length " + std::to_string(fixed.size()) + " does not match " +
                             std::to_string(m.cols()) + " columns");

    std::vector<std::size_t> unknown;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!fixed[c])
            unknown.push_back(c);

    // Augmented system over the unknown columns.
    RationalMatrix aug(m.rows(), unknown.size() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational b = rhs[r];
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (fixed[c])
                b -= m(r, c) * *fixed[c];
        for (std::size_t u = 0; u < unknown.size(); ++u)
            aug.at(r, u) = m(r, unknown[u]);
        aug.at(r, unknown.size()) = b;
    }
    Echelon e = rref(aug);
    SolveResult result;
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == unknown.size()) {
        result.status = SolveStatus::inconsistent;
        return result;
    }
    if (e.rank() < unknown.size()) {
        result.status = SolveStatus::underdetermined;
        return result;
    }
    result.status = SolveStatus::unique;
    result.values.resize(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (fixed[c])
            result.values[c] = *fixed[c];
    for (std::size_t r = 0; r < e.rank(); ++r)
        result.values[unknown[e.pivot_cols[r]]] = e.reduced(r, unknown.size());
    return result;
}

namespace {

long long to_ll(const Integer& v)
{
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw PreconditionError("coefficient exceeds 64-bit range");
    return v.convert_to<long long>();
}

}  // namespace

AffineSolver::AffineSolver(const RationalMatrix& m, const std::vector<Rational>& rhs,
                           const std::vector<std::size_t>& free_cols)
    : free_(free_cols)
{
    if (rhs.size() != m.rows())
        throw DimensionError("rhs length does not match rows");
    std::vector<bool> is_free(m.cols(), false);
    for (std::size_t f : free_)
        is_free.at(f) = true;
    std::vector<std::size_t> bound;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_free[c])
            bound.push_back(c);

    // Columns ordered: bound first, then free, then rhs.
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::size_t c = 0;
        for (std::size_t b : bound)
            aug.at(r, c++) = m(r, b);
        for (std::size_t f : free_)
            aug.at(r, c++) = m(r, f);
        aug.at(r, c) = rhs[r];
    }
    Echelon e = rref(aug);
    for (std::size_t r = 0; r < e.rank(); ++r) {
        std::size_t p = e.pivot_cols[r];
        if (p >= bound.size()) {
            // Pivot in a free column: a linear relation among the free values,
            // or inconsistency if the pivot is the rhs column.
            if (p == m.cols())
                consistent_ = false;
            else
                constrained_ = true;
            continue;
        }
        pivots_.push_back(bound[p]);
        // Scale row to integers: D * x_p + sum N_g x_g = C
        Integer lcm = 1;
        for (std::size_t c = 0; c <= m.cols(); ++c) {
            const Integer d = mp::denominator(e.reduced(r, c));
            lcm = lcm / mp::gcd(lcm, d) * d;
        }
        denom_.push_back(to_ll(lcm));
        std::vector<long long> row;
        for (std::size_t g = 0; g < free_.size(); ++g)
            row.push_back(to_ll(mp::numerator(Rational(e.reduced(r, bound.size() + g) * lcm))));
        coeff_.push_back(std::move(row));
        constant_.push_back(to_ll(mp::numerator(Rational(e.reduced(r, m.cols()) * lcm))));
    }
    if (pivots_.size() < bound.size())
        determined_ = false;
}

bool AffineSolver::solve(const std::vector<long long>& free_values, std::vector<long long>& out) const
{
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
        Int128 acc = constant_[r];
        const auto& row = coeff_[r];
        for (std::size_t g = 0; g < row.size(); ++g)
            acc -= static_cast<Int128>(row[g]) * free_values[g];
        const long long d = denom_[r];
        if (acc % d != 0)
            return false;
        acc /= d;
        if (acc > std::numeric_limits<long long>::max() || acc < std::numeric_limits<long long>::min())
            return false;
        out[pivots_[r]] = static_cast<long long>(acc);
    }
    return true;
}

}  // namespace rado
