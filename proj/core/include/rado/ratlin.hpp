#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rado/rational.hpp"

namespace rado {

// Dense exact matrix. Zero columns are allowed (restrictions to an empty
// column set); zero rows are allowed only for internal intermediates.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static RationalMatrix from_int_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    RationalMatrix transpose() const;
    bool all_integer() const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

std::string to_string(const RationalMatrix& m);

// Reduced row echelon form; pivots are chosen as the first nonzero entry in
// column order. `pivot_cols` lists the pivot column of each nonzero row.
struct Echelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

Echelon rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Columns in ascending order; throws std::out_of_range for a bad index.
RationalMatrix restrict_columns(const RationalMatrix& m, const std::vector<std::size_t>& keep);
RationalMatrix restrict_rows(const RationalMatrix& m, const std::vector<std::size_t>& keep);

// Basis (as rows) of { y : y^T M = 0 }.
std::vector<std::vector<Rational>> left_null_space(const RationalMatrix& m);

bool left_support_pair_exists(const RationalMatrix& m, std::size_t i, std::size_t j);

enum class SolveStatus { unique, inconsistent, underdetermined };

struct SolveResult {
    SolveStatus status = SolveStatus::inconsistent;
    std::vector<Rational> values;  // full k-vector when status == unique
};

// fixed[c] set means variable c is pinned to that value.
SolveResult solve_right(const RationalMatrix& m, const std::vector<Rational>& rhs,
                        const std::vector<std::optional<Rational>>& fixed);

// Repeated solving of M x = rhs for a fixed set of free columns, with
// integer-only inputs. The system is put in reduced form once; each call then
// costs O(rank * free) machine operations. Values outside the 64-bit range
// are reported as non-integral.
class AffineSolver {
public:
    AffineSolver(const RationalMatrix& m, const std::vector<Rational>& rhs,
                 const std::vector<std::size_t>& free_cols);

    bool consistent() const noexcept { return consistent_; }
    // True when the free columns determine every other variable.
    bool determined() const noexcept { return determined_; }
    // True when the system imposes relations among the free values themselves;
    // solve() does not check those.
    bool constrained() const noexcept { return constrained_; }
    const std::vector<std::size_t>& free_cols() const noexcept { return free_; }
    const std::vector<std::size_t>& pivot_cols() const noexcept { return pivots_; }

    // Computes the pivot variables into `out` (indexed by column). Returns
    // false if some pivot value is not an integer.
    bool solve(const std::vector<long long>& free_values, std::vector<long long>& out) const;

private:
    bool consistent_ = true;
    bool determined_ = true;
    bool constrained_ = false;
    std::vector<std::size_t> free_;
    std::vector<std::size_t> pivots_;
    // Per pivot row: D * x_p = C - sum_g N_g * x_free[g]
    std::vector<long long> denom_;
    std::vector<long long> constant_;
    std::vector<std::vector<long long>> coeff_;
};

}  // namespace rado
