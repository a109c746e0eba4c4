#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rado/equations.hpp"
#include "rado/errors.hpp"
#include "rado/ratlin.hpp"

namespace rado {

using ColumnSet = std::vector<std::size_t>;  // sorted, 0-based

std::string format_set(const ColumnSet& w);  // 1-based "{1,2}"

struct PartitionScore {
    ColumnSet W;
    Rational value;
    std::size_t size_minus_one = 0;   // |W| - 1
    std::size_t rank_complement = 0; // rank of the restriction to the other columns
    std::size_t rank_full = 0;
    std::optional<Rational> inverse_m_b;  // 1/m(B) term for the asymmetric form
    Rational denominator;
};

// A partition with nonpositive denominator.
class PartitionViolation : public PreconditionError {
public:
    PartitionViolation(ColumnSet w, const std::string& message) : PreconditionError(message), w_(std::move(w)) {}
    const ColumnSet& W() const noexcept { return w_; }

private:
    ColumnSet w_;
};

struct MResult {
    Rational value;
    PartitionScore argmax;
};

// All W with |W| >= min_size, ordered lexicographically as sorted lists.
std::vector<ColumnSet> subsets_lex(std::size_t k, std::size_t min_size, std::size_t max_size);

inline constexpr std::size_t kMaxColumns = 16;

MResult m_of(const RationalMatrix& m);

MResult m_asym(const RationalMatrix& ma, const RationalMatrix& mb);

struct BalanceResult {
    bool balanced = true;
    std::optional<ColumnSet> violating;
    bool nonpositive_denominator = false;
};

BalanceResult strictly_balanced(const RationalMatrix& m);

struct CoreResult {
    bool found = false;
    RationalMatrix core;
    std::vector<std::size_t> deleted_rows;
    std::vector<std::size_t> deleted_cols;
    std::vector<std::size_t> kept_rows;
    std::vector<std::size_t> kept_cols;
    bool irredundant = false;
    bool full_rank = false;
    bool balanced = false;
    bool m_preserved = false;
    Rational m;
    Irredundancy irredundancy;
};

CoreResult core_of(const RationalMatrix& m, const IrredundancyOptions& options = {});

Rational threshold_exponent(long long k_a, long long k_b);

Rational threshold_exponent_system(long long k, long long l);

}  // namespace rado
