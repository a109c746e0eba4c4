#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rado/ratlin.hpp"

namespace rado {

// M x = rhs with integer M and rhs.
struct LinearSystem {
    RationalMatrix matrix;
    std::vector<Integer> rhs;
    std::vector<std::string> variables;  // column names, first-appearance order

    std::size_t rows() const noexcept { return matrix.rows(); }
    std::size_t cols() const noexcept { return matrix.cols(); }
    bool homogeneous() const;
    std::vector<Rational> rhs_rational() const;

    // Homogeneous system on the same matrix.
    LinearSystem underlying() const;

    static LinearSystem from_ints(const std::vector<std::vector<long long>>& rows,
                                  const std::vector<long long>& rhs);
};

// Grammar: rows separated by ';'. A row is `side = side` where each side is a
// signed sum of terms: an integer constant, `v`, `c v` or `c*v` (v an
// identifier, c a non-negative integer). Terms move to the left and constants
// to the right. Whitespace is ignored.
LinearSystem parse_system(std::string_view text);

std::string to_string(const LinearSystem& sys);

bool partition_regular_single(const LinearSystem& eq);

bool has_property_star(const RationalMatrix& m);

enum class Tri { yes, no, unknown };

std::string to_string(Tri t);

struct Irredundancy {
    Tri verdict = Tri::unknown;
    std::vector<long long> witness;  // k-distinct solution when yes
    long long bound = 0;             // largest value searched
    std::string reason;              // certificate or search note
};

struct IrredundancyOptions {
    long long bound = 10000;
    // Upper limit on search leaves before giving up with `unknown`.
    unsigned long long leaf_budget = 200'000'000ULL;
};

Irredundancy irredundant(const LinearSystem& sys, const IrredundancyOptions& options = {});

enum class Regularity { yes, no, not_computed };

std::string to_string(Regularity r);

struct Classification {
    Regularity partition_regular = Regularity::not_computed;
    Irredundancy irredundant;
    Irredundancy underlying_irredundant;
    bool property_star = false;
    bool full_rank = false;
};

Classification classify(const LinearSystem& sys, const IrredundancyOptions& options = {});

}  // namespace rado
