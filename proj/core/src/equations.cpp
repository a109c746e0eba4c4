#include "rado/equations.hpp"

#include "rado/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace rado {

bool LinearSystem::homogeneous() const
{
    return std::all_of(rhs.begin(), rhs.end(), [](const Integer& v) { return v == 0; });
}

std::vector<Rational> LinearSystem::rhs_rational() const
{
    return {rhs.begin(), rhs.end()};
}

LinearSystem LinearSystem::underlying() const
{
    LinearSystem out = *this;
    std::fill(out.rhs.begin(), out.rhs.end(), Integer(0));
    return out;
}

LinearSystem LinearSystem::from_ints(const std::vector<std::vector<long long>>& rows,
                                     const std::vector<long long>& rhs)
{
    LinearSystem sys;
    sys.matrix = RationalMatrix::from_int_rows(rows);
    if (rhs.size() != sys.matrix.rows())
        throw DimensionError("rhs length does not match rows");
    for (long long v : rhs)
        sys.rhs.emplace_back(v);
    for (std::size_t c = 0; c < sys.matrix.cols(); ++c)
        sys.variables.push_back("x" + std::to_string(c + 1));
    return sys;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    LinearSystem parse()
    {
        std::vector<std::map<std::size_t, Integer>> rows;
        std::vector<Integer> rhs;
        std::vector<std::vector<std::size_t>> mentioned;
        skip_ws();
        if (at_end())
            throw ParseError(pos_, "empty equation");
        while (true) {
            std::map<std::size_t, Integer> coeffs;
            std::vector<std::size_t> seen;
            Integer constant = 0;
            side(coeffs, seen, constant, 1);
            skip_ws();
            if (!consume('='))
                throw ParseError(pos_, "expected '='");
            side(coeffs, seen, constant, -1);
            rows.push_back(std::move(coeffs));
            mentioned.push_back(std::move(seen));
            rhs.push_back(-constant);
            skip_ws();
            if (at_end())
                break;
            if (!consume(';'))
                throw ParseError(pos_, "expected ';' or end of input");
            skip_ws();
            if (at_end())
                break;
        }

        const std::size_t k = names_.size();
        if (k == 0)
            throw ParseError(0, "no variables");
        if (rows.size() == 1) {
            for (std::size_t v : mentioned[0])
                if (rows[0][v] == 0)
                    throw ParseError(first_pos_[v], "coefficient of '" + names_[v] + "' is zero");
        }
        LinearSystem sys;
        sys.matrix = RationalMatrix(rows.size(), k);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (const auto& [v, c] : rows[r])
                sys.matrix.at(r, v) = Rational(c);
        sys.rhs = std::move(rhs);
        sys.variables = names_;
        return sys;
    }

private:
    void side(std::map<std::size_t, Integer>& coeffs, std::vector<std::size_t>& seen, Integer& constant,
              int direction)
    {
        bool first = true;
        while (true) {
            skip_ws();
            int sign = 1;
            std::size_t term_start = pos_;
            if (consume('+')) {
            } else if (consume('-')) {
                sign = -1;
            } else if (!first) {
                return;
            }
            skip_ws();
            if (at_end())
                throw ParseError(pos_, "expected term");
            Integer coef = 1;
            bool has_number = false;
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coef = number();
                has_number = true;
                skip_ws();
                if (consume('*')) {
                    skip_ws();
                    if (at_end() || !ident_start(peek()))
                        throw ParseError(pos_, "expected variable after '*'");
                }
            }
            if (!at_end() && ident_start(peek())) {
                std::size_t at = pos_;
                std::size_t v = variable(ident(), at);
                coeffs[v] += direction * sign * coef;
                if (std::find(seen.begin(), seen.end(), v) == seen.end())
                    seen.push_back(v);
            } else if (has_number) {
                constant += direction * sign * coef;
            } else {
                throw ParseError(term_start, "expected term");
            }
            first = false;
        }
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    std::string ident()
    {
        std::size_t start = pos_;
        while (!at_end() && ident_char(peek()))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Integer number()
    {
        Integer v = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            v = v * 10 + (text_[pos_++] - '0');
        return v;
    }

    std::size_t variable(const std::string& name, std::size_t at)
    {
        auto it = std::find(names_.begin(), names_.end(), name);
        if (it != names_.end())
            return static_cast<std::size_t>(it - names_.begin());
        names_.push_back(name);
        first_pos_.push_back(at);
        return names_.size() - 1;
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    bool consume(char c)
    {
        if (!at_end() && peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::vector<std::string> names_;
    std::vector<std::size_t> first_pos_;
};

}  // namespace

LinearSystem parse_system(std::string_view text)
{
    return Parser(text).parse();
}

std::string to_string(const LinearSystem& sys)
{
    std::ostringstream out;
    for (std::size_t r = 0; r < sys.rows(); ++r) {
        if (r)
            out << "; ";
        bool first = true;
        for (std::size_t c = 0; c < sys.cols(); ++c) {
            const Rational& a = sys.matrix(r, c);
            if (a == 0)
                continue;
            Rational mag = a < 0 ? Rational(-a) : a;
            if (first)
                out << (a < 0 ? "-" : "");
            else
                out << (a < 0 ? " - " : " + ");
            if (mag != 1)
                out << to_string(mag) << '*';
            out << sys.variables[c];
            first = false;
        }
        if (first)
            out << '0';
        out << " = " << sys.rhs[r].str();
    }
    return out.str();
}

bool partition_regular_single(const LinearSystem& eq)
{
    if (eq.rows() != 1)
        throw PreconditionError("partition regularity criterion needs a single equation");
    if (!eq.homogeneous())
        throw PreconditionError("partition regularity criterion needs a homogeneous equation");
    std::set<Rational> sums;  // sums of nonempty subsets seen so far
    for (std::size_t c = 0; c < eq.cols(); ++c) {
        const Rational& a = eq.matrix(0, c);
        if (a == 0)
            throw PreconditionError("coefficient " + std::to_string(c + 1) + " is zero");
        std::set<Rational> next = sums;
        next.insert(a);
        for (const auto& s : sums)
            next.insert(s + a);
        sums = std::move(next);
        if (sums.count(Rational(0)))
            return true;
    }
    return false;
}

bool has_property_star(const RationalMatrix& m)
{
    for (std::size_t i = 0; i < m.cols(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (left_support_pair_exists(m, i, j))
                return false;
    return true;
}

std::string to_string(Tri t)
{
    switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(Regularity r)
{
    switch (r) {
    case Regularity::yes: return "yes";
    case Regularity::no: return "no";
    case Regularity::not_computed: return "not-computed";
    }
    return "not-computed";
}

namespace {

// Is (e_i - e_j | 0) in the row space of [M | rhs]? Then x_i = x_j on every solution.
bool forces_equal(const RationalMatrix& aug, std::size_t base_rank, std::size_t i, std::size_t j)
{
    RationalMatrix ext(aug.rows() + 1, aug.cols());
    for (std::size_t r = 0; r < aug.rows(); ++r)
        for (std::size_t c = 0; c < aug.cols(); ++c)
            ext.at(r, c) = aug(r, c);
    ext.at(aug.rows(), i) = 1;
    ext.at(aug.rows(), j) = -1;
    return rank(ext) == base_rank;
}

// Some row has all coefficients of one sign (zeros allowed, not all zero) with
// rhs of the opposite sign or zero: impossible over positive integers.
bool sign_obstruction(const LinearSystem& sys)
{
    for (std::size_t r = 0; r < sys.rows(); ++r) {
        bool any_pos = false, any_neg = false;
        for (std::size_t c = 0; c < sys.cols(); ++c) {
            any_pos |= sys.matrix(r, c) > 0;
            any_neg |= sys.matrix(r, c) < 0;
        }
        if (any_pos && !any_neg && sys.rhs[r] <= 0)
            return true;
        if (any_neg && !any_pos && sys.rhs[r] >= 0)
            return true;
    }
    return false;
}

class WitnessSearch {
public:
    WitnessSearch(const LinearSystem& sys, long long bound, unsigned long long budget)
        : sys_(sys), bound_(bound), budget_(budget), k_(sys.cols())
    {
        const auto rhs = sys.rhs_rational();
        for (std::size_t d = 0; d <= k_; ++d) {
            std::vector<std::size_t> prefix(d);
            for (std::size_t i = 0; i < d; ++i)
                prefix[i] = i;
            solvers_.emplace_back(sys.matrix, rhs, prefix);
            constraints_.push_back(prefix_constraints(d));
        }
        for (std::size_t d = 0; d <= k_; ++d) {
            if (solvers_[d].determined()) {
                depth_ = d;
                break;
            }
        }
    }

    // Lexicographically smallest k-distinct solution in [bound]^k.
    std::optional<std::vector<long long>> run()
    {
        values_.assign(k_, 0);
        if (!solvers_[0].consistent())
            return std::nullopt;
        if (dfs(0))
            return values_;
        return std::nullopt;
    }

    bool exhausted() const noexcept { return exhausted_; }

private:
    struct Constraint {
        std::vector<long long> coeff;  // over prefix columns
        long long constant;
    };

    // Linear relations among x_0..x_{d-1} implied by the system: rows of the
    // reduced form of [M | rhs] whose pivots fall in the first d columns after
    // reordering the remaining columns first.
    std::vector<Constraint> prefix_constraints(std::size_t d) const
    {
        const std::size_t rest = k_ - d;
        RationalMatrix aug(sys_.rows(), k_ + 1);
        for (std::size_t r = 0; r < sys_.rows(); ++r) {
            for (std::size_t c = 0; c < rest; ++c)
                aug.at(r, c) = sys_.matrix(r, d + c);
            for (std::size_t c = 0; c < d; ++c)
                aug.at(r, rest + c) = sys_.matrix(r, c);
            aug.at(r, k_) = Rational(sys_.rhs[r]);
        }
        Echelon e = rref(aug);
        std::vector<Constraint> out;
        for (std::size_t r = 0; r < e.rank(); ++r) {
            if (e.pivot_cols[r] < rest || e.pivot_cols[r] == k_)
                continue;
            Integer lcm = 1;
            for (std::size_t c = rest; c <= k_; ++c) {
                Integer den = boost::multiprecision::denominator(e.reduced(r, c));
                lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
            }
            Constraint con;
            for (std::size_t c = 0; c < d; ++c)
                con.coeff.push_back(
                    boost::multiprecision::numerator(Rational(e.reduced(r, rest + c) * lcm)).convert_to<long long>());
            con.constant = boost::multiprecision::numerator(Rational(e.reduced(r, k_) * lcm)).convert_to<long long>();
            out.push_back(std::move(con));
        }
        return out;
    }

    bool admissible(std::size_t d) const
    {
        for (const auto& con : constraints_[d]) {
            Int128 acc = 0;
            for (std::size_t c = 0; c < d; ++c)
                acc += static_cast<Int128>(con.coeff[c]) * values_[c];
            if (acc != con.constant)
                return false;
        }
        return true;
    }

    bool complete()
    {
        if (++leaves_ > budget_) {
            exhausted_ = true;
            return false;
        }
        const AffineSolver& s = solvers_[depth_];
        std::vector<long long> prefix(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(depth_));
        std::vector<long long> out = values_;
        if (!s.solve(prefix, out))
            return false;
        for (std::size_t c = depth_; c < k_; ++c)
            if (out[c] < 1 || out[c] > bound_)
                return false;
        std::vector<long long> sorted = out;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return false;
        values_ = out;
        return true;
    }

    bool dfs(std::size_t d)
    {
        if (exhausted_)
            return false;
        if (d == depth_)
            return complete();
        for (long long v = 1; v <= bound_; ++v) {
            bool used = false;
            for (std::size_t c = 0; c < d; ++c)
                used |= values_[c] == v;
            if (used)
                continue;
            values_[d] = v;
            if (!admissible(d + 1))
                continue;
            if (dfs(d + 1))
                return true;
            if (exhausted_)
                return false;
        }
        return false;
    }

    const LinearSystem& sys_;
    long long bound_;
    unsigned long long budget_;
    std::size_t k_;
    std::size_t depth_ = 0;
    std::vector<AffineSolver> solvers_;
    std::vector<std::vector<Constraint>> constraints_;
    std::vector<long long> values_;
    unsigned long long leaves_ = 0;
    bool exhausted_ = false;
};

}  // namespace

Irredundancy irredundant(const LinearSystem& sys, const IrredundancyOptions& options)
{
    Irredundancy result;
    result.bound = options.bound;
    const std::size_t k = sys.cols();

    RationalMatrix aug(sys.rows(), k + 1);
    for (std::size_t r = 0; r < sys.rows(); ++r) {
        for (std::size_t c = 0; c < k; ++c)
            aug.at(r, c) = sys.matrix(r, c);
        aug.at(r, k) = Rational(sys.rhs[r]);
    }
    const std::size_t aug_rank = rank(aug);
    if (aug_rank != rank(sys.matrix)) {
        result.verdict = Tri::no;
        result.reason = "inconsistent system";
        return result;
    }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (forces_equal(aug, aug_rank, i, j)) {
                result.verdict = Tri::no;
                result.reason = "every solution has " + sys.variables[i] + " = " + sys.variables[j];
                return result;
            }
    if (sign_obstruction(sys)) {
        result.verdict = Tri::no;
        result.reason = "a row has no positive solutions";
        return result;
    }

    // Single equation with every coefficient and the constant of one strict
    // sign: all solutions are bounded, so a search to that bound decides.
    long long search_bound = options.bound;
    bool complete = false;
    if (sys.rows() == 1 && sys.rhs[0] != 0) {
        const int sign = sys.rhs[0] > 0 ? 1 : -1;
        bool same = true;
        Integer min_abs = -1;
        for (std::size_t c = 0; c < k; ++c) {
            const Rational& a = sys.matrix(0, c);
            same &= (sign > 0 ? a > 0 : a < 0);
            Integer mag = boost::multiprecision::abs(boost::multiprecision::numerator(a));
            if (min_abs < 0 || mag < min_abs)
                min_abs = mag;
        }
        if (same && min_abs > 0) {
            Integer cap = boost::multiprecision::abs(sys.rhs[0]) / min_abs;
            if (cap < 1)
                cap = 1;
            if (cap <= 1'000'000) {
                search_bound = cap.convert_to<long long>();
                complete = true;
            }
        }
    }

    WitnessSearch search(sys, search_bound, options.leaf_budget);
    auto witness = search.run();
    result.bound = search_bound;
    if (witness) {
        result.verdict = Tri::yes;
        result.witness = *witness;
        result.reason = "witness found";
    } else if (complete && !search.exhausted()) {
        result.verdict = Tri::no;
        result.reason = "finitely many solutions, none k-distinct";
    } else {
        result.verdict = Tri::unknown;
        result.reason = search.exhausted() ? "search budget exhausted" : "no witness up to bound";
    }
    return result;
}

Classification classify(const LinearSystem& sys, const IrredundancyOptions& options)
{
    Classification c;
    c.full_rank = rank(sys.matrix) == sys.rows();
    c.property_star = has_property_star(sys.matrix);
    if (sys.rows() == 1) {
        bool nonzero = true;
        for (std::size_t i = 0; i < sys.cols(); ++i)
            nonzero &= sys.matrix(0, i) != 0;
        if (nonzero)
            c.partition_regular = partition_regular_single(sys.underlying()) ? Regularity::yes : Regularity::no;
    }
    c.irredundant = irredundant(sys, options);
    c.underlying_irredundant = sys.homogeneous() ? c.irredundant : irredundant(sys.underlying(), options);
    return c;
}

}  // namespace rado
