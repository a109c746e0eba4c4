#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "rado/equations.hpp"
#include "rado/errors.hpp"

using namespace rado;

namespace {

// Subset-sum oracle for single equations.
bool some_subset_sums_to_zero(const std::vector<long long>& c)
{
    for (std::size_t mask = 1; mask < (std::size_t{1} << c.size()); ++mask) {
        long long s = 0;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (mask >> i & 1)
                s += c[i];
        if (s == 0)
            return true;
    }
    return false;
}

LinearSystem single(const std::vector<long long>& c) { return LinearSystem::from_ints({c}, {0}); }

bool satisfies(const LinearSystem& sys, const std::vector<long long>& x)
{
    for (std::size_t r = 0; r < sys.rows(); ++r) {
        Rational s = 0;
        for (std::size_t c = 0; c < sys.cols(); ++c)
            s += sys.matrix(r, c) * x[c];
        if (s != Rational(sys.rhs[r]))
            return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("equations")
{
    TEST_CASE("parse_system examples")
    {
        auto s = parse_system("x + y - z = 0");
        CHECK(s.matrix == RationalMatrix::from_int_rows({{1, 1, -1}}));
        CHECK(s.rhs == std::vector<Integer>{0});
        CHECK(s.variables == std::vector<std::string>{"x", "y", "z"});
        s = parse_system("x + y - 2z = 0");
        CHECK(s.matrix == RationalMatrix::from_int_rows({{1, 1, -2}}));
        s = parse_system("x+y-z=0; y+z-w=0");
        CHECK(s.matrix == RationalMatrix::from_int_rows({{1, 1, -1, 0}, {0, 1, 1, -1}}));
        s = parse_system("x + 2*y = 3z + 1");
        CHECK(s.matrix == RationalMatrix::from_int_rows({{1, 2, -3}}));
        CHECK(s.rhs == std::vector<Integer>{1});
    }

    TEST_CASE("parse errors carry a position")
    {
        CHECK_THROWS_AS(parse_system("x + = 0"), ParseError);
        CHECK_THROWS_AS(parse_system("x + y"), ParseError);
        CHECK_THROWS_AS(parse_system("x - x + y = 0"), ParseError);
        try {
            parse_system("x + y ? z = 0");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.position() == 6);
        }
    }

    TEST_CASE("partition_regular_single examples")
    {
        CHECK(partition_regular_single(single({1, 1, -1})));
        CHECK_FALSE(partition_regular_single(single({2, 2, -1})));
        CHECK_FALSE(partition_regular_single(single({1, -2})));
        CHECK_THROWS(partition_regular_single(LinearSystem::from_ints({{1, 1, -1}}, {1})));
        CHECK_THROWS(partition_regular_single(LinearSystem::from_ints({{1, 1, -1, 0}, {0, 1, 1, -1}}, {0, 0})));
    }

    TEST_CASE("partition regularity matches subset sums and is symmetric")
    {
        std::mt19937_64 rng(21);
        for (int it = 0; it < 400; ++it) {
            const std::size_t k = 2 + rng() % 5;
            std::vector<long long> c(k);
            for (auto& v : c) {
                v = static_cast<long long>(rng() % 9) - 4;
                if (v == 0)
                    v = 1;
            }
            const bool base = partition_regular_single(single(c));
            CHECK(base == some_subset_sums_to_zero(c));
            auto perm = c;
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(partition_regular_single(single(perm)) == base);
            for (auto& v : perm)
                v = -v;
            CHECK(partition_regular_single(single(perm)) == base);
        }
    }

    TEST_CASE("property star examples")
    {
        CHECK(has_property_star(RationalMatrix::from_int_rows({{1, 1, -1}})));
        CHECK_FALSE(has_property_star(RationalMatrix::from_int_rows({{1, -2}})));
        CHECK(has_property_star(RationalMatrix::from_int_rows({{1, 1, -1, 0}, {0, 1, 1, -1}})));
    }

    TEST_CASE("property star holds for every nonzero single equation of length at least 3")
    {
        std::mt19937_64 rng(22);
        for (int it = 0; it < 200; ++it) {
            const std::size_t k = 3 + rng() % 5;
            std::vector<long long> c(k);
            for (auto& v : c)
                v = static_cast<long long>(1 + rng() % 6) * (rng() % 2 ? 1 : -1);
            CHECK(has_property_star(RationalMatrix::from_int_rows({c})));
        }
    }

    TEST_CASE("property star is invariant under invertible row mixing")
    {
        std::mt19937_64 rng(23);
        for (int it = 0; it < 150; ++it) {
            const std::size_t l = 1 + rng() % 3;
            const std::size_t k = 2 + rng() % 4;
            oracle::Rows rows(l, std::vector<long long>(k));
            for (auto& r : rows)
                for (auto& v : r)
                    v = rng() % 3 == 0 ? 0 : static_cast<long long>(rng() % 7) - 3;
            const auto m = RationalMatrix::from_int_rows(rows);
            oracle::Rows mix;
            do {
                mix.assign(l, std::vector<long long>(l));
                for (auto& r : mix)
                    for (auto& v : r)
                        v = static_cast<long long>(rng() % 7) - 3;
            } while (oracle::bareiss_rank(mix) != l);
            RationalMatrix mixed(l, k);
            for (std::size_t i = 0; i < l; ++i)
                for (std::size_t j = 0; j < k; ++j) {
                    Rational s = 0;
                    for (std::size_t t = 0; t < l; ++t)
                        s += Rational(mix[i][t], 1 + static_cast<long long>(t)) * m(t, j);
                    mixed.at(i, j) = s;
                }
            CHECK(has_property_star(mixed) == has_property_star(m));
        }
    }

    TEST_CASE("irredundant examples")
    {
        auto r = irredundant(LinearSystem::from_ints({{1, 1, -1}}, {0}), {10});
        REQUIRE(r.verdict == Tri::yes);
        CHECK(r.witness == std::vector<long long>{1, 2, 3});
        r = irredundant(LinearSystem::from_ints({{1, -1}}, {0}), {50});
        CHECK(r.verdict != Tri::yes);
        r = irredundant(LinearSystem::from_ints({{1, 1, 1}}, {6}), {6});
        REQUIRE(r.verdict == Tri::yes);
        CHECK(r.witness == std::vector<long long>{1, 2, 3});
        r = irredundant(LinearSystem::from_ints({{1, 1, 1}}, {5}), {100});
        CHECK(r.verdict == Tri::no);
        CHECK_FALSE(r.reason.empty());
    }

    TEST_CASE("irredundant witnesses verify and unknown carries the bound")
    {
        std::mt19937_64 rng(24);
        for (int it = 0; it < 80; ++it) {
            const std::size_t k = 2 + rng() % 3;
            std::vector<long long> c(k);
            for (auto& v : c)
                v = static_cast<long long>(1 + rng() % 4) * (rng() % 2 ? 1 : -1);
            const long long rhs = static_cast<long long>(rng() % 5);
            const auto sys = LinearSystem::from_ints({c}, {rhs});
            const auto r = irredundant(sys, {30});
            if (r.verdict == Tri::yes) {
                REQUIRE(r.witness.size() == k);
                CHECK(satisfies(sys, r.witness));
                auto w = r.witness;
                std::sort(w.begin(), w.end());
                CHECK(std::adjacent_find(w.begin(), w.end()) == w.end());
                CHECK(w.front() >= 1);
            } else if (r.verdict == Tri::unknown) {
                CHECK(r.bound == 30);
            }
            // Exhaustive check up to the bound: no witness means none exists in [30]^k.
            if (r.verdict != Tri::yes) {
                std::vector<long long> range(30);
                for (long long i = 0; i < 30; ++i)
                    range[static_cast<std::size_t>(i)] = i + 1;
                CHECK(oracle::naive_solutions({c}, {rhs}, range).empty());
            }
        }
    }

    TEST_CASE("classify reports multi-row regularity as not computed")
    {
        const auto cls = classify(parse_system("x+y-z=0; y+z-w=0"));
        CHECK(cls.partition_regular == Regularity::not_computed);
        CHECK(cls.property_star);
        CHECK(cls.full_rank);
        CHECK(classify(parse_system("x+y-z=0")).partition_regular == Regularity::yes);
        CHECK(classify(parse_system("2x+2y-z=0")).partition_regular == Regularity::no);
    }
}
