#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gfib/combinatorics.hpp"
#include "gfib/errors.hpp"
#include "gfib/exact.hpp"

using namespace gfib;

TEST_CASE("compositions of 3 with parts in {1,2}, lexicographic") {
    CompositionSet s = enumerate_compositions(Order(2), 3);
    const std::vector<std::vector<int>> expected = {{1, 1, 1}, {1, 2}, {2, 1}};
    CHECK(s.compositions == expected);
}

TEST_CASE("compositions of 4 with parts in {1,2,3}") {
    CompositionSet s = enumerate_compositions(Order(3), 4);
    const std::vector<std::vector<int>> expected = {
        {1, 1, 1, 1}, {1, 1, 2}, {1, 2, 1}, {1, 3}, {2, 1, 1}, {2, 2}, {3, 1}};
    CHECK(s.compositions == expected);
}

TEST_CASE("edge totals: zero has the empty composition, negatives have none") {
    CompositionSet zero = enumerate_compositions(Order(3), 0);
    REQUIRE(zero.size() == 1);
    CHECK(zero.compositions[0].empty());

    CHECK(enumerate_compositions(Order(3), -2).size() == 0);
}

TEST_CASE("enumeration cap guards against explosion") {
    CHECK_THROWS_AS(enumerate_compositions(Order(2), 31), EnumerationCapError);
    CHECK_THROWS_AS(enumerate_compositions(Order(2), 26, 25), EnumerationCapError);
    // Raising the cap explicitly lifts the guard.
    CHECK(enumerate_compositions(Order(2), 25, 25).size() == 121393);
}

TEST_CASE("every enumerated composition is valid, distinct and ordered") {
    for (int d : {2, 3, 4}) {
        for (int n : {5, 9, 12}) {
            CAPTURE(d);
            CAPTURE(n);
            CompositionSet s = enumerate_compositions(Order(d), n);
            std::set<std::vector<int>> seen;
            std::vector<int> prev;
            bool first = true;
            for (const auto& comp : s.compositions) {
                int total = 0;
                for (int part : comp) {
                    CHECK(part >= 1);
                    CHECK(part <= d);
                    total += part;
                }
                CHECK(total == n);
                CHECK(seen.insert(comp).second);  // no duplicates
                if (!first) CHECK(prev < comp);   // strictly increasing lexicographic
                prev = comp;
                first = false;
            }
        }
    }
}

TEST_CASE("composition count equals the shifted sequence value") {
    for (int d = 2; d <= 5; ++d) {
        for (int n = 0; n <= 18; ++n) {
            CAPTURE(d);
            CAPTURE(n);
            CompositionSet s = enumerate_compositions(Order(d), n);
            mpz_class count = count_compositions(Order(d), n);
            CHECK(mpz_class(static_cast<long>(s.size())) == count);
            CHECK(count == fib_at(Order(d), n + 1));
        }
    }
}

TEST_CASE("counting extends beyond the enumeration cap") {
    CHECK(count_compositions(Order(2), 40) == 165580141);  // classical F_41
    CHECK(count_compositions(Order(3), 11) == 504);
    CHECK(count_compositions(Order(2), 0) == 1);
    CHECK(count_compositions(Order(2), -5) == 0);
}

TEST_CASE("log-probability depends only on the total, not the shape") {
    RootEnclosure enc = solve_q(Order(3), 128);
    CompositionSet s = enumerate_compositions(Order(3), 6);
    Interval first = composition_log_probability(Order(3), s.compositions[0], enc);
    for (const auto& comp : s.compositions) {
        Interval lp = composition_log_probability(Order(3), comp, enc);
        CHECK(cmp(lp.lo(), first.lo()) == 0);
        CHECK(cmp(lp.hi(), first.hi()) == 0);
    }
    // lp = n log q, so lp / log q must enclose n exactly.
    Interval ratio = first / enc.to_interval().log();
    CHECK(ratio.contains(mpq_class(6)));
}

TEST_CASE("the empty composition has log-probability exactly zero") {
    RootEnclosure enc = solve_q(Order(2), 64);
    Interval lp = composition_log_probability(Order(2), {}, enc);
    CHECK(lp.is_point());
    CHECK(lp.contains(mpq_class(0)));
}

TEST_CASE("log-probability rejects parts outside 1..d") {
    RootEnclosure enc = solve_q(Order(3), 64);
    CHECK_THROWS_AS(composition_log_probability(Order(3), {1, 4}, enc),
                    std::invalid_argument);
    CHECK_THROWS_AS(composition_log_probability(Order(3), {0}, enc),
                    std::invalid_argument);
    CHECK_THROWS_AS(composition_log_probability(Order(3), {-1, 2}, enc),
                    std::invalid_argument);
}
