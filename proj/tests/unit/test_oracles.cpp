#include "coreentropy/oracles.hpp"

#include <doctest.h>

using namespace ce;

TEST_SUITE("oracles") {
    TEST_CASE("real centers") {
        const int expected[] = {1, 1, 1, 2, 3, 5, 9, 16, 28, 51};
        for (int n = 1; n <= 10; ++n) CHECK(real_centers(n).size() == static_cast<size_t>(expected[n - 1]));
        const auto c3 = real_centers(3);
        REQUIRE(c3.size() == 1);
        CHECK(static_cast<double>(c3[0].c) == doctest::Approx(-1.754877666246693));
        CHECK(c3[0].itinerary == "101");
        const auto c4 = real_centers(4);
        CHECK(c4[0].itinerary == "1001");
        CHECK(c4[1].itinerary == "1011");
        CHECK(static_cast<double>(real_centers(2)[0].c) == doctest::Approx(-1.0));
        CHECK_THROWS(real_centers(15));
    }

    TEST_CASE("brute-force multicycles") {
        // Two disjoint loops and a 2-cycle through both vertices.
        const Graph g{{0, 1}, {0, 1}};
        const auto c = brute_force_multicycles(g, 3);
        // det(I - tA) for A = [[1,1],[1,1]] is 1 - 2t.
        CHECK(c == std::vector<BigInt>{1, -2, 0, 0});
        CHECK_THROWS_AS(brute_force_multicycles(g, 3, 1), DomainError);
    }
}
