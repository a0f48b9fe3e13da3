#include "coreentropy/oracles.hpp"
#include "coreentropy/wedge.hpp"

#include <doctest.h>

using namespace ce;

TEST_SUITE("wedge") {
    TEST_CASE("labels of 1/5") {
        const auto w = build_wedge(Angle(1, 5));
        CHECK(w.period == 4);
        CHECK(label_char(w.label(1, 3)) == 'S');
        CHECK(label_char(w.label(2, 3)) == 'S');
        CHECK(label_char(w.label(1, 2)) == 'N');
        CHECK(label_char(w.label(2, 4)) == 'N');
        CHECK(label_char(w.label(3, 3)) == 'E');
    }

    TEST_CASE("separated pairs of 1/9") {
        const auto w = build_wedge(Angle(1, 9));
        std::vector<std::pair<int, int>> sep;
        for (int i = 1; i <= 5; ++i)
            for (int j = i + 1; j <= 6; ++j)
                if (w.label(i, j) == WedgeLabel::Separated) sep.emplace_back(i, j);
        CHECK(sep == std::vector<std::pair<int, int>>{{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
    }

    TEST_CASE("finite model of 1/5") {
        const auto m = finite_model(Angle(1, 5), 1);
        CHECK(adjacency_text(m) ==
              "1,2 -> 2,3\n1,3 -> 1,2\n1,3 -> 1,4\n1,4 -> 1,2\n2,3 -> 1,3\n2,3 -> 1,4\n2,4 -> 1,3\n3,4 -> 1,4\n");
        CHECK(thurston_polynomial(Angle(1, 5)) == IntPolynomial::parse("-x^6 - 2x^7 + x^10"));
    }

    TEST_CASE("Thurston polynomials and growth rates") {
        CHECK(thurston_polynomial(Angle(1, 3)) == IntPolynomial{0, 0, -1, 1});
        CHECK(thurston_polynomial(Angle(1, 7)) == IntPolynomial::parse("-x^3 + x^6"));
        CHECK(growth_rate_from_wedge(Angle(1, 2)) == doctest::Approx(2.0));
        CHECK(growth_rate_from_wedge(Angle(1, 4)) == doctest::Approx(1.69562077));
        CHECK(growth_rate_from_wedge(Angle(1, 6)) == doctest::Approx(1.52137971));
        CHECK(growth_rate_from_wedge(Angle(1, 5)) == doctest::Approx(1.39533699));
    }

    TEST_CASE("covers differ by cyclotomic factors") {
        for (const char* s : {"1/5", "1/9", "1/7"})
            for (int k : {2, 3}) CHECK(is_cyclotomic_times_monomial(quotient_charpoly_ratio(Angle::parse(s), k)));
        CHECK(quotient_charpoly_ratio(Angle(1, 5), 2) == IntPolynomial::parse("x^22 + x^26"));
    }

    TEST_CASE("truncated spectral determinant") {
        const IntPolynomial t = truncated_spectral_determinant(Angle(1, 5), 8);
        CHECK(t == IntPolynomial::parse("1 - 2t^3 - 2t^7"));
        CHECK(truncation_cover_index(Angle(1, 5), 8) == 5);
        const auto g = finite_model(Angle(1, 5), 5);
        CHECK(spectral_determinant(g.incidence).truncated(8) == t);
        CHECK(IntPolynomial(brute_force_multicycles(graph_from_matrix(g.incidence), 6)) == t.truncated(6));
        CHECK_THROWS_AS(truncated_spectral_determinant(Angle(1, 5), 8, 10), DomainError);
    }
}
