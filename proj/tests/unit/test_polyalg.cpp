#include "coreentropy/polyalg.hpp"

#include <doctest.h>

using namespace ce;

TEST_SUITE("polyalg") {
    TEST_CASE("text form round-trips in ascending sparse order") {
        const IntPolynomial p{1, 0, 0, 2, 0, -1};
        CHECK(p.to_text('z') == "1*z^0 + 2*z^3 - 1*z^5");
        CHECK(IntPolynomial::parse(p.to_text('z')) == p);
        CHECK(IntPolynomial::parse("-z^6 - 2z^7 + z^10") == IntPolynomial::monomial(10) - IntPolynomial{0, 0, 0, 0, 0, 0, 1, 2});
    }

    TEST_CASE("exact arithmetic and division") {
        const IntPolynomial a{-1, 1}, b{1, 1};
        CHECK(a * b == IntPolynomial{-1, 0, 1});
        IntPolynomial q;
        CHECK((a * b).divides_into(b, q));
        CHECK(q == a);
        CHECK_FALSE(IntPolynomial{1, 0, 1}.divides_into(b, q));
        CHECK(IntPolynomial{0, 0, 3, 1}.without_zero_roots() == IntPolynomial{3, 1});
        CHECK(IntPolynomial{1, 2}.substitute_power(3) == IntPolynomial{1, 0, 0, 2});
    }

    TEST_CASE("characteristic polynomial and spectral determinant") {
        const IntMatrix fib{{0, 1}, {1, 1}};
        CHECK(charpoly(fib) == IntPolynomial{-1, -1, 1});
        CHECK(spectral_determinant(fib) == IntPolynomial{1, -1, -1});
        CHECK(charpoly({}) == IntPolynomial{1});
    }

    TEST_CASE("cyclotomic factors") {
        CHECK(cyclotomic(6) == IntPolynomial{1, -1, 1});
        CHECK(cyclotomic(1) == IntPolynomial{-1, 1});
        // x^5 - 2x^3 - 1 = (x + 1)(x^4 - x^3 - x^2 + x - 1)
        CHECK(strip_cyclotomic(IntPolynomial{-1, 0, 0, -2, 0, 1}, 30).normalized() == IntPolynomial{-1, 1, -1, -1, 1});
        CHECK(is_cyclotomic_times_monomial(IntPolynomial{0, 0, -1, 0, 0, -1, 1, 0, 0, 1}));
        CHECK_FALSE(is_cyclotomic_times_monomial(IntPolynomial{-1, -2, 0, 0, 1}));
    }

    TEST_CASE("roots and distances") {
        CHECK(off_circle_roots(IntPolynomial{1, 0, 0, -1}).roots.empty());
        const auto r = off_circle_roots(IntPolynomial{-1, -2, 0, 0, 1});
        CHECK(r.total_multiplicity() == 4);
        CHECK(multiset_distance(r, off_circle_roots(IntPolynomial{-1, -2, 0, 0, 1} * IntPolynomial{1, 1, 1})) == 0);
        CHECK(root_set_distance(std::vector<cplx>{2.0}, std::vector<cplx>{2.1}, true) == doctest::Approx(0.1));
        CHECK(root_set_distance(std::vector<cplx>{2.0}, std::vector<cplx>{2.0}, true) == 0);
        const auto dbl = roots(IntPolynomial{1, -2, 1});
        REQUIRE(dbl.roots.size() == 1);
        CHECK(dbl.roots[0].multiplicity == 2);
    }

    TEST_CASE("tip growth rates") {
        CHECK(tip_growth_rate(2) == 2.0);
        CHECK(tip_growth_rate(3) == doctest::Approx(1.69562077).epsilon(1e-8));
        double prev = tip_growth_rate(2);
        for (int q = 3; q <= 9; ++q) {
            const double l = tip_growth_rate(q);
            CHECK(l < prev);
            CHECK(l > 1.0);
            prev = l;
        }
        CHECK(leading_real_root(IntPolynomial{-1, -1, 1}) == doctest::Approx(1.6180339887));
    }
}
