#include "coreentropy/kneading.hpp"

#include <doctest.h>

#include <cmath>

using namespace ce;

TEST_SUITE("kneading") {
    TEST_CASE("principal vein kneading polynomials") {
        CHECK(kneading_polynomial("20121", 2) == IntPolynomial{1, 0, 0, 2, 0, -1});
        CHECK(kneading_polynomial("201", 3) == IntPolynomial{1, 2, 0, 0, -1});
        CHECK(kneading_polynomial("20121", 3) == IntPolynomial{1, 0, 0, 0, 2, 0, 0, -1});
        for (int q : {2, 3, 5}) CHECK(kneading_polynomial("20", q) == IntPolynomial{1} - IntPolynomial::monomial(q));
    }

    TEST_CASE("growth rates") {
        // Airplane: the golden ratio.
        CHECK(growth_rate(kneading_polynomial("201", 2)) == doctest::Approx(1.6180339887));
        CHECK(growth_rate(kneading_polynomial("20121", 2)) == doctest::Approx(1.51287639686));
        CHECK(growth_rate(kneading_polynomial("20", 3)) == 1.0);
    }

    TEST_CASE("Parry and Milnor-Thurston polynomials") {
        CHECK(parry_polynomial("101") == IntPolynomial{1, 0, -2, 1});
        CHECK(parry_polynomial("10111") == IntPolynomial{1, -2, 2, 0, -2, 1});
        CHECK(mt_kneading_polynomial("1011") == IntPolynomial{1, -1, -1, 1});
    }

    TEST_CASE("tuning") {
        CHECK(tune("20", 3, "20121") == "2021202020");
        CHECK(full_length("20", 3) == 3);
        CHECK(full_length("20121", 3) == 7);
        const IntPolynomial lhs = kneading_polynomial(tune("201", 2, "20121"), 2) * (IntPolynomial{1} + IntPolynomial::monomial(3));
        CHECK(lhs == kneading_polynomial("201", 2) * kneading_polynomial("20121", 2).substitute_power(3));
        CHECK(tuned_entropy("20", 3, "201") == doctest::Approx(std::log(1.6180339887) / 3));
    }

    TEST_CASE("kneading determinant of a periodic word") {
        const auto d = kneading_determinant(InfiniteWord::parse("201"), 2, 12);
        CHECK(d.periodic);
        CHECK(d.truncation == 12);
    }
}
