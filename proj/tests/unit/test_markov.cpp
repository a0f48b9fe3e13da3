#include "coreentropy/angles.hpp"
#include "coreentropy/kneading.hpp"
#include "coreentropy/markov.hpp"

#include <doctest.h>
#include <json.hpp>

using namespace ce;

TEST_SUITE("markov") {
    TEST_CASE("1/5 on the 1/3 vein") {
        CHECK(markov_polynomial("2301", 3) == IntPolynomial::parse("-1 - 2x + x^4"));
        const auto m = markov_matrix("2301", 3);
        CHECK(m.entries.size() == 4);
    }

    TEST_CASE("airplane matrix") {
        const auto m = markov_matrix("201", 2);
        CHECK(m.entries == IntMatrix{{0, 1, 0}, {1, 0, 1}, {1, 1, 0}});
        const auto j = nlohmann::json::parse(m.to_json());
        CHECK(j["labels"].size() == 3);
        CHECK(markov_polynomial("201", 2) == IntPolynomial{-1, -2, 0, 1});
    }

    TEST_CASE("piecewise-linear model agrees with the symbolic one") {
        const auto st = star_tree_model("201", 2);
        CHECK(static_cast<double>(st.lambda) == doctest::Approx(1.6180339887));
        CHECK_THROWS_AS(star_tree_model("20", 2), DomainError);
    }

    TEST_CASE("Markov and kneading polynomials share off-circle roots") {
        for (const char* w : {"201", "2001", "20121", "20020"}) {
            for (int q : {2, 3, 4}) {
                const auto a = off_circle_roots(kneading_polynomial(w, q).without_zero_roots());
                const auto b = off_circle_roots(markov_polynomial(q_recode(w, q), q).without_zero_roots());
                CHECK(multiset_distance(a, b) <= 1e-8);
            }
        }
    }

    TEST_CASE("real matrices and the Milnor-Thurston polynomial") {
        const auto a0 = real_markov_matrix_A0("101");
        CHECK(a0.entries == IntMatrix{{0, 1}, {1, 1}});
        CHECK(spectral_determinant(a0.entries) == mt_kneading_polynomial("101"));
        const auto a1 = real_markov_matrix_A1("101");
        CHECK(spectral_determinant(a1.entries) == IntPolynomial{1, -1} * mt_kneading_polynomial("101"));
        CHECK(real_markov_matrix_A0("0").entries.empty());
    }
}
