#include "coreentropy/polyalg.hpp"
#include "coreentropy/words.hpp"

#include <algorithm>
#include <stdexcept>

#include <doctest.h>

using namespace ce;

TEST_SUITE("words") {
    TEST_CASE("twisted lexicographic order") {
        // An odd number of preceding 1s flips the order.
        CHECK(twisted_lex_compare("10", "11") == Order::GT);
        CHECK(twisted_lex_compare("110", "111") == Order::LT);
        CHECK(twisted_lex_compare("101", "101") == Order::EQ);
        CHECK(twisted_lex_compare(InfiniteWord::parse("1|0"), InfiniteWord::parse("1|01")) == Order::GT);
        CHECK_THROWS_AS(twisted_lex_compare("1", "10"), std::invalid_argument);
    }

    TEST_CASE("admissibility, irreducibility and the completion convention") {
        CHECK(is_admissible("1011"));
        CHECK_FALSE(is_admissible("1101"));
        CHECK(is_irreducible("10"));
        CHECK_FALSE(is_irreducible("1010"));
        CHECK(complete_with_convention("1") == "10");
        CHECK(complete_with_convention("10") == "101");
        CHECK(complete_with_convention("101") == "1011");
        CHECK(complete_with_convention("1011") == "10111");
    }

    TEST_CASE("realizable word counts follow the real centers") {
        RealizabilityPolicy saved = realizability_policy();
        realizability_policy().mode = RealizabilityMode::Combinatorial;
        const int expected[] = {1, 1, 1, 2, 3, 5, 9, 16, 28, 51};
        for (int n = 1; n <= 10; ++n) CHECK(realizable_words(n).size() == static_cast<size_t>(expected[n - 1]));
        realizability_policy() = saved;
        CHECK(realizable_words(4) == std::vector<BinaryWord>{"1001", "1011"});
    }

    TEST_CASE("recoding to simplified itineraries") {
        CHECK(recode("10111") == "20121");
        CHECK(recode("101") == "201");
        CHECK(recode("10") == "20");
        CHECK(recode_inverse("20121") == "10111");
        CHECK(q_recode("2021202020", 3) == "230231230230230");
        CHECK(simplify("230231230230230") == "2021202020");
        CHECK(recode(InfiniteWord::parse("1|011")).to_string() == "2|012");
        CHECK_THROWS_AS(recode("111"), DomainError);
    }

    TEST_CASE("grammars") {
        CHECK(satisfies_simplified_grammar("20121"));
        CHECK_FALSE(satisfies_simplified_grammar("2211"));
        CHECK_FALSE(satisfies_simplified_grammar("10"));
        CHECK(satisfies_full_grammar("2301", 3));
        CHECK_FALSE(satisfies_full_grammar("2031", 3));
    }

    TEST_CASE("minimality and substitution") {
        CHECK(is_minimal("101"));
        CHECK(is_minimal("10111"));
        // The basilica tuning of the airplane has entropy below log sqrt 2 and
        // its root has zero entropy, so it is minimal.
        CHECK(is_minimal(substitution_D("101")));
        CHECK_THROWS_AS(is_minimal("1011"), DomainError);  // zero entropy
        CHECK(substitution_D("1") == "10");
        CHECK(substitution_D("10") == "1011");
        CHECK(binary_growth_rate("101") == doctest::Approx(1.6180339887));
    }

    TEST_CASE("vein enumeration") {
        const auto all = enumerate_vein_itineraries(1, 3, 5, EnumMode::All);
        CHECK(all == std::vector<SimplifiedWord>{"0", "20", "201", "2001", "2021", "20001", "20020", "20121"});
        const auto minimal = enumerate_vein_itineraries(1, 3, 5, EnumMode::Minimal);
        for (const auto& w : minimal) CHECK(std::find(all.begin(), all.end(), w) != all.end());
        CHECK_THROWS_AS(enumerate_vein_itineraries(2, 4, 5, EnumMode::All), DomainError);
        CHECK_THROWS_AS(parse_enum_mode("some"), DomainError);
    }
}
