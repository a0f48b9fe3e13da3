#include "coreentropy/angles.hpp"

#include <doctest.h>

using namespace ce;

TEST_SUITE("angles") {
    TEST_CASE("parsing and classification") {
        CHECK(Angle::parse("6/10") == Angle(3, 5));
        CHECK(Angle::parse("7/5") == Angle(2, 5));
        CHECK_THROWS_AS(Angle::parse("1/"), DomainError);
        CHECK_THROWS_AS(Angle::parse("a/3"), DomainError);
        const auto c = classify(Angle(1, 5));
        CHECK(c.preperiod == 0);
        CHECK(c.period == 4);
        const auto d = classify(Angle(1, 12));
        CHECK(d.preperiod == 2);
        CHECK(d.period == 2);
    }

    TEST_CASE("doubling and arcs") {
        const auto o = orbit(Angle(1, 5), 4);
        CHECK(o[3] == Angle(3, 5));
        CHECK(Angle(1, 5).plus_half() == Angle(3, 5));
        CHECK(in_arc(Angle(0, 1), Angle(3, 4), Angle(1, 4)));
        CHECK_FALSE(in_open_arc(Angle(3, 4), Angle(3, 4), Angle(1, 4)));
    }

    TEST_CASE("rotation cycles") {
        const auto rc = rotation_cycle(1, 3);
        CHECK(rc.angles == std::vector<Angle>{Angle(1, 7), Angle(2, 7), Angle(4, 7)});
        CHECK(rotation_cycle(1, 2).angles == std::vector<Angle>{Angle(1, 3), Angle(2, 3)});
        CHECK_THROWS_AS(rotation_cycle(2, 4), DomainError);
    }

    TEST_CASE("itineraries of angles") {
        const auto a = angle_to_itineraries(Angle(13, 31), 1, 2);
        CHECK(a.simplified == "20121");
        const auto b = angle_to_itineraries(Angle(1, 5), 1, 3);
        CHECK(b.full == "2301");
        CHECK(b.simplified == "201");
        CHECK_THROWS_AS(angle_to_itineraries(Angle(1, 4), 1, 3), DomainError);
        CHECK_THROWS_AS(angle_to_itineraries(Angle(1, 7), 1, 3), DomainError);
    }

    TEST_CASE("angles of itineraries") {
        CHECK(angle_for_word("201", 1, 2) == Angle(3, 7));
        CHECK(angle_for_word("201", 1, 3) == Angle(1, 5));
        CHECK(angle_for_word("20121", 1, 3) == Angle(25, 127));
        CHECK(angle_for_word("20121", 2, 5) == Angle(617, 2047));
        CHECK(angle_for_word("20", 1, 3) == Angle(1, 7));
        CHECK(angle_for_word("20", 1, 2) == Angle(1, 3));
        for (const char* w : {"201", "2001", "20121"})
            CHECK(angle_to_itineraries(angle_for_word(w, 1, 3), 1, 3).simplified == w);
    }
}
