#include "coreentropy/kneading.hpp"
#include "coreentropy/teapot.hpp"

#include <doctest.h>

#include <filesystem>
#include <set>
#include <sstream>

using namespace ce;

TEST_SUITE("teapot") {
    TEST_CASE("small cloud on the 1/2 vein") {
        const auto c = generate(1, 2, 3, EnumMode::All);
        std::ostringstream os;
        write_csv(c, os);
        CHECK(os.str() ==
              "period,itinerary,lambda,re,im,minimal\n"
              "2,20,1,-1,0,0\n2,20,1,1,0,0\n"
              "3,200,1.6180339887498949,-1,0,1\n3,200,1.6180339887498949,-0.6180339887498949,0,1\n"
              "3,200,1.6180339887498949,1.6180339887498949,0,1\n"
              "3,201,1.6180339887498949,-1,0,1\n3,201,1.6180339887498949,-0.6180339887498949,0,1\n"
              "3,201,1.6180339887498949,1.6180339887498949,0,1\n");
        std::istringstream is(os.str());
        CHECK(read_csv(is).size() == c.points.size());
    }

    TEST_CASE("minimal points are a subset and generation is deterministic") {
        const auto all = generate(1, 3, 7, EnumMode::All);
        const auto mini = generate(1, 3, 7, EnumMode::Minimal);
        std::set<std::pair<double, double>> pts;
        for (const auto& p : all.points) pts.insert({p.z.real(), p.z.imag()});
        for (const auto& p : mini.points) CHECK(pts.count({p.z.real(), p.z.imag()}) == 1);
        std::ostringstream a, b;
        write_csv(all, a);
        GenerateOptions two;
        two.jobs = 2;
        write_csv(generate(1, 3, 7, EnumMode::All, two), b);
        CHECK(a.str() == b.str());
        CHECK(generate(1, 2, 5, EnumMode::All).points.size() == 48);
        CHECK(generate(1, 2, 5, EnumMode::Minimal).points.size() == 22);
    }

    TEST_CASE("points lie below the tip growth rate") {
        const auto c = generate(1, 3, 8, EnumMode::All);
        const double lq = tip_growth_rate(3);
        for (const auto& p : c.points) {
            CHECK(std::abs(p.z) <= lq + 1e-9);
            CHECK(p.lambda <= lq + 1e-9);
        }
        CHECK(thurston_projection(PointCloud{}).empty());
        CHECK(thurston_projection(c).size() <= c.points.size());
    }

    TEST_CASE("cache returns the same cloud") {
        const auto dir = std::filesystem::temp_directory_path() / "coreentropy_cache_test";
        std::filesystem::remove_all(dir);
        GenerateOptions opt;
        opt.cache_dir = dir.string();
        std::ostringstream a, b, c;
        write_csv(generate(1, 3, 6, EnumMode::All, opt), a);
        write_csv(generate(1, 3, 6, EnumMode::All, opt), b);
        write_csv(generate(1, 3, 6, EnumMode::All), c);
        CHECK(a.str() == b.str());
        CHECK(a.str() == c.str());
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("root sets of minimal words") {
        const auto r = z_of_lambda(1, 3, "20");
        CHECK(r.total_multiplicity() == 3);
        for (const auto& x : r.roots) CHECK(std::abs(std::abs(x.z) - 1) < 1e-12);
        CHECK_THROWS_AS(z_of_lambda(1, 2, "2021"), DomainError);
        // A tuned word contains the roots of its renormalization.
        const auto outer = roots(kneading_polynomial("201", 2)).points();
        const auto tuned = roots(kneading_polynomial(tune("201", 2, "201"), 2)).points();
        for (const auto& z : outer) {
            double best = 1e9;
            for (const auto& w : tuned) best = std::min(best, std::abs(z - w));
            CHECK(best < 1e-8);
        }
    }

    TEST_CASE("persistence probe") {
        const auto rep = persistence_probe(1, 2, "2000012020", "2000000020", {2, 4, 8});
        CHECK(rep.monotone);
        REQUIRE(rep.steps.size() == 3);
        CHECK(rep.steps[2].inside_distance < 1e-2);
        CHECK(rep.steps[2].lambda_gap < rep.steps[0].lambda_gap);
        CHECK_THROWS_AS(persistence_probe(1, 2, "201", "2011", {2}), DomainError);
        CHECK_THROWS_AS(persistence_probe(1, 2, "201", "20121", {2, 4, 8}, 3), DomainError);
    }
}
