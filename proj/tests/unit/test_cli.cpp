#include "coreentropy/polyalg.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(CE_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string line_with(const std::string& text, const std::string& key) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (line.rfind(key + " ", 0) == 0) return line.substr(key.size() + 1);
    return {};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("entropy of 1/5") {
        const auto r = run("entropy --angle 1/5");
        CHECK(r.code == 0);
        CHECK(std::stod(line_with(r.out, "entropy")) == doctest::Approx(std::log(1.39533699447)));
        const auto s = run("entropy --itinerary 201 --vein 1/2");
        CHECK(std::stod(line_with(s.out, "growth_rate")) == doctest::Approx(1.6180339887));
    }

    TEST_CASE("polynomials of 20121 on the 1/2 vein") {
        const auto r = run("polys --vein 1/2 --itinerary 20121");
        CHECK(r.code == 0);
        const auto kneading = ce::IntPolynomial::parse(line_with(r.out, "kneading"));
        CHECK(kneading == ce::IntPolynomial{1, 0, 0, 2, 0, -1});
        CHECK(kneading.to_text('z') == line_with(r.out, "kneading"));
        CHECK(line_with(r.out, "angle") == "13/31");
        CHECK(!line_with(r.out, "markov").empty());
        CHECK(!line_with(r.out, "thurston").empty());
        CHECK(!line_with(r.out, "parry").empty());
    }

    TEST_CASE("exit codes") {
        CHECK(run("entropy --bogus").code == 2);
        CHECK(run("").code == 2);
        CHECK(run("entropy --angle 1/x").code == 2);
        CHECK(run("polys --vein 1/2 --itinerary 2011").code == 1);
        CHECK(run("polys --vein 2/4 --itinerary 201").code == 1);
        CHECK(run("teapot --mode some").code == 2);
    }

    TEST_CASE("teapot CSV is deterministic and plots") {
        const auto dir = std::filesystem::temp_directory_path() / "coreentropy_cli_test";
        std::filesystem::create_directories(dir);
        const auto a = dir / "a.csv", b = dir / "b.csv", svg = dir / "a.svg";
        CHECK(run("teapot --vein 1/3 --max-period 8 --mode all --out " + a.string()).code == 0);
        CHECK(run("teapot --vein 1/3 --max-period 8 --mode all --jobs 2 --out " + b.string()).code == 0);
        const std::string csv = slurp(a);
        CHECK(csv == slurp(b));
        CHECK(csv.rfind("period,itinerary,lambda,re,im,minimal\n", 0) == 0);
        CHECK(run("plot " + a.string() + " --out " + svg.string()).code == 0);
        const std::string text = slurp(svg);
        const size_t rows = std::count(csv.begin(), csv.end(), '\n') - 1;
        size_t circles = 0;
        for (size_t pos = 0; (pos = text.find("<circle", pos)) != std::string::npos; ++pos) ++circles;
        CHECK(circles == rows);
        CHECK(text.find("r=\"0.5\"") != std::string::npos);
        CHECK(text.find("viewBox") != std::string::npos);
        const auto jsonl = dir / "a.jsonl";
        CHECK(run("teapot --vein 1/3 --max-period 5 --out " + jsonl.string()).code == 0);
        CHECK(slurp(jsonl).rfind("{", 0) == 0);
        const auto t = run("thurston-set --vein 1/2 --max-period 5");
        CHECK(t.code == 0);
        CHECK(t.out.rfind("re,im\n", 0) == 0);
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("verify subset") {
        const auto r = run("verify --criterion 1 --criterion 5");
        CHECK(r.code == 0);
        CHECK(r.out.find("criterion 1 [PASS]") != std::string::npos);
        CHECK(r.out.find("criterion 5 [PASS]") != std::string::npos);
    }
}
