// Command-line front end: entropy queries, polynomials, point clouds,
// the acceptance suite and SVG scatter plots.

#include "coreentropy/angles.hpp"
#include "coreentropy/kneading.hpp"
#include "coreentropy/markov.hpp"
#include "coreentropy/teapot.hpp"
#include "coreentropy/verify.hpp"
#include "coreentropy/wedge.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

namespace {

using namespace ce;

struct Vein {
    int p = 1, q = 2;
};

Vein parse_vein(const std::string& s) {
    const auto slash = s.find('/');
    Vein v;
    try {
        if (slash == std::string::npos) throw std::invalid_argument("slash");
        size_t used = 0;
        v.p = std::stoi(s.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("p");
        const std::string qs = s.substr(slash + 1);
        v.q = std::stoi(qs, &used);
        if (used != qs.size()) throw std::invalid_argument("q");
    } catch (const std::exception&) {
        throw DomainError("UsageError", "vein must look like p/q, got '" + s + "'");
    }
    if (v.q < 2 || v.p <= 0 || v.p >= v.q || std::gcd(v.p, v.q) != 1)
        throw DomainError("InvalidVein", "vein p/q needs 0 < p < q and gcd(p, q) = 1");
    return v;
}

// Writes to --out when given, stdout otherwise.
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw DomainError("IOError", "cannot open " + path);
    }
    std::ostream& os() { return file_ ? *file_ : std::cout; }

private:
    std::unique_ptr<std::ofstream> file_;
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string fmt(cplx z) {
    std::ostringstream os;
    os << fmt(z.real()) << (z.imag() < 0 ? " - " : " + ") << fmt(std::abs(z.imag())) << "i";
    return os.str();
}

struct Options {
    std::string angle, itinerary, vein = "1/2", mode = "all", out, input;
    int max_period = 10, jobs = 1;
    bool strip = false;
    double tolerance = 1e-12;
    std::vector<int> criteria;
};

int cmd_entropy(const Options& o) {
    Output out(o.out);
    double lambda = 1;
    if (!o.angle.empty()) {
        lambda = growth_rate_from_wedge(Angle::parse(o.angle));
    } else if (!o.itinerary.empty()) {
        const Vein v = parse_vein(o.vein);
        if (!satisfies_simplified_grammar(o.itinerary))
            throw DomainError("InvalidItinerary", "itinerary must be a word over {0,1,2} obeying the vein grammar");
        lambda = growth_rate(kneading_polynomial(o.itinerary, v.q));
    } else {
        throw DomainError("UsageError", "entropy needs --angle or --itinerary");
    }
    out.os() << "entropy " << fmt(std::log(lambda)) << "\n"
             << "growth_rate " << fmt(lambda) << "\n";
    return 0;
}

int cmd_polys(const Options& o) {
    Output out(o.out);
    const Vein v = parse_vein(o.vein);
    SimplifiedWord w = o.itinerary;
    Angle theta;
    if (!o.angle.empty()) {
        theta = Angle::parse(o.angle);
        w = angle_to_itineraries(theta, v.p, v.q).simplified;
    } else if (!w.empty()) {
        if (!satisfies_simplified_grammar(w) || !is_realizable(recode_inverse(w)))
            throw DomainError("InvalidItinerary", "itinerary " + w + " is not realizable on the vein");
        theta = angle_for_word(w, v.p, v.q);
    } else {
        throw DomainError("UsageError", "polys needs --itinerary or --angle");
    }
    const IntPolynomial kneading = kneading_polynomial(w, v.q);
    const IntPolynomial markov = markov_polynomial(q_recode(w, v.q), v.q);
    const IntPolynomial thurston = thurston_polynomial(theta);
    auto& os = out.os();
    os << "itinerary " << w << "\n"
       << "angle " << theta.to_string() << "\n"
       << "kneading " << kneading.to_text('z') << "\n";
    if (v.q == 2) os << "parry " << parry_polynomial(recode_inverse(w)).to_text('z') << "\n";
    os << "markov " << markov.to_text('x') << "\n"
       << "thurston " << thurston.to_text('x') << "\n"
       << "growth_rate " << fmt(growth_rate(kneading)) << "\n";
    for (const auto& r : off_circle_roots(kneading.without_zero_roots()).roots)
        os << "off_circle_root " << fmt(r.z) << " multiplicity " << r.multiplicity << "\n";
    return 0;
}

PointCloud make_cloud(const Options& o) {
    const Vein v = parse_vein(o.vein);
    if (o.max_period < 1) throw DomainError("UsageError", "--max-period must be positive");
    GenerateOptions g;
    g.jobs = std::max(1, o.jobs);
    g.strip_cyclotomic = o.strip;
    g.tolerance = o.tolerance;
    return generate(v.p, v.q, o.max_period, parse_enum_mode(o.mode), g);
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

int cmd_teapot(const Options& o) {
    const PointCloud cloud = make_cloud(o);
    Output out(o.out);
    if (ends_with(o.out, ".jsonl"))
        write_jsonl(cloud, out.os());
    else
        write_csv(cloud, out.os());
    std::cerr << cloud.points.size() << " points from " << cloud.words << " words in " << fmt(cloud.seconds)
              << " s\n";
    return 0;
}

int cmd_thurston_set(const Options& o) {
    const PointCloud cloud = make_cloud(o);
    Output out(o.out);
    out.os() << "re,im\n";
    for (const auto& z : thurston_projection(cloud)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", z.real(), z.imag());
        out.os() << buf;
    }
    return 0;
}

int cmd_verify(const Options& o) {
    VerifyOptions v;
    v.max_period = o.max_period;
    v.jobs = std::max(1, o.jobs);
    Output out(o.out);
    bool all = true;
    run_acceptance(v, o.criteria, [&](const CriterionResult& r) {
        all = all && r.pass;
        out.os() << "criterion " << r.id << " [" << (r.pass ? "PASS" : "FAIL") << "] " << r.name << " ("
                 << fmt(r.seconds) << " s): " << r.detail << std::endl;
    });
    return all ? 0 : 1;
}

// Reads (re, im, lambda) triples from a teapot CSV or a thurston-set CSV.
std::vector<std::array<double, 3>> read_points(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("IOError", "cannot open " + path);
    std::string header;
    std::getline(in, header);
    in.seekg(0);
    std::vector<std::array<double, 3>> pts;
    if (header.rfind("period,", 0) == 0) {
        for (const auto& p : read_csv(in)) pts.push_back({p.z.real(), p.z.imag(), p.lambda});
        return pts;
    }
    if (header != "re,im") throw DomainError("InvalidInput", "unrecognised CSV header in " + path);
    std::getline(in, header);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw DomainError("InvalidInput", "malformed line: " + line);
        pts.push_back({std::stod(line.substr(0, comma)), std::stod(line.substr(comma + 1)), 1.0});
    }
    return pts;
}

int cmd_plot(const Options& o) {
    if (o.input.empty()) throw DomainError("UsageError", "plot needs an input CSV");
    const auto pts = read_points(o.input);
    // Data coordinates are scaled so that one unit of radius is 1/200 of the
    // larger extent; the y axis points up.
    double x0 = -1, x1 = 1, y0 = -1, y1 = 1, l0 = 1, l1 = 1;
    if (!pts.empty()) {
        x0 = x1 = pts[0][0];
        y0 = y1 = pts[0][1];
        l0 = l1 = pts[0][2];
    }
    for (const auto& p : pts) {
        x0 = std::min(x0, p[0]);
        x1 = std::max(x1, p[0]);
        y0 = std::min(y0, p[1]);
        y1 = std::max(y1, p[1]);
        l0 = std::min(l0, p[2]);
        l1 = std::max(l1, p[2]);
    }
    const double scale = 200.0 / std::max({x1 - x0, y1 - y0, 1e-9});
    const double w = (x1 - x0) * scale + 2, h = (y1 - y0) * scale + 2;
    Output out(o.out);
    auto& os = out.os();
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-1 -1 %.6f %.6f\">\n", w, h);
    os << buf;
    for (const auto& p : pts) {
        const double t = l1 > l0 ? (p[2] - l0) / (l1 - l0) : 0.0;
        const int red = static_cast<int>(std::lround(255 * t)), blue = 255 - red;
        std::snprintf(buf, sizeof buf, "<circle cx=\"%.6f\" cy=\"%.6f\" r=\"0.5\" fill=\"rgb(%d,0,%d)\"/>\n",
                      (p[0] - x0) * scale, (y1 - p[1]) * scale, red, blue);
        os << buf;
    }
    os << "</svg>\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Core entropy of quadratic polynomials on principal veins"};
    app.require_subcommand(1);
    Options o;

    auto* entropy = app.add_subcommand("entropy", "Core entropy of an angle or a vein itinerary");
    entropy->add_option("--angle", o.angle, "Rational external angle a/b");
    entropy->add_option("--itinerary", o.itinerary, "Simplified itinerary over {0,1,2}");
    entropy->add_option("--vein", o.vein, "Principal vein p/q")->capture_default_str();
    entropy->add_option("--out", o.out, "Output path");

    auto* polys = app.add_subcommand("polys", "Kneading, Parry, Markov and Thurston polynomials");
    polys->add_option("--itinerary", o.itinerary, "Simplified itinerary over {0,1,2}");
    polys->add_option("--angle", o.angle, "Periodic angle on the vein");
    polys->add_option("--vein", o.vein, "Principal vein p/q")->capture_default_str();
    polys->add_option("--out", o.out, "Output path");

    auto add_cloud_flags = [&](CLI::App* sc) {
        sc->add_option("--vein", o.vein, "Principal vein p/q")->capture_default_str();
        sc->add_option("--max-period", o.max_period, "Largest itinerary length")->capture_default_str();
        sc->add_option("--mode", o.mode, "all or minimal")->check(CLI::IsMember({"all", "minimal"}))
            ->capture_default_str();
        sc->add_flag("--strip-cyclotomic", o.strip, "Remove cyclotomic factors before root finding");
        sc->add_option("--out", o.out, "Output path (.csv or .jsonl)");
        sc->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
        sc->add_option("--tolerance", o.tolerance, "Root residual tolerance")->capture_default_str();
    };
    auto* teapot = app.add_subcommand("teapot", "Master Teapot point cloud as CSV or JSONL");
    add_cloud_flags(teapot);
    auto* tset = app.add_subcommand("thurston-set", "Eigenvalues of the vein with the growth rate forgotten");
    add_cloud_flags(tset);

    auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
    verify->add_option("--max-period", o.max_period, "Word length bound for the root comparison")
        ->capture_default_str();
    verify->add_option("--criterion", o.criteria, "Run only these criteria (1-12)")
        ->check(CLI::Range(1, kCriterionCount));
    verify->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str();
    verify->add_option("--out", o.out, "Output path");

    auto* plot = app.add_subcommand("plot", "SVG scatter plot of a point CSV");
    plot->add_option("input", o.input, "CSV from teapot or thurston-set")->required();
    plot->add_option("--out", o.out, "Output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (*entropy) return cmd_entropy(o);
        if (*polys) return cmd_polys(o);
        if (*teapot) return cmd_teapot(o);
        if (*tset) return cmd_thurston_set(o);
        if (*verify) return cmd_verify(o);
        if (*plot) return cmd_plot(o);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.name() == "UsageError" || e.name() == "ParseError" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
