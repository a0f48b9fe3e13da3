#include "coreentropy/teapot.hpp"

#include "coreentropy/kneading.hpp"
#include "coreentropy/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <iterator>
#include <sstream>
#include <thread>

namespace ce {

const char* const kToolVersion = "1.0.0";

namespace {

namespace fs = std::filesystem;

fs::path cache_path(const std::string& dir, int p, int q, const SimplifiedWord& w) {
    return fs::path(dir) / ("p" + std::to_string(p) + "_q" + std::to_string(q) + "_n" + std::to_string(w.size()) +
                            "_" + w + ".poly");
}

IntPolynomial cached_polynomial(const GenerateOptions& opt, int p, int q, const SimplifiedWord& w) {
    if (opt.cache_dir.empty()) return kneading_polynomial(w, q);
    const fs::path path = cache_path(opt.cache_dir, p, q, w);
    {
        std::ifstream in(path);
        std::string text;
        if (in && std::getline(in, text) && !text.empty()) return IntPolynomial::parse(text);
    }
    IntPolynomial poly = kneading_polynomial(w, q);
    // Write to a private file and rename so concurrent writers never expose
    // a partial entry.
    fs::create_directories(opt.cache_dir);
    std::ostringstream tmpname;
    tmpname << path.string() << ".tmp" << std::hash<std::thread::id>{}(std::this_thread::get_id());
    {
        std::ofstream out(tmpname.str());
        out << poly.to_text('z') << "\n";
    }
    fs::rename(tmpname.str(), path);
    return poly;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0 ? 0.0 : v);
    return buf;
}

bool point_less(const TeapotPoint& a, const TeapotPoint& b) {
    if (a.period != b.period) return a.period < b.period;
    if (a.itinerary != b.itinerary) return a.itinerary < b.itinerary;
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
}

bool word_minimal(const SimplifiedWord& w) {
    try {
        return is_minimal(recode_inverse(w));
    } catch (const DomainError&) {
        return false;  // zero entropy
    }
}

}  // namespace

PointCloud generate(int p, int q, int max_period, EnumMode mode, const GenerateOptions& opt) {
    const auto t0 = std::chrono::steady_clock::now();
    PointCloud cloud;
    cloud.p = p;
    cloud.q = q;
    cloud.max_period = max_period;
    cloud.mode = mode;
    cloud.strip = opt.strip_cyclotomic;
    std::vector<SimplifiedWord> words = enumerate_vein_itineraries(p, q, max_period, mode, opt.jobs);
    words.erase(std::remove_if(words.begin(), words.end(), [](const auto& w) { return w.size() < 2; }), words.end());
    cloud.words = static_cast<long long>(words.size());
    std::vector<std::vector<TeapotPoint>> per_word(words.size());
    parallel_for(words.size(), opt.jobs, [&](size_t i) {
        const SimplifiedWord& w = words[i];
        IntPolynomial poly = cached_polynomial(opt, p, q, w);
        const double lambda = growth_rate(poly);
        if (opt.strip_cyclotomic) poly = strip_cyclotomic(poly, 2 * poly.degree() * poly.degree());
        const bool minimal = mode == EnumMode::Minimal ? true : word_minimal(w);
        if (poly.degree() < 1) return;
        std::vector<SimplifiedWord> names{w};
        if (mode == EnumMode::All) {
            // The other one-sided itinerary of the same parameter; the
            // polynomial ignores the symbol at the critical point.
            BinaryWord other = recode_inverse(w);
            other.back() = other.back() == '0' ? '1' : '0';
            if (is_admissible(other) && is_irreducible(other)) names.push_back(recode(other));
        }
        const auto rs = roots(poly, opt.tolerance);
        for (const auto& name : names)
            for (const auto& r : rs.roots) per_word[i].push_back({r.z, lambda, static_cast<int>(w.size()), name, minimal});
    });
    size_t total = 0;
    for (const auto& v : per_word) total += v.size();
    cloud.points.reserve(total);
    for (auto& v : per_word) {
        std::move(v.begin(), v.end(), std::back_inserter(cloud.points));
        std::vector<TeapotPoint>().swap(v);
    }
    std::sort(cloud.points.begin(), cloud.points.end(), point_less);
    cloud.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return cloud;
}

void write_csv(const PointCloud& cloud, std::ostream& os) {
    os << "period,itinerary,lambda,re,im,minimal\n";
    for (const auto& pt : cloud.points)
        os << pt.period << ',' << pt.itinerary << ',' << fmt(pt.lambda) << ',' << fmt(pt.z.real()) << ','
           << fmt(pt.z.imag()) << ',' << (pt.minimal ? 1 : 0) << '\n';
}

void write_jsonl(const PointCloud& cloud, std::ostream& os) {
    nlohmann::json meta = {{"type", "metadata"},
                           {"vein", std::to_string(cloud.p) + "/" + std::to_string(cloud.q)},
                           {"max_period", cloud.max_period},
                           {"mode", cloud.mode == EnumMode::All ? "all" : "minimal"},
                           {"strip_cyclotomic", cloud.strip},
                           {"words", cloud.words},
                           {"points", cloud.points.size()},
                           {"version", kToolVersion}};
    os << meta.dump() << '\n';
    for (const auto& pt : cloud.points) {
        nlohmann::json j = {{"period", pt.period},  {"itinerary", pt.itinerary}, {"lambda", pt.lambda},
                            {"re", pt.z.real()},    {"im", pt.z.imag()},         {"minimal", pt.minimal}};
        os << j.dump() << '\n';
    }
}

std::vector<TeapotPoint> read_csv(std::istream& is) {
    std::vector<TeapotPoint> out;
    std::string line;
    if (!std::getline(is, line) || line != "period,itinerary,lambda,re,im,minimal")
        throw DomainError("ParseError", "missing teapot CSV header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string f[6];
        for (auto& x : f)
            if (!std::getline(ss, x, ',')) throw DomainError("ParseError", "short CSV row: " + line);
        try {
            TeapotPoint pt;
            pt.period = std::stoi(f[0]);
            pt.itinerary = f[1];
            pt.lambda = std::stod(f[2]);
            pt.z = {std::stod(f[3]), std::stod(f[4])};
            pt.minimal = f[5] == "1";
            out.push_back(pt);
        } catch (const std::exception&) {
            throw DomainError("ParseError", "bad CSV row: " + line);
        }
    }
    return out;
}

RootSet z_of_lambda(int p, int q, const SimplifiedWord& w) {
    if (q < 2 || p <= 0 || p >= q) throw DomainError("InvalidVein", "vein p/q needs 0 < p < q");
    if (!satisfies_simplified_grammar(w)) throw DomainError("InvalidItinerary", "'" + w + "' breaks the grammar");
    // The bulb center 20 is the representative of zero entropy.
    if (w != "20" && !word_minimal(w)) throw DomainError("NotMinimal", "'" + w + "' is not minimal");
    return roots(kneading_polynomial(w, q));
}

std::vector<cplx> thurston_projection(const PointCloud& cloud, double tol) {
    std::vector<cplx> z;
    for (const auto& pt : cloud.points) z.push_back(pt.z);
    std::sort(z.begin(), z.end(), [](cplx a, cplx b) { return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag(); });
    std::vector<cplx> out;
    for (const cplx& v : z) {
        bool dup = false;
        for (size_t k = out.size(); k-- > 0 && v.real() - out[k].real() <= tol;)
            if (std::abs(v - out[k]) <= tol) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(v);
    }
    return out;
}

namespace {

SimplifiedWord power(const SimplifiedWord& w, int n) {
    SimplifiedWord out;
    for (int i = 0; i < n; ++i) out += w;
    return out;
}

bool acceptable(const SimplifiedWord& w) {
    return satisfies_simplified_grammar(w) && is_realizable(recode_inverse(w));
}

}  // namespace

PersistenceReport persistence_probe(int p, int q, const SimplifiedWord& w0, const SimplifiedWord& w1,
                                    const std::vector<int>& Ns, int max_connector) {
    if (q < 2 || p <= 0 || p >= q) throw DomainError("InvalidVein", "vein p/q needs 0 < p < q");
    if (!acceptable(w0) || !acceptable(w1))
        throw DomainError("InvalidItinerary", "persistence probe needs realizable words");
    PersistenceReport rep;
    rep.w0 = w0;
    rep.w1 = w1;
    bool found = false;
    for (int len = 0; len <= max_connector && !found; ++len) {
        long long total = 1;
        for (int i = 0; i < len; ++i) total *= 3;
        for (long long code = 0; code < total && !found; ++code) {
            SimplifiedWord c(len, '0');
            long long x = code;
            for (int i = len; i-- > 0; x /= 3) c[i] = static_cast<char>('0' + x % 3);
            bool ok = true;
            for (int N : Ns) ok = ok && acceptable(power(w1, N) + c + power(w0, N));
            if (ok) {
                rep.connector = c;
                found = true;
            }
        }
    }
    if (!found) throw DomainError("ConnectorNotFound", "no connector up to length " + std::to_string(max_connector));
    const RootSet target = inside_circle(roots(kneading_polynomial(w0, q)));
    const double lambda1 = growth_rate(kneading_polynomial(w1, q));
    for (int N : Ns) {
        PersistenceStep st;
        st.N = N;
        st.word = power(w1, N) + rep.connector + power(w0, N);
        const IntPolynomial poly = kneading_polynomial(st.word, q);
        st.inside_distance = root_set_distance(inside_circle(roots(poly)), target, true);
        st.lambda_gap = std::abs(growth_rate(poly) - lambda1);
        if (!rep.steps.empty() && st.inside_distance > rep.steps.back().inside_distance) rep.monotone = false;
        rep.steps.push_back(st);
    }
    return rep;
}

}  // namespace ce
