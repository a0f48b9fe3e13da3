#include "coreentropy/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

namespace ce {

namespace {

// Closed interval with a slight outward inflation after every operation to
// absorb rounding at working precision.
struct Iv {
    HP lo, hi;
};

const HP& slack() {
    static const HP s("1e-58");
    return s;
}

Iv widen(HP lo, HP hi) {
    const HP m = std::max(abs(lo), abs(hi));
    const HP e = m * slack() + HP("1e-150");
    return {lo - e, hi + e};
}

Iv add(const Iv& a, const Iv& b) { return widen(a.lo + b.lo, a.hi + b.hi); }

Iv mul(const Iv& a, const Iv& b) {
    HP p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return widen(*std::min_element(p, p + 4), *std::max_element(p, p + 4));
}

Iv sqr(const Iv& a) {
    const HP x = a.lo * a.lo, y = a.hi * a.hi;
    if (a.lo <= 0 && a.hi >= 0) return widen(HP(0), std::max(x, y));
    return widen(std::min(x, y), std::max(x, y));
}

bool contains_zero(const Iv& a) { return a.lo <= 0 && a.hi >= 0; }

// Enclosures of g_n(c) = f_c^n(0) and its c-derivative over [a, b].
void enclose(int n, const HP& a, const HP& b, Iv& g, Iv& dg) {
    const Iv c{a, b};
    Iv z{HP(0), HP(0)};
    Iv d{HP(0), HP(0)};
    const Iv one{HP(1), HP(1)};
    const Iv two{HP(2), HP(2)};
    for (int k = 0; k < n; ++k) {
        d = add(mul(two, mul(z, d)), one);
        z = add(sqr(z), c);
    }
    g = z;
    dg = d;
}

HP orbit_value(int n, const HP& c) {
    HP z = 0;
    for (int k = 0; k < n; ++k) z = z * z + c;
    return z;
}

void isolate(int n, const HP& a, const HP& b, int depth, std::vector<std::pair<HP, HP>>& out) {
    if (depth > 230) throw DomainError("PrecisionExhausted", "interval subdivision too deep");
    Iv g, dg;
    enclose(n, a, b, g, dg);
    if (!contains_zero(g)) return;
    if (!contains_zero(dg)) {
        const HP ga = orbit_value(n, a), gb = orbit_value(n, b);
        if (ga == 0 || gb == 0) throw DomainError("PrecisionExhausted", "root on a subdivision point");
        if ((ga < 0) != (gb < 0)) out.emplace_back(a, b);
        return;
    }
    const HP m = (a + b) / 2;
    isolate(n, a, m, depth + 1, out);
    isolate(n, m, b, depth + 1, out);
}

HP refine(int n, HP a, HP b) {
    HP ga = orbit_value(n, a);
    const HP tol("1e-60");
    while (b - a > tol) {
        const HP m = (a + b) / 2;
        const HP gm = orbit_value(n, m);
        if (gm == 0) return m;
        if ((gm < 0) == (ga < 0)) {
            a = m;
            ga = gm;
        } else {
            b = m;
        }
    }
    return (a + b) / 2;
}

}  // namespace

std::vector<RealCenter> real_centers(int n) {
    if (n < 1 || n > 14) throw std::invalid_argument("real_centers: period must be in [1, 14]");
    std::vector<std::pair<HP, HP>> boxes;
    isolate(n, HP(-2), HP("0.25"), 0, boxes);
    std::vector<RealCenter> out;
    const HP tiny("1e-40");
    for (const auto& [a, b] : boxes) {
        const HP c = refine(n, a, b);
        bool minimal = true;
        for (int d = 1; d < n && minimal; ++d)
            if (n % d == 0 && abs(orbit_value(d, c)) < tiny) minimal = false;
        if (!minimal) continue;
        RealCenter rc;
        rc.c = c;
        rc.period = n;
        HP z = 0, dz = 0;
        for (int k = 1; k <= n; ++k) {
            dz = 2 * z * dz + 1;
            z = z * z + c;
            if (k < n) {
                if (abs(z) < tiny) throw DomainError("PrecisionExhausted", "orbit too close to 0");
                rc.itinerary += z < 0 ? '1' : '0';
            }
        }
        // Limit from the side of the main cardioid (c + delta): the sign of
        // the parameter derivative of f_c^n(0) decides the side of 0.
        rc.itinerary += dz > 0 ? '0' : '1';
        if (!is_irreducible(rc.itinerary)) rc.itinerary.back() = rc.itinerary.back() == '0' ? '1' : '0';
        out.push_back(std::move(rc));
    }
    std::sort(out.begin(), out.end(), [](const RealCenter& x, const RealCenter& y) { return x.c < y.c; });
    return out;
}

const std::vector<BinaryWord>& real_center_itineraries(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<BinaryWord>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<BinaryWord> w;
    for (const auto& c : real_centers(n)) w.push_back(c.itinerary);
    std::sort(w.begin(), w.end());
    return cache.emplace(n, std::move(w)).first->second;
}

std::string center_to_json(const RealCenter& c) {
    std::ostringstream os;
    os << "{\"c\":\"" << c.c.str(40) << "\",\"period\":" << c.period << ",\"itinerary\":\"" << c.itinerary
       << "\"}";
    return os.str();
}

Graph graph_from_matrix(const IntMatrix& m) {
    Graph g(m.size());
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m.size(); ++j)
            if (m[i][j] != 0) g[i].push_back(static_cast<int>(j));
    return g;
}

std::vector<BigInt> brute_force_multicycles(const Graph& g, int nmax, long long cap) {
    // Every closed walk of length <= nmax; the simple ones are recorded as
    // vertex sequences rotated to start at their smallest vertex.
    std::set<std::vector<int>> cycles;
    long long work = 0;
    std::vector<int> path;
    std::function<void(int, int)> walk = [&](int start, int v) {
        if (++work > cap) throw DomainError("ResourceLimit", "brute-force walk budget exceeded");
        for (int u : g[v]) {
            if (u == start) {
                std::vector<int> c(path);
                std::set<int> distinct(c.begin(), c.end());
                if (distinct.size() == c.size()) {
                    std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
                    cycles.insert(c);
                }
            }
            if (static_cast<int>(path.size()) < nmax) {
                path.push_back(u);
                walk(start, u);
                path.pop_back();
            }
        }
    };
    for (int s = 0; s < static_cast<int>(g.size()); ++s) {
        path = {s};
        walk(s, s);
    }
    std::vector<std::vector<int>> list(cycles.begin(), cycles.end());
    std::vector<BigInt> coef(nmax + 1, 0);
    coef[0] = 1;
    std::vector<char> used(g.size(), 0);
    std::function<void(size_t, int, int)> combine = [&](size_t from, int len, int count) {
        for (size_t i = from; i < list.size(); ++i) {
            const auto& c = list[i];
            const int l = static_cast<int>(c.size());
            if (len + l > nmax) continue;
            bool free = true;
            for (int v : c) free = free && !used[v];
            if (!free) continue;
            if (++work > cap) throw DomainError("ResourceLimit", "brute-force multicycle budget exceeded");
            for (int v : c) used[v] = 1;
            coef[len + l] += (count % 2 == 0) ? -1 : 1;
            combine(i + 1, len + l, count + 1);
            for (int v : c) used[v] = 0;
        }
    };
    combine(0, 0, 0);
    return coef;
}

}  // namespace ce
