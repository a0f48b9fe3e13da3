#include "coreentropy/wedge.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace ce {

char label_char(WedgeLabel l) {
    switch (l) {
        case WedgeLabel::NonSeparated: return 'N';
        case WedgeLabel::Separated: return 'S';
        case WedgeLabel::Equivalent: return 'E';
    }
    return '?';
}

int LabeledWedge::reduce(int n) const {
    if (n < 1) throw std::invalid_argument("wedge indices start at 1");
    if (n <= period + preperiod) return n;
    return preperiod + 1 + (n - preperiod - 1) % period;
}

WedgeLabel LabeledWedge::label(int i, int j) const {
    int a = reduce(i), b = reduce(j);
    if (a == b) return WedgeLabel::Equivalent;
    if (a > b) std::swap(a, b);
    return base[a - 1][b - 1];
}

LabeledWedge build_wedge(const Angle& theta, int window) {
    const Classification cls = classify(theta);
    LabeledWedge w;
    w.theta = theta;
    w.period = cls.period;
    w.preperiod = cls.preperiod;
    const int n = w.period + w.preperiod;
    w.window = std::max(window, n);
    const AnglePartition part = angle_partition(theta);
    // -1 on the partition boundary, else the index of the half containing x.
    std::vector<int> side;
    std::vector<Angle> xs = orbit(theta, n);
    for (const auto& x : xs) side.push_back(part.on_boundary(x) ? -1 : part.half(x));
    w.base.assign(n, std::vector<WedgeLabel>(n, WedgeLabel::Equivalent));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            WedgeLabel l = WedgeLabel::NonSeparated;
            if (xs[i] == xs[j])
                l = WedgeLabel::Equivalent;
            else if (side[i] >= 0 && side[j] >= 0 && side[i] != side[j])
                l = WedgeLabel::Separated;
            w.base[i][j] = w.base[j][i] = l;
        }
    return w;
}

int FiniteModel::index(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > size) throw std::out_of_range("finite model vertex out of range");
    // Row-major over i <= j.
    return (i - 1) * size - (i - 1) * (i - 2) / 2 + (j - i);
}

FiniteModel finite_model(const Angle& theta, int k) {
    if (k < 1) throw std::invalid_argument("finite_model: k must be positive");
    const LabeledWedge w = build_wedge(theta);
    FiniteModel m;
    m.k = k;
    m.size = k * w.period + w.preperiod;
    for (int i = 1; i <= m.size; ++i)
        for (int j = i; j <= m.size; ++j) {
            m.vertices.emplace_back(i, j);
            m.labels.push_back(w.label(i, j));
        }
    const int dim = static_cast<int>(m.vertices.size());
    m.incidence.assign(dim, std::vector<int>(dim, 0));
    auto red = [&](int n) { return n > m.size ? n - k * w.period : n; };
    for (int v = 0; v < dim; ++v) {
        const auto [i, j] = m.vertices[v];
        switch (m.labels[v]) {
            case WedgeLabel::Equivalent: break;
            case WedgeLabel::NonSeparated: ++m.incidence[v][m.index(red(i + 1), red(j + 1))]; break;
            case WedgeLabel::Separated:
                ++m.incidence[v][m.index(1, red(j + 1))];
                ++m.incidence[v][m.index(1, red(i + 1))];
                break;
        }
    }
    return m;
}

std::string adjacency_text(const FiniteModel& m) {
    std::vector<std::string> lines;
    for (size_t v = 0; v < m.vertices.size(); ++v)
        for (size_t u = 0; u < m.vertices.size(); ++u)
            for (int e = 0; e < m.incidence[v][u]; ++e) {
                std::ostringstream os;
                os << m.vertices[v].first << ',' << m.vertices[v].second << " -> " << m.vertices[u].first << ','
                   << m.vertices[u].second;
                lines.push_back(os.str());
            }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) out += l + "\n";
    return out;
}

IntPolynomial thurston_polynomial(const Angle& theta) { return charpoly(finite_model(theta, 1).incidence); }

int truncation_cover_index(const Angle& theta, int nmax) {
    const int p = classify(theta).period;
    return (2 * nmax + 2) / p + 1;
}

IntPolynomial truncated_spectral_determinant(const Angle& theta, int nmax, long long cap, TruncationStats* stats) {
    if (nmax < 0) throw std::invalid_argument("truncated_spectral_determinant: negative degree");
    if (nmax == 0) return IntPolynomial{1};
    const LabeledWedge w = build_wedge(theta);
    const int B = 2 * nmax + w.preperiod;
    // Off-diagonal vertices (i, j), i < j <= B.
    std::vector<std::vector<int>> id(B + 2, std::vector<int>(B + 2, -1));
    std::vector<std::pair<int, int>> verts;
    for (int i = 1; i <= B; ++i)
        for (int j = i + 1; j <= B; ++j) {
            id[i][j] = static_cast<int>(verts.size());
            verts.emplace_back(i, j);
        }
    const int V = static_cast<int>(verts.size());
    std::vector<std::vector<int>> out(V);
    auto add = [&](int v, int a, int b) {
        if (a > b) std::swap(a, b);
        if (b > B || a == b) return;
        out[v].push_back(id[a][b]);
    };
    for (int v = 0; v < V; ++v) {
        const auto [i, j] = verts[v];
        switch (w.label(i, j)) {
            case WedgeLabel::Equivalent: break;
            case WedgeLabel::NonSeparated: add(v, i + 1, j + 1); break;
            case WedgeLabel::Separated:
                add(v, 1, j + 1);
                add(v, 1, i + 1);
                break;
        }
    }
    long long work = 0;
    // Simple cycles of length <= nmax, each rooted at its smallest vertex.
    std::vector<std::vector<int>> cycles;
    std::vector<int> path;
    std::vector<char> on_path(V, 0);
    std::function<void(int, int)> dfs = [&](int s, int v) {
        if (++work > cap) throw DomainError("ResourceLimit", "cycle enumeration budget exceeded");
        for (int u : out[v]) {
            if (u == s) {
                cycles.push_back(path);
                continue;
            }
            if (u < s || on_path[u] || static_cast<int>(path.size()) >= nmax) continue;
            on_path[u] = 1;
            path.push_back(u);
            dfs(s, u);
            path.pop_back();
            on_path[u] = 0;
        }
    };
    for (int s = 0; s < V; ++s) {
        path = {s};
        on_path[s] = 1;
        dfs(s, s);
        on_path[s] = 0;
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    std::vector<BigInt> coef(nmax + 1, 0);
    std::vector<long long> count(nmax + 1, 0);
    coef[0] = 1;
    std::vector<char> used(V, 0);
    std::function<void(size_t, int, int)> combine = [&](size_t from, int len, int comps) {
        for (size_t c = from; c < cycles.size(); ++c) {
            const int l = static_cast<int>(cycles[c].size());
            if (len + l > nmax) break;  // sorted by length
            bool free = true;
            for (int v : cycles[c]) free = free && !used[v];
            if (!free) continue;
            if (++work > cap) throw DomainError("ResourceLimit", "multicycle enumeration budget exceeded");
            for (int v : cycles[c]) used[v] = 1;
            coef[len + l] += (comps % 2 == 0) ? -1 : 1;
            ++count[len + l];
            combine(c + 1, len + l, comps + 1);
            for (int v : cycles[c]) used[v] = 0;
        }
    };
    combine(0, 0, 0);
    long long total = 0;
    for (int n = 1; n <= nmax; ++n) {
        const double bound = std::pow(2.0 * n, std::sqrt(2.0 * n));
        if (static_cast<double>(count[n]) > bound)
            throw DomainError("BoundViolated", "more multicycles of length " + std::to_string(n) + " than allowed");
        total += count[n];
    }
    if (stats) {
        stats->vertex_bound = B;
        stats->cycles = static_cast<long long>(cycles.size());
        stats->multicycles = total;
    }
    return IntPolynomial(coef);
}

IntPolynomial quotient_charpoly_ratio(const Angle& theta, int k) {
    if (k < 1) throw std::invalid_argument("quotient_charpoly_ratio: k must be positive");
    const IntPolynomial base = thurston_polynomial(theta);
    if (k == 1) return IntPolynomial{1};
    const IntPolynomial cover = charpoly(finite_model(theta, k).incidence);
    IntPolynomial q;
    if (!cover.divides_into(base, q))
        throw DomainError("NonDivisible", "cover charpoly is not divisible by the base charpoly");
    return q;
}

double growth_rate_from_wedge(const Angle& theta) {
    const IntPolynomial p = thurston_polynomial(theta).without_zero_roots();
    if (p.degree() < 1) return 1.0;
    double r = 1.0;
    try {
        r = std::max(r, leading_real_root(p));
    } catch (const DomainError&) {
    }
    return r;
}

}  // namespace ce
