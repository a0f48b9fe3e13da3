#include "coreentropy/markov.hpp"

#include "coreentropy/kneading.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <numeric>

namespace ce {

namespace {

void check_full_word(const FullWord& w, int q) {
    if (q < 2 || q > 9) throw DomainError("InvalidVein", "q must be in [2, 9]");
    if (w.empty() || w[0] != '2' || !satisfies_full_grammar(w, q))
        throw DomainError("InvalidItinerary", "'" + w + "' is not a critically periodic full itinerary");
}

std::string orbit_name(int i, int n) { return i == n ? "c" : "x" + std::to_string(i); }

// Marked point with its symbol under f and its image.
struct Node {
    std::string name;
    char sym;  // '0'..'9', 'c' or 'A'
    int image;
};

int rank(char s) {
    switch (s) {
        case '0': return 0;
        case 'c': return 1;
        case '1': return 2;
        case 'A': return 3;
        case '2': return 4;
    }
    throw std::logic_error("symbol off the line");
}

class Tree {
public:
    Tree(const FullWord& w, int q, const MarkovOptions& opt) : q_(q), n_(static_cast<int>(w.size())) {
        for (int i = 1; i <= n_; ++i)
            nodes_.push_back({orbit_name(i, n_), i == n_ ? 'c' : w[i - 1], i % n_});
        alpha_ = add({"alpha", 'A', static_cast<int>(nodes_.size())});
        if (opt.add_beta) {
            if (q != 2) throw DomainError("InvalidVein", "beta extension needs q = 2");
            beta_ = add({"beta", '0', static_cast<int>(nodes_.size())});
            add({"-beta", '2', beta_});
        }
        std::vector<int> line;
        std::vector<std::vector<int>> legs(q + 1);
        for (int v = 0; v < static_cast<int>(nodes_.size()); ++v) {
            if (v == alpha_ && !opt.mark_alpha) continue;
            const int b = branch_of(v);
            (b >= 3 ? legs[b] : line).push_back(v);
        }
        if (q >= 3 && !opt.mark_alpha) throw std::invalid_argument("alpha is a branch point for q >= 3");
        std::sort(line.begin(), line.end(), [&](int a, int b) { return compare(a, b) < 0; });
        for (int k = 3; k <= q; ++k)
            std::sort(legs[k].begin(), legs[k].end(),
                      [&](int a, int b) { return compare(key(a), key(b)) > 0; });
        line_ = line;
        legs_ = legs;
        loc_.assign(nodes_.size(), {0, -1});
        for (size_t i = 0; i < line_.size(); ++i) loc_[line_[i]] = {0, static_cast<int>(i)};
        for (int k = 3; k <= q; ++k)
            for (size_t i = 0; i < legs_[k].size(); ++i) loc_[legs_[k][i]] = {k, static_cast<int>(i) + 1};
        alpha_on_line_ = opt.mark_alpha ? loc_[alpha_].second : -1;
    }

    MarkovMatrix matrix() const {
        struct Iv {
            int a, b;
            int branch;
            int order;
        };
        std::vector<Iv> ivs;
        std::map<std::pair<int, int>, int> line_id, leg_id;
        for (size_t i = 0; i + 1 < line_.size(); ++i) {
            line_id[{0, static_cast<int>(i)}] = static_cast<int>(ivs.size());
            ivs.push_back({line_[i], line_[i + 1], line_branch(static_cast<int>(i)), 0});
        }
        for (int k = 3; k <= q_; ++k)
            for (size_t i = 0; i < legs_[k].size(); ++i) {
                leg_id[{k, static_cast<int>(i)}] = static_cast<int>(ivs.size());
                ivs.push_back({i == 0 ? alpha_ : legs_[k][i - 1], legs_[k][i], k, static_cast<int>(i)});
            }
        for (auto& iv : ivs) {
            if (iv.branch >= 3) continue;
            const int i = loc_[iv.a].second;
            // distance from alpha along the line
            iv.order = alpha_on_line_ < 0 ? i : (i >= alpha_on_line_ ? i - alpha_on_line_ : alpha_on_line_ - i);
        }
        const int m = static_cast<int>(ivs.size());
        IntMatrix a(m, std::vector<int>(m, 0));
        auto line_range = [&](int x, int y, std::vector<int>& out) {
            for (int i = std::min(x, y); i < std::max(x, y); ++i) out.push_back(line_id.at({0, i}));
        };
        auto leg_range = [&](int k, int x, int y, std::vector<int>& out) {
            for (int i = std::min(x, y); i < std::max(x, y); ++i) out.push_back(leg_id.at({k, i}));
        };
        for (int s = 0; s < m; ++s) {
            auto u = loc_[nodes_[ivs[s].a].image];
            auto v = loc_[nodes_[ivs[s].b].image];
            if (nodes_[ivs[s].a].image == alpha_ && alpha_on_line_ >= 0) u = {0, alpha_on_line_};
            std::vector<int> cover;
            if (u.first > v.first) std::swap(u, v);
            if (u.first == 0 && v.first == 0) {
                line_range(u.second, v.second, cover);
            } else if (u.first == 0) {
                line_range(u.second, alpha_on_line_, cover);
                leg_range(v.first, 0, v.second, cover);
            } else if (u.first == v.first) {
                leg_range(u.first, u.second, v.second, cover);
            } else {
                leg_range(u.first, 0, u.second, cover);
                leg_range(v.first, 0, v.second, cover);
            }
            for (int t : cover) ++a[s][t];
        }
        // Present as I1, I2, ..., Iq, I0, each outward from alpha.
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        if (alpha_on_line_ >= 0) {
            auto rk = [&](int b) { return b == 0 ? q_ + 1 : b; };
            std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
                const int bx = rk(ivs[x].branch), by = rk(ivs[y].branch);
                return bx != by ? bx < by : ivs[x].order < ivs[y].order;
            });
        }
        MarkovMatrix out;
        out.entries.assign(m, std::vector<int>(m, 0));
        for (int i = 0; i < m; ++i) {
            const Iv& iv = ivs[perm[i]];
            const std::string b = iv.branch < 0 ? "I" : "I" + std::to_string(iv.branch);
            out.labels.push_back(b + "[" + nodes_[iv.a].name + "," + nodes_[iv.b].name + "]");
            out.branch.push_back(iv.branch);
            for (int j = 0; j < m; ++j) out.entries[i][j] = a[perm[i]][perm[j]];
        }
        return out;
    }

private:
    int add(Node n) {
        nodes_.push_back(std::move(n));
        return static_cast<int>(nodes_.size()) - 1;
    }

    int branch_of(int v) const {
        const char s = nodes_[v].sym;
        if (s == 'A') return -1;
        if (s == 'c') return 1;
        return s - '0';
    }

    int step(int v) const { return nodes_[v].image; }

    // First return to the line I0 u I1 u I2.
    int ret(int v) const {
        const char s = nodes_[v].sym;
        int u = step(v);
        if (s == '2')
            for (int i = 1; i < q_ - 1; ++i) u = step(u);
        return u;
    }

    // Image on the line of a point on I_k, k >= 3.
    int key(int v) const {
        const int k = branch_of(v);
        for (int i = 0; i < q_ - k + 1; ++i) v = step(v);
        return v;
    }

    // Order along the line I0 < c < I1 < alpha < I2.
    int compare(int a, int b) const {
        bool flip = false;
        const int limit = 4 * static_cast<int>(nodes_.size()) + 8;
        for (int it = 0; it < limit; ++it) {
            const char sa = nodes_[a].sym, sb = nodes_[b].sym;
            if (sa != sb) {
                const int r = rank(sa) < rank(sb) ? -1 : 1;
                return flip ? -r : r;
            }
            if (sa == 'c' || sa == 'A' || a == b) return 0;
            if (sa == '1' || sa == '2') flip = !flip;
            a = ret(a);
            b = ret(b);
        }
        throw DomainError("PositionCollision", "marked points share an itinerary");
    }

    int line_branch(int i) const {
        const int c = loc_[n_ - 1].second;
        if (i + 1 <= c) return 0;
        if (alpha_on_line_ >= 0) return i + 1 <= alpha_on_line_ ? 1 : 2;
        if (compare(line_[i + 1], alpha_) <= 0) return 1;
        if (compare(line_[i], alpha_) >= 0) return 2;
        return -1;
    }

    int q_, n_;
    std::vector<Node> nodes_;
    int alpha_ = -1, beta_ = -1;
    std::vector<int> line_;
    std::vector<std::vector<int>> legs_;
    std::vector<std::pair<int, int>> loc_;
    int alpha_on_line_ = -1;
};

}  // namespace

StarTreeModel star_tree_model(const FullWord& w, int q) {
    check_full_word(w, q);
    StarTreeModel m;
    m.q = q;
    m.word = w;
    m.lambda = growth_rate_hp(kneading_polynomial(simplify(w), q));
    if (m.lambda <= HP("1.000000001")) throw DomainError("ZeroEntropy", "growth rate is 1 for " + w);
    const HP lam = m.lambda;
    const HP lq1 = pow(lam, q - 1);
    const HP left = 1 - pow(lam, q);
    const HP tol("1e-30");
    auto F = [&](char s, const HP& x) -> HP {
        if (s == '0') return lam * x + lam + 1;
        if (s == '1') return -lam * x + lam + 1;
        return -lq1 * x + lq1 + 1;
    };
    const int n = static_cast<int>(w.size());
    std::vector<HP> pos(n + 1);
    pos[n] = 0;
    HP cur = F('1', HP(0));
    int i = 1;
    while (i < n) {
        const char s = w[i - 1];
        bool inside = false;
        if (s == '0') inside = cur > left - tol && cur < -tol;
        if (s == '1') inside = cur > tol && cur < 1 - tol;
        if (s == '2') inside = cur > 1 + tol && cur < 1 + lam + tol;
        if (!inside) throw DomainError("ItineraryMismatch", "PL orbit leaves the interval of symbol " + std::string(1, s));
        pos[i] = cur;
        if (s == '2')
            for (int j = 1; j < q - 1; ++j) pos[i + j] = cur;
        cur = F(s, cur);
        i += s == '2' ? q - 1 : 1;
    }
    if (i != n || abs(cur) > tol) throw DomainError("ItineraryMismatch", "PL orbit does not return to 0");
    for (int k = 1; k <= n; ++k) {
        TreePoint p;
        p.name = orbit_name(k, n);
        p.index = k;
        p.branch = k == n ? 1 : w[k - 1] - '0';
        p.position = pos[k];
        m.points.push_back(p);
    }
    m.points.push_back({"alpha", 0, -1, HP(1)});
    // Distinct marked points on one branch (the line counts as one) must differ.
    for (size_t a = 0; a < m.points.size(); ++a)
        for (size_t b = a + 1; b < m.points.size(); ++b) {
            const int ba = m.points[a].branch, bb = m.points[b].branch;
            const bool same = (ba >= 3 || bb >= 3) ? ba == bb : true;
            if (same && abs(m.points[a].position - m.points[b].position) < tol)
                throw DomainError("PositionCollision", m.points[a].name + " and " + m.points[b].name + " coincide");
        }
    return m;
}

MarkovMatrix markov_matrix(const FullWord& w, int q, const MarkovOptions& opt) {
    check_full_word(w, q);
    return Tree(w, q, opt).matrix();
}

IntPolynomial markov_polynomial(const FullWord& w, int q) { return charpoly(markov_matrix(w, q).entries); }

namespace {

MarkovMatrix real_matrix(const BinaryWord& w, bool beta) {
    if (w.empty() || !is_binary(w)) throw DomainError("InvalidItinerary", "binary word required");
    if (w == "0") {
        if (!beta) return {};
        MarkovMatrix m;
        m.labels = {"I[-beta,c]", "I[c,beta]"};
        m.branch = {-1, -1};
        m.entries = {{0, 1}, {0, 1}};
        return m;
    }
    MarkovOptions opt;
    opt.mark_alpha = false;
    opt.add_beta = beta;
    return markov_matrix(recode(w), 2, opt);
}

}  // namespace

MarkovMatrix real_markov_matrix_A0(const BinaryWord& w) { return real_matrix(w, false); }
MarkovMatrix real_markov_matrix_A1(const BinaryWord& w) { return real_matrix(w, true); }

std::string MarkovMatrix::to_json() const {
    nlohmann::json j;
    j["labels"] = labels;
    j["entries"] = entries;
    return j.dump();
}

}  // namespace ce
