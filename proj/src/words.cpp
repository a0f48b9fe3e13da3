#include "coreentropy/words.hpp"

#include "coreentropy/hp.hpp"
#include "coreentropy/kneading.hpp"
#include "coreentropy/oracles.hpp"
#include "coreentropy/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace ce {

InfiniteWord InfiniteWord::parse(const std::string& s) {
    auto bar = s.find('|');
    InfiniteWord w;
    if (bar == std::string::npos) {
        w.period = s;
    } else {
        w.pre = s.substr(0, bar);
        w.period = s.substr(bar + 1);
    }
    if (w.period.empty()) throw DomainError("ParseError", "infinite word needs a non-empty period");
    for (char c : w.pre + w.period)
        if (c < '0' || c > '9') throw DomainError("ParseError", "word symbols must be digits");
    return w;
}

char InfiniteWord::at(std::size_t i) const {
    if (i < pre.size()) return pre[i];
    return period[(i - pre.size()) % period.size()];
}

namespace {

template <class A, class B>
Order twisted(A a, B b, size_t n) {
    int parity = 0;
    for (size_t i = 0; i < n; ++i) {
        const char x = a(i);
        const char y = b(i);
        if (x != y) {
            const int diff = (x - y) * (parity ? -1 : 1);
            return diff < 0 ? Order::LT : Order::GT;
        }
        parity ^= (x - '0') & 1;
    }
    return Order::EQ;
}

}  // namespace

Order twisted_lex_compare(const BinaryWord& w, const BinaryWord& v) {
    if (w.size() != v.size()) throw std::invalid_argument("twisted_lex_compare: lengths differ");
    return twisted([&](size_t i) { return w[i]; }, [&](size_t i) { return v[i]; }, w.size());
}

Order twisted_lex_compare(const InfiniteWord& w, const InfiniteWord& v) {
    const size_t n = std::max(w.pre.size(), v.pre.size()) + w.period.size() * v.period.size();
    return twisted([&](size_t i) { return w.at(i); }, [&](size_t i) { return v.at(i); }, n);
}

Order twisted_lex_compare_periodic(const BinaryWord& w, const BinaryWord& v) {
    const size_t n = w.size() * v.size();
    return twisted([&](size_t i) { return w[i % w.size()]; }, [&](size_t i) { return v[i % v.size()]; }, n);
}

bool is_binary(const std::string& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

bool is_irreducible(const std::string& w) {
    const size_t n = w.size();
    for (size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool power = true;
        for (size_t i = d; i < n && power; ++i) power = w[i] == w[i - d];
        if (power) return false;
    }
    return true;
}

bool is_admissible(const BinaryWord& w) {
    if (w.empty() || !is_binary(w)) throw std::invalid_argument("is_admissible: non-empty binary word required");
    for (size_t k = 1; k < w.size(); ++k) {
        const BinaryWord r = w.substr(k) + w.substr(0, k);
        if (twisted_lex_compare_periodic(r, w) == Order::GT) return false;
    }
    return true;
}

BinaryWord complete_with_convention(const BinaryWord& prefix) {
    const auto ones = std::count(prefix.begin(), prefix.end(), '1');
    BinaryWord w = prefix + (ones % 2 == 0 ? '0' : '1');
    if (!is_irreducible(w)) w.back() = w.back() == '0' ? '1' : '0';
    return w;
}

RealizabilityPolicy& realizability_policy() {
    static RealizabilityPolicy policy;
    return policy;
}

bool is_realizable_combinatorial(const BinaryWord& w) {
    if (w.empty() || !is_binary(w)) return false;
    if (w.size() == 1) return w == "0";
    if (w.compare(0, 2, "10") != 0) return false;
    if (w != complete_with_convention(w.substr(0, w.size() - 1))) return false;
    return is_irreducible(w) && is_admissible(w);
}

bool is_realizable(const BinaryWord& w) {
    if (w.empty() || !is_binary(w)) return false;
    const auto& pol = realizability_policy();
    const int n = static_cast<int>(w.size());
    if (pol.mode == RealizabilityMode::Combinatorial) return is_realizable_combinatorial(w);
    if (n <= pol.oracle_bound && n <= 14) {
        const auto& known = real_center_itineraries(n);
        return std::binary_search(known.begin(), known.end(), w);
    }
    if (pol.mode == RealizabilityMode::OracleOnly)
        throw DomainError("OracleUnavailable", "no oracle for period " + std::to_string(n));
    return is_realizable_combinatorial(w);
}

double binary_growth_rate(const BinaryWord& w) {
    return growth_rate(kneading_polynomial(recode(w), 2));
}

bool is_minimal(const BinaryWord& w) {
    if (w.empty() || !is_binary(w)) throw std::invalid_argument("is_minimal: binary word required");
    const HP lambda = growth_rate_hp(kneading_polynomial(recode(w), 2));
    if (lambda <= HP("1.000000001")) throw DomainError("ZeroEntropy", "word " + w + " has growth rate 1");
    // Tent map x -> lambda + 1 - lambda |x|; the critical point is 0 and
    // positive points carry the symbol 1.
    const HP tol("1e-40");
    HP x = 0;
    const size_t n = w.size();
    for (size_t k = 1; k <= n; ++k) {
        x = lambda + 1 - lambda * abs(x);
        if (k == n) return abs(x) < tol;
        if (abs(x) < tol) return false;
        if ((x > 0 ? '1' : '0') != w[k - 1]) return false;
    }
    return false;
}

namespace {

// Simplified symbol for each position of s, where maximal runs of 1s end
// with 2 and alternate leftwards. Only positions whose run ends inside s are
// meaningful.
std::string recode_runs(const std::string& s) {
    std::string out(s.size(), '0');
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '1') {
            out[i] = s[i];
            ++i;
            continue;
        }
        // The very first symbol is a block of its own: sigma(1) = 2.
        if (i == 0) {
            out[0] = '2';
            ++i;
            continue;
        }
        size_t j = i;
        while (j < s.size() && s[j] == '1') ++j;
        for (size_t k = i; k < j; ++k) out[k] = ((j - 1 - k) % 2 == 0) ? '2' : '1';
        i = j;
    }
    return out;
}

}  // namespace

SimplifiedWord recode(const BinaryWord& w) {
    if (w.empty() || !is_binary(w)) throw std::invalid_argument("recode: binary word required");
    if (std::all_of(w.begin(), w.end(), [](char c) { return c == '1'; }))
        throw DomainError("TailOfOnes", "word consists of 1s only");
    return recode_runs(w + w + w).substr(0, w.size());
}

InfiniteWord recode(const InfiniteWord& w) {
    if (!is_binary(w.pre) || !is_binary(w.period)) throw std::invalid_argument("recode: binary word required");
    if (std::all_of(w.period.begin(), w.period.end(), [](char c) { return c == '1'; }))
        throw DomainError("TailOfOnes", "eventually constant 1 itinerary");
    std::string s = w.pre;
    for (int k = 0; k < 3; ++k) s += w.period;
    const std::string r = recode_runs(s);
    return {r.substr(0, w.pre.size()), r.substr(w.pre.size(), w.period.size())};
}

BinaryWord recode_inverse(const SimplifiedWord& w) {
    BinaryWord b(w);
    for (char& c : b) {
        if (c == '2') c = '1';
        else if (c != '0' && c != '1') throw std::invalid_argument("recode_inverse: symbols must be 0, 1, 2");
    }
    return b;
}

FullWord q_recode(const SimplifiedWord& w, int q) {
    if (q < 2) throw std::invalid_argument("q_recode: q must be at least 2");
    FullWord out;
    for (char c : w) {
        if (c == '2')
            for (int k = 2; k <= q; ++k) out += std::to_string(k);
        else
            out += c;
    }
    return out;
}

SimplifiedWord simplify(const FullWord& w) {
    SimplifiedWord s;
    for (char c : w)
        if (c == '0' || c == '1' || c == '2') s += c;
    return s;
}

BinaryWord substitution_D(const BinaryWord& w) {
    BinaryWord out;
    for (char c : w) {
        if (c == '1') out += "10";
        else if (c == '0') out += "11";
        else throw std::invalid_argument("substitution_D: binary word required");
    }
    return out;
}

bool satisfies_simplified_grammar(const SimplifiedWord& w) {
    const size_t n = w.size();
    for (size_t i = 0; i < n; ++i) {
        const char a = w[i];
        const char b = w[(i + 1) % n];
        if (a != '0' && a != '1' && a != '2') return false;
        if (a == '1' && b != '2') return false;
        if (a == '2' && b == '2') return false;
    }
    return true;
}

bool satisfies_full_grammar(const FullWord& w, int q) {
    // Multi-digit labels are not representable; q <= 9.
    if (q < 2 || q > 9) return false;
    const size_t n = w.size();
    for (size_t i = 0; i < n; ++i) {
        const int a = w[i] - '0';
        const int b = w[(i + 1) % n] - '0';
        if (a < 0 || a > q) return false;
        if (a >= 2 && a < q && b != a + 1) return false;
        if (a == q && b != 0 && b != 1) return false;
        if (a == 1 && b != 2) return false;
    }
    return true;
}

EnumMode parse_enum_mode(const std::string& s) {
    if (s == "all") return EnumMode::All;
    if (s == "minimal") return EnumMode::Minimal;
    throw DomainError("UsageError", "mode must be 'all' or 'minimal'");
}

std::vector<BinaryWord> realizable_words(int n, int jobs) {
    if (n < 1) return {};
    if (n == 1) return {"0"};
    // Candidates start with 10 and end with the conventional symbol.
    const size_t free_bits = static_cast<size_t>(std::max(0, n - 3));
    const size_t count = size_t{1} << free_bits;
    std::vector<char> keep(count, 0);
    std::vector<BinaryWord> cand(count);
    parallel_for(count, jobs, [&](size_t mask) {
        BinaryWord prefix = "10";
        for (size_t b = free_bits; b-- > 0;) prefix += ((mask >> b) & 1) ? '1' : '0';
        if (n == 2) prefix = "1";
        BinaryWord w = complete_with_convention(prefix);
        if (is_realizable(w)) {
            keep[mask] = 1;
            cand[mask] = std::move(w);
        }
    });
    std::vector<BinaryWord> out;
    for (size_t i = 0; i < count; ++i)
        if (keep[i]) out.push_back(std::move(cand[i]));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<SimplifiedWord> enumerate_vein_itineraries(int p, int q, int max_period, EnumMode mode, int jobs) {
    if (q < 2 || p <= 0 || p >= q || std::gcd(p, q) != 1)
        throw DomainError("InvalidVein", "vein p/q needs 0 < p < q and gcd(p, q) = 1");
    std::vector<SimplifiedWord> out;
    for (int n = 1; n <= max_period; ++n) {
        auto words = realizable_words(n, jobs);
        std::vector<char> keep(words.size(), 1);
        if (mode == EnumMode::Minimal) {
            parallel_for(words.size(), jobs, [&](size_t i) {
                try {
                    keep[i] = is_minimal(words[i]) ? 1 : 0;
                } catch (const DomainError&) {
                    keep[i] = 0;  // zero entropy
                }
            });
        }
        std::vector<SimplifiedWord> level;
        for (size_t i = 0; i < words.size(); ++i)
            if (keep[i]) level.push_back(recode(words[i]));
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

}  // namespace ce
