#include "coreentropy/angles.hpp"

#include "coreentropy/kneading.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ce {

Angle::Angle(BigInt num, BigInt den) {
    if (den <= 0) throw DomainError("InvalidAngle", "denominator must be positive");
    num %= den;
    if (num < 0) num += den;
    BigInt g = boost::multiprecision::gcd(num, den);
    if (g == 0) g = den;
    num_ = num / g;
    den_ = den / g;
}

Angle Angle::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Angle(BigInt(s), 1);
        const std::string a = s.substr(0, slash), b = s.substr(slash + 1);
        if (a.empty() || b.empty()) throw std::runtime_error("empty");
        for (char c : a + b)
            if (!std::isdigit(static_cast<unsigned char>(c))) throw std::runtime_error("digit");
        return Angle(BigInt(a), BigInt(b));
    } catch (const DomainError&) {
        throw;
    } catch (const std::exception&) {
        throw DomainError("ParseError", "angle must look like a/b, got '" + s + "'");
    }
}

std::string Angle::to_string() const { return num_.str() + "/" + den_.str(); }

Classification classify(const Angle& theta) {
    Classification c;
    BigInt m = theta.den();
    while (m % 2 == 0) {
        m /= 2;
        ++c.preperiod;
    }
    if (m == 1) return c;
    BigInt r = 2 % m;
    int k = 1;
    while (r != 1) {
        r = (r * 2) % m;
        ++k;
    }
    c.period = k;
    return c;
}

std::vector<Angle> orbit(const Angle& theta, int n) {
    if (n < 1) throw std::invalid_argument("orbit: n must be positive");
    std::vector<Angle> out{theta};
    while (static_cast<int>(out.size()) < n) out.push_back(out.back().doubled());
    return out;
}

bool in_arc(const Angle& x, const Angle& from, const Angle& to) {
    if (from < to) return !(x < from) && x < to;
    return !(x < from) || x < to;
}

bool in_open_arc(const Angle& x, const Angle& from, const Angle& to) {
    return in_arc(x, from, to) && x != from;
}

AnglePartition angle_partition(const Angle& theta) {
    return {theta, theta.halved(), theta.plus_half()};
}

RotationCycle rotation_cycle(int p, int q) {
    if (q < 2 || p <= 0 || p >= q || std::gcd(p, q) != 1)
        throw DomainError("InvalidVein", "rotation number p/q needs 0 < p < q, gcd 1");
    if (q > 30) throw DomainError("InvalidVein", "q too large");
    static std::mutex mu;
    static std::map<std::pair<int, int>, RotationCycle> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find({p, q});
    if (it != cache.end()) return it->second;
    const long long den = (1LL << q) - 1;
    for (long long k = 1; k < den; ++k) {
        std::vector<long long> orb{k};
        long long x = k;
        for (int i = 1; i < q; ++i) {
            x = (2 * x) % den;
            orb.push_back(x);
        }
        if ((2 * x) % den != k) continue;
        if (std::find(orb.begin() + 1, orb.end(), k) != orb.end()) continue;  // smaller period
        if (*std::min_element(orb.begin(), orb.end()) != k) continue;      // one representative
        std::vector<long long> sorted(orb);
        std::sort(sorted.begin(), sorted.end());
        bool ok = true;
        for (int i = 0; i < q && ok; ++i) {
            const long long img = (2 * sorted[i]) % den;
            ok = sorted[(i + p) % q] == img;
        }
        if (!ok) continue;
        RotationCycle rc{p, q, {}};
        for (long long v : sorted) rc.angles.emplace_back(v, den);
        cache.emplace(std::make_pair(p, q), rc);
        return rc;
    }
    throw DomainError("InvalidVein", "no rotation cycle found");
}

namespace {

// Sector labels: arc i runs from angles[i] to angles[i+1]; label 0 marks the
// sector cut by the critical rays.
std::vector<int> sector_labels(const RotationCycle& rc, int& characteristic) {
    const int q = rc.q;
    auto length = [&](int i) {
        const Angle& a = rc.angles[i];
        const Angle& b = rc.angles[(i + 1) % q];
        Angle d(b.num() * a.den() - a.num() * b.den(), a.den() * b.den());
        return d;
    };
    characteristic = 0;
    for (int i = 1; i < q; ++i)
        if (length(i) < length(characteristic)) characteristic = i;
    std::vector<int> label(q, 0);
    int arc = characteristic;
    for (int l = 2; l <= q; ++l) {
        label[arc] = l;
        const Angle img = rc.angles[arc].doubled();
        arc = static_cast<int>(std::find(rc.angles.begin(), rc.angles.end(), img) - rc.angles.begin());
    }
    return label;
}

}  // namespace

AngleItineraries angle_to_itineraries(const Angle& theta, int p, int q) {
    const auto cls = classify(theta);
    if (cls.preperiod != 0) throw DomainError("NotPeriodic", theta.to_string() + " is not strictly periodic");
    const RotationCycle rc = rotation_cycle(p, q);
    int ch = 0;
    const auto label = sector_labels(rc, ch);
    for (const auto& a : rc.angles)
        if (a == theta) throw DomainError("OnPartitionBoundary", theta.to_string() + " is a rotation-cycle angle");
    if (!in_open_arc(theta, rc.angles[ch], rc.angles[(ch + 1) % q]))
        throw DomainError("NotOnVein", theta.to_string() + " is outside the characteristic arc");
    const AnglePartition part = angle_partition(theta);
    const auto xs = orbit(theta, cls.period);
    FullWord full;
    for (size_t i = 0; i < xs.size(); ++i) {
        const Angle& x = xs[i];
        int sector = -1;
        for (int k = 0; k < q; ++k) {
            if (x == rc.angles[k]) throw DomainError("OnPartitionBoundary", "orbit meets the rotation cycle");
            if (in_open_arc(x, rc.angles[k], rc.angles[(k + 1) % q])) sector = k;
        }
        if (label[sector] >= 2) {
            full += std::to_string(label[sector]);
            continue;
        }
        if (part.on_boundary(x)) {
            if (i + 1 != xs.size()) throw DomainError("OnPartitionBoundary", "critical ray hit before the period");
            full += '?';
            continue;
        }
        // The half [(theta+1)/2, theta/2) contains angle 0.
        full += part.half(x) == 1 ? '0' : '1';
    }
    if (full.back() == '?') {
        full.pop_back();
        const BinaryWord done = complete_with_convention(recode_inverse(simplify(full)));
        full += done.back();
    }
    AngleItineraries out{full, simplify(full)};
    if (!satisfies_full_grammar(out.full, q) || !satisfies_simplified_grammar(out.simplified))
        throw DomainError("NotOnVein", "itinerary " + out.full + " violates the vein grammar");
    if (!is_realizable(recode_inverse(out.simplified)))
        throw DomainError("NotOnVein", "itinerary " + out.simplified + " is not realizable");
    return out;
}

namespace {

using u64 = std::uint64_t;

// Full itineraries of every angle k/(2^P - 1) of exact period P in the
// characteristic arc; returns word -> smallest numerator.
std::map<FullWord, u64> itineraries_of_period(int P, int p, int q) {
    const RotationCycle rc = rotation_cycle(p, q);
    int ch = 0;
    const auto label = sector_labels(rc, ch);
    const u64 D = (u64{1} << P) - 1;
    const u64 E = (u64{1} << q) - 1;
    std::vector<u64> cyc;
    for (const auto& a : rc.angles) cyc.push_back(static_cast<u64>(a.num()));
    // x = k/D against c = a/E: compare k*E with a*D.
    auto arc_of = [&](u64 k) -> int {
        for (int i = 0; i < q; ++i) {
            const u64 lo = cyc[i] * D, hi = cyc[(i + 1) % q] * D, v = k * E;
            if (v == lo) return -1;
            const bool inside = lo < hi ? (v > lo && v < hi) : (v > lo || v < hi);
            if (inside) return i;
        }
        return -1;
    };
    std::map<FullWord, u64> found;
    const u64 lo_k = cyc[ch] * D / E, hi_k = cyc[(ch + 1) % q] * D / E + 1;
    for (u64 k = lo_k; k <= hi_k && k < D; ++k) {
        if (arc_of(k) != ch) continue;
        // theta/2 = k/(2D), (theta+1)/2 = (k+D)/(2D)
        FullWord w;
        u64 x = k;
        bool ok = true;
        for (int i = 0; i < P && ok; ++i) {
            if (i > 0 && x == k) ok = false;  // smaller period
            const int s = arc_of(x);
            if (s < 0) {
                ok = false;
                break;
            }
            if (label[s] >= 2) {
                w += static_cast<char>('0' + label[s]);
            } else if (2 * x == k || 2 * x == k + D) {
                if (i != P - 1) ok = false;
                w += '?';
            } else {
                // symbol 0 on [(k+D)/(2D), k/(2D)) through 0
                const bool zero = (2 * x > k + D) || (2 * x < k);
                w += zero ? '0' : '1';
            }
            x = (2 * x) % D;
        }
        if (!ok || x != k || w.back() != '?') continue;
        w.pop_back();
        w += complete_with_convention(recode_inverse(simplify(w))).back();
        if (!found.count(w)) found.emplace(w, k);
    }
    return found;
}

}  // namespace

Angle angle_for_word(const SimplifiedWord& w, int p, int q) {
    if (w == "20") {
        // The bulb center: its rays are the rotation cycle bounding the arc.
        const RotationCycle rc = rotation_cycle(p, q);
        int ch = 0;
        sector_labels(rc, ch);
        return rc.angles[ch];
    }
    const FullWord full = q_recode(w, q);
    const int P = static_cast<int>(full.size());
    if (P > 40) throw DomainError("ResourceLimit", "full period too large for angle search");
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, std::map<FullWord, u64>> cache;
    std::map<FullWord, u64>* table;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto key = std::make_tuple(P, p, q);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, itineraries_of_period(P, p, q)).first;
        table = &it->second;
    }
    auto it = table->find(full);
    if (it == table->end()) throw DomainError("NotOnVein", "no angle with itinerary " + w);
    return Angle(BigInt(it->second), (BigInt(1) << P) - 1);
}

}  // namespace ce
