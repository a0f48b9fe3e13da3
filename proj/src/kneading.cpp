#include "coreentropy/kneading.hpp"

#include <cmath>
#include <stdexcept>

namespace ce {

AffineModelMap affine_model(int symbol, int q) {
    if (q < 2) throw std::invalid_argument("affine_model: q must be at least 2");
    AffineModelMap f;
    switch (symbol) {
        case 0: f.epsilon = 1; f.qj = 1; break;
        case 1: f.epsilon = -1; f.qj = 1; break;
        case 2: f.epsilon = -1; f.qj = q - 1; break;
        default: throw std::invalid_argument("affine_model: symbol must be 0, 1 or 2");
    }
    f.B = IntPolynomial{1} + IntPolynomial::monomial(f.qj);
    return f;
}

namespace {

int digit(char c) { return c - '0'; }

IntPolynomial apply(const AffineModelMap& f, const IntPolynomial& x) {
    return IntPolynomial::monomial(f.qj, f.epsilon) * x + f.B;
}

}  // namespace

IntPolynomial finite_word_kneading_polynomial(const std::string& w, int q) {
    if (w.empty()) throw std::invalid_argument("kneading polynomial of empty word");
    IntPolynomial x{1, 1};
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        const int s = digit(w[i]);
        if (s < 0 || s > 2) throw std::invalid_argument("kneading polynomial: symbols must be 0, 1, 2");
        x = apply(affine_model(s, q), x);
    }
    return x;
}

IntPolynomial kneading_polynomial(const SimplifiedWord& w, int q) {
    return finite_word_kneading_polynomial(w, q);
}

KneadingSeries kneading_determinant(const InfiniteWord& w, int q, int truncation) {
    if (w.period.empty()) throw std::invalid_argument("kneading_determinant: empty period");
    KneadingSeries ks;
    ks.truncation = truncation;
    std::vector<BigInt> acc(truncation + 1, 0);
    int eta = 1;
    int d = 0;
    for (size_t k = 0; d <= truncation; ++k) {
        const auto f = affine_model(digit(w.at(k)), q);
        if (k > 0) eta *= f.epsilon;
        for (int j = 0; j <= f.B.degree(); ++j)
            if (d + j <= truncation) acc[d + j] += eta * f.B.coeff(j);
        d += f.qj;
    }
    ks.truncated = IntPolynomial(std::move(acc));
    if (w.pre.empty()) {
        ks.periodic = true;
        const size_t p = w.period.size();
        IntPolynomial num;
        int e = 1;
        int dk = 0;
        for (size_t k = 0; k < p; ++k) {
            const auto f = affine_model(digit(w.at(k)), q);
            if (k > 0) e *= f.epsilon;
            num = num + IntPolynomial::monomial(dk, e) * f.B;
            dk += f.qj;
        }
        e *= affine_model(digit(w.at(p)), q).epsilon;
        ks.numerator = num;
        ks.denominator = IntPolynomial{1} - IntPolynomial::monomial(dk, e);
    }
    return ks;
}

IntPolynomial parry_polynomial(const BinaryWord& w) {
    if (w.empty() || !is_binary(w)) throw std::invalid_argument("parry_polynomial: non-empty binary word required");
    IntPolynomial x{1};
    const IntPolynomial z = IntPolynomial::monomial(1);
    for (char c : w) x = (c == '0') ? z * x : IntPolynomial{2} - z * x;
    return x - IntPolynomial{1};
}

IntPolynomial mt_kneading_polynomial(const BinaryWord& w) {
    if (w.empty() || !is_binary(w)) throw std::invalid_argument("mt_kneading_polynomial: binary word required");
    std::vector<BigInt> c;
    int theta = 1;
    c.emplace_back(1);
    for (size_t k = 1; k < w.size(); ++k) {
        if (w[k - 1] == '1') theta = -theta;
        c.emplace_back(theta);
    }
    return IntPolynomial(std::move(c));
}

int full_length(const SimplifiedWord& w, int q) {
    int l = 0;
    for (char c : w) l += (c == '2') ? q - 1 : 1;
    return l;
}

SimplifiedWord tune(const SimplifiedWord& outer, int q, const SimplifiedWord& inner) {
    if (outer.empty() || inner.empty()) throw std::invalid_argument("tune: empty word");
    int s = 1;
    for (size_t i = 0; i + 1 < outer.size(); ++i) s *= affine_model(digit(outer[i]), q).epsilon;
    const std::string head = outer.substr(0, outer.size() - 1);
    SimplifiedWord out;
    for (char v : inner) {
        out += head;
        if (s > 0)
            out += (v == '0') ? '0' : '1';
        else
            out += (v == '0') ? '1' : '0';
    }
    return out;
}

double growth_rate(const IntPolynomial& p) {
    if (p.degree() < 1) return 1.0;
    auto r = off_circle_roots(p);
    double best = 1.0;
    for (const auto& x : r.roots)
        if (x.z.imag() == 0 && x.z.real() > best) best = x.z.real();
    return best;
}

double tuned_entropy(const SimplifiedWord& outer, int q, const SimplifiedWord& inner) {
    const double h_out = std::log(growth_rate(kneading_polynomial(outer, q)));
    const double h_in = std::log(growth_rate(kneading_polynomial(inner, 2)));
    return std::max(h_out, h_in / full_length(outer, q));
}

}  // namespace ce
