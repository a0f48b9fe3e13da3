#include "coreentropy/hp.hpp"

#include "coreentropy/kneading.hpp"

namespace ce {

HP to_hp(const BigInt& v) { return HP(v.str()); }

HP refine_real_root(const IntPolynomial& p0, double guess) {
    IntPolynomial p = p0;
    IntPolynomial g = gcd(p, p.derivative());
    if (g.degree() > 0) p = p.exact_div(g);
    std::vector<HP> c;
    for (const auto& v : p.coeffs()) c.push_back(to_hp(v));
    HP x = guess;
    const HP eps = HP("1e-60");
    for (int it = 0; it < 100; ++it) {
        HP v = 0, d = 0;
        for (size_t i = c.size(); i-- > 0;) {
            d = d * x + v;
            v = v * x + c[i];
        }
        if (d == 0) break;
        const HP step = v / d;
        x -= step;
        if (abs(step) < eps * (1 + abs(x))) break;
    }
    return x;
}

HP growth_rate_hp(const IntPolynomial& p) {
    const double g = growth_rate(p);
    if (g <= 1.0) return HP(1);
    return refine_real_root(p, g);
}

}  // namespace ce
