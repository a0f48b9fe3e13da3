#include "coreentropy/polyalg.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace ce {

using ldc = std::complex<long double>;

IntPolynomial::IntPolynomial(std::vector<BigInt> c) : c_(std::move(c)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<long long> c) {
    for (long long v : c) c_.emplace_back(v);
    trim();
}

IntPolynomial IntPolynomial::monomial(int k, BigInt c) {
    std::vector<BigInt> v(k + 1);
    v[k] = std::move(c);
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<BigInt> r(c_);
    for (auto& v : r) v = -v;
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPolynomial(std::move(r));
}

bool IntPolynomial::divides_into(const IntPolynomial& d, IntPolynomial& quotient) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (is_zero()) {
        quotient = {};
        return true;
    }
    if (degree() < d.degree()) return false;
    std::vector<BigInt> rem(c_);
    std::vector<BigInt> q(degree() - d.degree() + 1);
    const BigInt& lead = d.c_.back();
    const int dd = d.degree();
    for (int k = degree(); k >= dd; --k) {
        if (rem[k] == 0) continue;
        BigInt r;
        BigInt f;
        divide_qr(rem[k], lead, f, r);
        if (r != 0) return false;
        q[k - dd] = f;
        for (int j = 0; j <= dd; ++j)
            if (d.c_[j] != 0) rem[k - dd + j] -= f * d.c_[j];
    }
    for (int k = 0; k < dd; ++k)
        if (rem[k] != 0) return false;
    quotient = IntPolynomial(std::move(q));
    return true;
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& d) const {
    IntPolynomial q;
    if (!divides_into(d, q)) throw DomainError("InexactDivision", "divisor does not divide");
    return q;
}

IntPolynomial IntPolynomial::substitute_power(int k) const {
    if (is_zero()) return {};
    std::vector<BigInt> r(static_cast<size_t>(degree()) * k + 1);
    for (size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::reversed(int d) const {
    if (is_zero()) return {};
    if (d < degree()) d = degree();
    std::vector<BigInt> r(d + 1);
    for (size_t i = 0; i < c_.size(); ++i) r[d - i] = c_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<BigInt> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long long>(i);
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::truncated(int maxdeg) const {
    std::vector<BigInt> r(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), maxdeg + 1));
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::normalized() const {
    if (!is_zero() && c_.back() < 0) return -*this;
    return *this;
}

IntPolynomial IntPolynomial::without_zero_roots() const {
    const int z = low_order();
    if (z <= 0) return *this;
    return IntPolynomial(std::vector<BigInt>(c_.begin() + z, c_.end()));
}

int IntPolynomial::low_order() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

BigInt IntPolynomial::eval(const BigInt& x) const {
    BigInt r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::complex<long double> IntPolynomial::eval(std::complex<long double> z) const {
    ldc r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * z + static_cast<long double>(c_[i]);
    return r;
}

std::string IntPolynomial::to_text(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        BigInt a = abs(c_[k]);
        if (first)
            os << (c_[k] < 0 ? "-" : "");
        else
            os << (c_[k] < 0 ? " - " : " + ");
        os << a << '*' << var << '^' << k;
        first = false;
    }
    return os.str();
}

IntPolynomial IntPolynomial::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw DomainError("ParseError", "empty polynomial");
    std::map<int, BigInt> terms;
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        BigInt coef = 1;
        bool has_coef = j > i;
        if (has_coef) coef = BigInt(s.substr(i, j - i));
        i = j;
        int power = 0;
        if (i < s.size() && s[i] == '*') ++i;
        if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                size_t k = i;
                while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
                if (k == i) throw DomainError("ParseError", "missing exponent in '" + text + "'");
                power = std::stoi(s.substr(i, k - i));
                i = k;
            }
        } else if (!has_coef) {
            throw DomainError("ParseError", "bad term in '" + text + "'");
        }
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw DomainError("ParseError", "unexpected character in '" + text + "'");
        terms[power] += sign * coef;
    }
    int deg = terms.rbegin()->first;
    std::vector<BigInt> c(deg + 1);
    for (auto& [k, v] : terms) c[k] = v;
    return IntPolynomial(std::move(c));
}

// ---------------------------------------------------------------------------
// Characteristic polynomial: Hessenberg reduction modulo word-size primes and
// Chinese remaindering.

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

const std::vector<u64>& prime_pool() {
    static const std::vector<u64> pool = [] {
        std::vector<u64> v;
        u64 n = (1ull << 62) - 1;
        while (v.size() < 512) {
            if (is_prime_u64(n)) v.push_back(n);
            n -= 2;
        }
        return v;
    }();
    return pool;
}

std::vector<u64> charpoly_mod(const IntMatrix& m, u64 p) {
    const int n = static_cast<int>(m.size());
    std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long v = m[i][j] % static_cast<long long>(p);
            h[i][j] = static_cast<u64>(v < 0 ? v + static_cast<long long>(p) : v);
        }
    for (int col = 0; col + 2 < n; ++col) {
        int piv = -1;
        for (int i = col + 1; i < n; ++i)
            if (h[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        const int r = col + 1;
        if (piv != r) {
            std::swap(h[piv], h[r]);
            for (int i = 0; i < n; ++i) std::swap(h[i][piv], h[i][r]);
        }
        const u64 inv = powmod(h[r][col], p - 2, p);
        for (int i = r + 1; i < n; ++i) {
            if (h[i][col] == 0) continue;
            const u64 u = mulmod(h[i][col], inv, p);
            for (int j = 0; j < n; ++j)
                if (h[r][j]) h[i][j] = (h[i][j] + p - mulmod(u, h[r][j], p)) % p;
            for (int k = 0; k < n; ++k)
                if (h[k][i]) h[k][r] = (h[k][r] + mulmod(u, h[k][i], p)) % p;
        }
    }
    // polys[k] = charpoly of the leading k x k block, ascending coefficients
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (int k = 1; k <= n; ++k) {
        const int c = k - 1;
        std::vector<u64> cur(k + 1, 0);
        const auto& prev = polys[k - 1];
        for (int i = 0; i < k; ++i) {
            cur[i + 1] = (cur[i + 1] + prev[i]) % p;
            cur[i] = (cur[i] + p - mulmod(h[c][c], prev[i], p)) % p;
        }
        u64 prod = 1;
        for (int i = c - 1; i >= 0; --i) {
            prod = mulmod(prod, h[i + 1][i], p);
            if (prod == 0) break;
            const u64 f = mulmod(prod, h[i][c], p);
            if (f == 0) continue;
            for (size_t j = 0; j < polys[i].size(); ++j)
                cur[j] = (cur[j] + p - mulmod(f, polys[i][j], p)) % p;
        }
        polys[k] = std::move(cur);
    }
    return polys[n];
}

// Removes vertices with empty rows or columns; each contributes a factor x.
IntMatrix prune_trivial(const IntMatrix& m, int& x_power) {
    const int n = static_cast<int>(m.size());
    std::vector<bool> alive(n, true);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            bool row = false;
            bool col = false;
            for (int j = 0; j < n && !(row && col); ++j) {
                if (!alive[j]) continue;
                row = row || m[i][j] != 0;
                col = col || m[j][i] != 0;
            }
            if (!row || !col) {
                alive[i] = false;
                ++x_power;
                changed = true;
            }
        }
    }
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (alive[i]) keep.push_back(i);
    IntMatrix r(keep.size(), std::vector<int>(keep.size()));
    for (size_t a = 0; a < keep.size(); ++a)
        for (size_t b = 0; b < keep.size(); ++b) r[a][b] = m[keep[a]][keep[b]];
    return r;
}

}  // namespace

IntPolynomial charpoly(const IntMatrix& input) {
    for (const auto& row : input)
        if (row.size() != input.size()) throw std::invalid_argument("charpoly: matrix not square");
    int x_power = 0;
    IntMatrix m = prune_trivial(input, x_power);
    const int n = static_cast<int>(m.size());
    if (n == 0) return IntPolynomial::monomial(x_power);

    // Coefficient of x^(n-k) is a sum of C(n,k) principal minors, each bounded
    // by Hadamard's inequality.
    double max_row = 1.0;
    for (const auto& row : m) {
        double s = 0;
        for (int v : row) s += static_cast<double>(v) * v;
        max_row = std::max(max_row, s);
    }
    const double bits = n + 0.5 * n * std::log2(max_row) + 2;

    const auto& pool = prime_pool();
    std::vector<BigInt> acc(n + 1, 0);
    BigInt modulus = 1;
    size_t used = 0;
    while (static_cast<double>(msb(modulus)) < bits + 1) {
        if (used >= pool.size()) throw DomainError("ResourceLimit", "charpoly coefficient bound too large");
        const u64 p = pool[used++];
        auto cp = charpoly_mod(m, p);
        // CRT: acc = acc + modulus * ((cp - acc) * modulus^{-1} mod p)
        const u64 mod_p = static_cast<u64>(modulus % p);
        const u64 inv = powmod(mod_p, p - 2, p);
        for (int i = 0; i <= n; ++i) {
            const u64 a = static_cast<u64>(acc[i] % p);
            const u64 diff = (cp[i] + p - a) % p;
            const u64 t = mulmod(diff, inv, p);
            acc[i] += modulus * t;
        }
        modulus *= p;
    }
    const BigInt half = modulus / 2;
    std::vector<BigInt> out(x_power + n + 1, 0);
    for (int i = 0; i <= n; ++i) {
        BigInt v = acc[i];
        if (v > half) v -= modulus;
        out[x_power + i] = v;
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial spectral_determinant(const IntMatrix& m) {
    return charpoly(m).reversed(static_cast<int>(m.size()));
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials.

namespace {

int mobius(int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        r = -r;
    }
    if (n > 1) r = -r;
    return r;
}

int euler_phi(int n) {
    int r = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        r -= r / p;
    }
    if (n > 1) r -= r / n;
    return r;
}

}  // namespace

IntPolynomial cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
    if (n == 1) return IntPolynomial{-1, 1};
    static std::mutex mu;
    static std::map<int, IntPolynomial> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // Phi_n = prod_{d | n} (1 - x^d)^{mu(n/d)} as a power series, n > 1.
    const int deg = euler_phi(n);
    std::vector<long long> f(deg + 1, 0);
    f[0] = 1;
    for (int d = 1; d <= n; ++d) {
        if (n % d) continue;
        const int mu = mobius(n / d);
        if (mu == 1) {
            for (int i = deg; i >= d; --i) f[i] -= f[i - d];
        } else if (mu == -1) {
            for (int i = d; i <= deg; ++i) f[i] += f[i - d];
        }
    }
    std::vector<BigInt> c(f.begin(), f.end());
    IntPolynomial r(std::move(c));
    std::lock_guard<std::mutex> lk(mu);
    cache.emplace(n, r);
    return r;
}

namespace {

BigInt content(const IntPolynomial& p) {
    BigInt g = 0;
    for (const auto& c : p.coeffs()) g = boost::multiprecision::gcd(g, c);
    return g;
}

IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<BigInt> c(p.coeffs());
    for (auto& v : c) v /= g;
    return IntPolynomial(std::move(c));
}

// Pseudo-remainder of a by b.
IntPolynomial pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
    const int db = b.degree();
    const BigInt& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        BigInt la = a.leading();
        std::vector<BigInt> c(a.coeffs());
        for (auto& v : c) v *= lb;
        for (int j = 0; j <= db; ++j) c[shift + j] -= la * b.coeffs()[j];
        a = primitive_part(IntPolynomial(std::move(c)));
    }
    return a;
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a0, const IntPolynomial& b0) {
    IntPolynomial a = primitive_part(a0);
    IntPolynomial b = primitive_part(b0);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_rem(a, b);
        a = b;
        b = primitive_part(r);
    }
    return a;
}

StripResult strip_cyclotomic_detail(const IntPolynomial& p, int nmax) {
    if (p.is_zero()) throw std::invalid_argument("strip_cyclotomic: zero polynomial");
    StripResult res;
    res.x_power = p.low_order();
    std::vector<BigInt> c(p.coeffs().begin() + res.x_power, p.coeffs().end());
    IntPolynomial rest(std::move(c));
    for (int n = 1; n <= nmax && rest.degree() > 0; ++n) {
        if (euler_phi(n) > rest.degree()) continue;
        // Cheap numeric screen before trial division.
        long double scale = 0;
        for (const auto& v : rest.coeffs()) scale += std::fabs(static_cast<long double>(v));
        const long double ang = 2.0L * std::acos(-1.0L) / n;
        const ldc zeta(std::cos(ang), std::sin(ang));
        if (std::abs(rest.eval(zeta)) > 1e-9L * scale) continue;
        const IntPolynomial phi = cyclotomic(n);
        int mult = 0;
        IntPolynomial q;
        while (rest.degree() >= phi.degree() && rest.divides_into(phi, q)) {
            rest = q;
            ++mult;
        }
        if (mult) res.factors.emplace_back(n, mult);
    }
    res.rest = rest;
    return res;
}

IntPolynomial strip_cyclotomic(const IntPolynomial& p, int nmax) {
    return strip_cyclotomic_detail(p, nmax).rest;
}

bool is_cyclotomic_times_monomial(const IntPolynomial& p) {
    if (p.is_zero()) return false;
    const int d = p.degree() - p.low_order();
    // phi(n) >= sqrt(n/2), so every cyclotomic factor has n <= 2 d^2.
    const int nmax = std::max(2, 2 * d * d);
    auto r = strip_cyclotomic_detail(p, nmax).rest;
    return r.degree() == 0 && abs(r.coeffs()[0]) == 1;
}

// ---------------------------------------------------------------------------
// Roots.

int RootSet::total_multiplicity() const {
    int s = 0;
    for (const auto& r : roots) s += r.multiplicity;
    return s;
}

std::vector<cplx> RootSet::points() const {
    std::vector<cplx> v;
    for (const auto& r : roots)
        for (int k = 0; k < r.multiplicity; ++k) v.push_back(r.z);
    return v;
}

namespace {

struct LdPoly {
    std::vector<long double> c;  // ascending
    std::vector<long double> rev;
    explicit LdPoly(const IntPolynomial& p) {
        for (const auto& v : p.coeffs()) c.push_back(static_cast<long double>(v));
        rev.assign(c.rbegin(), c.rend());
    }
    int n() const { return static_cast<int>(c.size()) - 1; }

    static void horner(const std::vector<long double>& a, ldc z, ldc& v, ldc& d) {
        v = 0;
        d = 0;
        for (size_t i = a.size(); i-- > 0;) {
            d = d * z + v;
            v = v * z + a[i];
        }
    }

    // Newton correction p(z)/p'(z), evaluated stably for |z| > 1.
    ldc newton(ldc z) const {
        ldc v, d;
        if (std::abs(z) <= 1) {
            horner(c, z, v, d);
            return v / d;
        }
        const ldc y = 1.0L / z;
        horner(rev, y, v, d);
        return z * v / (static_cast<long double>(n()) * v - y * d);
    }
};

std::vector<ldc> companion_guess(const LdPoly& p) {
    const int n = p.n();
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(n, n);
    const long double lead = p.c.back();
    for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) comp(i, n - 1) = static_cast<double>(-p.c[i] / lead);
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    std::vector<ldc> z;
    if (es.info() == Eigen::Success) {
        for (int i = 0; i < n; ++i) z.emplace_back(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
    } else {
        for (int i = 0; i < n; ++i) {
            const long double a = 2.0L * std::acos(-1.0L) * (i + 0.25L) / n;
            z.emplace_back(std::cos(a), std::sin(a));
        }
    }
    // Aberth needs distinct starting points.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (std::abs(z[i] - z[j]) < 1e-12L) z[i] += ldc(1e-7L * (i + 1), 1e-7L * (j + 2));
    return z;
}

std::vector<ldc> aberth(const IntPolynomial& poly, double tol) {
    LdPoly p(poly);
    const int n = p.n();
    if (n == 1) return {ldc(-p.c[0] / p.c[1], 0)};
    std::vector<ldc> z = companion_guess(p);
    std::vector<bool> done(n, false);
    const int budget = 2000;
    for (int it = 0; it < budget; ++it) {
        bool all = true;
        for (int i = 0; i < n; ++i) {
            if (done[i]) continue;
            const ldc ratio = p.newton(z[i]);
            ldc s = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += 1.0L / (z[i] - z[j]);
            const ldc w = ratio / (1.0L - ratio * s);
            z[i] -= w;
            if (std::abs(w) <= 1e-3L * tol * std::max<long double>(1, std::abs(z[i])))
                done[i] = true;
            else
                all = false;
        }
        if (all) return z;
    }
    // Accept if the final corrections are tiny relative to the tolerance.
    for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        const ldc r = p.newton(z[i]);
        if (std::abs(r) > tol * std::max<long double>(1, std::abs(z[i])))
            throw DomainError("NonConvergence", "root iteration budget exhausted");
    }
    return z;
}

// Yun's square-free decomposition over Z: returns (factor, multiplicity).
std::vector<std::pair<IntPolynomial, int>> squarefree(const IntPolynomial& f) {
    std::vector<std::pair<IntPolynomial, int>> out;
    IntPolynomial a = primitive_part(f);
    if (a.degree() <= 0) return out;
    IntPolynomial b = a.derivative();
    IntPolynomial c = gcd(a, b);
    if (c.degree() == 0) {
        out.emplace_back(a, 1);
        return out;
    }
    IntPolynomial w = primitive_part(a.exact_div(c));
    int i = 1;
    while (w.degree() > 0) {
        IntPolynomial y = gcd(w, c);
        IntPolynomial z = primitive_part(w.exact_div(y));
        if (z.degree() > 0) out.emplace_back(z, i);
        w = y;
        c = primitive_part(c.exact_div(y));
        ++i;
    }
    return out;
}

}  // namespace

RootSet roots(const IntPolynomial& p, double tol) {
    if (p.is_zero()) throw std::invalid_argument("roots: zero polynomial");
    RootSet rs;
    rs.tol = tol;
    const int z0 = p.low_order();
    if (z0) rs.roots.push_back({cplx(0, 0), z0});
    std::vector<BigInt> c(p.coeffs().begin() + z0, p.coeffs().end());
    IntPolynomial rest(std::move(c));
    for (auto& [f, mult] : squarefree(rest)) {
        for (const ldc& z : aberth(f, tol)) {
            cplx v(static_cast<double>(z.real()), static_cast<double>(z.imag()));
            if (std::fabs(v.imag()) < 1e-14 * (1 + std::abs(v))) v.imag(0);
            rs.roots.push_back({v, mult});
        }
    }
    std::sort(rs.roots.begin(), rs.roots.end(), [](const Root& a, const Root& b) {
        if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
        return a.z.imag() < b.z.imag();
    });
    return rs;
}

RootSet off_circle(const RootSet& r, double band) {
    RootSet out;
    out.tol = r.tol;
    for (const auto& x : r.roots) {
        const double m = std::abs(x.z);
        if (m < 1 - band || m > 1 + band) out.roots.push_back(x);
    }
    return out;
}

RootSet inside_circle(const RootSet& r, double band) {
    RootSet out;
    out.tol = r.tol;
    for (const auto& x : r.roots)
        if (std::abs(x.z) < 1 - band) out.roots.push_back(x);
    return out;
}

RootSet off_circle_roots(const IntPolynomial& p, double band) {
    // Cyclotomic factors only contribute unimodular roots; removing them first
    // keeps the root finder away from high-multiplicity clusters.
    auto s = strip_cyclotomic_detail(p, std::max(2, 2 * p.degree()));
    RootSet r = s.rest.degree() > 0 ? roots(s.rest) : RootSet{};
    if (s.x_power) r.roots.insert(r.roots.begin(), Root{cplx(0, 0), s.x_power});
    return off_circle(r, band);
}

namespace {

double dist_to(const cplx& a, const std::vector<cplx>& b, bool circle) {
    double d = circle ? std::fabs(std::abs(a) - 1) : std::numeric_limits<double>::infinity();
    for (const auto& x : b) d = std::min(d, std::abs(a - x));
    return d;
}

}  // namespace

double root_set_distance(const std::vector<cplx>& a, const std::vector<cplx>& b, bool with_circle) {
    if (!with_circle && (a.empty() != b.empty())) return std::numeric_limits<double>::infinity();
    double h = 0;
    for (const auto& x : a) h = std::max(h, dist_to(x, b, with_circle));
    for (const auto& x : b) h = std::max(h, dist_to(x, a, with_circle));
    return h;
}

double root_set_distance(const RootSet& a, const RootSet& b, bool with_circle) {
    return root_set_distance(a.points(), b.points(), with_circle);
}

double multiset_distance(const RootSet& a, const RootSet& b) {
    auto pa = a.points();
    auto pb = b.points();
    if (pa.size() != pb.size()) return std::numeric_limits<double>::infinity();
    std::vector<bool> used(pb.size(), false);
    double worst = 0;
    for (const auto& x : pa) {
        double best = std::numeric_limits<double>::infinity();
        size_t bi = 0;
        for (size_t j = 0; j < pb.size(); ++j) {
            if (used[j]) continue;
            const double d = std::abs(x - pb[j]);
            if (d < best) {
                best = d;
                bi = j;
            }
        }
        used[bi] = true;
        worst = std::max(worst, best);
    }
    return worst;
}

double leading_real_root(const IntPolynomial& p) {
    if (p.degree() < 1) throw std::invalid_argument("leading_real_root: constant polynomial");
    RootSet rs = roots(p);
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& r : rs.roots)
        if (r.z.imag() == 0) best = std::max(best, r.z.real());
    if (!std::isfinite(best)) throw DomainError("NoRealRoot", "polynomial has no real root");
    // Polish with Newton in long double on the square-free part.
    IntPolynomial f = p;
    IntPolynomial g = gcd(p, p.derivative());
    if (g.degree() > 0) f = p.exact_div(g);
    IntPolynomial df = f.derivative();
    long double x = best;
    for (int i = 0; i < 8; ++i) {
        const long double v = f.eval(ldc(x, 0)).real();
        const long double d = df.eval(ldc(x, 0)).real();
        if (d == 0) break;
        x -= v / d;
    }
    return static_cast<double>(x);
}

double tip_growth_rate(int q) {
    if (q < 2) throw std::invalid_argument("tip_growth_rate: q must be at least 2");
    // x^q - x^{q-1} - 2 is negative at 1 and positive at 2.
    auto f = [q](long double x) { return std::pow(x, q) - std::pow(x, q - 1) - 2; };
    if (f(2.0L) == 0) return 2.0;
    long double lo = 1, hi = 2;
    for (int i = 0; i < 200; ++i) {
        const long double mid = (lo + hi) / 2;
        (f(mid) > 0 ? hi : lo) = mid;
    }
    return static_cast<double>((lo + hi) / 2);
}

}  // namespace ce
