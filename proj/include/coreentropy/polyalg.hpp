#pragma once
// Exact integer polynomials, characteristic polynomials, cyclotomic
// stripping and complex roots.

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ce {

using BigInt = boost::multiprecision::cpp_int;
using cplx = std::complex<double>;

class DomainError : public std::runtime_error {
public:
    DomainError(std::string name, const std::string& what)
        : std::runtime_error(name + ": " + what), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// Dense, ascending coefficients. The zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> c);
    IntPolynomial(std::initializer_list<long long> c);

    static IntPolynomial monomial(int k, BigInt c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    BigInt coeff(int k) const;
    const BigInt& leading() const { return c_.back(); }

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return c_ != o.c_; }

    // Exact division; returns false if the divisor does not divide.
    bool divides_into(const IntPolynomial& d, IntPolynomial& quotient) const;
    IntPolynomial exact_div(const IntPolynomial& d) const;

    // t -> t^k
    IntPolynomial substitute_power(int k) const;
    // t^deg P(1/t), padded to degree d when d >= degree.
    IntPolynomial reversed(int d = -1) const;
    IntPolynomial derivative() const;
    IntPolynomial truncated(int maxdeg) const;
    // Sign so that the leading coefficient is positive.
    IntPolynomial normalized() const;
    int low_order() const;  // multiplicity of the root 0
    IntPolynomial without_zero_roots() const;

    BigInt eval(const BigInt& x) const;
    std::complex<long double> eval(std::complex<long double> z) const;

    std::string to_text(char var = 'z') const;
    static IntPolynomial parse(const std::string& s);

private:
    void trim();
    std::vector<BigInt> c_;
};

using IntMatrix = std::vector<std::vector<int>>;

// det(xI - M), exact.
IntPolynomial charpoly(const IntMatrix& m);
// det(I - tM) = reversal of charpoly.
IntPolynomial spectral_determinant(const IntMatrix& m);

IntPolynomial cyclotomic(int n);
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

struct StripResult {
    IntPolynomial rest;
    int x_power = 0;
    std::vector<std::pair<int, int>> factors;  // (n, multiplicity of Phi_n)
};
StripResult strip_cyclotomic_detail(const IntPolynomial& p, int nmax);
IntPolynomial strip_cyclotomic(const IntPolynomial& p, int nmax);
// True when p is +-x^d times a product of cyclotomic polynomials.
bool is_cyclotomic_times_monomial(const IntPolynomial& p);

struct Root {
    cplx z;
    int multiplicity = 1;
};

struct RootSet {
    std::vector<Root> roots;
    double tol = 1e-12;
    int total_multiplicity() const;
    std::vector<cplx> points() const;
};

RootSet roots(const IntPolynomial& p, double tol = 1e-12);
RootSet off_circle_roots(const IntPolynomial& p, double band = 1e-6);
RootSet off_circle(const RootSet& r, double band = 1e-6);
RootSet inside_circle(const RootSet& r, double band = 1e-6);

// Hausdorff distance of the finite sets, each unioned with the unit circle
// when with_circle is set.
double root_set_distance(const RootSet& a, const RootSet& b, bool with_circle = true);
double root_set_distance(const std::vector<cplx>& a, const std::vector<cplx>& b,
                         bool with_circle = true);
// Matches two multisets point by point; returns the largest distance or
// infinity if the multiplicities disagree.
double multiset_distance(const RootSet& a, const RootSet& b);

// Largest real root, found by bisection on an interval where p changes sign.
double leading_real_root(const IntPolynomial& p);

double tip_growth_rate(int q);

}  // namespace ce
