#pragma once
// Piecewise-linear first-return models and the kneading, Parry and
// Milnor-Thurston polynomials built from them.

#include "coreentropy/polyalg.hpp"
#include "coreentropy/words.hpp"

namespace ce {

// F_j(x) = epsilon * z^{qj} * x + B(z) with B = 1 + z^{qj}.
struct AffineModelMap {
    int epsilon = 1;
    int qj = 1;
    IntPolynomial B;
};

AffineModelMap affine_model(int symbol, int q);

IntPolynomial kneading_polynomial(const SimplifiedWord& w, int q);
IntPolynomial finite_word_kneading_polynomial(const std::string& w, int q);

struct KneadingSeries {
    IntPolynomial truncated;  // sum of the terms with degree <= truncation
    int truncation = 0;
    bool periodic = false;
    // For purely periodic input: D(t) = numerator / denominator.
    IntPolynomial numerator;
    IntPolynomial denominator;
};

// Index 0 of w is the symbol at the critical point.
KneadingSeries kneading_determinant(const InfiniteWord& w, int q, int truncation);

IntPolynomial parry_polynomial(const BinaryWord& w);
IntPolynomial mt_kneading_polynomial(const BinaryWord& w);

// Sum of q_j over the word: the length of its full itinerary.
int full_length(const SimplifiedWord& w, int q);
SimplifiedWord tune(const SimplifiedWord& outer, int q, const SimplifiedWord& inner);
double tuned_entropy(const SimplifiedWord& outer, int q, const SimplifiedWord& inner);

// Leading real root (>= 1) of a kneading polynomial; 1 when no root exceeds 1.
double growth_rate(const IntPolynomial& p);

}  // namespace ce
