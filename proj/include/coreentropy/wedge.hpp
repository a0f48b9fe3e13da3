#pragma once
// Labeled wedges of rational angles, the associated infinite graph, its finite
// models and their characteristic polynomials.

#include "coreentropy/angles.hpp"
#include "coreentropy/polyalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ce {

enum class WedgeLabel { NonSeparated, Separated, Equivalent };
char label_char(WedgeLabel l);  // 'N', 'S' or 'E'

struct LabeledWedge {
    Angle theta;
    int period = 1;
    int preperiod = 0;
    int window = 0;
    // Labels of (i, j) for 1 <= i <= j <= period + preperiod.
    std::vector<std::vector<WedgeLabel>> base;

    // Reduces n >= 1 into [1, period + preperiod] along the orbit relation.
    int reduce(int n) const;
    // Label of any pair; extended by periodicity.
    WedgeLabel label(int i, int j) const;
};

LabeledWedge build_wedge(const Angle& theta, int window = 0);

struct FiniteModel {
    int k = 1;
    int size = 0;  // k * period + preperiod
    std::vector<std::pair<int, int>> vertices;  // (i, j) with i <= j, row-major
    std::vector<WedgeLabel> labels;
    IntMatrix incidence;

    int index(int i, int j) const;
};

FiniteModel finite_model(const Angle& theta, int k = 1);
// Edges as "i,j -> k,l" lines, sorted, one per edge (parallel edges repeat).
std::string adjacency_text(const FiniteModel& m);

// Monic characteristic polynomial of the finite model.
IntPolynomial thurston_polynomial(const Angle& theta);

struct TruncationStats {
    int vertex_bound = 0;
    long long cycles = 0;
    long long multicycles = 0;
};

// Sum over multicycles of the infinite graph of (-1)^C t^len, degree <= nmax,
// using vertices with both coordinates <= 2 nmax + preperiod.
IntPolynomial truncated_spectral_determinant(const Angle& theta, int nmax, long long cap = 20'000'000,
                                             TruncationStats* stats = nullptr);

// Smallest cover index m with m > (2 nmax + 2) / period; finite models with at
// least this many covers agree with the truncation up to degree nmax.
int truncation_cover_index(const Angle& theta, int nmax);

// charpoly(finite_model(k)) / charpoly(finite_model(1)); throws NonDivisible.
IntPolynomial quotient_charpoly_ratio(const Angle& theta, int k);

// Spectral radius of the finite model, at least 1.
double growth_rate_from_wedge(const Angle& theta);

}  // namespace ce
