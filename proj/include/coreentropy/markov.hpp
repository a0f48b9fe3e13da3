#pragma once
// Star-shaped Hubbard trees of principal vein parameters, their Markov
// partitions and incidence matrices.

#include "coreentropy/hp.hpp"
#include "coreentropy/polyalg.hpp"
#include "coreentropy/words.hpp"

#include <string>
#include <vector>

namespace ce {

struct TreePoint {
    std::string name;  // x1.., c, alpha
    int index = 0;     // position in the critical orbit, 0 for alpha
    int branch = 0;    // 0..q, -1 for alpha
    HP position;       // PL coordinate; points on I_k, k >= 3, carry their I_2 preimage
};

struct StarTreeModel {
    int q = 2;
    FullWord word;
    HP lambda;
    std::vector<TreePoint> points;  // orbit points x1..xn (xn = c), then alpha
};

// Positions from the piecewise-linear model with slope lambda. Throws
// ZeroEntropy, PositionCollision or ItineraryMismatch.
StarTreeModel star_tree_model(const FullWord& w, int q);

struct MarkovMatrix {
    std::vector<std::string> labels;  // e.g. "I1[alpha,c]"
    std::vector<int> branch;          // 0..q, -1 when an interval straddles alpha
    IntMatrix entries;

    std::string to_json() const;
};

struct MarkovOptions {
    bool mark_alpha = true;
    bool add_beta = false;  // q = 2 only: extends the tree to [-beta, beta]
};

// Incidence matrix of the tree spanned by the critical orbit, cut at the
// orbit, alpha and the critical point. Orders marked points symbolically, so
// renormalizable and zero-entropy words are accepted.
MarkovMatrix markov_matrix(const FullWord& w, int q, const MarkovOptions& opt = {});
IntPolynomial markov_polynomial(const FullWord& w, int q);

// Real maps: A0 on [f(c), f^2(c)] and A1 on [-beta, beta].
MarkovMatrix real_markov_matrix_A0(const BinaryWord& w);
MarkovMatrix real_markov_matrix_A1(const BinaryWord& w);

}  // namespace ce
