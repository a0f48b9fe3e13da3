#pragma once
// Independent numeric references: real superattracting parameters and naive
// multicycle enumeration.

#include "coreentropy/hp.hpp"
#include "coreentropy/words.hpp"

#include <string>
#include <vector>

namespace ce {

struct RealCenter {
    HP c;
    int period = 0;
    BinaryWord itinerary;
};

// All real c in [-2, 1/4] with f_c^n(0) = 0 and exact period n, 1 <= n <= 14.
std::vector<RealCenter> real_centers(int n);
// Cached itineraries of real_centers(n).
const std::vector<BinaryWord>& real_center_itineraries(int n);
std::string center_to_json(const RealCenter& c);

// Directed graph as adjacency lists.
using Graph = std::vector<std::vector<int>>;
Graph graph_from_matrix(const IntMatrix& m);

// Coefficients c_0..c_nmax of sum over multicycles of (-1)^C t^len, found by
// naive enumeration of closed walks.
std::vector<BigInt> brute_force_multicycles(const Graph& g, int nmax, long long cap = 5'000'000);

}  // namespace ce
