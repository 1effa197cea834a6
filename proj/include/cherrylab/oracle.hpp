#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "cherrylab/coloured_graph.hpp"
#include "cherrylab/hypergraph.hpp"
#include "cherrylab/pairwalk.hpp"

namespace cherrylab::oracle {

/// Exhaustive-search result; the witness re-evaluates to the optimum and is
/// the lexicographically smallest optimum regardless of worker count.
template <class Witness>
struct SearchReport {
    int n = 0;
    std::string objective;
    std::int64_t optimum = 0;
    Witness witness;
    std::int64_t optima_count = 0;
    std::uint64_t nodes_explored = 0;
};

/// Maximum edge count over all 3-graphs on n labelled vertices with no
/// pseudocycle of length not divisible by 3. Subset search over edge
/// bitmasks; branches whose partial graph already has an odd pseudocycle are
/// pruned (presence is monotone under adding edges). n <= 6.
SearchReport<Hypergraph3> max_edges_odd_free(int n, int jobs = 1);

/// Maximum cherry count over all 3^C(n,2) colourings of K_n. n <= 5.
SearchReport<ColouredGraph> max_cherries(int n, int jobs = 1);

/// Shortest l <= lmax with l not divisible by 3 admitting a closed tight walk,
/// by per-length frontier DP over ordered pairs (independent of the BFS
/// detector). n <= 8, lmax <= 15.
std::optional<int> shortest_odd_bruteforce(const Hypergraph3& h, int lmax);

/// Number of labelled vertex sequences of the given length that are
/// pseudocycles, by direct sequence enumeration. n <= 6, len <= 9.
std::int64_t count_pseudocycles(const Hypergraph3& h, int len);

/// Diameter via Floyd-Warshall over ordered pairs; cross-check for the
/// BFS-based computation.
DiameterResult diameter_bruteforce(const Hypergraph3& h);

}
