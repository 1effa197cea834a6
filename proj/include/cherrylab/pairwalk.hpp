#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "cherrylab/hypergraph.hpp"

namespace cherrylab {

/// Vertex sequence with every window of 3 consecutive vertices an edge.
struct Pseudopath {
    std::vector<int> seq;  // order = seq.size() >= 2
};

/// Cyclic vertex sequence with every cyclic 3-window an edge; length >= 3.
struct CycleWitness {
    std::vector<int> seq;
    int length() const { return static_cast<int>(seq.size()); }
};

/// Digraph on ordered shadow pairs with arcs (x,y) -> (y,z) per edge {x,y,z}.
/// Walks of length L from (v1,v2) correspond to pseudopaths of order L+2;
/// closed walks of length L to pseudocycles of length L.
struct PairDigraph {
    int n = 0;
    std::vector<VertexPair> nodes;        // ordered pairs, lex sorted
    std::vector<std::vector<int>> succ;   // successor ids, sorted
    std::vector<int> node_id;             // n*n lookup, -1 when absent

    int id(int x, int y) const { return node_id[static_cast<std::size_t>(x) * n + y]; }
};

PairDigraph build_pair_digraph(const Hypergraph3& h);

bool is_pseudocycle(const Hypergraph3& h, const std::vector<int>& seq);
bool is_pseudopath(const Hypergraph3& h, const std::vector<int>& seq);

/// v_{k-1} v_k v_{k-2} v_{k-1} ... v_1 v_2: a pseudopath of order 2k-2 running
/// from the last pair of p back to its first pair. Requires order >= 3.
Pseudopath tilde(const Hypergraph3& h, const Pseudopath& p);

/// Minimum-order pseudopath starting fx,fy and ending tx,ty, or nullopt.
/// Order 2 when the pairs coincide.
std::optional<Pseudopath> shortest_pseudopath(const Hypergraph3& h, int fx, int fy,
                                              int tx, int ty);

/// Shortest pseudocycle of length not divisible by 3, if any. Deterministic:
/// lexicographically smallest base pair among minimisers, BFS expanding
/// successors in lex order.
std::optional<CycleWitness> detect_odd_pseudocycle(const Hypergraph3& h);

/// Per-base residue structure: dist[v][r] = shortest walk length L from the
/// base node to v with L = r (mod 3), or -1. pred holds the predecessor state
/// (node*3+r) for witness reconstruction.
struct ResidueReachability {
    int base = -1;
    std::vector<std::array<int, 3>> dist;
    std::vector<std::array<int, 3>> pred;
};

ResidueReachability residue_bfs(const PairDigraph& pd, int base);

struct DiameterResult {
    int value = 2;
    bool vacuous = false;  // empty shadow: no nontrivial pseudopaths at all
};

/// Least L bounding the order of shortest pseudopaths between all reachable
/// ordered shadow pairs. jobs > 1 fans the per-base BFS out over OpenMP
/// workers; the result is independent of jobs.
DiameterResult diameter(const Hypergraph3& h, int jobs = 1);

/// While some pair has codegree in (0, c), delete all edges containing it
/// (lex-smallest such pair first). Every surviving pair ends with codegree
/// 0 or >= c.
Hypergraph3 trim_small_codegree(const Hypergraph3& h, int c);

/// Stretch a pseudocycle of length l to length m by prefixing repetitions of
/// v1 v2 v3 (m = l mod 3) or of the whole cycle doubled (m = 2l mod 3).
CycleWitness extend_pseudocycle(const Hypergraph3& h, const CycleWitness& c, long long m);

/// trace(A^len) of the pair-digraph adjacency matrix = number of labelled
/// pseudocycle sequences of that length.
std::int64_t count_closed_walks(const PairDigraph& pd, int len);

}
