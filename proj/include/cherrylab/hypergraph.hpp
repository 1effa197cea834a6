#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

namespace cherrylab {

using Triple = std::array<int, 3>;        // vertex triple, sorted ascending
using VertexPair = std::pair<int, int>;   // unordered pairs use first < second

/// 3-uniform hypergraph on labelled vertices 0..n-1. Edges are kept canonical:
/// each triple sorted, the list sorted and duplicate-free. Values are immutable
/// after construction; all operations below are pure.
struct Hypergraph3 {
    int n = 0;
    std::vector<Triple> edges;

    std::size_t edge_count() const { return edges.size(); }
    bool has_edge(int a, int b, int c) const;
};

/// Validates vertices and canonicalises; throws std::invalid_argument on
/// out-of-range or repeated vertices or duplicate edges.
Hypergraph3 make_hypergraph(int n, std::vector<Triple> edges);

/// Pairs covered by at least one edge, sorted.
std::vector<VertexPair> shadow(const Hypergraph3& h);

/// Number of edges containing both u and v. Requires u != v, both in range.
int codegree(const Hypergraph3& h, int u, int v);

/// Link of v: pairs {u,w} with {u,v,w} an edge.
std::vector<VertexPair> link(const Hypergraph3& h, int v);

/// t-blow-up; vertex (x,i) of the result is labelled x*t + i.
Hypergraph3 blow_up(const Hypergraph3& h, int t);

/// Remove all edges containing v, then add e - u + v for every edge e with
/// u in e, v not in e. The result never has an edge containing both u and v.
Hypergraph3 vertex_replace(const Hypergraph3& h, int u, int v);

/// Tight cycle on ell >= 3 vertices: edges {i, i+1, i+2} mod ell.
Hypergraph3 tight_cycle(int ell);

/// Complete 3-graph on n vertices.
Hypergraph3 complete3(int n);

}
