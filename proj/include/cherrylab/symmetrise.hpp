#pragma once

#include <cstdint>
#include <vector>

#include "cherrylab/coloured_graph.hpp"

namespace cherrylab {

/// Disjoint blocks covering all vertices, size-descending (ties by smallest
/// member). Each block is a blue clique seen uniformly by outside vertices.
struct ClonePartition {
    std::vector<std::vector<int>> blocks;
};

enum class SelectorKind { FirstIndex, SeededRandom, PreferSet };

/// Strategy for the free choice of the next vertex to absorb.
struct Selector {
    SelectorKind kind = SelectorKind::FirstIndex;
    std::uint64_t seed = 0;
    std::vector<int> prefer;

    static Selector first_index() { return {}; }
    static Selector seeded_random(std::uint64_t seed) {
        return {SelectorKind::SeededRandom, seed, {}};
    }
    static Selector prefer_set(std::vector<int> target) {
        return {SelectorKind::PreferSet, 0, std::move(target)};
    }
};

struct SymmetrisationStep {
    int k;                           // |S| before the step
    int picked;                      // x_{k+1}
    std::int64_t gain_picked;        // c(G_{k+1}(x_{k+1})) - c(G_k)
    std::int64_t gain_first;         // c(G_{k+1}(x_1)) - c(G_k)
    int cloned_to;                   // the chosen y_{k+1}
    std::int64_t cherries_after;
    std::int64_t in_nbhd_symdiff;    // |N-(x_1) xor N-(x_{k+1})| in G_k
};

struct SymmetrisationTrace {
    std::int64_t cherries_before = 0;
    std::vector<SymmetrisationStep> steps;
};

struct SymmetriseResult {
    ColouredGraph graph;
    std::vector<int> block;  // the full blue clone-clique containing x
    SymmetrisationTrace trace;
};

/// Q is a blue clique, every outside vertex sees it all-red with a single
/// orientation.
bool is_full_blue_clone_clique(const ColouredGraph& g, const std::vector<int>& q);

/// Give every vertex of s the colour pattern of y towards V\s; pairs inside s
/// become blue. Requires |s| >= 2 and y in s.
ColouredGraph clone_graph(const ColouredGraph& g, const std::vector<int>& s, int y);

/// Grow a full blue clone-clique around x by repeated cloning, never
/// decreasing the cherry count. Cherry deltas are computed incrementally
/// (only triples touching the growing set are recounted).
SymmetriseResult symmetrise_from(const ColouredGraph& g, int x,
                                 const Selector& selector = {});

struct FullSymmetriseResult {
    ColouredGraph graph;
    ClonePartition partition;
};

/// Repeat symmetrise_from on the smallest vertex not yet in a full blue
/// clone-clique until the vertex set partitions into them.
FullSymmetriseResult full_symmetrise(const ColouredGraph& g,
                                     const Selector& selector = {});

/// Point every between-block red edge at the earlier (larger) block. Requires
/// the partition's blocks to be full blue clone-cliques of g.
ColouredGraph reorient_to_larger(const ColouredGraph& g, const ClonePartition& p);

namespace reference {
/// Plain implementation recounting all cherries from scratch at every step;
/// kept as the oracle the incremental version is tested against.
SymmetriseResult symmetrise_from(const ColouredGraph& g, int x,
                                 const Selector& selector = {});
}

}
