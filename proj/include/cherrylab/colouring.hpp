#pragma once

#include <cstdint>
#include <map>
#include <variant>

#include "cherrylab/coloured_graph.hpp"
#include "cherrylab/hypergraph.hpp"
#include "cherrylab/pairwalk.hpp"

namespace cherrylab {

std::int64_t cherry_count(const ColouredGraph& g);

/// True iff every edge of h is a cherry of g. Requires g.n == h.n.
bool verify_good_colouring(const Hypergraph3& h, const ColouredGraph& g);

/// Shadow pair -> apex endpoint the red arc leaves from, or kStar for blue.
struct EtaAssignment {
    static constexpr int kStar = -1;
    std::map<VertexPair, int> eta;
};

/// Either a colouring whose restriction to the shadow is good, or a shortest
/// odd-cycle witness certifying none exists. Non-shadow pairs come out blue.
struct GoodColouringResult {
    std::variant<ColouredGraph, CycleWitness> outcome;
    EtaAssignment eta;  // populated in the colouring case

    bool has_colouring() const { return outcome.index() == 0; }
    const ColouredGraph& colouring() const { return std::get<0>(outcome); }
    const CycleWitness& witness() const { return std::get<1>(outcome); }
};

GoodColouringResult construct_good_colouring(const Hypergraph3& h);

/// Blocks of the optimal profile as consecutive blue cliques, cross pairs red
/// towards the earlier block; attains the extremal cherry count.
ColouredGraph extremal_colouring(int n);

}
