#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cherrylab/coloured_graph.hpp"
#include "cherrylab/hypergraph.hpp"

namespace cherrylab {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text formats. Comments run from '#' to end of line.
//
//   h3 <n> <m>        followed by m lines "<a> <b> <c>"
//   cg <n>            followed by exactly n*(n-1)/2 lines
//                     "<u> <v> blue" or "<u> <v> red <from>"

Hypergraph3 parse_hypergraph(std::istream& in);
Hypergraph3 parse_hypergraph(const std::string& text);
std::string serialize(const Hypergraph3& h);

ColouredGraph parse_coloured_graph(std::istream& in);
ColouredGraph parse_coloured_graph(const std::string& text);
std::string serialize(const ColouredGraph& g);

}
