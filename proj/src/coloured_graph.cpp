#include "cherrylab/coloured_graph.hpp"

#include <stdexcept>

namespace cherrylab {

ColouredGraph ColouredGraph::all_blue(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    ColouredGraph g;
    g.n = n;
    g.code.assign(static_cast<std::size_t>(n) * n,
                  static_cast<std::uint8_t>(PairColour::Blue));
    return g;
}

void ColouredGraph::set_blue(int u, int v) {
    code[static_cast<std::size_t>(u) * n + v] = static_cast<std::uint8_t>(PairColour::Blue);
    code[static_cast<std::size_t>(v) * n + u] = static_cast<std::uint8_t>(PairColour::Blue);
}

void ColouredGraph::set_red(int from, int to) {
    code[static_cast<std::size_t>(from) * n + to] =
        static_cast<std::uint8_t>(PairColour::RedOut);
    code[static_cast<std::size_t>(to) * n + from] =
        static_cast<std::uint8_t>(PairColour::RedIn);
}

std::vector<int> ColouredGraph::red_out(int x) const {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (v != x && red_from(x, v)) out.push_back(v);
    return out;
}

std::vector<int> ColouredGraph::red_in(int x) const {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (v != x && red_from(v, x)) out.push_back(v);
    return out;
}

}
