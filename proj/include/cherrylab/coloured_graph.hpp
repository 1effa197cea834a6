#pragma once

#include <cstdint>
#include <vector>

namespace cherrylab {

/// Colour of the pair {u,v} as seen from u.
enum class PairColour : std::uint8_t {
    Blue = 0,
    RedOut = 1,  // red arc u -> v
    RedIn = 2,   // red arc v -> u
};

/// Complete graph on 0..n-1 whose pairs are blue or red-with-orientation.
/// Stored as an n*n mirror matrix so in/out scans are branch-free.
struct ColouredGraph {
    int n = 0;
    std::vector<std::uint8_t> code;  // code[u*n+v], diagonal unused

    static ColouredGraph all_blue(int n);

    PairColour at(int u, int v) const {
        return static_cast<PairColour>(code[static_cast<std::size_t>(u) * n + v]);
    }
    bool is_blue(int u, int v) const { return at(u, v) == PairColour::Blue; }
    bool red_from(int u, int v) const { return at(u, v) == PairColour::RedOut; }

    void set_blue(int u, int v);
    void set_red(int from, int to);

    std::vector<int> red_out(int x) const;  // N+(x)
    std::vector<int> red_in(int x) const;   // N-(x)

    bool operator==(const ColouredGraph&) const = default;
};

/// Cherry apex->a, apex->b red, {a,b} blue.
struct Cherry {
    int apex;
    int a, b;
};

}
