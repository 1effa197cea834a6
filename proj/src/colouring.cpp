#include "cherrylab/colouring.hpp"

#include <algorithm>
#include <stdexcept>

#include "cherrylab/extremal.hpp"

namespace cherrylab {

std::int64_t cherry_count(const ColouredGraph& g) {
    std::int64_t c = 0;
    std::vector<int> outs;
    for (int x = 0; x < g.n; ++x) {
        outs.clear();
        for (int v = 0; v < g.n; ++v)
            if (v != x && g.red_from(x, v)) outs.push_back(v);
        for (std::size_t i = 0; i < outs.size(); ++i)
            for (std::size_t j = i + 1; j < outs.size(); ++j)
                if (g.is_blue(outs[i], outs[j])) ++c;
    }
    return c;
}

bool verify_good_colouring(const Hypergraph3& h, const ColouredGraph& g) {
    if (g.n != h.n) throw std::invalid_argument("colouring size does not match hypergraph");
    for (const auto& e : h.edges) {
        bool cherry = false;
        for (int apex : e) {
            int a = -1, b = -1;
            for (int v : e)
                if (v != apex) (a < 0 ? a : b) = v;
            if (g.red_from(apex, a) && g.red_from(apex, b) && g.is_blue(a, b)) {
                cherry = true;
                break;
            }
        }
        if (!cherry) return false;
    }
    return true;
}

GoodColouringResult construct_good_colouring(const Hypergraph3& h) {
    GoodColouringResult res;
    if (auto w = detect_odd_pseudocycle(h)) {
        res.outcome = *w;
        return res;
    }
    PairDigraph pd = build_pair_digraph(h);
    ColouredGraph g = ColouredGraph::all_blue(h.n);

    // With no odd pseudocycle every node in a tight component carries a unique
    // walk-length residue from the component's base pair. A pair reached with
    // residue r heads a path whose last two indices are r and r+1 mod 3; sigma
    // marks the apex index class.
    std::vector<signed char> eta_of(static_cast<std::size_t>(h.n) * h.n, -2);  // -2 unset
    auto unordered_key = [&](int a, int b) {
        int lo = a < b ? a : b, hi = a < b ? b : a;
        return static_cast<std::size_t>(lo) * h.n + hi;
    };

    std::vector<bool> covered(static_cast<std::size_t>(h.n) * h.n, false);
    for (std::size_t start = 0; start < pd.nodes.size(); ++start) {
        auto [x, y] = pd.nodes[start];
        if (x > y || covered[unordered_key(x, y)]) continue;

        auto rr = residue_bfs(pd, static_cast<int>(start));
        std::vector<int> residue(pd.nodes.size(), -1);
        for (std::size_t v = 0; v < pd.nodes.size(); ++v)
            for (int r = 0; r < 3; ++r)
                if (rr.dist[v][r] >= 0) {
                    if (residue[v] >= 0)
                        throw std::logic_error(
                            "residue conflict without odd pseudocycle: detector bug");
                    residue[v] = r;
                }

        int sigma = 2;
        int rev = pd.id(y, x);
        if (rev >= 0 && residue[rev] >= 0) {
            int walk_len = rr.dist[rev][residue[rev]];
            sigma = static_cast<int>((2LL * walk_len + 2) % 3);
        }

        for (std::size_t v = 0; v < pd.nodes.size(); ++v) {
            if (residue[v] < 0) continue;
            auto [a, b] = pd.nodes[v];
            int r = residue[v];
            // path ends ...a b with index(b) = r+1, index(a) = r mod 3
            int e;
            if ((r + 1) % 3 == sigma) e = b;
            else if (r == sigma) e = a;
            else e = EtaAssignment::kStar;
            std::size_t key = unordered_key(a, b);
            covered[key] = true;
            if (eta_of[key] != -2 && eta_of[key] != e)
                throw std::logic_error("inconsistent eta across orientations: detector bug");
            eta_of[key] = static_cast<signed char>(e);
        }
    }

    for (int a = 0; a < h.n; ++a)
        for (int b = a + 1; b < h.n; ++b) {
            std::size_t key = static_cast<std::size_t>(a) * h.n + b;
            if (eta_of[key] == -2) continue;  // off the shadow, stays blue
            int e = eta_of[key];
            res.eta.eta[{a, b}] = e;
            if (e != EtaAssignment::kStar) g.set_red(e, e == a ? b : a);
        }
    res.outcome = std::move(g);
    return res;
}

ColouredGraph extremal_colouring(int n) {
    if (n < 1) throw std::invalid_argument("extremal colouring needs n >= 1");
    PartitionProfile prof = optimal_profile(n);
    ColouredGraph g = ColouredGraph::all_blue(n);
    std::vector<int> block_of(n);
    int v = 0;
    for (std::size_t i = 0; i < prof.parts.size(); ++i)
        for (int j = 0; j < prof.parts[i]; ++j) block_of[v++] = static_cast<int>(i);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (block_of[a] == block_of[b]) continue;
            // red towards the earlier block
            if (block_of[a] < block_of[b]) g.set_red(b, a);
            else g.set_red(a, b);
        }
    return g;
}

}
