#include "cherrylab/pairwalk.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cherrylab {

PairDigraph build_pair_digraph(const Hypergraph3& h) {
    PairDigraph pd;
    pd.n = h.n;
    pd.node_id.assign(static_cast<std::size_t>(h.n) * h.n, -1);
    // thirds[(x,y) unordered] drives both node discovery and arcs
    std::vector<std::vector<int>> thirds(static_cast<std::size_t>(h.n) * h.n);
    for (const auto& e : h.edges) {
        thirds[static_cast<std::size_t>(e[0]) * h.n + e[1]].push_back(e[2]);
        thirds[static_cast<std::size_t>(e[0]) * h.n + e[2]].push_back(e[1]);
        thirds[static_cast<std::size_t>(e[1]) * h.n + e[2]].push_back(e[0]);
    }
    for (int x = 0; x < h.n; ++x)
        for (int y = 0; y < h.n; ++y) {
            if (x == y) continue;
            int lo = x < y ? x : y, hi = x < y ? y : x;
            if (!thirds[static_cast<std::size_t>(lo) * h.n + hi].empty()) {
                pd.node_id[static_cast<std::size_t>(x) * h.n + y] =
                    static_cast<int>(pd.nodes.size());
                pd.nodes.emplace_back(x, y);
            }
        }
    pd.succ.resize(pd.nodes.size());
    for (std::size_t i = 0; i < pd.nodes.size(); ++i) {
        auto [x, y] = pd.nodes[i];
        int lo = x < y ? x : y, hi = x < y ? y : x;
        auto& zs = thirds[static_cast<std::size_t>(lo) * h.n + hi];
        std::sort(zs.begin(), zs.end());
        for (int z : zs) pd.succ[i].push_back(pd.id(y, z));
        // z ascending keeps (y,z) ids ascending
    }
    return pd;
}

namespace {

bool window_ok(const Hypergraph3& h, int a, int b, int c) {
    return a != b && b != c && a != c && h.has_edge(a, b, c);
}

}  // namespace

bool is_pseudocycle(const Hypergraph3& h, const std::vector<int>& seq) {
    const int len = static_cast<int>(seq.size());
    if (len < 3) throw std::invalid_argument("pseudocycle length must be at least 3");
    for (int v : seq)
        if (v < 0 || v >= h.n) return false;
    for (int i = 0; i < len; ++i)
        if (!window_ok(h, seq[i], seq[(i + 1) % len], seq[(i + 2) % len]))
            return false;
    return true;
}

bool is_pseudopath(const Hypergraph3& h, const std::vector<int>& seq) {
    const int len = static_cast<int>(seq.size());
    if (len < 2) return false;
    for (int v : seq)
        if (v < 0 || v >= h.n) return false;
    if (len == 2) return seq[0] != seq[1];
    for (int i = 0; i + 2 < len; ++i)
        if (!window_ok(h, seq[i], seq[i + 1], seq[i + 2])) return false;
    return true;
}

Pseudopath tilde(const Hypergraph3& h, const Pseudopath& p) {
    const int k = static_cast<int>(p.seq.size());
    if (k < 3 || !is_pseudopath(h, p.seq))
        throw std::invalid_argument("tilde needs a valid pseudopath of order >= 3");
    Pseudopath out;
    out.seq.reserve(2 * k - 2);
    for (int j = k - 2; j >= 0; --j) {  // blocks v_j v_{j+1}, 0-based
        out.seq.push_back(p.seq[j]);
        out.seq.push_back(p.seq[j + 1]);
    }
    return out;
}

std::optional<Pseudopath> shortest_pseudopath(const Hypergraph3& h, int fx, int fy,
                                              int tx, int ty) {
    if (fx == fy || tx == ty || fx < 0 || fy < 0 || tx < 0 || ty < 0 ||
        fx >= h.n || fy >= h.n || tx >= h.n || ty >= h.n)
        throw std::invalid_argument("pseudopath endpoints must be distinct in-range pairs");
    if (fx == tx && fy == ty) return Pseudopath{{fx, fy}};
    PairDigraph pd = build_pair_digraph(h);
    int s = pd.id(fx, fy), t = pd.id(tx, ty);
    if (s < 0 || t < 0) return std::nullopt;
    std::vector<int> dist(pd.nodes.size(), -1), pred(pd.nodes.size(), -1);
    std::deque<int> q{s};
    dist[s] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : pd.succ[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                pred[v] = u;
                q.push_back(v);
            }
    }
    if (dist[t] < 0) return std::nullopt;
    std::vector<int> chain;
    for (int u = t; u != -1; u = pred[u]) chain.push_back(u);
    std::reverse(chain.begin(), chain.end());
    Pseudopath out;
    out.seq.push_back(fx);
    out.seq.push_back(fy);
    for (std::size_t i = 1; i < chain.size(); ++i)
        out.seq.push_back(pd.nodes[chain[i]].second);
    return out;
}

ResidueReachability residue_bfs(const PairDigraph& pd, int base) {
    ResidueReachability rr;
    rr.base = base;
    rr.dist.assign(pd.nodes.size(), {-1, -1, -1});
    rr.pred.assign(pd.nodes.size(), {-1, -1, -1});
    std::deque<int> q;  // states node*3 + residue
    rr.dist[base][0] = 0;
    q.push_back(base * 3);
    while (!q.empty()) {
        int s = q.front();
        q.pop_front();
        int u = s / 3, r = s % 3;
        int d = rr.dist[u][r];
        int nr = (r + 1) % 3;
        for (int v : pd.succ[u])
            if (rr.dist[v][nr] < 0) {
                rr.dist[v][nr] = d + 1;
                rr.pred[v][nr] = s;
                q.push_back(v * 3 + nr);
            }
    }
    return rr;
}

std::optional<CycleWitness> detect_odd_pseudocycle(const Hypergraph3& h) {
    PairDigraph pd = build_pair_digraph(h);
    const int inf = std::numeric_limits<int>::max();
    int best = inf, best_base = -1;
    for (int b = 0; b < static_cast<int>(pd.nodes.size()); ++b) {
        auto rr = residue_bfs(pd, b);
        for (int r : {1, 2}) {
            int d = rr.dist[b][r];
            if (d >= 0 && d < best) {
                best = d;
                best_base = b;
            }
        }
    }
    if (best_base < 0) return std::nullopt;
    auto rr = residue_bfs(pd, best_base);
    int target_r = (rr.dist[best_base][1] == best) ? 1 : 2;
    std::vector<int> chain;  // states, target back to base
    int s = best_base * 3 + target_r;
    while (s != -1) {
        chain.push_back(s);
        if (s == best_base * 3 && static_cast<int>(chain.size()) > 1) break;
        s = rr.pred[s / 3][s % 3];
    }
    std::reverse(chain.begin(), chain.end());
    CycleWitness w;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        w.seq.push_back(pd.nodes[chain[i] / 3].first);
    return w;
}

DiameterResult diameter(const Hypergraph3& h, int jobs) {
    PairDigraph pd = build_pair_digraph(h);
    const int nn = static_cast<int>(pd.nodes.size());
    if (nn == 0) return {2, true};
    auto base_max = [&](int b) {
        std::vector<int> dist(nn, -1);
        std::deque<int> q{b};
        dist[b] = 0;
        int mx = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : pd.succ[u])
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    if (dist[v] > mx) mx = dist[v];
                    q.push_back(v);
                }
        }
        return mx;
    };
    int mx = 0;
    if (jobs <= 1) {
        for (int b = 0; b < nn; ++b) mx = std::max(mx, base_max(b));
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs) reduction(max : mx)
#endif
        for (int b = 0; b < nn; ++b) mx = std::max(mx, base_max(b));
    }
    return {std::max(2, mx + 2), false};
}

Hypergraph3 trim_small_codegree(const Hypergraph3& h, int c) {
    if (c < 1) throw std::invalid_argument("trim threshold must be positive");
    std::vector<Triple> edges = h.edges;
    const int n = h.n;
    std::vector<int> codeg(static_cast<std::size_t>(n) * n);
    for (;;) {
        std::fill(codeg.begin(), codeg.end(), 0);
        for (const auto& e : edges) {
            ++codeg[static_cast<std::size_t>(e[0]) * n + e[1]];
            ++codeg[static_cast<std::size_t>(e[0]) * n + e[2]];
            ++codeg[static_cast<std::size_t>(e[1]) * n + e[2]];
        }
        int pu = -1, pv = -1;
        for (int u = 0; u < n && pu < 0; ++u)
            for (int v = u + 1; v < n; ++v) {
                int cd = codeg[static_cast<std::size_t>(u) * n + v];
                if (cd > 0 && cd < c) {
                    pu = u;
                    pv = v;
                    break;
                }
            }
        if (pu < 0) break;
        std::erase_if(edges, [&](const Triple& e) {
            return (e[0] == pu || e[1] == pu || e[2] == pu) &&
                   (e[0] == pv || e[1] == pv || e[2] == pv);
        });
    }
    return Hypergraph3{n, std::move(edges)};
}

CycleWitness extend_pseudocycle(const Hypergraph3& h, const CycleWitness& c, long long m) {
    const long long len = c.length();
    if (!is_pseudocycle(h, c.seq))
        throw std::invalid_argument("extend_pseudocycle needs a valid pseudocycle");
    CycleWitness out;
    if (m % 3 == len % 3) {
        if (m < len) throw std::invalid_argument("target length too small");
        long long reps = (m - len) / 3;
        for (long long i = 0; i < reps; ++i)
            out.seq.insert(out.seq.end(), {c.seq[0], c.seq[1], c.seq[2]});
        out.seq.insert(out.seq.end(), c.seq.begin(), c.seq.end());
    } else if (m % 3 == (2 * len) % 3) {
        if (m < 2 * len) throw std::invalid_argument("target length too small");
        long long reps = (m - 2 * len) / 3;
        for (long long i = 0; i < reps; ++i)
            out.seq.insert(out.seq.end(), {c.seq[0], c.seq[1], c.seq[2]});
        out.seq.insert(out.seq.end(), c.seq.begin(), c.seq.end());
        out.seq.insert(out.seq.end(), c.seq.begin(), c.seq.end());
    } else {
        throw std::invalid_argument("target length incompatible mod 3");
    }
    return out;
}

std::int64_t count_closed_walks(const PairDigraph& pd, int len) {
    const int nn = static_cast<int>(pd.nodes.size());
    if (nn == 0 || len < 1) return 0;
    // power[u][v] = number of walks u -> v of the current length
    std::vector<std::vector<std::int64_t>> cur(nn, std::vector<std::int64_t>(nn, 0));
    for (int u = 0; u < nn; ++u)
        for (int v : pd.succ[u]) cur[u][v] = 1;
    for (int step = 1; step < len; ++step) {
        std::vector<std::vector<std::int64_t>> next(nn, std::vector<std::int64_t>(nn, 0));
        for (int u = 0; u < nn; ++u)
            for (int mid = 0; mid < nn; ++mid) {
                if (cur[u][mid] == 0) continue;
                for (int v : pd.succ[mid]) next[u][v] += cur[u][mid];
            }
        cur.swap(next);
    }
    std::int64_t tr = 0;
    for (int u = 0; u < nn; ++u) tr += cur[u][u];
    return tr;
}

}
