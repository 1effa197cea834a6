#include "cherrylab/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cherrylab::oracle {

namespace {

// Union-find over ordered pairs with mod-3 offsets and rollback. An arc
// (x,y) -> (y,z) asserts rho(y,z) = rho(x,y) + 1; the edge set has an odd
// pseudocycle exactly when some constraint cycle sums to a nonzero residue.
struct ParityDsu {
    std::vector<int> parent, rnk;
    std::vector<signed char> off;  // rho(v) = rho(parent(v)) + off(v)
    struct Undo {
        int child;
        int root;
        bool rank_bumped;
    };
    std::vector<Undo> log;

    explicit ParityDsu(int size) : parent(size), rnk(size, 0), off(size, 0) {
        for (int i = 0; i < size; ++i) parent[i] = i;
    }

    std::pair<int, int> find(int v) const {
        int o = 0;
        while (parent[v] != v) {
            o += off[v];
            v = parent[v];
        }
        return {v, o % 3};
    }

    // constraint rho(v) = rho(u) + d; false on contradiction
    bool unite(int u, int v, int d) {
        auto [ru, ou] = find(u);
        auto [rv, ov] = find(v);
        if (ru == rv) return (ov - ou - d) % 3 == 0;
        if (rnk[ru] < rnk[rv]) {
            // rho(ru) = rho(rv) + (ov - d - ou)
            parent[ru] = rv;
            off[ru] = static_cast<signed char>(((ov - d - ou) % 3 + 3) % 3);
            log.push_back({ru, rv, false});
        } else {
            bool bump = rnk[ru] == rnk[rv];
            parent[rv] = ru;
            off[rv] = static_cast<signed char>(((ou + d - ov) % 3 + 3) % 3);
            if (bump) ++rnk[ru];
            log.push_back({rv, ru, bump});
        }
        return true;
    }

    std::size_t mark() const { return log.size(); }

    void rollback(std::size_t m) {
        while (log.size() > m) {
            Undo u = log.back();
            log.pop_back();
            parent[u.child] = u.child;
            off[u.child] = 0;
            if (u.rank_bumped) --rnk[u.root];
        }
    }
};

struct EdgeSearchState {
    std::int64_t best = -1;
    std::int64_t count = 0;
    std::uint32_t witness = 0;
    std::uint64_t nodes = 0;
};

struct EdgeSearch {
    int n;
    std::vector<Triple> all;
    std::vector<std::array<std::pair<int, int>, 6>> arcs;  // per edge, (from,to) pair ids

    explicit EdgeSearch(int n_) : n(n_) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) all.push_back({a, b, c});
        auto id = [&](int x, int y) { return x * n + y; };
        arcs.resize(all.size());
        for (std::size_t i = 0; i < all.size(); ++i) {
            auto [a, b, c] = all[i];
            arcs[i] = {{{id(a, b), id(b, c)},
                        {id(b, c), id(c, a)},
                        {id(c, a), id(a, b)},
                        {id(b, a), id(a, c)},
                        {id(a, c), id(c, b)},
                        {id(c, b), id(b, a)}}};
        }
    }

    bool add(ParityDsu& dsu, std::size_t edge) const {
        for (auto [from, to] : arcs[edge])
            if (!dsu.unite(from, to, 1)) return false;
        return true;
    }

    void dfs(std::size_t idx, int cnt, std::uint32_t mask, ParityDsu& dsu,
             EdgeSearchState& st) const {
        ++st.nodes;
        if (idx == all.size()) {
            if (cnt > st.best) {
                st.best = cnt;
                st.count = 1;
                st.witness = mask;  // include-first order: first optimum is lex-least
            } else if (cnt == st.best) {
                ++st.count;
            }
            return;
        }
        std::size_t m = dsu.mark();
        if (add(dsu, idx)) dfs(idx + 1, cnt + 1, mask | (1u << idx), dsu, st);
        dsu.rollback(m);
        dfs(idx + 1, cnt, mask, dsu, st);
    }
};

// set order matching the sorted-edge-list serialisation: among equal-size
// masks, the one containing the first differing edge is smaller
bool mask_less(std::uint32_t a, std::uint32_t b) {
    std::uint32_t diff = a ^ b;
    if (diff == 0) return false;
    std::uint32_t low = diff & (~diff + 1);
    return (a & low) != 0;
}

}  // namespace

SearchReport<Hypergraph3> max_edges_odd_free(int n, int jobs) {
    if (n < 1 || n > 6)
        throw std::invalid_argument("max_edges_odd_free supports 1 <= n <= 6");
    EdgeSearch search(n);
    const std::size_t m = search.all.size();
    EdgeSearchState st;
    if (jobs <= 1 || m < 12) {
        ParityDsu dsu(n * n);
        search.dfs(0, 0, 0, dsu, st);
    } else {
        // split on the first `depth` include/exclude decisions
        const std::size_t depth = 10;
        struct Task {
            std::uint32_t mask;
            int cnt;
        };
        std::vector<Task> tasks;
        ParityDsu dsu(n * n);
        std::uint64_t prefix_nodes = 0;
        auto enumerate = [&](auto&& self, std::size_t idx, int cnt,
                             std::uint32_t mask) -> void {
            if (idx == depth) {
                tasks.push_back({mask, cnt});
                return;
            }
            ++prefix_nodes;
            std::size_t mk = dsu.mark();
            if (search.add(dsu, idx)) self(self, idx + 1, cnt + 1, mask | (1u << idx));
            dsu.rollback(mk);
            self(self, idx + 1, cnt, mask);
        };
        enumerate(enumerate, 0, 0, 0);
        std::vector<EdgeSearchState> locals(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            ParityDsu local_dsu(n * n);
            for (std::size_t i = 0; i < depth; ++i)
                if (tasks[t].mask >> i & 1) search.add(local_dsu, i);
            search.dfs(depth, tasks[t].cnt, tasks[t].mask, local_dsu, locals[t]);
        }
        st.nodes = prefix_nodes;
        for (const auto& lo : locals) {
            st.nodes += lo.nodes;
            if (lo.best > st.best) {
                st.best = lo.best;
                st.count = lo.count;
                st.witness = lo.witness;
            } else if (lo.best == st.best) {
                st.count += lo.count;
                if (mask_less(lo.witness, st.witness)) st.witness = lo.witness;
            }
        }
    }
    std::vector<Triple> edges;
    for (std::size_t i = 0; i < m; ++i)
        if (st.witness >> i & 1) edges.push_back(search.all[i]);
    SearchReport<Hypergraph3> rep;
    rep.n = n;
    rep.objective = "max-edges-odd-free";
    rep.optimum = st.best;
    rep.witness = make_hypergraph(n, std::move(edges));
    rep.optima_count = st.count;
    rep.nodes_explored = st.nodes;
    return rep;
}

namespace {

struct CherryState {
    std::int64_t best = -1;
    std::int64_t count = 0;
    std::uint64_t witness_code = 0;
};

ColouredGraph colouring_from_code(int n, std::uint64_t code) {
    ColouredGraph g = ColouredGraph::all_blue(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int digit = static_cast<int>(code % 3);
            code /= 3;
            if (digit == 1) g.set_red(u, v);
            else if (digit == 2) g.set_red(v, u);
        }
    return g;
}

std::int64_t cherries_of_code(int n, std::uint64_t code) {
    // col[u][v]: 0 blue, 1 red u->v, 2 red v->u
    signed char col[8][8] = {};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int digit = static_cast<int>(code % 3);
            code /= 3;
            col[u][v] = static_cast<signed char>(digit);
            col[v][u] = static_cast<signed char>(digit == 0 ? 0 : 3 - digit);
        }
    std::int64_t c = 0;
    for (int x = 0; x < n; ++x)
        for (int u = 0; u < n; ++u) {
            if (u == x || col[x][u] != 1) continue;
            for (int v = u + 1; v < n; ++v)
                if (v != x && col[x][v] == 1 && col[u][v] == 0) ++c;
        }
    return c;
}

void scan_codes(int n, std::uint64_t lo, std::uint64_t hi, CherryState& st) {
    for (std::uint64_t code = lo; code < hi; ++code) {
        std::int64_t c = cherries_of_code(n, code);
        if (c > st.best) {
            st.best = c;
            st.count = 1;
            st.witness_code = code;
        } else if (c == st.best) {
            ++st.count;
        }
    }
}

}  // namespace

SearchReport<ColouredGraph> max_cherries(int n, int jobs) {
    if (n < 1 || n > 5) throw std::invalid_argument("max_cherries supports 1 <= n <= 5");
    const int pairs = n * (n - 1) / 2;
    std::uint64_t total = 1;
    for (int i = 0; i < pairs; ++i) total *= 3;
    CherryState st;
    if (jobs <= 1) {
        scan_codes(n, 0, total, st);
    } else {
        int chunks = jobs * 8;
        std::vector<CherryState> locals(chunks);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
#endif
        for (int t = 0; t < chunks; ++t) {
            std::uint64_t lo = total * t / chunks, hi = total * (t + 1) / chunks;
            scan_codes(n, lo, hi, locals[t]);
        }
        for (const auto& lo : locals) {
            if (lo.best > st.best) st = lo;
            else if (lo.best == st.best) {
                st.count += lo.count;
                // chunks scan disjoint ascending ranges; first chunk holding the
                // optimum already has the smallest code
            }
        }
    }
    SearchReport<ColouredGraph> rep;
    rep.n = n;
    rep.objective = "max-cherries";
    rep.optimum = st.best;
    rep.witness = colouring_from_code(n, st.witness_code);
    rep.optima_count = st.count;
    rep.nodes_explored = total;
    return rep;
}

std::optional<int> shortest_odd_bruteforce(const Hypergraph3& h, int lmax) {
    if (h.n > 8 || lmax > 15)
        throw std::invalid_argument("shortest_odd_bruteforce supports n <= 8, lmax <= 15");
    const int n = h.n;
    // ordered pairs fit one 64-bit word when n <= 8
    std::vector<std::uint64_t> succ(static_cast<std::size_t>(n) * n, 0);
    std::uint64_t active = 0;
    for (const auto& e : h.edges) {
        const int perm[6][3] = {{e[0], e[1], e[2]}, {e[1], e[2], e[0]}, {e[2], e[0], e[1]},
                                {e[1], e[0], e[2]}, {e[0], e[2], e[1]}, {e[2], e[1], e[0]}};
        for (auto& p : perm) {
            succ[static_cast<std::size_t>(p[0]) * n + p[1]] |=
                1ull << (static_cast<std::size_t>(p[1]) * n + p[2]);
            active |= 1ull << (static_cast<std::size_t>(p[0]) * n + p[1]);
        }
    }
    int best = lmax + 1;
    for (int s = 0; s < n * n; ++s) {
        if (!(active >> s & 1)) continue;
        std::uint64_t frontier = 1ull << s;
        for (int len = 1; len <= lmax && len < best; ++len) {
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= succ[u];
            }
            frontier = next;
            if (len % 3 != 0 && (frontier >> s & 1)) {
                best = len;
                break;
            }
        }
    }
    if (best > lmax) return std::nullopt;
    return best;
}

namespace {

std::int64_t count_from(const Hypergraph3& h,
                        const std::vector<std::vector<int>>& thirds, int len,
                        std::vector<int>& seq) {
    const int i = static_cast<int>(seq.size());
    if (i == len) {
        // the two wrap-around windows; interior ones held during the walk
        int a = seq[len - 2], b = seq[len - 1], c0 = seq[0], c1 = seq[1];
        if (a == c0 || b == c0 || !h.has_edge(a, b, c0)) return 0;
        if (b == c1 || !h.has_edge(b, c0, c1)) return 0;
        return 1;
    }
    std::int64_t total = 0;
    if (i < 2) {
        for (int v = 0; v < h.n; ++v) {
            if (i == 1 && v == seq[0]) continue;
            seq.push_back(v);
            total += count_from(h, thirds, len, seq);
            seq.pop_back();
        }
    } else {
        int a = seq[i - 2], b = seq[i - 1];
        int lo = a < b ? a : b, hi = a < b ? b : a;
        for (int z : thirds[static_cast<std::size_t>(lo) * h.n + hi]) {
            seq.push_back(z);
            total += count_from(h, thirds, len, seq);
            seq.pop_back();
        }
    }
    return total;
}

}  // namespace

std::int64_t count_pseudocycles(const Hypergraph3& h, int len) {
    if (h.n > 6 || len > 9 || len < 3)
        throw std::invalid_argument("count_pseudocycles supports n <= 6, 3 <= len <= 9");
    std::vector<std::vector<int>> thirds(static_cast<std::size_t>(h.n) * h.n);
    for (const auto& e : h.edges) {
        thirds[static_cast<std::size_t>(e[0]) * h.n + e[1]].push_back(e[2]);
        thirds[static_cast<std::size_t>(e[0]) * h.n + e[2]].push_back(e[1]);
        thirds[static_cast<std::size_t>(e[1]) * h.n + e[2]].push_back(e[0]);
    }
    std::vector<int> seq;
    return count_from(h, thirds, len, seq);
}

DiameterResult diameter_bruteforce(const Hypergraph3& h) {
    const int n = h.n;
    std::vector<int> ids(static_cast<std::size_t>(n) * n, -1);
    std::vector<std::pair<int, int>> nodes;
    for (const auto& e : h.edges) {
        const int ps[6][2] = {{e[0], e[1]}, {e[1], e[0]}, {e[0], e[2]},
                              {e[2], e[0]}, {e[1], e[2]}, {e[2], e[1]}};
        for (auto& p : ps) {
            auto& slot = ids[static_cast<std::size_t>(p[0]) * n + p[1]];
            if (slot < 0) {
                slot = static_cast<int>(nodes.size());
                nodes.emplace_back(p[0], p[1]);
            }
        }
    }
    const int v = static_cast<int>(nodes.size());
    if (v == 0) return {2, true};
    const int inf = 1 << 20;
    std::vector<int> dist(static_cast<std::size_t>(v) * v, inf);
    for (int i = 0; i < v; ++i) dist[static_cast<std::size_t>(i) * v + i] = 0;
    for (const auto& e : h.edges) {
        const int arcs[6][4] = {{e[0], e[1], e[1], e[2]}, {e[1], e[2], e[2], e[0]},
                                {e[2], e[0], e[0], e[1]}, {e[1], e[0], e[0], e[2]},
                                {e[0], e[2], e[2], e[1]}, {e[2], e[1], e[1], e[0]}};
        for (auto& a : arcs) {
            int from = ids[static_cast<std::size_t>(a[0]) * n + a[1]];
            int to = ids[static_cast<std::size_t>(a[2]) * n + a[3]];
            dist[static_cast<std::size_t>(from) * v + to] = 1;
        }
    }
    for (int k = 0; k < v; ++k)
        for (int i = 0; i < v; ++i) {
            int dik = dist[static_cast<std::size_t>(i) * v + k];
            if (dik == inf) continue;
            for (int j = 0; j < v; ++j) {
                int cand = dik + dist[static_cast<std::size_t>(k) * v + j];
                auto& d = dist[static_cast<std::size_t>(i) * v + j];
                if (cand < d) d = cand;
            }
        }
    int mx = 0;
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j) {
            int d = dist[static_cast<std::size_t>(i) * v + j];
            if (d != inf && d > mx) mx = d;
        }
    return {std::max(2, mx + 2), false};
}

}
