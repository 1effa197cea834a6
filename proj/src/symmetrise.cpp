#include "cherrylab/symmetrise.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <tuple>

#include "cherrylab/colouring.hpp"
#include "cherrylab/rng.hpp"

namespace cherrylab {

namespace {

// Row-per-vertex bitset mirror of a ColouredGraph; keeps the clone steps and
// the per-step cherry recounts word-parallel.
struct BitRows {
    int n = 0, words = 0;
    std::vector<std::uint64_t> blue, rin, rout;  // rout[u] bit v: red arc u -> v

    static BitRows from(const ColouredGraph& g) {
        BitRows b;
        b.n = g.n;
        b.words = (g.n + 63) / 64;
        std::size_t sz = static_cast<std::size_t>(g.n) * b.words;
        b.blue.assign(sz, 0);
        b.rin.assign(sz, 0);
        b.rout.assign(sz, 0);
        for (int u = 0; u < g.n; ++u)
            for (int v = 0; v < g.n; ++v) {
                if (u == v) continue;
                switch (g.at(u, v)) {
                    case PairColour::Blue: b.set(b.blue, u, v); break;
                    case PairColour::RedOut: b.set(b.rout, u, v); break;
                    case PairColour::RedIn: b.set(b.rin, u, v); break;
                }
            }
        return b;
    }

    ColouredGraph to_graph() const {
        ColouredGraph g = ColouredGraph::all_blue(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (get(blue, u, v)) continue;
                if (get(rout, u, v)) g.set_red(u, v);
                else g.set_red(v, u);
            }
        return g;
    }

    std::uint64_t* row(std::vector<std::uint64_t>& m, int v) {
        return m.data() + static_cast<std::size_t>(v) * words;
    }
    const std::uint64_t* row(const std::vector<std::uint64_t>& m, int v) const {
        return m.data() + static_cast<std::size_t>(v) * words;
    }
    void set(std::vector<std::uint64_t>& m, int u, int v) {
        row(m, u)[v >> 6] |= 1ull << (v & 63);
    }
    bool get(const std::vector<std::uint64_t>& m, int u, int v) const {
        return row(m, u)[v >> 6] >> (v & 63) & 1;
    }
};

std::int64_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, int words) {
    std::int64_t s = 0;
    for (int i = 0; i < words; ++i) s += std::popcount(a[i] & b[i]);
    return s;
}

std::int64_t popcount_and3(const std::uint64_t* a, const std::uint64_t* b,
                           const std::uint64_t* c, int words) {
    std::int64_t s = 0;
    for (int i = 0; i < words; ++i) s += std::popcount(a[i] & b[i] & c[i]);
    return s;
}

// cherries with at least one vertex among s (s_mask mirrors s)
std::int64_t cherries_touching(const BitRows& b, const std::vector<int>& s,
                               const std::vector<std::uint64_t>& s_mask) {
    std::vector<char> in_s(b.n, 0);
    for (int v : s) in_s[v] = 1;
    std::int64_t total = 0;
    for (int a = 0; a < b.n; ++a) {
        const std::uint64_t* out = b.row(b.rout, a);
        if (in_s[a]) {
            std::int64_t twice = 0;
            for (int u = 0; u < b.n; ++u)
                if (b.get(b.rout, a, u)) twice += popcount_and(out, b.row(b.blue, u), b.words);
            total += twice / 2;
        } else {
            std::int64_t with_s = 0, both_twice = 0;
            for (int u : s) {
                if (!b.get(b.rout, a, u)) continue;
                with_s += popcount_and(out, b.row(b.blue, u), b.words);
                both_twice += popcount_and3(out, b.row(b.blue, u), s_mask.data(), b.words);
            }
            total += with_s - both_twice / 2;
        }
    }
    return total;
}

// every vertex of s takes y's pattern towards the outside; s becomes blue inside
void clone_rows(BitRows& b, const std::vector<int>& s,
                const std::vector<std::uint64_t>& s_mask, int y) {
    const int w = b.words;
    std::vector<std::uint64_t> yb(b.row(b.blue, y), b.row(b.blue, y) + w);
    std::vector<std::uint64_t> yi(b.row(b.rin, y), b.row(b.rin, y) + w);
    std::vector<std::uint64_t> yo(b.row(b.rout, y), b.row(b.rout, y) + w);
    for (int i = 0; i < w; ++i) {
        yb[i] |= s_mask[i];
        yi[i] &= ~s_mask[i];
        yo[i] &= ~s_mask[i];
    }
    for (int v : s) {
        std::copy(yb.begin(), yb.end(), b.row(b.blue, v));
        std::copy(yi.begin(), yi.end(), b.row(b.rin, v));
        std::copy(yo.begin(), yo.end(), b.row(b.rout, v));
        b.row(b.blue, v)[v >> 6] &= ~(1ull << (v & 63));
    }
    for (int t = 0; t < b.n; ++t) {
        if (s_mask[t >> 6] >> (t & 63) & 1) continue;
        std::uint64_t* tb = b.row(b.blue, t);
        std::uint64_t* ti = b.row(b.rin, t);
        std::uint64_t* to = b.row(b.rout, t);
        if (yb[t >> 6] >> (t & 63) & 1) {
            for (int i = 0; i < w; ++i) {
                tb[i] |= s_mask[i];
                ti[i] &= ~s_mask[i];
                to[i] &= ~s_mask[i];
            }
        } else if (yo[t >> 6] >> (t & 63) & 1) {  // arcs s -> t
            for (int i = 0; i < w; ++i) {
                ti[i] |= s_mask[i];
                tb[i] &= ~s_mask[i];
                to[i] &= ~s_mask[i];
            }
        } else {  // arcs t -> s
            for (int i = 0; i < w; ++i) {
                to[i] |= s_mask[i];
                tb[i] &= ~s_mask[i];
                ti[i] &= ~s_mask[i];
            }
        }
    }
}

int pick_candidate(const std::vector<int>& candidates, const Selector& sel,
                   SplitMix64& rng) {
    switch (sel.kind) {
        case SelectorKind::FirstIndex:
            break;
        case SelectorKind::SeededRandom:
            return candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
        case SelectorKind::PreferSet:
            for (int p : sel.prefer)
                if (std::find(candidates.begin(), candidates.end(), p) != candidates.end())
                    return p;
            break;
    }
    return candidates.front();
}

void check_vertex(const ColouredGraph& g, int x) {
    if (x < 0 || x >= g.n) throw std::invalid_argument("vertex out of range");
}

// Shared driver; Impl supplies candidate scan, gain evaluation and cloning.
// Step rule: keep the picked vertex's pattern when its clone gain is at least
// k times the gain of cloning everyone to the block's pattern.
template <class Impl>
SymmetriseResult run_procedure(const ColouredGraph& g, int x, const Selector& sel,
                               Impl&& impl) {
    check_vertex(g, x);
    SplitMix64 rng(sel.seed);
    SymmetriseResult res;
    res.trace.cherries_before = cherry_count(g);
    std::int64_t c_cur = res.trace.cherries_before;
    std::vector<int> block{x};
    for (;;) {
        std::vector<int> candidates = impl.candidates(block);
        if (candidates.empty()) break;
        int picked = pick_candidate(candidates, sel, rng);
        int k = static_cast<int>(block.size());
        auto [gain_picked, gain_first, symdiff] = impl.evaluate(block, picked);
        int y;
        std::int64_t delta;
        if (gain_picked >= static_cast<std::int64_t>(k) * gain_first) {
            y = picked;
            delta = gain_picked;
        } else {
            y = block.front();
            delta = gain_first;
        }
        impl.apply(block, picked, y);
        c_cur += delta;
        block.push_back(picked);
        res.trace.steps.push_back({k, picked, gain_picked, gain_first, y, c_cur, symdiff});
    }
    std::sort(block.begin(), block.end());
    res.block = std::move(block);
    res.graph = impl.final_graph();
    return res;
}

template <class Graphish>
std::vector<int> blue_candidates(const Graphish& view, int n,
                                 const std::vector<int>& block) {
    std::vector<int> cand;
    for (int v = 0; v < n; ++v) {
        bool in_block = false, all_blue = true;
        for (int b : block) {
            if (b == v) {
                in_block = true;
                break;
            }
            if (!view(v, b)) {
                all_blue = false;
                break;
            }
        }
        if (!in_block && all_blue) cand.push_back(v);
    }
    return cand;
}

}  // namespace

bool is_full_blue_clone_clique(const ColouredGraph& g, const std::vector<int>& q) {
    if (q.empty()) throw std::invalid_argument("clone-clique must be non-empty");
    std::vector<char> in_q(g.n, 0);
    for (int v : q) {
        check_vertex(g, v);
        if (in_q[v]) throw std::invalid_argument("repeated vertex in clone-clique");
        in_q[v] = 1;
    }
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = i + 1; j < q.size(); ++j)
            if (!g.is_blue(q[i], q[j])) return false;
    for (int v = 0; v < g.n; ++v) {
        if (in_q[v]) continue;
        bool any_out = false, any_in = false;
        for (int u : q) {
            if (g.is_blue(v, u)) return false;
            (g.red_from(v, u) ? any_out : any_in) = true;
        }
        if (any_out && any_in) return false;
    }
    return true;
}

ColouredGraph clone_graph(const ColouredGraph& g, const std::vector<int>& s, int y) {
    if (s.size() < 2) throw std::invalid_argument("clone set needs at least 2 vertices");
    std::vector<char> in_s(g.n, 0);
    for (int v : s) {
        check_vertex(g, v);
        if (in_s[v]) throw std::invalid_argument("repeated vertex in clone set");
        in_s[v] = 1;
    }
    if (y < 0 || y >= g.n || !in_s[y])
        throw std::invalid_argument("clone target must belong to the set");
    ColouredGraph out = g;
    for (int v : s) {
        if (v == y) continue;
        for (int t = 0; t < g.n; ++t) {
            if (in_s[t]) continue;
            if (g.is_blue(y, t)) out.set_blue(v, t);
            else if (g.red_from(y, t)) out.set_red(v, t);
            else out.set_red(t, v);
        }
    }
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) out.set_blue(s[i], s[j]);
    return out;
}

SymmetriseResult symmetrise_from(const ColouredGraph& g, int x, const Selector& sel) {
    struct IncrementalImpl {
        BitRows rows;

        std::vector<int> candidates(const std::vector<int>& block) const {
            return blue_candidates(
                [&](int v, int b) { return rows.get(rows.blue, v, b); }, rows.n, block);
        }

        std::tuple<std::int64_t, std::int64_t, std::int64_t> evaluate(
            const std::vector<int>& block, int picked) const {
            std::vector<int> grown = block;
            grown.push_back(picked);
            auto mask = mask_of(grown);
            std::int64_t before = cherries_touching(rows, grown, mask);
            BitRows b_picked = rows;
            clone_rows(b_picked, grown, mask, picked);
            BitRows b_first = rows;
            clone_rows(b_first, grown, mask, block.front());
            std::int64_t gain_picked = cherries_touching(b_picked, grown, mask) - before;
            std::int64_t gain_first = cherries_touching(b_first, grown, mask) - before;
            const std::uint64_t* a = rows.row(rows.rin, block.front());
            const std::uint64_t* c = rows.row(rows.rin, picked);
            std::int64_t symdiff = 0;
            for (int i = 0; i < rows.words; ++i) symdiff += std::popcount(a[i] ^ c[i]);
            return {gain_picked, gain_first, symdiff};
        }

        void apply(const std::vector<int>& block, int picked, int y) {
            std::vector<int> grown = block;
            grown.push_back(picked);
            clone_rows(rows, grown, mask_of(grown), y);
        }

        ColouredGraph final_graph() const { return rows.to_graph(); }

        std::vector<std::uint64_t> mask_of(const std::vector<int>& vs) const {
            std::vector<std::uint64_t> m(rows.words, 0);
            for (int v : vs) m[v >> 6] |= 1ull << (v & 63);
            return m;
        }
    };
    IncrementalImpl impl{BitRows::from(g)};
    return run_procedure(g, x, sel, impl);
}

namespace reference {

SymmetriseResult symmetrise_from(const ColouredGraph& g, int x, const Selector& sel) {
    struct PlainImpl {
        ColouredGraph cur;

        std::vector<int> candidates(const std::vector<int>& block) const {
            return blue_candidates([&](int v, int b) { return cur.is_blue(v, b); }, cur.n,
                                   block);
        }

        std::tuple<std::int64_t, std::int64_t, std::int64_t> evaluate(
            const std::vector<int>& block, int picked) const {
            std::vector<int> grown = block;
            grown.push_back(picked);
            std::int64_t base = cherry_count(cur);
            std::int64_t gain_picked = cherry_count(clone_graph(cur, grown, picked)) - base;
            std::int64_t gain_first =
                cherry_count(clone_graph(cur, grown, block.front())) - base;
            std::int64_t symdiff = 0;
            for (int v = 0; v < cur.n; ++v)
                symdiff += cur.red_from(v, block.front()) != cur.red_from(v, picked);
            return {gain_picked, gain_first, symdiff};
        }

        void apply(const std::vector<int>& block, int picked, int y) {
            std::vector<int> grown = block;
            grown.push_back(picked);
            cur = clone_graph(cur, grown, y);
        }

        ColouredGraph final_graph() const { return cur; }
    };
    PlainImpl impl{g};
    return run_procedure(g, x, sel, impl);
}

}  // namespace reference

namespace {

// the full blue clone-clique containing x, if one exists, is exactly x plus
// its blue neighbourhood
std::vector<int> blue_closure(const ColouredGraph& g, int x) {
    std::vector<int> q{x};
    for (int v = 0; v < g.n; ++v)
        if (v != x && g.is_blue(x, v)) q.push_back(v);
    std::sort(q.begin(), q.end());
    return q;
}

}  // namespace

FullSymmetriseResult full_symmetrise(const ColouredGraph& g, const Selector& sel) {
    ColouredGraph cur = g;
    SplitMix64 seeds(sel.seed);
    for (int guard = 0; guard <= g.n + 1; ++guard) {
        int pending = -1;
        for (int x = 0; x < g.n; ++x)
            if (!is_full_blue_clone_clique(cur, blue_closure(cur, x))) {
                pending = x;
                break;
            }
        if (pending < 0) {
            FullSymmetriseResult out;
            std::vector<char> seen(g.n, 0);
            for (int x = 0; x < g.n; ++x) {
                if (seen[x]) continue;
                auto q = blue_closure(cur, x);
                for (int v : q) seen[v] = 1;
                out.partition.blocks.push_back(std::move(q));
            }
            std::sort(out.partition.blocks.begin(), out.partition.blocks.end(),
                      [](const auto& a, const auto& b) {
                          if (a.size() != b.size()) return a.size() > b.size();
                          return a.front() < b.front();
                      });
            out.graph = std::move(cur);
            return out;
        }
        Selector run = sel;
        if (sel.kind == SelectorKind::SeededRandom) run.seed = seeds.next();
        cur = symmetrise_from(cur, pending, run).graph;
    }
    throw std::logic_error("full_symmetrise failed to terminate");
}

ColouredGraph reorient_to_larger(const ColouredGraph& g, const ClonePartition& p) {
    std::vector<int> block_of(g.n, -1);
    for (std::size_t i = 0; i < p.blocks.size(); ++i) {
        if (i > 0 && p.blocks[i].size() > p.blocks[i - 1].size())
            throw std::invalid_argument("partition blocks must be size-descending");
        for (int v : p.blocks[i]) {
            if (v < 0 || v >= g.n || block_of[v] != -1)
                throw std::invalid_argument("partition does not partition the vertex set");
            block_of[v] = static_cast<int>(i);
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (block_of[v] < 0) throw std::invalid_argument("partition misses a vertex");
    for (const auto& q : p.blocks)
        if (!is_full_blue_clone_clique(g, q))
            throw std::invalid_argument("partition block is not a full blue clone-clique");
    ColouredGraph out = g;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            if (block_of[u] == block_of[v]) continue;
            if (block_of[u] < block_of[v]) out.set_red(v, u);
            else out.set_red(u, v);
        }
    return out;
}

}
