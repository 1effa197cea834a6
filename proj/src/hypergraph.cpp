#include "cherrylab/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cherrylab {

bool Hypergraph3::has_edge(int a, int b, int c) const {
    Triple t{a, b, c};
    std::sort(t.begin(), t.end());
    return std::binary_search(edges.begin(), edges.end(), t);
}

Hypergraph3 make_hypergraph(int n, std::vector<Triple> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        if (e[0] == e[1] || e[1] == e[2])
            throw std::invalid_argument("edge with repeated vertex");
        if (e[0] < 0 || e[2] >= n)
            throw std::invalid_argument("edge vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    return Hypergraph3{n, std::move(edges)};
}

std::vector<VertexPair> shadow(const Hypergraph3& h) {
    std::vector<VertexPair> out;
    out.reserve(h.edges.size() * 3);
    for (const auto& e : h.edges) {
        out.emplace_back(e[0], e[1]);
        out.emplace_back(e[0], e[2]);
        out.emplace_back(e[1], e[2]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int codegree(const Hypergraph3& h, int u, int v) {
    if (u == v) throw std::invalid_argument("codegree of a vertex with itself");
    if (u < 0 || v < 0 || u >= h.n || v >= h.n)
        throw std::invalid_argument("codegree vertex out of range");
    int c = 0;
    for (const auto& e : h.edges)
        if ((e[0] == u || e[1] == u || e[2] == u) &&
            (e[0] == v || e[1] == v || e[2] == v))
            ++c;
    return c;
}

std::vector<VertexPair> link(const Hypergraph3& h, int v) {
    if (v < 0 || v >= h.n) throw std::invalid_argument("link vertex out of range");
    std::vector<VertexPair> out;
    for (const auto& e : h.edges) {
        if (e[0] == v) out.emplace_back(e[1], e[2]);
        else if (e[1] == v) out.emplace_back(e[0], e[2]);
        else if (e[2] == v) out.emplace_back(e[0], e[1]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Hypergraph3 blow_up(const Hypergraph3& h, int t) {
    if (t < 1) throw std::invalid_argument("blow-up factor must be positive");
    std::vector<Triple> out;
    out.reserve(h.edges.size() * static_cast<std::size_t>(t) * t * t);
    for (const auto& e : h.edges)
        for (int i = 0; i < t; ++i)
            for (int j = 0; j < t; ++j)
                for (int k = 0; k < t; ++k)
                    out.push_back({e[0] * t + i, e[1] * t + j, e[2] * t + k});
    return make_hypergraph(h.n * t, std::move(out));
}

Hypergraph3 vertex_replace(const Hypergraph3& h, int u, int v) {
    if (u == v) throw std::invalid_argument("vertex_replace needs distinct vertices");
    if (u < 0 || v < 0 || u >= h.n || v >= h.n)
        throw std::invalid_argument("vertex_replace vertex out of range");
    auto contains = [](const Triple& e, int x) {
        return e[0] == x || e[1] == x || e[2] == x;
    };
    std::vector<Triple> out;
    for (const auto& e : h.edges) {
        if (contains(e, v)) continue;
        out.push_back(e);
        if (contains(e, u)) {
            Triple shifted = e;
            for (auto& x : shifted)
                if (x == u) x = v;
            out.push_back(shifted);
        }
    }
    return make_hypergraph(h.n, std::move(out));
}

Hypergraph3 tight_cycle(int ell) {
    if (ell < 3) throw std::invalid_argument("tight cycle needs at least 3 vertices");
    std::vector<Triple> out;
    for (int i = 0; i < ell; ++i) {
        Triple t{i, (i + 1) % ell, (i + 2) % ell};
        std::sort(t.begin(), t.end());
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return Hypergraph3{ell, std::move(out)};
}

Hypergraph3 complete3(int n) {
    std::vector<Triple> out;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                out.push_back({a, b, c});
    return Hypergraph3{n, std::move(out)};
}

}
