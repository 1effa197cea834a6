#include "cherrylab/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cherrylab {

int PartitionProfile::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

PartitionProfile make_profile(std::vector<int> parts) {
    if (parts.empty()) throw std::invalid_argument("profile must have at least one part");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("profile parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("profile parts must be non-increasing");
    }
    return PartitionProfile{std::move(parts)};
}

FTable f_table(int max_n) {
    if (max_n < 1) throw std::invalid_argument("f table needs max_n >= 1");
    FTable t;
    t.f.assign(max_n + 1, 0);
    t.split.assign(max_n + 1, 0);
    for (int n = 2; n <= max_n; ++n) {
        std::int64_t best = -1;
        int bk = 0;
        for (int k = 1; k < n; ++k) {
            std::int64_t v = static_cast<std::int64_t>(k) * (k - 1) / 2 * (n - k) + t.f[n - k];
            if (v > best) {
                best = v;
                bk = k;
            }
        }
        t.f[n] = best;
        t.split[n] = bk;
    }
    return t;
}

std::int64_t partition_value(const PartitionProfile& p) {
    std::int64_t total = 0, suffix = 0;
    for (auto it = p.parts.rbegin(); it != p.parts.rend(); ++it) {
        std::int64_t x = *it;
        total += x * (x - 1) / 2 * suffix;
        suffix += x;
    }
    return total;
}

namespace {

// parts chosen largest-first; a part p placed with `left` vertices still to
// assign contributes C(p,2) * (left - p)
std::int64_t best_over_partitions(int left, int max_part, std::int64_t acc) {
    if (left == 0) return acc;
    std::int64_t best = -1;
    for (int p = std::min(left, max_part); p >= 1; --p) {
        std::int64_t v = best_over_partitions(
            left - p, p, acc + static_cast<std::int64_t>(p) * (p - 1) / 2 * (left - p));
        best = std::max(best, v);
    }
    return best;
}

}  // namespace

std::int64_t f_by_partitions(int n) {
    if (n < 1 || n > 45) throw std::invalid_argument("f_by_partitions supports 1 <= n <= 45");
    return best_over_partitions(n, n, 0);
}

PartitionProfile optimal_profile(const FTable& table, int n) {
    if (n < 1 || n > table.max_n()) throw std::invalid_argument("n outside f table range");
    std::vector<int> parts;
    int left = n;
    while (left >= 1) {
        if (table.f[left] == 0) {  // remainder 1 or 2: no split improves on one part
            parts.push_back(left);
            break;
        }
        parts.push_back(table.split[left]);
        left -= table.split[left];
    }
    return make_profile(std::move(parts));
}

PartitionProfile optimal_profile(int n) {
    return optimal_profile(f_table(std::max(n, 1)), n);
}

Hypergraph3 construct_iterated(const PartitionProfile& p) {
    const int n = p.total();
    std::vector<int> start(p.parts.size() + 1, 0);
    for (std::size_t i = 0; i < p.parts.size(); ++i) start[i + 1] = start[i] + p.parts[i];
    std::vector<Triple> edges;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        for (int u = start[i]; u < start[i + 1]; ++u)
            for (int v = u + 1; v < start[i + 1]; ++v)
                for (int z = start[i + 1]; z < n; ++z)
                    edges.push_back({u, v, z});
    }
    return make_hypergraph(n, std::move(edges));
}

double g_eval(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("g is defined on [0,1]");
    return x * (1.0 - x) / (2.0 * (3.0 - 3.0 * x + x * x));
}

namespace constants {
double beta() { return (3.0 - std::sqrt(3.0)) / 2.0; }
double alpha() { return std::sqrt(3.0) / 3.0 - 0.5; }
double density_limit() { return 2.0 * std::sqrt(3.0) - 3.0; }
}

bool f_within_alpha_bound(int n, std::int64_t fn) {
    // f <= (sqrt(3)/3 - 1/2) n^3  <=>  3 (2f + n^3)^2 <= 4 n^6, all integers
    using I = unsigned __int128;
    I n3 = static_cast<I>(n) * n * n;
    I lhs = static_cast<I>(2 * fn) + n3;
    return 3 * lhs * lhs <= 4 * n3 * n3;
}

}
