#pragma once

#include <cstdint>
#include <vector>

#include "cherrylab/hypergraph.hpp"

namespace cherrylab {

/// Non-increasing positive part sizes x_1 >= ... >= x_t >= 1.
struct PartitionProfile {
    std::vector<int> parts;
    int total() const;
};

PartitionProfile make_profile(std::vector<int> parts);

/// f(1) = 0, f(n) = max_k C(k,2)(n-k) + f(n-k), with the argmax split per n.
struct FTable {
    std::vector<std::int64_t> f;  // f[1..N]; f[0] = 0
    std::vector<int> split;       // smallest maximising k; 0 for n <= 2
    int max_n() const { return static_cast<int>(f.size()) - 1; }
};

FTable f_table(int max_n);

/// Independent oracle: max over all integer partitions of n of
/// sum_{i<j} C(x_i,2) x_j. Exhaustive, so n <= 45.
std::int64_t f_by_partitions(int n);

std::int64_t partition_value(const PartitionProfile& p);

/// Maximising profile recovered from the DP splits; the terminal remainder
/// (1 or 2, where f vanishes) is emitted as a single part.
PartitionProfile optimal_profile(const FTable& table, int n);
PartitionProfile optimal_profile(int n);

/// Nested-suffix construction: part i is a consecutive index block; a triple
/// is an edge iff two of its vertices lie in part i and the third in any
/// later part. Contains no odd pseudocycle.
Hypergraph3 construct_iterated(const PartitionProfile& p);

/// g(x) = x(1-x) / (2 (3 - 3x + x^2)) on [0,1]; maximised at beta with
/// g(beta) = alpha.
double g_eval(double x);

namespace constants {
double beta();           // (3 - sqrt 3) / 2 ~ 0.634
double alpha();          // sqrt(3)/3 - 1/2 ~ 0.077
double density_limit();  // 6 alpha = 2 sqrt 3 - 3 ~ 0.464
}

/// Exact check f <= alpha n^3, i.e. 3 (2f + n^3)^2 <= 4 n^6 over 128-bit
/// integers; no floating point involved.
bool f_within_alpha_bound(int n, std::int64_t fn);

}
