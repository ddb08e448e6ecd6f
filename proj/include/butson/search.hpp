#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "butson/core.hpp"
#include "butson/vanishing.hpp"

// Orderly generation of canonical BH(n,q) matrices row by row. Each new
// row must be orthogonal to the previous ones, lexicographically larger
// than the last row, keep the second column extendable to a vanishing
// sum, and leave the matrix canonical.

namespace butson {

enum class SearchMode { dfs, bfs, hybrid };

struct SearchOptions {
    int n = 0;
    int q = 0;
    SearchMode mode = SearchMode::hybrid;
    bool use_hash = true;
    bool use_clique = false;
    int clique_depth = 0;  // apply the clique prune once this many rows are placed
    int type_filter = -1;  // q = 4 only; keep matrices of exactly this type
    int seed_depth = 5;    // frontier depth for parallel workers
    int jobs = 1;
    int max_depth = 0;  // 0 means n; tree counting can stop earlier
    std::size_t memory_cap_bytes = std::size_t{2} << 30;

    std::function<void(const Matrix&)> on_node;  // every surviving partial matrix
    std::function<void(int)> on_seed_done;       // called with the finished seed index
    // complete matrices found under one seed, for staged checkpoints
    std::function<void(int, const std::vector<Matrix>&)> on_seed_result;
    std::set<int> skip_seeds;  // completed seeds from a journal
};

struct SearchStats {
    // nodes[r] = canonical r-row matrices surviving every prune, r = 1..n
    std::vector<std::uint64_t> nodes;
};

struct ClassificationResult {
    std::vector<Matrix> representatives;
    SearchStats stats;
};

ClassificationResult classify(const SearchOptions& opts);

SearchStats count_tree(const SearchOptions& opts);

// k = min{m, n/2 - m} where m counts zeros of r1 - r2 mod 4.
int pair_type(const Row& r1, const Row& r2, int q);

// Minimum pair type over all row pairs.
int matrix_type(const Matrix& r);

}  // namespace butson
