#pragma once

#include <string>
#include <vector>

#include "butson/core.hpp"
#include "butson/vanishing.hpp"

// Compatibility graph of candidate extension rows and exact clique
// existence, used to prune partial matrices that cannot reach order n.

namespace butson {

struct CompatGraph {
    std::vector<Row> vertices;
    std::vector<std::vector<char>> adjacency;  // symmetric, no self loops

    int size() const { return static_cast<int>(vertices.size()); }
    bool adjacent(int a, int b) const { return adjacency[a][b] != 0; }
};

// Vertices are the extension rows of R that are lexicographically larger
// than the last row of R; edges join orthogonal pairs.
CompatGraph compatibility_graph(const Matrix& r, const VanishingSet& o, bool use_hash = false);

CompatGraph graph_from_rows(const std::vector<Row>& rows, const VanishingSet& o);

// Exact decision by branch and bound with a greedy coloring bound.
bool has_clique(const CompatGraph& g, int k);

std::string to_dimacs(const CompatGraph& g);

}  // namespace butson
