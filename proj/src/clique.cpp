#include "butson/clique.hpp"

#include <algorithm>

#include "butson/extend.hpp"

namespace butson {

CompatGraph graph_from_rows(const std::vector<Row>& rows, const VanishingSet& o) {
    CompatGraph g;
    g.vertices = rows;
    const int n = g.size();
    g.adjacency.assign(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (is_orthogonal(g.vertices[a], g.vertices[b], o))
                g.adjacency[a][b] = g.adjacency[b][a] = 1;
    return g;
}

CompatGraph compatibility_graph(const Matrix& r, const VanishingSet& o, bool use_hash) {
    std::vector<Row> rows = extension_rows(r, o, use_hash);
    if (!r.rows.empty()) {
        const Row& last = r.rows.back();
        std::erase_if(rows, [&](const Row& x) { return !(last < x); });
    }
    return graph_from_rows(rows, o);
}

namespace {

// Packed adjacency for the branch-and-bound search.
struct BitGraph {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> adj;

    explicit BitGraph(const CompatGraph& g) : n(g.size()), words((g.size() + 63) / 64) {
        adj.assign(static_cast<std::size_t>(n) * words, 0);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (g.adjacent(a, b)) adj[a * words + b / 64] |= 1ULL << (b % 64);
    }

    bool edge(int a, int b) const { return adj[a * words + b / 64] >> (b % 64) & 1; }
};

struct CliqueSearch {
    const BitGraph& g;
    int target;

    bool expand(int chosen, const std::vector<int>& cand) const {
        if (chosen >= target) return true;
        if (chosen + static_cast<int>(cand.size()) < target) return false;
        if (cand.empty()) return false;

        // Greedy coloring: the number of classes bounds the clique size
        // extendable from cand.
        const int m = static_cast<int>(cand.size());
        std::vector<int> color(m);
        std::vector<std::vector<int>> classes;
        for (int i = 0; i < m; ++i) {
            const int v = cand[i];
            std::size_t cls = 0;
            for (; cls < classes.size(); ++cls) {
                bool clash = false;
                for (int u : classes[cls])
                    if (g.edge(v, u)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (cls == classes.size()) classes.emplace_back();
            classes[cls].push_back(v);
            color[i] = static_cast<int>(cls) + 1;
        }
        std::vector<int> order(m);
        for (int i = 0; i < m; ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return color[a] < color[b]; });

        std::vector<char> removed(m, 0);
        for (int t = m - 1; t >= 0; --t) {
            const int idx = order[t];
            if (chosen + color[idx] < target) return false;
            const int v = cand[idx];
            if (chosen + 1 >= target) return true;
            std::vector<int> next;
            next.reserve(m);
            for (int s = 0; s < m; ++s)
                if (!removed[s] && s != idx && g.edge(v, cand[s])) next.push_back(cand[s]);
            if (expand(chosen + 1, next)) return true;
            removed[idx] = 1;
        }
        return false;
    }
};

}  // namespace

bool has_clique(const CompatGraph& g, int k) {
    if (k <= 0) return true;
    if (k > g.size()) return false;
    if (k == 1) return true;
    const BitGraph bg(g);
    std::vector<int> all(g.size());
    for (int i = 0; i < g.size(); ++i) all[i] = i;
    return CliqueSearch{bg, k}.expand(0, all);
}

std::string to_dimacs(const CompatGraph& g) {
    std::string out;
    int edges = 0;
    for (int a = 0; a < g.size(); ++a)
        for (int b = a + 1; b < g.size(); ++b)
            if (g.adjacent(a, b)) ++edges;
    out += "p edge " + std::to_string(g.size()) + " " + std::to_string(edges) + "\n";
    for (int a = 0; a < g.size(); ++a)
        for (int b = a + 1; b < g.size(); ++b)
            if (g.adjacent(a, b))
                out += "e " + std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return out;
}

}  // namespace butson
