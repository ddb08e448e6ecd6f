#include "butson/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "butson/canonical.hpp"
#include "butson/clique.hpp"
#include "butson/extend.hpp"

namespace butson {

int pair_type(const Row& r1, const Row& r2, int q) {
    if (q != 4) throw std::invalid_argument("pair_type: defined for q = 4 only");
    if (r1.size() != r2.size()) throw std::invalid_argument("pair_type: length mismatch");
    const int n = static_cast<int>(r1.size());
    int m = 0;
    for (int j = 0; j < n; ++j)
        if (r1[j] == r2[j]) ++m;
    return std::min(m, n / 2 - m);
}

int matrix_type(const Matrix& r) {
    if (r.q != 4) throw std::invalid_argument("matrix_type: defined for q = 4 only");
    if (r.row_count() < 2) throw std::invalid_argument("matrix_type: needs at least two rows");
    int best = r.col_count();
    for (int a = 0; a < r.row_count(); ++a)
        for (int b = a + 1; b < r.row_count(); ++b)
            best = std::min(best, pair_type(r.rows[a], r.rows[b], 4));
    return best;
}

namespace {

struct Engine {
    const SearchOptions& opts;
    const VanishingSet& o;
    int limit;     // deepest row count explored
    bool collect;  // store complete representatives
    std::mutex callback_mutex;

    bool hashing() const { return opts.use_hash && hash_supported(opts.q); }

    void notify(const Matrix& r) {
        if (!opts.on_node) return;
        std::lock_guard<std::mutex> lock(callback_mutex);
        opts.on_node(r);
    }

    // Filters applied to an orthogonal candidate x on top of r, in cost
    // order: orderly condition, second column, canonical form, clique.
    // On success x has been appended to r and counted.
    bool admit(Matrix& r, const Row& x, Row& col2, std::vector<std::uint64_t>& nodes,
               std::vector<Matrix>* reps) {
        const int depth = r.row_count();
        if (!(r.rows.back() < x)) return false;
        col2.resize(depth + 1);
        col2[depth] = x[1];
        if (!o.prefix_feasible(col2)) return false;
        if (opts.type_filter >= 0)
            for (const auto& row : r.rows)
                if (pair_type(x, row, 4) < opts.type_filter) return false;

        r.rows.push_back(x);
        bool ok = is_canonical(r);
        if (ok && opts.use_clique && depth + 1 >= opts.clique_depth && depth + 1 < opts.n)
            ok = has_clique(compatibility_graph(r, o, hashing()), opts.n - depth - 1);
        if (ok && depth + 1 == opts.n && opts.type_filter >= 0)
            ok = matrix_type(r) == opts.type_filter;
        if (!ok) {
            r.rows.pop_back();
            return false;
        }
        ++nodes[depth + 1];
        notify(r);
        if (reps && depth + 1 == opts.n) reps->push_back(r);
        return true;
    }

    void dfs(Matrix& r, Row& col2, std::vector<std::uint64_t>& nodes, std::vector<Matrix>* reps) {
        if (r.row_count() >= limit) return;
        const auto exts = extension_rows(r, o, hashing(), 0, opts.memory_cap_bytes);
        for (const auto& x : exts) {
            if (admit(r, x, col2, nodes, reps)) {
                dfs(r, col2, nodes, reps);
                r.rows.pop_back();
            }
        }
    }

    // Expands level by level up to depth target, counting along the way.
    std::vector<Matrix> levels(int target, std::vector<std::uint64_t>& nodes,
                               std::vector<Matrix>* reps) {
        std::vector<Matrix> level{Matrix{opts.q, {Row(opts.n, 0)}}};
        nodes[1] = 1;
        notify(level.front());
        if (collect && opts.n == 1 && reps) reps->push_back(level.front());
        for (int depth = 1; depth < target; ++depth) {
            std::vector<Matrix> next;
            for (auto& r : level) {
                Row col2(depth + 1, 0);
                for (int j = 0; j < depth; ++j) col2[j] = r.rows[j][1];
                const auto exts = extension_rows(r, o, hashing(), 0, opts.memory_cap_bytes);
                for (const auto& x : exts) {
                    if (admit(r, x, col2, nodes, reps)) {
                        next.push_back(r);
                        r.rows.pop_back();
                    }
                }
            }
            level = std::move(next);
            if (level.empty()) break;
        }
        return level;
    }

    void run(std::vector<std::uint64_t>& nodes, std::vector<Matrix>* reps) {
        if (opts.mode == SearchMode::bfs) {
            levels(limit, nodes, reps);
            return;
        }
        const int seed_depth = std::clamp(opts.seed_depth, 1, limit);
        std::vector<Matrix> seeds = levels(seed_depth, nodes, reps);
        if (seeds.empty() || seed_depth >= limit) return;

        const int jobs = std::max(1, opts.jobs);
        std::vector<std::vector<std::uint64_t>> seed_nodes(seeds.size());
        std::vector<std::vector<Matrix>> seed_reps(seeds.size());
        std::atomic<std::size_t> cursor{0};
        std::mutex done_mutex;

        auto worker = [&] {
            for (;;) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= seeds.size()) return;
                if (!opts.skip_seeds.contains(static_cast<int>(i))) {
                    seed_nodes[i].assign(opts.n + 1, 0);
                    Matrix r = seeds[i];
                    Row col2(opts.n, 0);
                    for (int j = 0; j < seed_depth; ++j) col2[j] = r.rows[j][1];
                    dfs(r, col2, seed_nodes[i], collect ? &seed_reps[i] : nullptr);
                    if (opts.on_seed_result) {
                        std::lock_guard<std::mutex> lock(done_mutex);
                        opts.on_seed_result(static_cast<int>(i), seed_reps[i]);
                    }
                }
                if (opts.on_seed_done) {
                    std::lock_guard<std::mutex> lock(done_mutex);
                    opts.on_seed_done(static_cast<int>(i));
                }
            }
        };
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        for (std::size_t i = 0; i < seeds.size(); ++i) {
            if (seed_nodes[i].empty()) continue;
            for (int d = 0; d <= opts.n; ++d) nodes[d] += seed_nodes[i][d];
            if (reps)
                reps->insert(reps->end(), seed_reps[i].begin(), seed_reps[i].end());
        }
    }
};

void validate(const SearchOptions& opts) {
    if (opts.n < 1 || opts.q < 2) throw std::invalid_argument("search: need n >= 1 and q >= 2");
    if (opts.type_filter >= 0 && opts.q != 4)
        throw std::invalid_argument("search: type filter requires q = 4");
}

SearchStats make_stats(int n) {
    SearchStats s;
    s.nodes.assign(n + 1, 0);
    return s;
}

}  // namespace

ClassificationResult classify(const SearchOptions& opts) {
    validate(opts);
    ClassificationResult result;
    result.stats = make_stats(opts.n);
    if (opts.n == 1) {
        result.stats.nodes[1] = 1;
        result.representatives.push_back(Matrix{opts.q, {Row{0}}});
        return result;
    }
    if (!exists_vanishing(opts.n, opts.q)) {
        result.stats.nodes[1] = 1;
        return result;
    }
    const VanishingSet o = generate_vanishing_set(opts.n, opts.q);
    Engine engine{opts, o, opts.n, true, {}};
    engine.run(result.stats.nodes, &result.representatives);
    std::sort(result.representatives.begin(), result.representatives.end(),
              [](const Matrix& a, const Matrix& b) { return vectorize(a) < vectorize(b); });
    return result;
}

SearchStats count_tree(const SearchOptions& opts) {
    validate(opts);
    SearchStats stats = make_stats(opts.n);
    if (opts.n == 1) {
        stats.nodes[1] = 1;
        return stats;
    }
    if (!exists_vanishing(opts.n, opts.q)) {
        stats.nodes[1] = 1;
        return stats;
    }
    const int limit = opts.max_depth > 0 ? std::min(opts.max_depth, opts.n) : opts.n;
    const VanishingSet o = generate_vanishing_set(opts.n, opts.q);
    Engine engine{opts, o, limit, false, {}};
    engine.run(stats.nodes, nullptr);
    return stats;
}

}  // namespace butson
