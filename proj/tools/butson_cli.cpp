#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "butson/analysis.hpp"
#include "butson/canonical.hpp"
#include "butson/equivalence.hpp"
#include "butson/matrix_io.hpp"
#include "butson/search.hpp"
#include "butson/vanishing.hpp"

namespace {

using namespace butson;

std::size_t memory_cap_from_env() {
    if (const char* cap = std::getenv("BUTSON_MEMORY_CAP")) {
        const long long v = std::atoll(cap);
        if (v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{2} << 30;
}

std::string seed_file_name(int index) {
    char name[32];
    std::snprintf(name, sizeof(name), "seed_%05d.txt", index);
    return name;
}

std::vector<Matrix> read_matrix_stream(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<Matrix> out;
    int n, q;
    while (in >> n >> q) {
        Matrix m;
        m.q = q;
        for (int j = 0; j < n; ++j) {
            Row row(n);
            for (int k = 0; k < n; ++k) {
                int v;
                if (!(in >> v)) throw std::runtime_error(path + ": truncated matrix");
                row[k] = static_cast<std::uint8_t>(v);
            }
            m.rows.push_back(std::move(row));
        }
        out.push_back(std::move(m));
    }
    return out;
}

struct ClassifyArgs {
    int n = 0, q = 0;
    int type = -1;
    int jobs = 1;
    int seed_depth = 5;
    bool no_hash = false;
    int clique_depth = -1;
    std::string resume;
    std::string out;
};

SearchOptions to_options(const ClassifyArgs& args) {
    SearchOptions opts;
    opts.n = args.n;
    opts.q = args.q;
    opts.type_filter = args.type;
    opts.jobs = args.jobs;
    opts.seed_depth = args.seed_depth;
    opts.use_hash = !args.no_hash;
    if (args.clique_depth >= 0) {
        opts.use_clique = true;
        opts.clique_depth = args.clique_depth;
    }
    opts.memory_cap_bytes = memory_cap_from_env();
    return opts;
}

void print_depths(const SearchStats& stats, int n) {
    std::string line;
    for (int d = 1; d <= n; ++d) {
        if (d > 1) line += ' ';
        line += std::to_string(stats.nodes[d]);
        if (stats.nodes[d] == 0) break;
    }
    std::cout << line << '\n';
}

int run_classify(const ClassifyArgs& args) {
    SearchOptions opts = to_options(args);
    const std::string seed_dir = args.out + "/seeds";

    std::set<int> completed;
    if (!args.resume.empty()) {
        std::ifstream journal(args.resume);
        int idx;
        while (journal >> idx) completed.insert(idx);
        opts.skip_seeds = completed;
        std::filesystem::create_directories(seed_dir);
        opts.on_seed_result = [&](int index, const std::vector<Matrix>& reps) {
            std::ofstream out(seed_dir + "/" + seed_file_name(index), std::ios::binary);
            for (const auto& m : reps) out << write_matrix(m);
        };
        opts.on_seed_done = [&](int index) {
            if (completed.contains(index)) return;
            std::ofstream journal_out(args.resume, std::ios::app);
            journal_out << index << '\n';
        };
    }

    const ClassificationResult result = classify(opts);

    std::vector<Matrix> reps = result.representatives;
    if (!completed.empty()) {
        for (int index : completed) {
            const std::string staged = seed_dir + "/" + seed_file_name(index);
            if (!std::filesystem::exists(staged))
                throw std::runtime_error("resume: missing staged results " + staged);
            for (auto& m : read_matrix_stream(staged)) reps.push_back(std::move(m));
        }
        std::sort(reps.begin(), reps.end(),
                  [](const Matrix& a, const Matrix& b) { return vectorize(a) < vectorize(b); });
    }

    Catalog catalog;
    catalog.n = args.n;
    catalog.q = args.q;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        CatalogEntry e;
        e.index = static_cast<int>(i);
        e.file = catalog_file_name(e.index);
        e.aut = aut_group_size(reps[i]);
        if (args.q == 4) e.type = matrix_type(reps[i]);
        if (args.q == 2 || args.q == 3 || args.q == 4 || args.q == 6)
            e.defect = defect(reps[i]).defect;
        catalog.entries.push_back(e);
    }
    write_catalog(args.out, catalog, reps);

    print_depths(result.stats, args.n);
    std::cout << "classes: " << reps.size() << '\n';
    return 0;
}

int run_tree(int n, int q, int max_depth, const ClassifyArgs& knobs) {
    SearchOptions opts = to_options(knobs);
    opts.n = n;
    opts.q = q;
    opts.max_depth = max_depth;
    const SearchStats stats = count_tree(opts);
    const int shown = max_depth > 0 ? std::min(max_depth, n) : n;
    print_depths(stats, shown);
    bool dead = false;
    for (int d = 1; d <= shown; ++d)
        if (stats.nodes[d] == 0) dead = true;
    if (dead) std::cout << "nonexistent\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of Butson-type complex Hadamard matrices"};
    app.require_subcommand(1);

    ClassifyArgs cargs;
    auto* classify_cmd = app.add_subcommand("classify", "classify BH(n,q) up to equivalence");
    classify_cmd->add_option("--n", cargs.n, "order")->required();
    classify_cmd->add_option("--q", cargs.q, "root-of-unity modulus")->required();
    classify_cmd->add_option("--type", cargs.type, "keep only type-k matrices (q=4)");
    classify_cmd->add_option("--jobs", cargs.jobs, "worker threads");
    classify_cmd->add_option("--seed-depth", cargs.seed_depth, "frontier depth for workers");
    classify_cmd->add_flag("--no-hash", cargs.no_hash, "disable the hashed extension method");
    classify_cmd->add_option("--clique-depth", cargs.clique_depth,
                             "enable clique pruning from this depth");
    classify_cmd->add_option("--resume", cargs.resume, "journal file for checkpoint/resume");
    classify_cmd->add_option("--out", cargs.out, "catalog output directory")->required();

    int tn = 0, tq = 0, tmax = 0;
    ClassifyArgs tknobs;
    auto* tree_cmd = app.add_subcommand("tree", "per-depth search tree sizes");
    tree_cmd->add_option("--n", tn, "order")->required();
    tree_cmd->add_option("--q", tq, "root-of-unity modulus")->required();
    tree_cmd->add_option("--max-depth", tmax, "stop after this many rows");
    tree_cmd->add_option("--jobs", tknobs.jobs, "worker threads");
    tree_cmd->add_option("--seed-depth", tknobs.seed_depth, "frontier depth for workers");
    tree_cmd->add_flag("--no-hash", tknobs.no_hash, "disable the hashed extension method");

    int vn = 0, vq = 0;
    bool count_only = false;
    auto* vanishing_cmd = app.add_subcommand("vanishing", "orthogonality set O(n,q)");
    vanishing_cmd->add_option("--n", vn, "vector length")->required();
    vanishing_cmd->add_option("--q", vq, "root-of-unity modulus")->required();
    vanishing_cmd->add_flag("--count-only", count_only, "print the cardinality only");

    std::string canonical_file;
    auto* canonical_cmd = app.add_subcommand("canonical", "canonical form of a matrix file");
    canonical_cmd->add_option("file", canonical_file, "matrix file")->required();

    std::string verify_file;
    auto* verify_cmd = app.add_subcommand("verify", "check the Butson property");
    verify_cmd->add_option("file", verify_file, "matrix file")->required();

    std::string aut_file;
    auto* aut_cmd = app.add_subcommand("aut", "automorphism group order");
    aut_cmd->add_option("file", aut_file, "matrix file")->required();

    std::string equiv_a, equiv_b;
    auto* equiv_cmd = app.add_subcommand("equiv", "monomial equivalence of two matrices");
    equiv_cmd->add_option("file1", equiv_a, "matrix file")->required();
    equiv_cmd->add_option("file2", equiv_b, "matrix file")->required();

    std::string defect_file;
    auto* defect_cmd = app.add_subcommand("defect", "exact defect");
    defect_cmd->add_option("file", defect_file, "matrix file")->required();

    auto* construct_cmd = app.add_subcommand("construct", "derive new matrices");
    construct_cmd->require_subcommand(1);
    std::string kron_a, kron_b;
    auto* kron_cmd = construct_cmd->add_subcommand("kron", "Kronecker product");
    kron_cmd->add_option("file1", kron_a, "matrix file")->required();
    kron_cmd->add_option("file2", kron_b, "matrix file")->required();
    std::string turyn_file;
    auto* turyn_cmd = construct_cmd->add_subcommand("turyn", "BH(n,4) to BH(2n,2)");
    turyn_cmd->add_option("file", turyn_file, "matrix file")->required();
    std::string unreal_file;
    auto* unreal_cmd = construct_cmd->add_subcommand("unreal6", "unreal BH(n,6) to BH(2n,4)");
    unreal_cmd->add_option("file", unreal_file, "matrix file")->required();

    std::string hadamard_dir;
    auto* hadamard_cmd =
        app.add_subcommand("hadamard-classes", "Hadamard classes of a catalog");
    hadamard_cmd->add_option("--dir", hadamard_dir, "catalog directory")->required();

    std::string total_dir;
    auto* total_cmd = app.add_subcommand("total-count", "orbit-stabilizer total of a catalog");
    total_cmd->add_option("--dir", total_dir, "catalog directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (*classify_cmd) return run_classify(cargs);
        if (*tree_cmd) return run_tree(tn, tq, tmax, tknobs);
        if (*vanishing_cmd) {
            const auto o = generate_vanishing_set(vn, vq);
            if (count_only) {
                std::cout << o.size() << '\n';
            } else {
                for (const auto& member : o.members()) std::cout << row_to_string(member) << '\n';
            }
            return 0;
        }
        if (*canonical_cmd) {
            std::cout << write_matrix(canonical_form(read_matrix_file(canonical_file)));
            return 0;
        }
        if (*verify_cmd) {
            if (verify_butson(read_matrix_file(verify_file))) {
                std::cout << "valid\n";
                return 0;
            }
            std::cout << "invalid\n";
            return 1;
        }
        if (*aut_cmd) {
            std::cout << aut_group_size(read_matrix_file(aut_file)) << '\n';
            return 0;
        }
        if (*equiv_cmd) {
            if (are_equivalent(read_matrix_file(equiv_a), read_matrix_file(equiv_b))) {
                std::cout << "equivalent\n";
                return 0;
            }
            std::cout << "inequivalent\n";
            return 1;
        }
        if (*defect_cmd) {
            const DefectReport report = defect(read_matrix_file(defect_file));
            std::cout << "defect " << report.defect << " rank " << report.rank << " variables "
                      << report.variables << '\n';
            return 0;
        }
        if (*construct_cmd) {
            Matrix out;
            if (*kron_cmd)
                out = kronecker(read_matrix_file(kron_a), read_matrix_file(kron_b));
            else if (*turyn_cmd)
                out = turyn_double(read_matrix_file(turyn_file));
            else
                out = unreal6_to_quaternary(read_matrix_file(unreal_file));
            std::cout << write_matrix(out);
            return 0;
        }
        if (*hadamard_cmd) {
            std::cout << hadamard_classes(read_catalog_matrices(hadamard_dir)) << '\n';
            return 0;
        }
        if (*total_cmd) {
            const Catalog catalog = read_catalog(total_dir);
            std::vector<std::uint64_t> aut_sizes;
            for (const auto& e : catalog.entries) aut_sizes.push_back(e.aut);
            std::cout << total_count(aut_sizes, catalog.n, catalog.q).get_str() << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
