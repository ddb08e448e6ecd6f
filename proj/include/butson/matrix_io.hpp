#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "butson/core.hpp"

// Plain-text persistence: a matrix file is a "n q" header followed by n
// lines of n residues; '#' lines are comments. A catalog is a directory
// of matrix files plus an index.

namespace butson {

Matrix parse_matrix(const std::string& text);

std::string write_matrix(const Matrix& m);

Matrix read_matrix_file(const std::string& path);

void write_matrix_file(const std::string& path, const Matrix& m);

struct CatalogEntry {
    int index = 0;
    std::string file;
    std::uint64_t aut = 0;
    int type = -1;    // q = 4 only, -1 otherwise
    int defect = -1;  // -1 when not computed
};

struct Catalog {
    int n = 0;
    int q = 0;
    std::vector<CatalogEntry> entries;
};

std::string catalog_file_name(int index);

void write_catalog(const std::string& dir, const Catalog& catalog,
                   const std::vector<Matrix>& matrices);

Catalog read_catalog(const std::string& dir);

std::vector<Matrix> read_catalog_matrices(const std::string& dir);

}  // namespace butson
