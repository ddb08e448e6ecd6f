#include "butson/matrix_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace butson {

namespace {

[[noreturn]] void fail(const std::string& what, int line, int column = 0) {
    std::ostringstream msg;
    msg << what << " at line " << line;
    if (column > 0) msg << ", column " << column;
    throw std::runtime_error(msg.str());
}

bool is_comment(const std::string& line) {
    for (char c : line) {
        if (c == ' ' || c == '\t') continue;
        return c == '#';
    }
    return false;  // blank lines are not skipped: line counts are part of the format
}

// Parses exactly `count` integers from a body line.
std::vector<int> parse_ints(const std::string& line, int count, int line_no) {
    std::istringstream in(line);
    std::vector<int> out;
    int v;
    while (in >> v) out.push_back(v);
    std::string trailing;
    if (in.clear(), in >> trailing) fail("unexpected token '" + trailing + "'", line_no);
    if (static_cast<int>(out.size()) != count)
        fail("expected " + std::to_string(count) + " values, found " +
                 std::to_string(out.size()),
             line_no);
    return out;
}

}  // namespace

Matrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, q = -1;
    Matrix m;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment(line)) continue;
        if (n < 0) {
            const auto header = parse_ints(line, 2, line_no);
            n = header[0];
            q = header[1];
            if (n < 1 || q < 1) fail("header needs n >= 1 and q >= 1", line_no);
            m.q = q;
            continue;
        }
        if (m.row_count() == n) fail("extra content after " + std::to_string(n) + " rows", line_no);
        const auto values = parse_ints(line, n, line_no);
        Row row(n);
        for (int j = 0; j < n; ++j) {
            if (values[j] < 0 || values[j] >= q) fail("residue out of range", line_no, j + 1);
            row[j] = static_cast<std::uint8_t>(values[j]);
        }
        m.rows.push_back(std::move(row));
    }
    if (n < 0) fail("missing header", line_no + 1);
    if (m.row_count() != n)
        fail("expected " + std::to_string(n) + " rows, found " + std::to_string(m.row_count()),
             line_no + 1);
    return m;
}

std::string write_matrix(const Matrix& m) {
    std::ostringstream out;
    out << m.row_count() << ' ' << m.q << '\n';
    for (const auto& row : m.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j) out << ' ';
            out << static_cast<int>(row[j]);
        }
        out << '\n';
    }
    return out.str();
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_matrix(buf.str());
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_matrix_file(const std::string& path, const Matrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << write_matrix(m);
}

std::string catalog_file_name(int index) {
    char name[32];
    std::snprintf(name, sizeof(name), "class_%04d.txt", index);
    return name;
}

void write_catalog(const std::string& dir, const Catalog& catalog,
                   const std::vector<Matrix>& matrices) {
    if (catalog.entries.size() != matrices.size())
        throw std::invalid_argument("write_catalog: entry/matrix count mismatch");
    std::filesystem::create_directories(dir);
    for (std::size_t i = 0; i < matrices.size(); ++i)
        write_matrix_file(dir + "/" + catalog.entries[i].file, matrices[i]);
    std::ofstream out(dir + "/index.txt", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + dir + "/index.txt");
    out << catalog.n << ' ' << catalog.q << '\n';
    for (const auto& e : catalog.entries) {
        out << e.index << ' ' << e.file << ' ' << e.aut << ' ';
        if (e.type >= 0)
            out << e.type;
        else
            out << '-';
        out << ' ';
        if (e.defect >= 0)
            out << e.defect;
        else
            out << '-';
        out << '\n';
    }
}

Catalog read_catalog(const std::string& dir) {
    std::ifstream in(dir + "/index.txt", std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + dir + "/index.txt");
    Catalog catalog;
    if (!(in >> catalog.n >> catalog.q)) throw std::runtime_error(dir + ": malformed index header");
    CatalogEntry e;
    std::string type, defect;
    while (in >> e.index >> e.file >> e.aut >> type >> defect) {
        e.type = type == "-" ? -1 : std::stoi(type);
        e.defect = defect == "-" ? -1 : std::stoi(defect);
        if (e.index != static_cast<int>(catalog.entries.size()))
            throw std::runtime_error(dir + ": class indices must be dense from 0");
        if (!std::filesystem::exists(dir + "/" + e.file))
            throw std::runtime_error(dir + ": missing file " + e.file);
        catalog.entries.push_back(e);
    }
    return catalog;
}

std::vector<Matrix> read_catalog_matrices(const std::string& dir) {
    const Catalog catalog = read_catalog(dir);
    std::vector<Matrix> out;
    out.reserve(catalog.entries.size());
    for (const auto& e : catalog.entries) out.push_back(read_matrix_file(dir + "/" + e.file));
    return out;
}

}  // namespace butson
