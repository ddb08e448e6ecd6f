#pragma once

#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "butson/core.hpp"
#include "butson/vanishing.hpp"

// Enumeration of candidate next rows x in Z_q^n with x_1 = 0 that are
// orthogonal to every row of a partial matrix: a permutation-based
// method and a divide-and-conquer hash-join method that splits x into a
// prefix c and suffix d and buckets the suffixes by the norms of their
// partial inner products with the existing rows.

namespace butson {

using RowSink = std::function<void(const Row&)>;

// Yields every valid extension row by enumerating the distinct
// zero-leading arrangements of each member of O(n,q) and filtering by
// orthogonality to the remaining rows.
void extensions_naive(const Matrix& r, const VanishingSet& o, const RowSink& sink);

struct ExtensionTable {
    int m = 0;       // suffix length
    int q = 0;
    std::vector<std::uint64_t> primes;  // one per row of R
    std::uint64_t p_big = 1'000'000'007ULL;
    // packed base-q suffixes, bucketed by hash key
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> buckets;
};

// Scalar folded into the hash for one partial norm. Integer norms map to
// themselves; quadratic q=10 norms (2|E|^2 = a + sqrt(5) b) map to
// a^2 + 1009 b^2.
std::uint64_t norm_scalar(const NormValue& v);

std::uint64_t hash_key(const std::vector<NormValue>& partial_norms,
                       const std::vector<std::uint64_t>& primes, std::uint64_t p_big);

// Buckets all q^m suffixes by the hash of their norms against the
// length-m row suffixes of R. Throws std::length_error when the table
// would exceed memory_cap_bytes.
ExtensionTable build_table(const Matrix& r, int m,
                           std::size_t memory_cap_bytes = std::size_t{2} << 30,
                           std::uint64_t p_big = 1'000'000'007ULL);

// Hash-join counterpart of extensions_naive; emits exactly the same set
// (bucket collisions are removed by exact verification).
void extensions_hashed(const Matrix& r, const ExtensionTable& table, const VanishingSet& o,
                       const RowSink& sink);

bool hash_supported(int q);

// Convenience wrapper returning the sorted list of extensions, using the
// hashed method when supported and requested.
std::vector<Row> extension_rows(const Matrix& r, const VanishingSet& o, bool use_hash,
                                int suffix_length = 0,
                                std::size_t memory_cap_bytes = std::size_t{2} << 30);

}  // namespace butson
