#pragma once

#include <cstdint>
#include <vector>

#include "butson/core.hpp"

// The orthogonality set O(n,q): all sorted, zero-leading vectors in
// Z_q^n whose q-th root of unity sum vanishes. Two dephased rows are
// orthogonal iff the sorted difference vector is a member.

namespace butson {

class VanishingSet {
  public:
    VanishingSet(int n, int q, std::vector<Row> members);

    int n() const { return n_; }
    int q() const { return q_; }
    const std::vector<Row>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

    // Membership of a sorted vector.
    bool contains_sorted(const Row& sorted) const;

    // True iff some member starts with the given coordinates.
    bool prefix_feasible(const Row& prefix) const;

  private:
    int n_;
    int q_;
    std::vector<Row> members_;  // kept in lexicographic order
};

// True iff n is representable as a nonnegative combination of the
// distinct prime divisors of q, i.e. |O(n,q)| >= 1.
bool exists_vanishing(int n, int q);

// Builds O(n,q) combinatorially from rotated prime blocks. Requires
// q < 30 with at most two distinct prime factors.
VanishingSet generate_vanishing_set(int n, int q);

// |O(n,q)| for a prime power q = p^a: binomial((n+q)/p - 2, n/p - 1),
// or 0 when p does not divide n.
unsigned long long count_vanishing_prime_power(int n, int q);

// |O(n,q)| for q = 2p with p an odd prime.
unsigned long long count_vanishing_2p(int n, int q);

// Orthogonality of two rows whose difference has a zero coordinate
// (always the case for rows of a dephased matrix).
bool is_orthogonal(const Row& r1, const Row& r2, const VanishingSet& o);

// Distinct prime divisors of q, ascending.
std::vector<int> prime_divisors(int q);

unsigned long long binomial(int n, int k);

}  // namespace butson
