#include "butson/cyclotomic.hpp"

#include <map>
#include <stdexcept>

namespace butson {

namespace {

using Poly = std::vector<long long>;

// Quotient of a by monic b, exact integer division of polynomials.
Poly divide_monic(Poly a, const Poly& b) {
    if (b.empty() || b.back() != 1) throw std::logic_error("divide_monic: divisor not monic");
    if (a.size() < b.size()) throw std::logic_error("divide_monic: degree underflow");
    Poly quot(a.size() - b.size() + 1, 0);
    for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
        const long long c = a[i + b.size() - 1];
        quot[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
    }
    for (auto v : a)
        if (v != 0) throw std::logic_error("divide_monic: nonzero remainder");
    return quot;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int q) {
    if (q < 1) throw std::invalid_argument("cyclotomic_polynomial: q < 1");
    static std::map<int, Poly> cache;
    if (auto it = cache.find(q); it != cache.end()) return it->second;
    // Phi_q = (x^q - 1) / prod_{d | q, d < q} Phi_d
    Poly p(q + 1, 0);
    p[0] = -1;
    p[q] = 1;
    for (int d = 1; d < q; ++d) {
        if (q % d != 0) continue;
        p = divide_monic(p, cyclotomic_polynomial(d));
    }
    cache[q] = p;
    return p;
}

bool vanishes_exact(const Row& x, int q) {
    Poly f(q, 0);
    for (auto e : x) {
        if (e >= q) throw std::invalid_argument("vanishes_exact: residue out of range");
        ++f[e];
    }
    const Poly phi = cyclotomic_polynomial(q);
    const int deg = static_cast<int>(phi.size()) - 1;
    // Reduce f modulo the monic phi; the sum vanishes iff the remainder is 0.
    for (int i = q - 1; i >= deg; --i) {
        const long long c = f[i];
        if (c == 0) continue;
        for (int j = 0; j <= deg; ++j) f[i - deg + j] -= c * phi[j];
    }
    for (int i = 0; i < deg; ++i)
        if (f[i] != 0) return false;
    return true;
}

}  // namespace butson
