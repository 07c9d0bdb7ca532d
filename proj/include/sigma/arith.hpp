#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace sigma {

using Int = long long;

inline std::vector<std::pair<Int, int>> factorize(Int n) {
    std::vector<std::pair<Int, int>> f;
    for (Int p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            f.emplace_back(p, e);
        }
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

/// pi(n): set of primes dividing n, ascending.
inline std::vector<Int> primes_of(Int n) {
    std::vector<Int> ps;
    for (auto& [p, e] : factorize(n)) ps.push_back(p);
    return ps;
}

inline bool is_prime(Int n) {
    if (n < 2) return false;
    for (Int p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

inline bool is_squarefree(Int n) {
    for (auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

/// Largest power of p dividing n.
inline Int p_part(Int n, Int p) {
    Int m = 1;
    while (n % p == 0) {
        n /= p;
        m *= p;
    }
    return m;
}

/// Largest divisor of n supported on the given primes.
template <typename Primes>
inline Int part_for_primes(Int n, const Primes& primes) {
    Int m = 1;
    for (Int p : primes) m *= p_part(n, p);
    return m;
}

/// Multiplicative order of a modulo prime p (0 if gcd(a,p) != 1).
inline Int multiplicative_order(Int a, Int p) {
    a %= p;
    if (a < 0) a += p;
    if (std::gcd(a, p) != 1) return 0;
    Int x = a % p, k = 1;
    while (x != 1) {
        x = (x * a) % p;
        ++k;
    }
    return k;
}

inline Int pow_int(Int b, int e) {
    Int r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace sigma
