#include "pgrl/arith.hpp"

namespace pgrl {

bool is_prime(uint64_t m) {
    if (m < 2) return false;
    if (m < 4) return true;
    if (m % 2 == 0 || m % 3 == 0) return false;
    for (uint64_t d = 5; d * d <= m; d += 6) {
        if (m % d == 0 || m % (d + 2) == 0) return false;
    }
    return true;
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
    base %= mod;
    uint64_t acc = 1 % mod;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return acc;
}

std::optional<uint64_t> inv_mod(uint64_t a, uint64_t m) {
    // Extended Euclid on (a, m); track only the coefficient of a.
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(m), new_r = static_cast<int64_t>(a % m);
    while (new_r != 0) {
        int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) return std::nullopt;
    if (t < 0) t += static_cast<int64_t>(m);
    return static_cast<uint64_t>(t);
}

uint64_t pow_sat(uint64_t base, uint64_t exp) {
    uint64_t acc = 1;
    for (uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && acc > UINT64_MAX / base) return UINT64_MAX;
        acc *= base;
    }
    return acc;
}

std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n) {
    std::vector<std::pair<uint64_t, uint32_t>> out;
    for (uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d != 0) continue;
        uint32_t e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::optional<uint32_t> exact_log(uint64_t value, uint64_t base) {
    if (base < 2) return std::nullopt;
    uint32_t e = 0;
    uint64_t acc = 1;
    while (acc < value) {
        if (acc > UINT64_MAX / base) return std::nullopt;
        acc *= base;
        ++e;
    }
    if (acc == value) return e;
    return std::nullopt;
}

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace pgrl
