#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pgrl {

// Deterministic primality check by trial division; m is at most 2^31 - 1
// everywhere in this library, so this is exact and fast enough.
bool is_prime(uint64_t m);

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod);

// Modular inverse for a unit a mod m (m need not be prime). Returns nullopt
// when gcd(a, m) != 1.
std::optional<uint64_t> inv_mod(uint64_t a, uint64_t m);

// base^exp in plain integers, saturating at UINT64_MAX instead of wrapping.
uint64_t pow_sat(uint64_t base, uint64_t exp);

// Prime factorization of n >= 1 as (prime, multiplicity) pairs, ascending.
std::vector<std::pair<uint64_t, uint32_t>> factorize(uint64_t n);

// Exact logarithm: the e with base^e == value, if one exists.
std::optional<uint32_t> exact_log(uint64_t value, uint64_t base);

// Splitmix64; used to derive independent per-trial RNG seeds.
uint64_t splitmix64(uint64_t x);

} // namespace pgrl
