#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pgrl/errors.hpp"

namespace pgrl {

/// Exact rational with a small normalized representation; all the bound
/// formulas live in denominators dividing 12.
struct Rational {
    int64_t num = 0;
    int64_t den = 1;

    Rational() = default;
    Rational(int64_t n, int64_t d = 1);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    bool operator==(const Rational& o) const = default;
    bool operator<=(const Rational& o) const;
    bool operator<(const Rational& o) const;

    int64_t floor() const;
    bool is_integer() const { return den == 1; }
    std::string to_string() const;
};

struct BoundEntry {
    std::string name;
    Rational value;
};

/// Arithmetic table of the generator-number bounds attached to a maximal
/// elementary abelian normal subgroup of rank k (and, when n is given, the
/// GL(n, p) / Aut-group bounds), plus the verified inequality chain
/// k^2/4 + 1 + k(n-k) = nk - (3/4)k^2 + 1 <= n^2/3 + 1.
struct BoundTable {
    uint32_t k = 0;
    std::optional<uint32_t> n;
    std::vector<BoundEntry> entries;
    bool chain_checked = false;
    bool chain_ok = false;

    const Rational& value(const std::string& name) const;
};

BoundTable bound_table(uint32_t k, std::optional<uint32_t> n = std::nullopt);

} // namespace pgrl
