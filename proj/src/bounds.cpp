#include "pgrl/bounds.hpp"

#include <numeric>

namespace pgrl {

Rational::Rational(int64_t n, int64_t d) : num(n), den(d) {
    if (den == 0) throw ShapeError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}

Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}

Rational Rational::operator*(const Rational& o) const {
    return Rational(num * o.num, den * o.den);
}

bool Rational::operator<=(const Rational& o) const {
    return num * o.den <= o.num * den;
}

bool Rational::operator<(const Rational& o) const {
    return num * o.den < o.num * den;
}

int64_t Rational::floor() const {
    if (num >= 0) return num / den;
    return -((-num + den - 1) / den);
}

std::string Rational::to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

const Rational& BoundTable::value(const std::string& name) const {
    for (const BoundEntry& e : entries) {
        if (e.name == name) return e.value;
    }
    throw ShapeError("no bound named " + name);
}

BoundTable bound_table(uint32_t k, std::optional<uint32_t> n) {
    BoundTable t;
    t.k = k;
    t.n = n;
    const int64_t K = k;

    // Sectional-rank bounds from a rank-k maximal elementary abelian
    // normal subgroup.
    t.entries.push_back({"sr_odd_thompson", Rational(K * (K + 1), 2)});
    t.entries.push_back({"sr_odd_macwilliams", Rational(K * (K + 4), 4)});
    t.entries.push_back({"sr_even_mann", Rational(K * K) + Rational(K * (K + 1), 2)});
    // 2-group subgroup bound d(H) <= 2k + k^2/4.
    t.entries.push_back({"subgroup_rank_even", Rational(2 * K) + Rational(K * K, 4)});
    // |G : Mho_1(G)| <= 2^(k(k+5)/2): the exponent.
    t.entries.push_back({"mho1_index_exponent_even", Rational(K * (K + 5), 2)});
    // Frattini rank of abelian subgroups.
    t.entries.push_back({"abelian_frattini_rank_odd", Rational(2 * K)});
    t.entries.push_back({"abelian_frattini_rank_even", Rational(3 * K)});

    if (n) {
        const int64_t N = *n;
        // p-subgroups of GL(n, p) and all subgroups of GL(n, 2).
        t.entries.push_back({"gl_p_subgroup_rank", Rational(N * N, 4)});
        t.entries.push_back({"gl_all_subgroup_rank", Rational(N * N, 4) + Rational(1)});
        // Automorphism groups of a group of order p^n.
        t.entries.push_back({"aut_p_subgroup_rank", Rational(N * N, 3)});
        t.entries.push_back({"aut_sr", Rational(N * N, 3) + Rational(1)});

        if (k > *n) throw ShapeError("the chain check needs k <= n");
        Rational lhs = Rational(K * K, 4) + Rational(1) + Rational(K * (N - K));
        Rational mid = Rational(N * K) - Rational(3 * K * K, 4) + Rational(1);
        Rational rhs = Rational(N * N, 3) + Rational(1);
        t.entries.push_back({"aut_chain_combined", mid});
        t.chain_checked = true;
        t.chain_ok = (lhs == mid) && (mid <= rhs);
    }
    return t;
}

} // namespace pgrl
