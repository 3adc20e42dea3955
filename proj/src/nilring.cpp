#include "pgrl/nilring.hpp"

#include <algorithm>

namespace pgrl {

namespace {

uint64_t checked_prime_power(uint64_t p, uint32_t r) {
    if (r < 1) throw ShapeError("exponent r must be at least 1");
    uint64_t m = 1;
    for (uint32_t i = 0; i < r; ++i) {
        m *= p;
        if (m > INT32_MAX) throw TooLarge("p^r exceeds 2^31 - 1");
    }
    return m;
}

void check_alternating(const Matrix& m) {
    for (uint32_t i = 0; i < m.rows(); ++i) {
        if (m.at(i, i) != 0) throw ShapeError("alternating matrix needs a zero diagonal");
        for (uint32_t j = i + 1; j < m.cols(); ++j) {
            uint64_t neg = (m.modulus() - m.at(i, j)) % m.modulus();
            if (m.at(j, i) != neg) {
                throw ShapeError("lower triangle must be the negated upper triangle");
            }
        }
    }
}

void check_element(const NilRingElement& s, const VectorForm& form) {
    if (s.a.size() != form.n || s.b.size() != form.k) {
        throw ShapeError("ring element shape does not match the form");
    }
}

} // namespace

VectorForm::VectorForm(PrimeModulus p_, uint32_t r_, uint32_t n_, uint32_t k_,
                       std::vector<Matrix> mats_)
    : p(p_.p), r(r_), modulus(checked_prime_power(p_.p, r_)), n(n_), k(k_),
      mats(std::move(mats_)) {
    if (n == 0 || k == 0) throw ShapeError("a form needs n >= 1 and k >= 1");
    if (mats.size() != k) throw ShapeError("component count must equal k");
    for (const Matrix& m : mats) {
        if (m.rows() != n || m.cols() != n || m.modulus() != modulus) {
            throw ShapeError("component matrices must be n x n over p^r");
        }
        check_alternating(m);
    }
}

VectorForm VectorForm::from_upper(PrimeModulus p, uint32_t r, uint32_t n, uint32_t k,
                                  const std::vector<Matrix>& upper) {
    uint64_t modulus = checked_prime_power(p.p, r);
    std::vector<Matrix> mats;
    mats.reserve(k);
    for (const Matrix& u : upper) {
        Matrix m(modulus, n, n);
        for (uint32_t i = 0; i < n; ++i) {
            for (uint32_t j = i + 1; j < n; ++j) {
                uint64_t v = u.at(i, j) % modulus;
                m.set(i, j, v);
                m.set(j, i, (modulus - v) % modulus);
            }
        }
        mats.push_back(std::move(m));
    }
    return VectorForm(p, r, n, k, std::move(mats));
}

VectorForm VectorForm::zero(PrimeModulus p, uint32_t r, uint32_t n, uint32_t k) {
    uint64_t modulus = checked_prime_power(p.p, r);
    return VectorForm(p, r, n, k, std::vector<Matrix>(k, Matrix(modulus, n, n)));
}

VectorForm VectorForm::random(PrimeModulus p, uint32_t r, uint32_t n, uint32_t k,
                              std::mt19937_64& rng) {
    uint64_t modulus = checked_prime_power(p.p, r);
    std::vector<Matrix> upper;
    upper.reserve(k);
    for (uint32_t c = 0; c < k; ++c) {
        Matrix u(modulus, n, n);
        for (uint32_t i = 0; i < n; ++i) {
            for (uint32_t j = i + 1; j < n; ++j) u.set(i, j, rng() % modulus);
        }
        upper.push_back(std::move(u));
    }
    return from_upper(p, r, n, k, upper);
}

VectorForm reduce_mod_p(const VectorForm& form) {
    std::vector<Matrix> mats;
    mats.reserve(form.k);
    for (const Matrix& m : form.mats) {
        Matrix red(form.p, form.n, form.n);
        for (uint32_t i = 0; i < form.n; ++i) {
            for (uint32_t j = 0; j < form.n; ++j) red.set(i, j, m.at(i, j) % form.p);
        }
        mats.push_back(std::move(red));
    }
    return VectorForm(PrimeModulus(form.p), 1, form.n, form.k, std::move(mats));
}

VectorForm lift_form(const VectorForm& form, uint32_t r) {
    if (form.r != 1) throw ShapeError("lift_form starts from a prime-field form");
    std::vector<Matrix> upper;
    upper.reserve(form.k);
    uint64_t modulus = checked_prime_power(form.p, r);
    for (const Matrix& m : form.mats) {
        Matrix u(modulus, form.n, form.n);
        for (uint32_t i = 0; i < form.n; ++i) {
            for (uint32_t j = i + 1; j < form.n; ++j) u.set(i, j, m.at(i, j));
        }
        upper.push_back(std::move(u));
    }
    return VectorForm::from_upper(PrimeModulus(form.p), r, form.n, form.k, upper);
}

NilRingElement ring_zero(const VectorForm& form) {
    return {Vec(form.n, 0), Vec(form.k, 0)};
}

NilRingElement ring_basis_a(const VectorForm& form, uint32_t i) {
    NilRingElement s = ring_zero(form);
    s.a.at(i) = 1;
    return s;
}

NilRingElement ring_basis_b(const VectorForm& form, uint32_t c) {
    NilRingElement s = ring_zero(form);
    s.b.at(c) = 1;
    return s;
}

NilRingElement ring_add(const NilRingElement& s, const NilRingElement& t, const VectorForm& form) {
    check_element(s, form);
    check_element(t, form);
    NilRingElement out = ring_zero(form);
    for (uint32_t i = 0; i < form.n; ++i) {
        out.a[i] = static_cast<uint32_t>((static_cast<uint64_t>(s.a[i]) + t.a[i]) % form.modulus);
    }
    for (uint32_t c = 0; c < form.k; ++c) {
        out.b[c] = static_cast<uint32_t>((static_cast<uint64_t>(s.b[c]) + t.b[c]) % form.modulus);
    }
    return out;
}

NilRingElement ring_scale(const NilRingElement& s, uint64_t c, const VectorForm& form) {
    check_element(s, form);
    c %= form.modulus;
    NilRingElement out = ring_zero(form);
    for (uint32_t i = 0; i < form.n; ++i) {
        out.a[i] = static_cast<uint32_t>(s.a[i] * c % form.modulus);
    }
    for (uint32_t i = 0; i < form.k; ++i) {
        out.b[i] = static_cast<uint32_t>(s.b[i] * c % form.modulus);
    }
    return out;
}

NilRingElement ring_mul(const NilRingElement& s, const NilRingElement& t, const VectorForm& form) {
    check_element(s, form);
    check_element(t, form);
    // Only the strict upper triangle multiplies: e_i e_j = phi(e_i, e_j)
    // for i < j and 0 otherwise; b-parts annihilate everything.
    NilRingElement out = ring_zero(form);
    for (uint32_t c = 0; c < form.k; ++c) {
        uint64_t acc = 0;
        const Matrix& m = form.mats[c];
        for (uint32_t i = 0; i < form.n; ++i) {
            if (s.a[i] == 0) continue;
            for (uint32_t j = i + 1; j < form.n; ++j) {
                acc = (acc + static_cast<uint64_t>(s.a[i]) * t.a[j] % form.modulus * m.at(i, j)) %
                      form.modulus;
            }
        }
        out.b[c] = static_cast<uint32_t>(acc);
    }
    return out;
}

GroupElement group_identity(const VectorForm& form) { return {ring_zero(form)}; }

GroupElement group_mul(const GroupElement& g, const GroupElement& h, const VectorForm& form) {
    NilRingElement sum = ring_add(g.s, h.s, form);
    return {ring_add(sum, ring_mul(g.s, h.s, form), form)};
}

GroupElement group_inv(const GroupElement& g, const VectorForm& form) {
    NilRingElement minus = ring_scale(g.s, form.modulus - 1, form);
    return {ring_add(minus, ring_mul(g.s, g.s, form), form)};
}

GroupElement group_commutator(const GroupElement& g, const GroupElement& h,
                              const VectorForm& form) {
    GroupElement lhs = group_mul(group_mul(group_mul(group_inv(g, form), group_inv(h, form), form),
                                           g, form),
                                 h, form);
    // Cross-check against 1 + st - ts.
    NilRingElement st = ring_mul(g.s, h.s, form);
    NilRingElement ts_neg = ring_scale(ring_mul(h.s, g.s, form), form.modulus - 1, form);
    GroupElement expected{ring_add(st, ts_neg, form)};
    if (!(lhs == expected)) {
        throw InternalInvariantViolation("commutator must equal 1 + st - ts");
    }
    bool central = std::all_of(lhs.s.a.begin(), lhs.s.a.end(), [](uint32_t x) { return x == 0; });
    if (!central) throw InternalInvariantViolation("commutators must land in 1 + B");
    return lhs;
}

GroupElement group_pow(const GroupElement& g, uint64_t m, const VectorForm& form) {
    // C(m, 2) in the integers, then reduced; avoids dividing by 2 mod 2^r.
    uint64_t binom = (m % 2 == 0) ? (m / 2) % form.modulus * ((m - 1) % form.modulus)
                                  : m % form.modulus * (((m - 1) / 2) % form.modulus);
    binom %= form.modulus;
    NilRingElement lin = ring_scale(g.s, m % form.modulus, form);
    NilRingElement quad = ring_scale(ring_mul(g.s, g.s, form), binom, form);
    return {ring_add(lin, quad, form)};
}

GroupElement reduce_mod_p(const GroupElement& g, const VectorForm& form) {
    check_element(g.s, form);
    GroupElement out = g;
    for (uint32_t i = 0; i < form.n; ++i) out.s.a[i] %= form.p;
    for (uint32_t c = 0; c < form.k; ++c) out.s.b[c] %= form.p;
    return out;
}

bool quotient_type_check(const VectorForm& form) {
    const uint64_t pr = form.modulus;
    for (uint32_t i = 0; i < form.n; ++i) {
        GroupElement gi{ring_basis_a(form, i)};
        // Order of 1 + e_i modulo N = 1 + B is exactly p^r: the a-part of
        // (1 + e_i)^m is m e_i.
        for (uint64_t m = 1; m < pr; ++m) {
            GroupElement pw = group_pow(gi, m, form);
            bool a_zero = std::all_of(pw.s.a.begin(), pw.s.a.end(),
                                      [](uint32_t x) { return x == 0; });
            if (a_zero) return false;
        }
        GroupElement full = group_pow(gi, pr, form);
        if (!std::all_of(full.s.a.begin(), full.s.a.end(), [](uint32_t x) { return x == 0; })) {
            return false;
        }
        // Images commute mod N: commutators have zero a-part by central-ness.
        for (uint32_t j = i + 1; j < form.n; ++j) {
            GroupElement gj{ring_basis_a(form, j)};
            GroupElement c = group_commutator(gi, gj, form);
            if (!std::all_of(c.s.a.begin(), c.s.a.end(), [](uint32_t x) { return x == 0; })) {
                return false;
            }
        }
    }
    return true;
}

} // namespace pgrl
