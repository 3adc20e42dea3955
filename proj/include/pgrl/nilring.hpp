#pragma once

#include <random>

#include "pgrl/matrix.hpp"

namespace pgrl {

/// Alternating B-valued bilinear form on R^n with B = R^k, R = Z_{p^r},
/// given by k component matrices. Each component is alternating: zero
/// diagonal, lower triangle the negated mirror of the upper one.
struct VectorForm {
    uint64_t p = 2;
    uint32_t r = 1;
    uint64_t modulus = 2; // p^r
    uint32_t n = 0, k = 0;
    std::vector<Matrix> mats;

    VectorForm(PrimeModulus p_, uint32_t r_, uint32_t n_, uint32_t k_,
               std::vector<Matrix> mats_);

    /// Build from strict upper triangles only; the rest is forced.
    static VectorForm from_upper(PrimeModulus p, uint32_t r, uint32_t n, uint32_t k,
                                 const std::vector<Matrix>& upper);
    static VectorForm zero(PrimeModulus p, uint32_t r, uint32_t n, uint32_t k);
    /// Uniform strict upper triangles from the given RNG.
    static VectorForm random(PrimeModulus p, uint32_t r, uint32_t n, uint32_t k,
                             std::mt19937_64& rng);

    bool operator==(const VectorForm&) const = default;
};

/// Entry-wise reduction to the prime field (r = 1).
VectorForm reduce_mod_p(const VectorForm& form);
/// Canonical lift of a prime-field form to Z_{p^r}: upper-triangle entries
/// kept as integers in [0, p), lower triangle re-negated. Reduces back to
/// the input.
VectorForm lift_form(const VectorForm& form, uint32_t r);

/// Element (a, b) of the ring S = A + B built on the form: a in R^n,
/// b in B = R^k, with B S = S B = 0 and e_i e_j = phi(e_i, e_j) for i < j.
struct NilRingElement {
    Vec a, b;
    bool operator==(const NilRingElement&) const = default;
};

/// 1 + s, an element of the group G = 1 + S.
struct GroupElement {
    NilRingElement s;
    bool operator==(const GroupElement&) const = default;
};

NilRingElement ring_zero(const VectorForm& form);
NilRingElement ring_basis_a(const VectorForm& form, uint32_t i);
NilRingElement ring_basis_b(const VectorForm& form, uint32_t c);
NilRingElement ring_add(const NilRingElement& s, const NilRingElement& t, const VectorForm& form);
NilRingElement ring_scale(const NilRingElement& s, uint64_t c, const VectorForm& form);

/// Products land in B: the a-part vanishes and the b-part is the strict
/// upper-triangle evaluation of the form on the a-parts.
NilRingElement ring_mul(const NilRingElement& s, const NilRingElement& t, const VectorForm& form);

GroupElement group_identity(const VectorForm& form);
/// (1+s)(1+t) = 1 + s + t + st.
GroupElement group_mul(const GroupElement& g, const GroupElement& h, const VectorForm& form);
/// (1+s)^-1 = 1 - s + s^2, exact because s^3 = 0.
GroupElement group_inv(const GroupElement& g, const VectorForm& form);
/// Computed as g^-1 h^-1 g h and asserted equal to 1 + st - ts; central.
GroupElement group_commutator(const GroupElement& g, const GroupElement& h,
                              const VectorForm& form);
/// Closed form 1 + m s + C(m,2) s^2, with the binomial taken in Z first.
GroupElement group_pow(const GroupElement& g, uint64_t m, const VectorForm& form);

/// Entry-wise reduction mod p; a group homomorphism onto the r = 1 group.
GroupElement reduce_mod_p(const GroupElement& g, const VectorForm& form);

/// Every 1 + e_i has order exactly p^r modulo N = 1 + B and the images
/// commute mod N, so G/N is C_{p^r}^n. Verified mechanically.
bool quotient_type_check(const VectorForm& form);

} // namespace pgrl
