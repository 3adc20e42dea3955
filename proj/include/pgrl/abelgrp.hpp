#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pgrl/matalg.hpp"
#include "pgrl/matrix.hpp"

namespace pgrl {

/// Enumeration cap for matrix groups: PGRL_MAX_ENUM when set, 2^20 otherwise.
uint64_t default_enumeration_cap();

/// A finite subgroup of GL(n, p) given by generators. Elements are
/// enumerated on demand by breadth-first closure (deterministic order) and
/// cached; after population the value is immutable and freely shareable.
class FiniteMatrixGroup {
public:
    FiniteMatrixGroup(PrimeModulus p, std::vector<Matrix> generators,
                      uint64_t cap = default_enumeration_cap());

    /// Wrap a set already known to be closed under multiplication (e.g. the
    /// unit group of an algebra, or a filtered subgroup of an abelian group).
    static FiniteMatrixGroup from_elements(PrimeModulus p, uint32_t n,
                                           std::vector<Matrix> elements,
                                           std::vector<Matrix> generators,
                                           uint64_t cap = default_enumeration_cap());

    uint64_t prime() const { return p_; }
    uint32_t degree() const { return n_; }
    const std::vector<Matrix>& generators() const { return gens_; }
    uint64_t cap() const { return cap_; }

    /// Breadth-first closure of the generators; throws CapExceeded.
    const std::vector<Matrix>& elements() const;
    uint64_t order() const { return elements().size(); }
    bool contains(const Matrix& m) const;

    bool is_abelian() const;
    /// Smallest m >= 1 with g^m = 1, by divisor descent from the group order.
    uint64_t element_order(const Matrix& g) const;
    uint64_t exponent() const;
    bool is_elementary_abelian() const;

    bool same_element_set(const FiniteMatrixGroup& other) const;
    bool contains_group(const FiniteMatrixGroup& sub) const;

private:
    struct Cache;
    uint64_t p_;
    uint32_t n_;
    std::vector<Matrix> gens_;
    uint64_t cap_;
    std::shared_ptr<Cache> cache_;

    void ensure_enumerated() const;
};

// --- abelian-only operations -------------------------------------------

/// {x : x^(p^t) = 1} for abelian groups; throws NonAbelian otherwise.
FiniteMatrixGroup omega_t(const FiniteMatrixGroup& g, uint32_t t);
/// {x^(p^t) : x in G} for abelian groups.
FiniteMatrixGroup mho_t(const FiniteMatrixGroup& g, uint32_t t);
/// Elements of p-power order: the Sylow p-subgroup of a finite abelian group.
FiniteMatrixGroup o_p_part(const FiniteMatrixGroup& g);

struct OmegaIndexResult {
    uint64_t index = 0;
    bool bound_ok = false;
};
/// index = |A : Omega_1(O_p(A))| together with the p^n comparison.
OmegaIndexResult omega_index_check(const FiniteMatrixGroup& g);

/// Invariant-factor multiset of a finite abelian group, derived from
/// element-order counts (exact for finite abelian groups).
struct FiniteAbelianType {
    // (cyclic factor order q^e, multiplicity), ascending by factor order.
    std::vector<std::pair<uint64_t, uint32_t>> factors;

    uint64_t order() const;
    /// Minimal generator count: the max factor count over the primes involved.
    uint32_t min_generators() const;
    std::string to_string() const;
    bool operator==(const FiniteAbelianType&) const = default;
};

FiniteAbelianType abelian_type(const FiniteMatrixGroup& g);

/// Number of invariant factors of order >= p^2 for an abelian p-group,
/// i.e. d of its Frattini subgroup.
uint32_t d_phi(const FiniteMatrixGroup& g);

/// |P : w(P)| for the word w = x^(p^2) [y, z]: the order of the largest
/// abelian quotient of P of exponent at most p^2.
uint64_t verbal_w_index(const FiniteMatrixGroup& g);

/// All invertible elements of a commutative unital algebra's span.
FiniteMatrixGroup unit_group_of_algebra(const MatAlgebra& alg,
                                        uint64_t cap = default_enumeration_cap());

/// k commuting block-diagonal generators, each a unipotent Jordan block of
/// size p+1 acting on its own block: a copy of C_{p^2}^k inside GL(k(p+1), p).
FiniteMatrixGroup jordan_block_family(uint32_t k, PrimeModulus p);

// --- general p-group machinery ------------------------------------------

Matrix group_commutator(const Matrix& a, const Matrix& b);

/// Subgroup generated by `seeds` closed under conjugation by g's generators.
FiniteMatrixGroup normal_closure(const FiniteMatrixGroup& g, std::vector<Matrix> seeds);

/// G' Gp: normal closure of the pairwise generator commutators and the
/// p-th generator powers; the kernel of the largest elementary abelian
/// quotient of a p-group.
FiniteMatrixGroup frattini_subgroup(const FiniteMatrixGroup& g);

FiniteMatrixGroup derived_subgroup(const FiniteMatrixGroup& g);
FiniteMatrixGroup center(const FiniteMatrixGroup& g);
/// Subgroup generated by all p-th powers (uses full enumeration).
FiniteMatrixGroup mho1_subgroup(const FiniteMatrixGroup& g);
/// Elements commuting with every generator of `sub`.
FiniteMatrixGroup centralizer(const FiniteMatrixGroup& g, const FiniteMatrixGroup& sub);

/// d(G) = log_p |G : Phi(G)| for a p-group of prime-power order.
uint32_t min_generator_count(const FiniteMatrixGroup& g);

} // namespace pgrl
