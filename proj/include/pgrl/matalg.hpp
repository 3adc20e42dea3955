#pragma once

#include <vector>

#include "pgrl/subspace.hpp"

namespace pgrl {

/// Multiplicatively closed subspace of n x n matrices over F_p, stored as a
/// canonical basis: the vectorizations (row-major, length n^2) of the basis
/// matrices form an RREF basis. Construction validates closure.
class MatAlgebra {
public:
    /// Wrap a spanning set as an algebra; throws NotClosedInput if the span
    /// is not closed under multiplication.
    static MatAlgebra from_span(uint64_t p, uint32_t n, const std::vector<Matrix>& spanning);
    static MatAlgebra zero(uint64_t p, uint32_t n);

    uint64_t modulus() const { return p_; }
    uint32_t matrix_size() const { return n_; }
    uint32_t dim() const { return static_cast<uint32_t>(basis_.size()); }
    bool unital() const { return unital_; }
    const std::vector<Matrix>& basis() const { return basis_; }
    /// dim x n^2 RREF matrix of vectorized basis elements.
    const Subspace& vectorized() const { return vec_span_; }

    bool contains(const Matrix& m) const;
    bool contains_span(const MatAlgebra& sub) const;

    bool operator==(const MatAlgebra& o) const {
        return p_ == o.p_ && n_ == o.n_ && vec_span_ == o.vec_span_;
    }

private:
    MatAlgebra(uint64_t p, uint32_t n, std::vector<Matrix> basis, Subspace vec_span);
    friend MatAlgebra algebra_from_subspace_unchecked(uint64_t, uint32_t, const Subspace&);

    uint64_t p_;
    uint32_t n_;
    std::vector<Matrix> basis_;
    Subspace vec_span_;
    bool unital_ = false;
};

Vec vectorize(const Matrix& m);
Matrix unvectorize(uint64_t p, uint32_t n, const Vec& v);

// Internal: wrap an already-reduced vectorized span without the closure
// check. Callers must know the span is closed (ideals, product spans).
MatAlgebra algebra_from_subspace_unchecked(uint64_t p, uint32_t n, const Subspace& vec_span);

bool span_is_mult_closed(const Subspace& vec_span, uint64_t p, uint32_t n);

/// Smallest multiplication-closed subspace containing the generators
/// (plus the identity when requested), by product-append-reduce fixpoint.
MatAlgebra generate_algebra(const std::vector<Matrix>& gens, bool include_identity);

bool is_commutative(const MatAlgebra& alg);

/// Span of all pairwise basis products. For closed spans this is itself
/// closed; that is asserted, not re-closed.
MatAlgebra algebra_square(const MatAlgebra& alg);

/// Intersection of the kernels of all basis elements.
Subspace common_kernel(const MatAlgebra& alg);

/// Span of { b x : b basis element }, which equals the full orbit space
/// { a x : a in alg } by linearity.
Subspace image_of_vector(const MatAlgebra& alg, const Vec& x);

bool is_ideal(const MatAlgebra& sub, const MatAlgebra& alg);

} // namespace pgrl
