#pragma once

#include <functional>
#include <span>

#include "pgrl/matrix.hpp"

namespace pgrl {

/// Subspace of F_p^n held as a canonical RREF basis with strictly
/// increasing pivot columns. Equal subspaces compare bit-identical.
class Subspace {
public:
    /// Canonicalize the row space of `spanning` (rows need not be independent).
    static Subspace span_of(const Matrix& spanning);
    static Subspace span_of(uint64_t p, uint32_t ambient, const std::vector<Vec>& rows);
    static Subspace zero(uint64_t p, uint32_t ambient);
    static Subspace full(uint64_t p, uint32_t ambient);

    uint32_t dim() const { return basis_.rows(); }
    uint32_t ambient_dim() const { return basis_.cols(); }
    uint64_t modulus() const { return basis_.modulus(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<uint32_t>& pivots() const { return pivots_; }
    Vec basis_row(uint32_t i) const { return basis_.row(i); }

    bool contains(std::span<const uint32_t> v) const;
    bool contains(const Subspace& other) const;
    bool is_full() const { return dim() == ambient_dim(); }
    bool is_zero() const { return dim() == 0; }

    bool operator==(const Subspace& o) const = default;

private:
    explicit Subspace(Matrix basis, std::vector<uint32_t> pivots);
    Matrix basis_;
    std::vector<uint32_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// Zassenhaus: eliminate [u|u]-rows of a stacked on [v|0]-rows of b; the
/// right halves of rows with zero left half span the intersection.
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& s, std::span<const uint32_t> v);
/// dim(outer) - dim(inner); throws NotASubspace unless inner <= outer.
uint32_t codim(const Subspace& inner, const Subspace& outer);

/// {u : u . w = 0 for all w in s} under the standard dot product.
Subspace annihilator(const Subspace& s);

/// {v : m v = 0}, canonical.
Subspace kernel(const Matrix& m);
/// {v : m v in w}, canonical; always contains kernel(m).
Subspace preimage(const Matrix& m, const Subspace& w);

/// All vectors of s (p^dim of them), in coefficient-odometer order.
void enumerate_vectors(const Subspace& s, const std::function<void(const Vec&)>& fn);

/// All dim-`r` subspaces of F_p^ambient, one canonical RREF basis each,
/// enumerated by pivot pattern then free-entry odometer.
void enumerate_subspaces(uint64_t p, uint32_t ambient, uint32_t r,
                         const std::function<void(const Subspace&)>& fn);
void enumerate_all_subspaces(uint64_t p, uint32_t ambient,
                             const std::function<void(const Subspace&)>& fn);

} // namespace pgrl
