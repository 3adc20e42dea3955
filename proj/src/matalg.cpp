#include "pgrl/matalg.hpp"

#include <algorithm>

namespace pgrl {

Vec vectorize(const Matrix& m) { return m.entries(); }

Matrix unvectorize(uint64_t p, uint32_t n, const Vec& v) {
    if (v.size() != static_cast<size_t>(n) * n) throw ShapeError("vectorization length mismatch");
    Matrix m(p, n, n);
    for (uint32_t r = 0; r < n; ++r) {
        for (uint32_t c = 0; c < n; ++c) m.set(r, c, v[static_cast<size_t>(r) * n + c]);
    }
    return m;
}

MatAlgebra::MatAlgebra(uint64_t p, uint32_t n, std::vector<Matrix> basis, Subspace vec_span)
    : p_(p), n_(n), basis_(std::move(basis)), vec_span_(std::move(vec_span)) {
    unital_ = vec_span_.contains(vectorize(Matrix::identity(p_, n_)));
}

namespace {

Subspace span_of_matrices(uint64_t p, uint32_t n, const std::vector<Matrix>& mats) {
    std::vector<Vec> rows;
    rows.reserve(mats.size());
    for (const Matrix& m : mats) {
        if (m.modulus() != p || m.rows() != n || m.cols() != n) {
            throw ShapeError("algebra element shape/modulus mismatch");
        }
        rows.push_back(vectorize(m));
    }
    return Subspace::span_of(p, n * n, rows);
}

std::vector<Matrix> basis_matrices(uint64_t p, uint32_t n, const Subspace& vec_span) {
    std::vector<Matrix> out;
    out.reserve(vec_span.dim());
    for (uint32_t r = 0; r < vec_span.dim(); ++r) {
        out.push_back(unvectorize(p, n, vec_span.basis_row(r)));
    }
    return out;
}

} // namespace

bool span_is_mult_closed(const Subspace& vec_span, uint64_t p, uint32_t n) {
    std::vector<Matrix> basis = basis_matrices(p, n, vec_span);
    for (const Matrix& a : basis) {
        for (const Matrix& b : basis) {
            if (!vec_span.contains(vectorize(a * b))) return false;
        }
    }
    return true;
}

MatAlgebra algebra_from_subspace_unchecked(uint64_t p, uint32_t n, const Subspace& vec_span) {
    return MatAlgebra(p, n, basis_matrices(p, n, vec_span), vec_span);
}

MatAlgebra MatAlgebra::from_span(uint64_t p, uint32_t n, const std::vector<Matrix>& spanning) {
    Subspace span = span_of_matrices(p, n, spanning);
    if (!span_is_mult_closed(span, p, n)) {
        throw NotClosedInput("span is not closed under matrix multiplication");
    }
    return algebra_from_subspace_unchecked(p, n, span);
}

MatAlgebra MatAlgebra::zero(uint64_t p, uint32_t n) {
    return algebra_from_subspace_unchecked(p, n, Subspace::zero(p, n * n));
}

bool MatAlgebra::contains(const Matrix& m) const {
    if (m.modulus() != p_ || m.rows() != n_ || m.cols() != n_) {
        throw ShapeError("membership test shape/modulus mismatch");
    }
    return vec_span_.contains(vectorize(m));
}

bool MatAlgebra::contains_span(const MatAlgebra& sub) const {
    for (const Matrix& b : sub.basis_) {
        if (!contains(b)) return false;
    }
    return true;
}

MatAlgebra generate_algebra(const std::vector<Matrix>& gens, bool include_identity) {
    if (gens.empty() && !include_identity) {
        throw ShapeError("generate_algebra needs at least one generator or the identity flag");
    }
    uint64_t p = gens.empty() ? 0 : gens[0].modulus();
    uint32_t n = gens.empty() ? 0 : gens[0].rows();
    for (const Matrix& g : gens) {
        if (!g.is_square()) throw ShapeError("generators must be square");
        if (g.modulus() != p || g.rows() != n) {
            throw ShapeError("generators must share size and modulus");
        }
    }
    if (gens.empty()) throw ShapeError("generate_algebra with identity only needs a sized generator");

    std::vector<Matrix> current = gens;
    if (include_identity) current.push_back(Matrix::identity(p, n));

    // Fixpoint: append all pairwise basis products, re-canonicalize, repeat
    // until the dimension stops growing. Dimensions stay <= n^2.
    Subspace span = span_of_matrices(p, n, current);
    while (true) {
        std::vector<Matrix> basis = basis_matrices(p, n, span);
        std::vector<Matrix> next = basis;
        for (const Matrix& a : basis) {
            for (const Matrix& b : basis) next.push_back(a * b);
        }
        Subspace grown = span_of_matrices(p, n, next);
        if (grown.dim() == span.dim()) break;
        span = std::move(grown);
    }
    return algebra_from_subspace_unchecked(p, n, span);
}

bool is_commutative(const MatAlgebra& alg) {
    const std::vector<Matrix>& basis = alg.basis();
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = i + 1; j < basis.size(); ++j) {
            if (!(basis[i] * basis[j] == basis[j] * basis[i])) return false;
        }
    }
    return true;
}

MatAlgebra algebra_square(const MatAlgebra& alg) {
    std::vector<Matrix> products;
    products.reserve(alg.dim() * alg.dim());
    for (const Matrix& a : alg.basis()) {
        for (const Matrix& b : alg.basis()) products.push_back(a * b);
    }
    Subspace span = Subspace::span_of(alg.modulus(), alg.matrix_size() * alg.matrix_size(),
                                      [&] {
                                          std::vector<Vec> rows;
                                          rows.reserve(products.size());
                                          for (const Matrix& m : products) rows.push_back(vectorize(m));
                                          return rows;
                                      }());
    if (!span_is_mult_closed(span, alg.modulus(), alg.matrix_size())) {
        throw InternalInvariantViolation(
            "product span of a closed algebra must itself be closed");
    }
    return algebra_from_subspace_unchecked(alg.modulus(), alg.matrix_size(), span);
}

Subspace common_kernel(const MatAlgebra& alg) {
    Subspace k = Subspace::full(alg.modulus(), alg.matrix_size());
    for (const Matrix& b : alg.basis()) {
        k = subspace_intersect(k, kernel(b));
        if (k.is_zero()) break;
    }
    return k;
}

Subspace image_of_vector(const MatAlgebra& alg, const Vec& x) {
    if (x.size() != alg.matrix_size()) throw ShapeError("vector length mismatch");
    std::vector<Vec> rows;
    rows.reserve(alg.dim());
    for (const Matrix& b : alg.basis()) rows.push_back(b.apply(x));
    return Subspace::span_of(alg.modulus(), alg.matrix_size(), rows);
}

bool is_ideal(const MatAlgebra& sub, const MatAlgebra& alg) {
    if (sub.modulus() != alg.modulus() || sub.matrix_size() != alg.matrix_size()) {
        throw ShapeError("ideal test shape/modulus mismatch");
    }
    if (!alg.contains_span(sub)) return false;
    for (const Matrix& a : alg.basis()) {
        for (const Matrix& b : sub.basis()) {
            if (!sub.contains(a * b) || !sub.contains(b * a)) return false;
        }
    }
    return true;
}

} // namespace pgrl
