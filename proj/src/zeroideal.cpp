#include "pgrl/zeroideal.hpp"

namespace pgrl {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw InternalInvariantViolation(what);
}

// The map a -> a(x) on the current ideal, in its canonical basis: an
// n x dim matrix whose column t is basis[t] applied to x = e_{x_index},
// i.e. column x_index of basis[t].
Matrix phi_x_matrix(const MatAlgebra& alg, uint32_t x_index) {
    const uint32_t n = alg.matrix_size();
    Matrix phi(alg.modulus(), n, alg.dim());
    for (uint32_t t = 0; t < alg.dim(); ++t) {
        for (uint32_t r = 0; r < n; ++r) phi.set(r, t, alg.basis()[t].at(r, x_index));
    }
    return phi;
}

} // namespace

ZeroIdealResult extract_zero_ideal(const MatAlgebra& alg) {
    if (!is_commutative(alg)) {
        throw NonCommutativeInput("extract_zero_ideal needs a commutative algebra");
    }
    if (!span_is_mult_closed(alg.vectorized(), alg.modulus(), alg.matrix_size())) {
        throw NotClosedInput("extract_zero_ideal needs a multiplication-closed span");
    }

    const uint32_t n = alg.matrix_size();
    const uint64_t p = alg.modulus();
    const uint32_t k = common_kernel(alg).dim();

    ZeroIdealCertificate cert{{}, alg, k, 0};
    MatAlgebra current = alg;

    for (uint32_t round = 0;; ++round) {
        require(round <= n + 1, "extraction failed to terminate within n+1 rounds");

        Subspace sq_kernel = common_kernel(algebra_square(current));
        if (sq_kernel.is_full()) break;

        // Smallest standard basis vector outside ker(current^2); one exists
        // because that kernel is a proper subspace.
        uint32_t x_index = n;
        for (uint32_t j = 0; j < n; ++j) {
            Vec e(n, 0);
            e[j] = 1;
            if (!sq_kernel.contains(e)) {
                x_index = j;
                break;
            }
        }
        require(x_index < n, "proper subspace contains every standard basis vector");

        Vec x(n, 0);
        x[x_index] = 1;

        Subspace u = common_kernel(current);           // U_i
        Subspace v = image_of_vector(current, x);      // V_i = current(x)
        Subspace w = subspace_intersect(u, v);
        uint32_t m = codim(w, v);
        require(m >= 1, "chosen x must make current(x) escape the kernel");

        uint32_t l = alg.dim() - current.dim();
        cert.steps.push_back({round, l, x_index, m, u.dim()});

        require(u.dim() >= l + k, "kernel dimension must dominate l + k");

        Subspace coeff_preimage = preimage(phi_x_matrix(current, x_index), w);
        std::vector<Vec> next_rows;
        next_rows.reserve(coeff_preimage.dim());
        for (uint32_t r = 0; r < coeff_preimage.dim(); ++r) {
            Vec c = coeff_preimage.basis_row(r);
            Vec acc(static_cast<size_t>(n) * n, 0);
            for (uint32_t t = 0; t < current.dim(); ++t) {
                if (c[t] == 0) continue;
                const Vec& b = current.basis()[t].entries();
                for (size_t i = 0; i < acc.size(); ++i) {
                    acc[i] = static_cast<uint32_t>((acc[i] + static_cast<uint64_t>(c[t]) * b[i]) % p);
                }
            }
            next_rows.push_back(std::move(acc));
        }
        Subspace next_span = Subspace::span_of(p, n * n, next_rows);
        require(span_is_mult_closed(next_span, p, n), "shrunken ideal span must stay closed");
        MatAlgebra next = algebra_from_subspace_unchecked(p, n, next_span);

        require(current.dim() - next.dim() == m, "codim of the shrink step must equal m");

        // Both the old kernel and current(x) are killed by the next ideal.
        Subspace grown_kernel = common_kernel(next);
        require(grown_kernel.contains(subspace_sum(u, v)),
                "U_i + V_i must land in the kernel of the next ideal");
        require(grown_kernel.dim() >= u.dim() + m, "kernel must grow by at least m");

        current = std::move(next);
    }

    cert.output_basis = current;
    cert.final_codim = alg.dim() - current.dim();

    // Output postconditions; all violations are bugs.
    require(is_ideal(current, alg), "output must be an ideal of the input");
    require(algebra_square(current).dim() == 0, "output must square to zero");
    require(cert.final_codim + k <= n, "codimension bound n - k violated");
    require(cert.steps.size() <= static_cast<size_t>(n - k) + 1, "too many rounds recorded");

    return {current, std::move(cert)};
}

bool verify_certificate(const MatAlgebra& alg, const ZeroIdealCertificate& cert) {
    const uint32_t n = alg.matrix_size();
    if (!is_commutative(alg)) return false;
    if (cert.k != common_kernel(alg).dim()) return false;

    const MatAlgebra& b = cert.output_basis;
    if (b.modulus() != alg.modulus() || b.matrix_size() != n) return false;
    if (!is_ideal(b, alg)) return false;
    if (algebra_square(b).dim() != 0) return false;

    if (alg.dim() - b.dim() != cert.final_codim) return false;
    if (cert.final_codim + cert.k > n) return false;
    if (cert.steps.size() > static_cast<size_t>(n - cert.k) + 1) return false;

    // The step chain: l starts at 0, advances by m >= 1 each round, and ends
    // at the achieved codimension; kernel dims grow in lockstep.
    uint32_t l = 0;
    for (size_t i = 0; i < cert.steps.size(); ++i) {
        const StepRecord& s = cert.steps[i];
        if (s.index != i) return false;
        if (s.l != l) return false;
        if (s.m < 1) return false;
        if (s.x_index >= n) return false;
        if (s.dim_ker < s.l + cert.k || s.dim_ker > n) return false;
        if (i + 1 < cert.steps.size() && cert.steps[i + 1].dim_ker < s.dim_ker + s.m) return false;
        l += s.m;
        if (l + cert.k > n) return false;
    }
    if (l != cert.final_codim) return false;

    // The final ideal's kernel carries everything accumulated on the way.
    if (common_kernel(b).dim() < cert.final_codim + cert.k) return false;

    return true;
}

} // namespace pgrl
