#include "pgrl/subspace.hpp"

#include <algorithm>

namespace pgrl {

Subspace::Subspace(Matrix basis, std::vector<uint32_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::span_of(const Matrix& spanning) {
    std::vector<Vec> rows;
    rows.reserve(spanning.rows());
    for (uint32_t r = 0; r < spanning.rows(); ++r) rows.push_back(spanning.row(r));
    return span_of(spanning.modulus(), spanning.cols(), rows);
}

Subspace Subspace::span_of(uint64_t p, uint32_t ambient, const std::vector<Vec>& spanning) {
    std::vector<Vec> rows = spanning;
    for (const Vec& r : rows) {
        if (r.size() != ambient) throw ShapeError("spanning row length mismatch");
    }
    std::vector<uint32_t> pivots = eliminate_rows(rows, ambient, p);
    return Subspace(Matrix::from_rows(p, rows, ambient), std::move(pivots));
}

Subspace Subspace::zero(uint64_t p, uint32_t ambient) {
    return span_of(p, ambient, {});
}

Subspace Subspace::full(uint64_t p, uint32_t ambient) {
    return Subspace::span_of(Matrix::identity(p, ambient));
}

bool Subspace::contains(std::span<const uint32_t> v) const {
    if (v.size() != ambient_dim()) throw ShapeError("vector length mismatch");
    Vec w(v.begin(), v.end());
    std::vector<Vec> rows;
    rows.reserve(dim());
    for (uint32_t r = 0; r < dim(); ++r) rows.push_back(basis_.row(r));
    reduce_against(w, rows, pivots_, modulus());
    return std::all_of(w.begin(), w.end(), [](uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim() || other.modulus() != modulus()) {
        throw ShapeError("subspace ambient/modulus mismatch");
    }
    for (uint32_t r = 0; r < other.dim(); ++r) {
        if (!contains(other.basis_row(r))) return false;
    }
    return true;
}

bool subspace_contains(const Subspace& s, std::span<const uint32_t> v) {
    return s.contains(v);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.modulus() != b.modulus()) {
        throw ShapeError("subspace ambient/modulus mismatch");
    }
    std::vector<Vec> rows;
    rows.reserve(a.dim() + b.dim());
    for (uint32_t r = 0; r < a.dim(); ++r) rows.push_back(a.basis_row(r));
    for (uint32_t r = 0; r < b.dim(); ++r) rows.push_back(b.basis_row(r));
    return Subspace::span_of(a.modulus(), a.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim() || a.modulus() != b.modulus()) {
        throw ShapeError("subspace ambient/modulus mismatch");
    }
    const uint32_t n = a.ambient_dim();
    const uint64_t p = a.modulus();

    std::vector<Vec> rows;
    rows.reserve(a.dim() + b.dim());
    for (uint32_t r = 0; r < a.dim(); ++r) {
        Vec u = a.basis_row(r);
        Vec z(2 * n, 0);
        std::copy(u.begin(), u.end(), z.begin());
        std::copy(u.begin(), u.end(), z.begin() + n);
        rows.push_back(std::move(z));
    }
    for (uint32_t r = 0; r < b.dim(); ++r) {
        Vec v = b.basis_row(r);
        Vec z(2 * n, 0);
        std::copy(v.begin(), v.end(), z.begin());
        rows.push_back(std::move(z));
    }
    // Doubled width may exceed the public GF(2) cap; allow it internally.
    eliminate_rows(rows, 2 * n, p, 2 * kMaxDim);

    std::vector<Vec> inter;
    for (const Vec& z : rows) {
        bool left_zero = std::all_of(z.begin(), z.begin() + n, [](uint32_t x) { return x == 0; });
        if (left_zero) inter.emplace_back(z.begin() + n, z.end());
    }
    return Subspace::span_of(p, n, inter);
}

uint32_t codim(const Subspace& inner, const Subspace& outer) {
    if (!outer.contains(inner)) {
        throw NotASubspace("codim: inner is not contained in outer");
    }
    return outer.dim() - inner.dim();
}

Subspace annihilator(const Subspace& s) {
    // u is annihilated by s iff basis(s) . u = 0.
    return kernel(s.basis());
}

Subspace kernel(const Matrix& m) {
    RrefResult rr = rref(m);
    const uint32_t n = m.cols();
    const uint64_t p = m.modulus();

    std::vector<bool> is_pivot(n, false);
    for (uint32_t c : rr.pivots) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (uint32_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n, 0);
        v[f] = 1;
        for (uint32_t t = 0; t < rr.rank; ++t) {
            uint32_t entry = rr.rref.at(t, f);
            v[rr.pivots[t]] = static_cast<uint32_t>((p - entry) % p);
        }
        basis.push_back(std::move(v));
    }
    return Subspace::span_of(p, n, basis);
}

Subspace preimage(const Matrix& m, const Subspace& w) {
    if (w.ambient_dim() != m.rows()) {
        throw ShapeError("preimage: subspace ambient must equal matrix row count");
    }
    if (w.modulus() != m.modulus()) throw ShapeError("preimage: modulus mismatch");
    // m v lies in w iff D (m v) = 0 where the rows of D span the annihilator
    // of w, so the preimage is ker(D m).
    Subspace d = annihilator(w);
    if (d.dim() == 0) return Subspace::full(m.modulus(), m.cols());
    return kernel(d.basis() * m);
}

void enumerate_vectors(const Subspace& s, const std::function<void(const Vec&)>& fn) {
    const uint64_t p = s.modulus();
    const uint32_t d = s.dim(), n = s.ambient_dim();
    Vec coeff(d, 0);
    Vec v(n, 0);
    while (true) {
        std::fill(v.begin(), v.end(), 0);
        for (uint32_t t = 0; t < d; ++t) {
            if (coeff[t] == 0) continue;
            for (uint32_t c = 0; c < n; ++c) {
                v[c] = static_cast<uint32_t>((v[c] + static_cast<uint64_t>(coeff[t]) * s.basis().at(t, c)) % p);
            }
        }
        fn(v);
        uint32_t t = 0;
        while (t < d && coeff[t] + 1 == p) coeff[t++] = 0;
        if (t == d) break;
        ++coeff[t];
    }
}

namespace {

void enumerate_pivot_patterns(uint32_t ambient, uint32_t r,
                              const std::function<void(const std::vector<uint32_t>&)>& fn) {
    std::vector<uint32_t> pattern(r);
    std::function<void(uint32_t, uint32_t)> rec = [&](uint32_t idx, uint32_t start) {
        if (idx == r) {
            fn(pattern);
            return;
        }
        for (uint32_t c = start; c + (r - idx) <= ambient; ++c) {
            pattern[idx] = c;
            rec(idx + 1, c + 1);
        }
    };
    rec(0, 0);
}

} // namespace

void enumerate_subspaces(uint64_t p, uint32_t ambient, uint32_t r,
                         const std::function<void(const Subspace&)>& fn) {
    if (r > ambient) return;
    if (r == 0) {
        fn(Subspace::zero(p, ambient));
        return;
    }
    enumerate_pivot_patterns(ambient, r, [&](const std::vector<uint32_t>& pivots) {
        std::vector<bool> is_pivot(ambient, false);
        for (uint32_t c : pivots) is_pivot[c] = true;

        // Free positions: (row, col) with col > pivot(row) and col not a pivot.
        std::vector<std::pair<uint32_t, uint32_t>> free_pos;
        for (uint32_t t = 0; t < r; ++t) {
            for (uint32_t c = pivots[t] + 1; c < ambient; ++c) {
                if (!is_pivot[c]) free_pos.emplace_back(t, c);
            }
        }

        std::vector<Vec> rows(r, Vec(ambient, 0));
        for (uint32_t t = 0; t < r; ++t) rows[t][pivots[t]] = 1;

        Vec odo(free_pos.size(), 0);
        while (true) {
            for (size_t i = 0; i < free_pos.size(); ++i) {
                rows[free_pos[i].first][free_pos[i].second] = odo[i];
            }
            fn(Subspace::span_of(p, ambient, rows));
            size_t i = 0;
            while (i < odo.size() && odo[i] + 1 == p) odo[i++] = 0;
            if (i == odo.size()) break;
            ++odo[i];
        }
    });
}

void enumerate_all_subspaces(uint64_t p, uint32_t ambient,
                             const std::function<void(const Subspace&)>& fn) {
    for (uint32_t r = 0; r <= ambient; ++r) enumerate_subspaces(p, ambient, r, fn);
}

} // namespace pgrl
