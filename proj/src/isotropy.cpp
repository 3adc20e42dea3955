#include "pgrl/isotropy.hpp"

#include <algorithm>
#include <set>

namespace pgrl {

Vec form_eval(const VectorForm& form, const Vec& x, const Vec& y) {
    if (x.size() != form.n || y.size() != form.n) {
        throw ShapeError("form_eval argument length mismatch");
    }
    Vec out(form.k, 0);
    for (uint32_t c = 0; c < form.k; ++c) {
        const Matrix& m = form.mats[c];
        uint64_t acc = 0;
        for (uint32_t i = 0; i < form.n; ++i) {
            if (x[i] == 0) continue;
            for (uint32_t j = 0; j < form.n; ++j) {
                acc = (acc + static_cast<uint64_t>(x[i]) * y[j] % form.modulus * m.at(i, j)) %
                      form.modulus;
            }
        }
        out[c] = static_cast<uint32_t>(acc);
    }
    return out;
}

namespace {

bool all_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

void require_prime_field(const VectorForm& form, const char* op) {
    if (form.r != 1) {
        throw ShapeError(std::string(op) + " works on prime-field forms (r = 1)");
    }
}

} // namespace

bool is_totally_isotropic(const VectorForm& form, const Subspace& w) {
    require_prime_field(form, "is_totally_isotropic");
    if (w.ambient_dim() != form.n || w.modulus() != form.p) {
        throw ShapeError("subspace does not match the form");
    }
    for (uint32_t i = 0; i < w.dim(); ++i) {
        for (uint32_t j = i + 1; j < w.dim(); ++j) {
            if (!all_zero(form_eval(form, w.basis_row(i), w.basis_row(j)))) return false;
        }
    }
    return true;
}

namespace {

struct IsotropicSearch {
    const VectorForm& form;
    uint32_t best_dim = 0;
    Subspace best_witness;
    std::set<std::pair<uint32_t, Vec>> visited; // (dim, flattened basis)

    explicit IsotropicSearch(const VectorForm& f)
        : form(f), best_witness(Subspace::zero(f.p, f.n)) {}

    std::pair<uint32_t, Vec> key(const Subspace& s) const {
        return {s.dim(), s.basis().entries()};
    }

    void dfs(const Subspace& current) {
        if (current.dim() > best_dim) {
            best_dim = current.dim();
            best_witness = current;
        }
        if (current.dim() == form.n) return;

        // Any isotropic extension vector must evaluate to zero against every
        // current basis vector in every component: a linear condition with
        // coefficient row b^T M_c.
        std::vector<Vec> constraint_rows;
        for (uint32_t t = 0; t < current.dim(); ++t) {
            Vec b = current.basis_row(t);
            for (uint32_t c = 0; c < form.k; ++c) {
                const Matrix& m = form.mats[c];
                Vec row(form.n, 0);
                for (uint32_t j = 0; j < form.n; ++j) {
                    uint64_t acc = 0;
                    for (uint32_t i = 0; i < form.n; ++i) {
                        acc = (acc + static_cast<uint64_t>(b[i]) * m.at(i, j)) % form.p;
                    }
                    row[j] = static_cast<uint32_t>(acc);
                }
                constraint_rows.push_back(std::move(row));
            }
        }
        Subspace candidates =
            constraint_rows.empty()
                ? Subspace::full(form.p, form.n)
                : kernel(Matrix::from_rows(form.p, constraint_rows, form.n));

        std::vector<Vec> exts;
        enumerate_vectors(candidates, [&](const Vec& v) {
            if (all_zero(v) || current.contains(v)) return;
            exts.push_back(v);
        });
        std::sort(exts.begin(), exts.end());

        for (const Vec& v : exts) {
            Subspace next = subspace_sum(current, Subspace::span_of(form.p, form.n, {v}));
            auto k = key(next);
            if (visited.contains(k)) continue;
            visited.insert(std::move(k));
            dfs(next);
        }
    }
};

} // namespace

IsotropicResult max_isotropic_dim(const VectorForm& form) {
    require_prime_field(form, "max_isotropic_dim");
    if (pow_sat(form.p, form.n) > (1u << 24)) {
        throw TooLarge("exhaustive isotropy search needs p^n <= 2^24");
    }
    IsotropicSearch search(form);
    search.dfs(Subspace::zero(form.p, form.n));
    return {search.best_dim, search.best_witness};
}

FormSearchReport random_form_search(uint32_t n, uint32_t k, PrimeModulus p, uint64_t trials,
                                    uint64_t seed, bool run_all_trials) {
    FormSearchReport report;
    report.n = n;
    report.k = k;
    report.p = p.p;
    report.trials_requested = trials;
    report.seed = seed;

    for (uint64_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(splitmix64(seed + 0x9e3779b97f4a7c15ULL * (t + 1)));
        VectorForm form = VectorForm::random(p, 1, n, k, rng);
        uint32_t dim = max_isotropic_dim(form).dim;
        ++report.trials_run;
        ++report.dim_histogram[dim];
        if (!report.best_dim || dim < *report.best_dim) {
            report.best_dim = dim;
            report.best_form = form;
        }
        if (dim < k) {
            report.success = true;
            if (!run_all_trials) break;
        }
    }
    return report;
}

} // namespace pgrl
