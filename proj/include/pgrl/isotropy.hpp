#pragma once

#include <map>
#include <optional>

#include "pgrl/nilring.hpp"
#include "pgrl/subspace.hpp"

namespace pgrl {

/// Full alternating evaluation phi(x, y): component c is
/// sum_{i,j} x_i y_j M_c[i][j] over the whole matrix. Works over any p^r.
Vec form_eval(const VectorForm& form, const Vec& x, const Vec& y);

/// True iff the form vanishes on every basis pair of w (prime-field forms).
bool is_totally_isotropic(const VectorForm& form, const Subspace& w);

struct IsotropicResult {
    uint32_t dim = 0;
    Subspace witness;
};

/// Maximum dimension of a totally isotropic subspace, by DFS over partial
/// isotropic bases with canonical-subspace dedup; candidate extension
/// vectors are taken lexicographically. Requires p^n <= 2^24.
IsotropicResult max_isotropic_dim(const VectorForm& form);

struct FormSearchReport {
    uint32_t n = 0, k = 0;
    uint64_t p = 2;
    uint64_t trials_requested = 0;
    uint64_t trials_run = 0;
    uint64_t seed = 0;
    bool success = false; // some sampled form has no k-dim isotropic subspace
    std::optional<uint32_t> best_dim;
    std::optional<VectorForm> best_form;
    std::map<uint32_t, uint64_t> dim_histogram; // max isotropic dim -> count
};

/// Sample `trials` random alternating forms (trial index and seed fully
/// determine each sample) and hunt for one with max isotropic dimension
/// below k. Stops at the first success unless run_all_trials is set.
FormSearchReport random_form_search(uint32_t n, uint32_t k, PrimeModulus p, uint64_t trials,
                                    uint64_t seed, bool run_all_trials = false);

} // namespace pgrl
