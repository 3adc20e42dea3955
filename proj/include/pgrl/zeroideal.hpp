#pragma once

#include "pgrl/matalg.hpp"

namespace pgrl {

/// One shrink step of the extraction loop. l is the codimension of the
/// current ideal in the input algebra before the step, x_index the chosen
/// standard basis vector, m the codimension of ker a U cap V in V, and
/// dim_ker the kernel dimension of the current ideal before the step.
struct StepRecord {
    uint32_t index = 0;
    uint32_t l = 0;
    uint32_t x_index = 0;
    uint32_t m = 0;
    uint32_t dim_ker = 0;

    bool operator==(const StepRecord&) const = default;
};

/// Machine-checkable trace of a run: the recorded steps, the output ideal,
/// the input's kernel dimension k and the achieved codimension, which is
/// guaranteed to be at most n - k.
struct ZeroIdealCertificate {
    std::vector<StepRecord> steps;
    MatAlgebra output_basis;
    uint32_t k = 0;
    uint32_t final_codim = 0;
};

struct ZeroIdealResult {
    MatAlgebra ideal;
    ZeroIdealCertificate certificate;
};

/// Shrink a commutative multiplication-closed algebra on F_p^n to an ideal
/// whose square is zero, with codimension at most n - dim ker(alg), in at
/// most n - k + 1 rounds. Deterministic: the smallest-index standard basis
/// vector outside ker(alg_i^2) is chosen at every step.
ZeroIdealResult extract_zero_ideal(const MatAlgebra& alg);

/// Re-check every step invariant and output postcondition of a certificate
/// against the input algebra, without re-running the extraction.
bool verify_certificate(const MatAlgebra& alg, const ZeroIdealCertificate& cert);

} // namespace pgrl
