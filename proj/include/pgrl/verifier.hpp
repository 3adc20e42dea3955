#pragma once

#include <map>

#include "pgrl/abelgrp.hpp"
#include "pgrl/bounds.hpp"

namespace pgrl {

/// One expectation line: what the formula predicts vs what enumeration
/// measured. `ok` means equality for expect_eq lines and measured <= expected
/// for expect_le lines.
struct Expectation {
    std::string name;
    int64_t expected = 0;
    int64_t measured = 0;
    bool ok = false;
};

/// Machine-readable record a builder emits next to its group, so expected
/// formulas can be diffed against measurements.
struct BuilderReport {
    std::string builder;
    std::map<std::string, int64_t> params;
    std::vector<Expectation> checks;
    std::map<std::string, int64_t> measurements; // reported without assertion

    void expect_eq(const std::string& name, int64_t expected, int64_t measured);
    void expect_le(const std::string& name, int64_t measured, int64_t bound);
    void expect_true(const std::string& name, bool measured);
    void merge(const BuilderReport& other);
    bool ok() const;
};

struct SemidirectResult {
    FiniteMatrixGroup group;
    FiniteMatrixGroup v;    // the translated vector space, rank-2m elementary abelian
    FiniteMatrixGroup v1h;  // the second maximal normal abelian subgroup
    BuilderReport report;
};

/// V x| H in GL(2m+1, p) with H the maps fixing V1 and V/V1 pointwise.
/// Both V and V1 x H come out self-centralizing, with d(V) = 2m and
/// d(V1 x H) = m^2 + m.
SemidirectResult build_example_semidirect(uint32_t m, PrimeModulus p);

struct PatternResult {
    FiniteMatrixGroup group;
    FiniteMatrixGroup frattini;
    BuilderReport report;
};

/// The unipotent pattern group on positions i <= ceil(n/2) <= j (1-based):
/// Phi(G) = G' = Z(G) is elementary abelian with
/// d = floor(n/2) (ceil(n/2) - 1).
PatternResult build_pattern_group(uint32_t n, PrimeModulus p);

struct SylowResult {
    uint32_t d_phi_value = 0;
    BuilderReport report;
};

/// d(Phi(UT(n, p))) by enumeration; asserted equal to 2n - 5 for n in {4,5}
/// and reported unasserted otherwise.
SylowResult sylow_frattini_check(uint32_t n, PrimeModulus p);

/// Dihedral evidence: in D16 every normal elementary abelian subgroup has
/// rank 1 while a rank-2 elementary abelian subgroup exists; in D16 x D16
/// the two Klein subgroups multiply to a rank-4 elementary abelian group,
/// the centers only to rank 2.
BuilderReport build_d16_power_evidence();

struct SmallGroupRanks {
    uint32_t r = 0;   // max d(A), A abelian
    uint32_t nr = 0;  // max d(A), A normal abelian
    uint32_t sr = 0;  // max d(H) over all subgroups
};

/// Exhaustive subgroup sweep of a group of prime-power order at most `cap`.
SmallGroupRanks small_group_ranks(const FiniteMatrixGroup& g, uint64_t cap = 512);

/// Every builder at its standard parameters, with the applicable rank
/// inequalities asserted on each constructed instance.
BuilderReport sanity_suite();

// Shared constructions.
FiniteMatrixGroup dihedral_group(uint32_t points); // D_{2 points} over F_2
FiniteMatrixGroup unitriangular_group(uint32_t n, PrimeModulus p);
FiniteMatrixGroup direct_product(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b);

} // namespace pgrl
