#include "pgrl/verifier.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace pgrl {

void BuilderReport::expect_eq(const std::string& name, int64_t expected, int64_t measured) {
    checks.push_back({name, expected, measured, expected == measured});
}

void BuilderReport::expect_le(const std::string& name, int64_t measured, int64_t bound) {
    checks.push_back({name, bound, measured, measured <= bound});
}

void BuilderReport::expect_true(const std::string& name, bool measured) {
    checks.push_back({name, 1, measured ? 1 : 0, measured});
}

void BuilderReport::merge(const BuilderReport& other) {
    for (const Expectation& e : other.checks) {
        Expectation prefixed = e;
        prefixed.name = other.builder + "." + e.name;
        checks.push_back(std::move(prefixed));
    }
    for (const auto& [name, value] : other.measurements) {
        measurements[other.builder + "." + name] = value;
    }
}

bool BuilderReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Expectation& e) { return e.ok; });
}

// --- shared constructions -------------------------------------------------

namespace {

Matrix perm_matrix(const std::vector<uint32_t>& image) {
    Matrix m(2, static_cast<uint32_t>(image.size()), static_cast<uint32_t>(image.size()));
    for (uint32_t i = 0; i < image.size(); ++i) m.set(image[i], i, 1);
    return m;
}

Matrix unit_shift(uint64_t p, uint32_t n, uint32_t r, uint32_t c) {
    Matrix m = Matrix::identity(p, n);
    m.set(r, c, 1);
    return m;
}

} // namespace

FiniteMatrixGroup dihedral_group(uint32_t points) {
    std::vector<uint32_t> rot(points), refl(points);
    for (uint32_t i = 0; i < points; ++i) {
        rot[i] = (i + 1) % points;
        refl[i] = (points - i) % points;
    }
    return FiniteMatrixGroup(PrimeModulus(2), {perm_matrix(rot), perm_matrix(refl)});
}

FiniteMatrixGroup unitriangular_group(uint32_t n, PrimeModulus p) {
    std::vector<Matrix> gens;
    for (uint32_t i = 0; i + 1 < n; ++i) gens.push_back(unit_shift(p.p, n, i, i + 1));
    return FiniteMatrixGroup(p, std::move(gens));
}

FiniteMatrixGroup direct_product(const FiniteMatrixGroup& a, const FiniteMatrixGroup& b) {
    if (a.prime() != b.prime()) throw ShapeError("direct product needs one field");
    const uint32_t n = a.degree() + b.degree();
    std::vector<Matrix> gens;
    auto embed = [&](const Matrix& m, uint32_t offset) {
        Matrix g = Matrix::identity(a.prime(), n);
        for (uint32_t r = 0; r < m.rows(); ++r) {
            for (uint32_t c = 0; c < m.cols(); ++c) g.set(offset + r, offset + c, m.at(r, c));
        }
        return g;
    };
    for (const Matrix& g : a.generators()) gens.push_back(embed(g, 0));
    for (const Matrix& g : b.generators()) gens.push_back(embed(g, a.degree()));
    return FiniteMatrixGroup(PrimeModulus(a.prime()), std::move(gens),
                             std::max(a.cap(), b.cap()));
}

// --- index-table machinery for exhaustive subgroup sweeps ------------------

namespace {

struct SmallGroup {
    uint32_t size = 0;
    uint32_t id = 0;
    uint64_t q = 0; // the prime with |G| = q^a
    std::vector<std::vector<uint32_t>> mult;
    std::vector<uint32_t> inv;
    std::vector<uint32_t> gen_indices;

    static SmallGroup build(const FiniteMatrixGroup& g, uint64_t cap) {
        if (g.order() > cap) {
            throw CapExceeded("subgroup sweep needs |G| <= " + std::to_string(cap));
        }
        auto fac = factorize(g.order());
        if (g.order() != 1 && fac.size() != 1) {
            throw Error("subgroup sweep is implemented for prime-power order");
        }

        SmallGroup s;
        s.size = static_cast<uint32_t>(g.order());
        s.q = g.order() == 1 ? g.prime() : fac[0].first;
        const std::vector<Matrix>& elems = g.elements();

        std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;
        for (uint32_t i = 0; i < s.size; ++i) buckets[elems[i].hash()].push_back(i);
        auto index_of = [&](const Matrix& m) -> uint32_t {
            auto it = buckets.find(m.hash());
            if (it != buckets.end()) {
                for (uint32_t i : it->second) {
                    if (elems[i] == m) return i;
                }
            }
            throw InternalInvariantViolation("product left the enumerated set");
        };

        s.mult.assign(s.size, std::vector<uint32_t>(s.size, 0));
        for (uint32_t i = 0; i < s.size; ++i) {
            if (elems[i].is_identity()) s.id = i;
            for (uint32_t j = 0; j < s.size; ++j) {
                s.mult[i][j] = index_of(elems[i] * elems[j]);
            }
        }
        s.inv.assign(s.size, 0);
        for (uint32_t i = 0; i < s.size; ++i) {
            for (uint32_t j = 0; j < s.size; ++j) {
                if (s.mult[i][j] == s.id) s.inv[i] = j;
            }
        }
        for (const Matrix& gen : g.generators()) s.gen_indices.push_back(index_of(gen));
        return s;
    }

    std::vector<uint32_t> closure(std::vector<uint32_t> seed) const {
        std::vector<bool> in(size, false);
        std::vector<uint32_t> elems{id};
        in[id] = true;
        for (uint32_t x : seed) {
            if (!in[x]) {
                in[x] = true;
                elems.push_back(x);
            }
        }
        for (size_t qi = 0; qi < elems.size(); ++qi) {
            for (size_t gj = 0; gj < elems.size(); ++gj) {
                uint32_t w = mult[elems[qi]][elems[gj]];
                if (!in[w]) {
                    in[w] = true;
                    elems.push_back(w);
                }
                w = mult[elems[gj]][elems[qi]];
                if (!in[w]) {
                    in[w] = true;
                    elems.push_back(w);
                }
            }
        }
        std::sort(elems.begin(), elems.end());
        return elems;
    }

    bool is_abelian_subset(const std::vector<uint32_t>& h) const {
        for (uint32_t x : h) {
            for (uint32_t y : h) {
                if (mult[x][y] != mult[y][x]) return false;
            }
        }
        return true;
    }

    bool is_normal_subset(const std::vector<uint32_t>& h) const {
        std::vector<bool> in(size, false);
        for (uint32_t x : h) in[x] = true;
        for (uint32_t g : gen_indices) {
            for (uint32_t x : h) {
                if (!in[mult[mult[inv[g]][x]][g]]) return false;
            }
        }
        return true;
    }

    uint32_t commutator(uint32_t a, uint32_t b) const {
        return mult[mult[mult[inv[a]][inv[b]]][a]][b];
    }

    uint32_t power(uint32_t a, uint64_t e) const {
        uint32_t acc = id;
        for (uint64_t i = 0; i < e; ++i) acc = mult[acc][a];
        return acc;
    }

    bool exponent_divides(const std::vector<uint32_t>& h, uint64_t e) const {
        for (uint32_t x : h) {
            if (power(x, e) != id) return false;
        }
        return true;
    }

    // d(H) = log_q |H : H' H^q| for subgroups of a q-group.
    uint32_t d_of_subset(const std::vector<uint32_t>& h) const {
        if (h.size() <= 1) return 0;
        std::vector<uint32_t> seeds;
        for (uint32_t x : h) {
            seeds.push_back(power(x, q));
            for (uint32_t y : h) seeds.push_back(commutator(x, y));
        }
        std::vector<uint32_t> phi = closure(std::move(seeds));
        return *exact_log(h.size() / phi.size(), q);
    }

    std::set<std::vector<uint32_t>> all_subgroups() const {
        std::set<std::vector<uint32_t>> seen;
        std::vector<std::vector<uint32_t>> queue;
        std::vector<uint32_t> trivial{id};
        seen.insert(trivial);
        queue.push_back(trivial);
        while (!queue.empty()) {
            std::vector<uint32_t> h = std::move(queue.back());
            queue.pop_back();
            std::vector<bool> in(size, false);
            for (uint32_t x : h) in[x] = true;
            for (uint32_t x = 0; x < size; ++x) {
                if (in[x]) continue;
                std::vector<uint32_t> seed = h;
                seed.push_back(x);
                std::vector<uint32_t> k = closure(std::move(seed));
                if (seen.insert(k).second) {
                    if (seen.size() > 200000) {
                        throw CapExceeded("subgroup sweep exceeded the safety limit");
                    }
                    queue.push_back(std::move(k));
                }
            }
        }
        return seen;
    }
};

} // namespace

SmallGroupRanks small_group_ranks(const FiniteMatrixGroup& g, uint64_t cap) {
    SmallGroup s = SmallGroup::build(g, cap);
    SmallGroupRanks ranks;
    for (const std::vector<uint32_t>& h : s.all_subgroups()) {
        uint32_t d = s.d_of_subset(h);
        ranks.sr = std::max(ranks.sr, d);
        if (s.is_abelian_subset(h)) {
            ranks.r = std::max(ranks.r, d);
            if (s.is_normal_subset(h)) ranks.nr = std::max(ranks.nr, d);
        }
    }
    return ranks;
}

// --- builders ---------------------------------------------------------------

SemidirectResult build_example_semidirect(uint32_t m, PrimeModulus p) {
    if (m == 0) throw ShapeError("build_example_semidirect needs m >= 1");
    const uint32_t k = 2 * m;       // rank of V
    const uint32_t amb = k + 1;     // affine embedding dimension
    const uint32_t last = amb - 1;

    // Translations span V; the maps I + E_{a,b} with a < m <= b < 2m fix V1
    // and V/V1 pointwise and span H.
    std::vector<Matrix> v_gens, h_gens;
    for (uint32_t i = 0; i < k; ++i) v_gens.push_back(unit_shift(p.p, amb, i, last));
    for (uint32_t a = 0; a < m; ++a) {
        for (uint32_t b = m; b < k; ++b) h_gens.push_back(unit_shift(p.p, amb, a, b));
    }

    std::vector<Matrix> g_gens = v_gens;
    g_gens.insert(g_gens.end(), h_gens.begin(), h_gens.end());
    FiniteMatrixGroup group(p, g_gens);
    FiniteMatrixGroup v(p, v_gens);
    std::vector<Matrix> v1h_gens(v_gens.begin(), v_gens.begin() + m);
    v1h_gens.insert(v1h_gens.end(), h_gens.begin(), h_gens.end());
    FiniteMatrixGroup v1h(p, v1h_gens);

    BuilderReport report;
    report.builder = "example_semidirect";
    report.params = {{"m", m}, {"p", static_cast<int64_t>(p.p)}, {"k", k}};

    report.expect_eq("order", static_cast<int64_t>(pow_sat(p.p, k + m * m)),
                     static_cast<int64_t>(group.order()));
    report.expect_true("v_elementary_abelian", v.is_elementary_abelian());
    report.expect_true("v1h_elementary_abelian", v1h.is_elementary_abelian());
    report.expect_eq("d_v", k, abelian_type(v).min_generators());
    // d(V1 x H) = m^2 + m = k^2/4 + k/2.
    report.expect_eq("d_v1h", static_cast<int64_t>(m) * m + m,
                     abelian_type(v1h).min_generators());
    report.expect_true("v_self_centralizing", centralizer(group, v).same_element_set(v));
    report.expect_true("v1h_self_centralizing",
                       centralizer(group, v1h).same_element_set(v1h));
    return {std::move(group), std::move(v), std::move(v1h), std::move(report)};
}

PatternResult build_pattern_group(uint32_t n, PrimeModulus p) {
    if (n < 2) throw ShapeError("build_pattern_group needs n >= 2");
    const uint32_t h = (n + 1) / 2; // 1-based ceil(n/2)

    std::vector<Matrix> gens;
    for (uint32_t i = 1; i <= h; ++i) {
        for (uint32_t j = std::max(i + 1, h); j <= n; ++j) {
            gens.push_back(unit_shift(p.p, n, i - 1, j - 1));
        }
    }
    FiniteMatrixGroup group(p, gens);

    BuilderReport report;
    report.builder = "pattern_group";
    report.params = {{"n", n}, {"p", static_cast<int64_t>(p.p)}};

    const uint32_t positions = (h - 1) * (n - h + 1) + (n - h);
    report.expect_eq("order", static_cast<int64_t>(pow_sat(p.p, positions)),
                     static_cast<int64_t>(group.order()));

    FiniteMatrixGroup phi = frattini_subgroup(group);
    FiniteMatrixGroup derived = derived_subgroup(group);
    FiniteMatrixGroup z = center(group);
    report.expect_true("frattini_equals_derived", phi.same_element_set(derived));
    report.expect_true("derived_equals_center", derived.same_element_set(z));

    const int64_t expected_rank = static_cast<int64_t>(n / 2) * (h - 1);
    report.expect_eq("d_frattini", expected_rank, min_generator_count(phi));
    return {std::move(group), std::move(phi), std::move(report)};
}

SylowResult sylow_frattini_check(uint32_t n, PrimeModulus p) {
    FiniteMatrixGroup ut = unitriangular_group(n, p);
    FiniteMatrixGroup phi = frattini_subgroup(ut);
    uint32_t measured = min_generator_count(phi);

    BuilderReport report;
    report.builder = "sylow_frattini";
    report.params = {{"n", n}, {"p", static_cast<int64_t>(p.p)}};
    report.expect_eq("order", static_cast<int64_t>(pow_sat(p.p, n * (n - 1) / 2)),
                     static_cast<int64_t>(ut.order()));
    if (n == 4 || n == 5) {
        report.expect_eq("d_frattini", 2 * static_cast<int64_t>(n) - 5, measured);
    } else {
        report.measurements["d_frattini"] = measured;
    }
    return {measured, std::move(report)};
}

BuilderReport build_d16_power_evidence() {
    BuilderReport report;
    report.builder = "d16_evidence";

    FiniteMatrixGroup d16 = dihedral_group(8);
    report.expect_eq("order", 16, static_cast<int64_t>(d16.order()));

    SmallGroup s = SmallGroup::build(d16, 512);
    int64_t max_normal_ea = 0, max_ea = 0;
    for (const std::vector<uint32_t>& sub : s.all_subgroups()) {
        if (!s.is_abelian_subset(sub) || !s.exponent_divides(sub, 2)) continue;
        int64_t rank = *exact_log(sub.size(), 2);
        max_ea = std::max(max_ea, rank);
        if (s.is_normal_subset(sub)) max_normal_ea = std::max(max_normal_ea, rank);
    }
    report.expect_eq("max_normal_elementary_abelian_rank", 1, max_normal_ea);
    report.expect_eq("max_elementary_abelian_rank", 2, max_ea);

    // The explicit Klein witness <r^4, s>.
    const Matrix& r = d16.generators()[0];
    const Matrix& refl = d16.generators()[1];
    FiniteMatrixGroup klein(PrimeModulus(2), {r.pow(4), refl});
    report.expect_true("klein_elementary_abelian", klein.is_elementary_abelian());
    report.expect_eq("klein_rank", 2, *exact_log(klein.order(), 2));

    // In D16 x D16 the two Klein subgroups multiply to rank 4, the centers
    // only to rank 2.
    FiniteMatrixGroup square = direct_product(d16, d16);
    const uint32_t deg = square.degree();
    auto lift = [&](const Matrix& m, uint32_t offset) {
        Matrix g = Matrix::identity(2, deg);
        for (uint32_t i = 0; i < m.rows(); ++i) {
            for (uint32_t j = 0; j < m.cols(); ++j) g.set(offset + i, offset + j, m.at(i, j));
        }
        return g;
    };
    FiniteMatrixGroup product_of_kleins(
        PrimeModulus(2),
        {lift(r.pow(4), 0), lift(refl, 0), lift(r.pow(4), 8), lift(refl, 8)});
    report.expect_true("product_witness_elementary_abelian",
                       product_of_kleins.is_elementary_abelian());
    report.expect_eq("product_witness_rank", 4, *exact_log(product_of_kleins.order(), 2));

    FiniteMatrixGroup product_of_centers(PrimeModulus(2), {lift(r.pow(4), 0), lift(r.pow(4), 8)});
    report.expect_true("product_of_centers_elementary_abelian",
                       product_of_centers.is_elementary_abelian());
    report.expect_eq("product_of_centers_rank", 2, *exact_log(product_of_centers.order(), 2));
    return report;
}

BuilderReport sanity_suite() {
    BuilderReport all;
    all.builder = "sanity_suite";

    // Semidirect instances: every applicable subgroup-rank bound, with
    // k the rank of the constructed maximal elementary abelian normal V.
    for (auto [m, p] : std::vector<std::pair<uint32_t, uint64_t>>{{1, 2}, {2, 2}, {2, 3}}) {
        SemidirectResult res = build_example_semidirect(m, PrimeModulus(p));
        all.merge(res.report);
        BuilderReport extra;
        extra.builder = "sanity_semidirect_m" + std::to_string(m) + "_p" + std::to_string(p);
        const uint32_t k = 2 * m;
        BoundTable table = bound_table(k);

        int64_t d_v1h = abelian_type(res.v1h).min_generators();
        int64_t d_g = min_generator_count(res.group);
        if (p == 2) {
            int64_t bound = table.value("subgroup_rank_even").floor();
            extra.expect_le("d_v1h_le_subgroup_rank_even", d_v1h, bound);
            extra.expect_le("d_g_le_sr_even_mann", d_g, table.value("sr_even_mann").floor());

            FiniteMatrixGroup mho = mho1_subgroup(res.group);
            int64_t index_log = *exact_log(res.group.order() / mho.order(), 2);
            extra.expect_le("mho1_index_exponent", index_log,
                            table.value("mho1_index_exponent_even").floor());
        } else {
            extra.expect_le("d_v1h_le_sr_odd_thompson", d_v1h,
                            table.value("sr_odd_thompson").floor());
            extra.expect_le("d_g_le_sr_odd_thompson", d_g,
                            table.value("sr_odd_thompson").floor());
        }
        // Frattini ranks of the two abelian subgroups (elementary: 0).
        int64_t frattini_bound =
            p == 2 ? table.value("abelian_frattini_rank_even").floor()
                   : table.value("abelian_frattini_rank_odd").floor();
        extra.expect_le("d_phi_v", d_phi(res.v), frattini_bound);
        extra.expect_le("d_phi_v1h", d_phi(res.v1h), frattini_bound);
        all.merge(extra);
    }

    // Pattern groups: d(G) <= n^2/4 as p-subgroups of GL(n, p).
    for (auto [n, p] : std::vector<std::pair<uint32_t, uint64_t>>{{4, 2}, {4, 3}, {5, 2}}) {
        PatternResult res = build_pattern_group(n, PrimeModulus(p));
        all.merge(res.report);
        BuilderReport extra;
        extra.builder = "sanity_pattern_n" + std::to_string(n) + "_p" + std::to_string(p);
        BoundTable table = bound_table(1, n);
        extra.expect_le("d_g_le_gl_p_subgroup_rank", min_generator_count(res.group),
                        table.value("gl_p_subgroup_rank").floor());
        all.merge(extra);
    }

    // Unitriangular Sylow subgroups: measured Frattini rank + the same bound.
    for (auto [n, p] : std::vector<std::pair<uint32_t, uint64_t>>{{4, 2}, {4, 3}}) {
        SylowResult res = sylow_frattini_check(n, PrimeModulus(p));
        all.merge(res.report);
        BuilderReport extra;
        extra.builder = "sanity_sylow_n" + std::to_string(n) + "_p" + std::to_string(p);
        extra.expect_le("d_g_le_gl_p_subgroup_rank",
                        min_generator_count(unitriangular_group(n, PrimeModulus(p))),
                        bound_table(1, n).value("gl_p_subgroup_rank").floor());
        all.merge(extra);
    }

    // Jordan-block families: d(Phi(A)) <= n for abelian subgroups of GL(n,p).
    for (uint32_t k : {1u, 2u}) {
        BuilderReport extra;
        extra.builder = "sanity_jordan_k" + std::to_string(k);
        FiniteMatrixGroup fam = jordan_block_family(k, PrimeModulus(2));
        extra.expect_eq("d_phi", k, d_phi(fam));
        extra.expect_le("d_phi_le_n", d_phi(fam), fam.degree());
        extra.expect_true("omega_index_bound", omega_index_check(fam).bound_ok);
        all.merge(extra);
    }

    all.merge(build_d16_power_evidence());
    return all;
}

} // namespace pgrl
