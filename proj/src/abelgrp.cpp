#include "pgrl/abelgrp.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace pgrl {

uint64_t default_enumeration_cap() {
    static const uint64_t cap = [] {
        if (const char* env = std::getenv("PGRL_MAX_ENUM")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end != env && v >= 2) return static_cast<uint64_t>(v);
        }
        return static_cast<uint64_t>(1) << 20;
    }();
    return cap;
}

struct FiniteMatrixGroup::Cache {
    std::once_flag once;
    std::vector<Matrix> elems;
    std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;

    std::optional<uint32_t> find(const Matrix& m) const {
        auto it = buckets.find(m.hash());
        if (it == buckets.end()) return std::nullopt;
        for (uint32_t idx : it->second) {
            if (elems[idx] == m) return idx;
        }
        return std::nullopt;
    }

    bool insert(Matrix m) {
        if (find(m)) return false;
        uint64_t h = m.hash();
        buckets[h].push_back(static_cast<uint32_t>(elems.size()));
        elems.push_back(std::move(m));
        return true;
    }
};

FiniteMatrixGroup::FiniteMatrixGroup(PrimeModulus p, std::vector<Matrix> generators, uint64_t cap)
    : p_(p.p), n_(0), gens_(std::move(generators)), cap_(cap),
      cache_(std::make_shared<Cache>()) {
    if (gens_.empty()) throw ShapeError("a matrix group needs at least one generator");
    n_ = gens_[0].rows();
    for (const Matrix& g : gens_) {
        if (!g.is_square() || g.rows() != n_ || g.modulus() != p_) {
            throw ShapeError("generators must be square over the same field");
        }
        if (rank(g) != n_) throw ShapeError("generators must be invertible");
    }
}

FiniteMatrixGroup FiniteMatrixGroup::from_elements(PrimeModulus p, uint32_t n,
                                                   std::vector<Matrix> elements,
                                                   std::vector<Matrix> generators,
                                                   uint64_t cap) {
    if (elements.empty()) throw ShapeError("element list must not be empty");
    if (generators.empty()) generators = elements;
    FiniteMatrixGroup g(p, std::move(generators), cap);
    if (n != g.n_) throw ShapeError("degree mismatch");

    bool has_identity = false;
    for (const Matrix& m : elements) {
        if (m.is_identity()) has_identity = true;
    }
    if (!has_identity) throw ShapeError("element list must contain the identity");
    if (elements.size() > cap) throw CapExceeded("element list larger than the cap");

    std::call_once(g.cache_->once, [&] {
        for (Matrix& m : elements) g.cache_->insert(std::move(m));
    });
    return g;
}

void FiniteMatrixGroup::ensure_enumerated() const {
    std::call_once(cache_->once, [&] {
        Cache& c = *cache_;
        c.insert(Matrix::identity(p_, n_));
        for (size_t qi = 0; qi < c.elems.size(); ++qi) {
            for (const Matrix& g : gens_) {
                Matrix w = c.elems[qi] * g;
                if (c.insert(std::move(w)) && c.elems.size() > cap_) {
                    throw CapExceeded("group enumeration exceeded cap " + std::to_string(cap_));
                }
            }
        }
    });
}

const std::vector<Matrix>& FiniteMatrixGroup::elements() const {
    ensure_enumerated();
    return cache_->elems;
}

bool FiniteMatrixGroup::contains(const Matrix& m) const {
    ensure_enumerated();
    return cache_->find(m).has_value();
}

bool FiniteMatrixGroup::is_abelian() const {
    for (size_t i = 0; i < gens_.size(); ++i) {
        for (size_t j = i + 1; j < gens_.size(); ++j) {
            if (!(gens_[i] * gens_[j] == gens_[j] * gens_[i])) return false;
        }
    }
    return true;
}

uint64_t FiniteMatrixGroup::element_order(const Matrix& g) const {
    uint64_t e = order();
    for (auto [q, mult] : factorize(e)) {
        (void)mult;
        while (e % q == 0 && g.pow(e / q).is_identity()) e /= q;
    }
    return e;
}

uint64_t FiniteMatrixGroup::exponent() const {
    uint64_t e = 1;
    for (const Matrix& m : elements()) e = std::lcm(e, element_order(m));
    return e;
}

bool FiniteMatrixGroup::is_elementary_abelian() const {
    if (!is_abelian()) return false;
    for (const Matrix& m : elements()) {
        if (!m.pow(p_).is_identity()) return false;
    }
    return true;
}

bool FiniteMatrixGroup::same_element_set(const FiniteMatrixGroup& other) const {
    if (order() != other.order()) return false;
    return contains_group(other);
}

bool FiniteMatrixGroup::contains_group(const FiniteMatrixGroup& sub) const {
    for (const Matrix& m : sub.elements()) {
        if (!contains(m)) return false;
    }
    return true;
}

namespace {

void require_abelian(const FiniteMatrixGroup& g, const char* op) {
    if (!g.is_abelian()) {
        throw NonAbelian(std::string(op) + " is defined here for abelian groups only");
    }
}

// Hash-bucketed matrix set for dedup during subgroup constructions.
class MatrixSet {
public:
    bool insert(Matrix m) {
        auto& bucket = buckets_[m.hash()];
        for (uint32_t idx : bucket) {
            if (items_[idx] == m) return false;
        }
        bucket.push_back(static_cast<uint32_t>(items_.size()));
        items_.push_back(std::move(m));
        return true;
    }
    std::vector<Matrix> take() { return std::move(items_); }

private:
    std::vector<Matrix> items_;
    std::unordered_map<uint64_t, std::vector<uint32_t>> buckets_;
};

FiniteMatrixGroup wrap_subgroup(const FiniteMatrixGroup& g, std::vector<Matrix> elems) {
    return FiniteMatrixGroup::from_elements(PrimeModulus(g.prime()), g.degree(),
                                            std::move(elems), {}, g.cap());
}

// The structural prime of a group of prime-power order, which need not be
// the field characteristic (a 2-group may live inside GL(n, 3)).
uint64_t structural_prime(const FiniteMatrixGroup& g) {
    uint64_t o = g.order();
    if (o == 1) return g.prime();
    auto fac = factorize(o);
    if (fac.size() != 1) {
        throw Error("this operation needs a group of prime-power order");
    }
    return fac[0].first;
}

} // namespace

FiniteMatrixGroup omega_t(const FiniteMatrixGroup& g, uint32_t t) {
    require_abelian(g, "omega_t");
    uint64_t q = pow_sat(g.prime(), t);
    std::vector<Matrix> elems;
    for (const Matrix& m : g.elements()) {
        if (m.pow(q).is_identity()) elems.push_back(m);
    }
    return wrap_subgroup(g, std::move(elems));
}

FiniteMatrixGroup mho_t(const FiniteMatrixGroup& g, uint32_t t) {
    require_abelian(g, "mho_t");
    uint64_t q = pow_sat(g.prime(), t);
    MatrixSet powers;
    for (const Matrix& m : g.elements()) powers.insert(m.pow(q));
    return wrap_subgroup(g, powers.take());
}

FiniteMatrixGroup o_p_part(const FiniteMatrixGroup& g) {
    require_abelian(g, "o_p_part");
    std::vector<Matrix> elems;
    for (const Matrix& m : g.elements()) {
        uint64_t o = g.element_order(m);
        while (o % g.prime() == 0) o /= g.prime();
        if (o == 1) elems.push_back(m);
    }
    return wrap_subgroup(g, std::move(elems));
}

OmegaIndexResult omega_index_check(const FiniteMatrixGroup& g) {
    require_abelian(g, "omega_index_check");
    uint64_t fixed = 0;
    for (const Matrix& m : g.elements()) {
        if (m.pow(g.prime()).is_identity()) ++fixed;
    }
    // Omega_1(O_p(A)) is exactly the set of elements of order dividing p.
    uint64_t index = g.order() / fixed;
    return {index, index <= pow_sat(g.prime(), g.degree())};
}

uint64_t FiniteAbelianType::order() const {
    uint64_t o = 1;
    for (auto [f, mult] : factors) {
        for (uint32_t i = 0; i < mult; ++i) o *= f;
    }
    return o;
}

uint32_t FiniteAbelianType::min_generators() const {
    // Factor counts per prime; the max is the generator number.
    std::unordered_map<uint64_t, uint32_t> per_prime;
    for (auto [f, mult] : factors) {
        uint64_t q = factorize(f)[0].first;
        per_prime[q] += mult;
    }
    uint32_t best = 0;
    for (auto [q, cnt] : per_prime) best = std::max(best, cnt);
    return best;
}

std::string FiniteAbelianType::to_string() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        for (uint32_t i = 0; i < it->second; ++i) {
            if (!first) os << " x ";
            os << "C" << it->first;
            first = false;
        }
    }
    return os.str();
}

FiniteAbelianType abelian_type(const FiniteMatrixGroup& g) {
    require_abelian(g, "abelian_type");
    std::vector<uint64_t> orders;
    orders.reserve(g.order());
    for (const Matrix& m : g.elements()) orders.push_back(g.element_order(m));

    FiniteAbelianType type;
    for (auto [q, mult] : factorize(g.order())) {
        (void)mult;
        // a_i = log_q #{x in the q-part : x^{q^i} = 1}; the multiplicity of
        // C_{q^j} is 2 a_j - a_{j-1} - a_{j+1}.
        std::vector<uint32_t> a{0};
        while (true) {
            uint64_t qi = pow_sat(q, static_cast<uint32_t>(a.size()));
            uint64_t count = 0;
            for (uint64_t o : orders) {
                bool q_power = true;
                uint64_t rem = o;
                while (rem % q == 0) rem /= q;
                q_power = rem == 1;
                if (q_power && qi % o == 0) ++count;
            }
            auto lg = exact_log(count, q);
            if (!lg) throw InternalInvariantViolation("q-torsion counts must be powers of q");
            a.push_back(*lg);
            if (a.size() >= 2 && a[a.size() - 1] == a[a.size() - 2]) break;
        }
        for (size_t j = 1; j + 1 < a.size(); ++j) {
            uint32_t mult_j = 2 * a[j] - a[j - 1] - a[j + 1];
            if (mult_j > 0) type.factors.emplace_back(pow_sat(q, static_cast<uint32_t>(j)), mult_j);
        }
    }
    std::sort(type.factors.begin(), type.factors.end());
    if (type.order() != g.order()) {
        throw InternalInvariantViolation("invariant factors fail to reproduce the group order");
    }
    return type;
}

uint32_t d_phi(const FiniteMatrixGroup& g) {
    require_abelian(g, "d_phi");
    if (!exact_log(g.order(), g.prime())) {
        throw Error("d_phi needs an abelian p-group for the field prime");
    }
    const uint64_t p = g.prime();
    uint64_t le_p = 0, le_p2 = 0;
    for (const Matrix& m : g.elements()) {
        if (m.pow(p).is_identity()) ++le_p;
        if (m.pow(p * p).is_identity()) ++le_p2;
    }
    return *exact_log(le_p2, p) - *exact_log(le_p, p);
}

uint64_t verbal_w_index(const FiniteMatrixGroup& g) {
    const std::vector<Matrix>& elems = g.elements();
    const uint64_t q = structural_prime(g);
    const uint64_t p2 = q * q;

    // w(P) for w = x^(p^2)[y,z] is generated by all p^2-th powers together
    // with all commutators: setting y = z = 1 and x = 1 shows both value
    // sets lie in w(P), and every value x^(p^2)[y,z] is such a product.
    // Both sets are closed under conjugation, so the multiplicative closure
    // is already the verbal subgroup.
    MatrixSet seeds;
    for (const Matrix& x : elems) seeds.insert(x.pow(p2));
    std::vector<Matrix> inverses;
    inverses.reserve(elems.size());
    for (const Matrix& m : elems) inverses.push_back(inverse_matrix(m));
    for (size_t y = 0; y < elems.size(); ++y) {
        for (size_t z = 0; z < elems.size(); ++z) {
            seeds.insert(inverses[y] * inverses[z] * elems[y] * elems[z]);
        }
    }
    FiniteMatrixGroup w(PrimeModulus(g.prime()), seeds.take(), g.cap());
    return g.order() / w.order();
}

FiniteMatrixGroup unit_group_of_algebra(const MatAlgebra& alg, uint64_t cap) {
    if (!is_commutative(alg)) {
        throw NonCommutativeInput("unit groups are taken of commutative algebras here");
    }
    if (!alg.unital()) throw Error("unit_group_of_algebra needs the identity in the span");
    const uint64_t p = alg.modulus();
    const uint32_t n = alg.matrix_size();
    uint64_t span_size = pow_sat(p, alg.dim());
    if (span_size > cap) throw CapExceeded("algebra span larger than the enumeration cap");

    std::vector<Matrix> units;
    enumerate_vectors(alg.vectorized(), [&](const Vec& v) {
        Matrix m = unvectorize(p, n, v);
        if (rank(m) == n) units.push_back(std::move(m));
    });
    return FiniteMatrixGroup::from_elements(PrimeModulus(p), n, std::move(units), {}, cap);
}

FiniteMatrixGroup jordan_block_family(uint32_t k, PrimeModulus p) {
    if (k == 0) throw ShapeError("jordan_block_family needs k >= 1");
    const uint32_t block = static_cast<uint32_t>(p.p) + 1;
    const uint32_t n = k * block;
    std::vector<Matrix> gens;
    for (uint32_t i = 0; i < k; ++i) {
        Matrix g = Matrix::identity(p.p, n);
        for (uint32_t j = 0; j + 1 < block; ++j) {
            g.set(i * block + j, i * block + j + 1, 1);
        }
        gens.push_back(std::move(g));
    }
    return FiniteMatrixGroup(p, std::move(gens));
}

Matrix group_commutator(const Matrix& a, const Matrix& b) {
    return inverse_matrix(a) * inverse_matrix(b) * a * b;
}


FiniteMatrixGroup normal_closure(const FiniteMatrixGroup& g, std::vector<Matrix> seeds) {
    if (seeds.empty()) seeds.push_back(Matrix::identity(g.prime(), g.degree()));
    std::vector<Matrix> gen_invs;
    gen_invs.reserve(g.generators().size());
    for (const Matrix& gen : g.generators()) gen_invs.push_back(inverse_matrix(gen));

    while (true) {
        FiniteMatrixGroup h(PrimeModulus(g.prime()), seeds, g.cap());
        const std::vector<Matrix>& elems = h.elements();
        bool grew = false;
        for (size_t gi = 0; gi < g.generators().size() && !grew; ++gi) {
            for (const Matrix& m : elems) {
                Matrix conj = gen_invs[gi] * m * g.generators()[gi];
                if (!h.contains(conj)) {
                    seeds.push_back(std::move(conj));
                    grew = true;
                    break;
                }
            }
        }
        if (!grew) return h;
    }
}

FiniteMatrixGroup frattini_subgroup(const FiniteMatrixGroup& g) {
    // G' G^q for the structural prime q: the quotient by the normal closure
    // of the generator commutators and q-th generator powers is the largest
    // elementary abelian quotient, whose kernel is the Frattini subgroup.
    const uint64_t q = structural_prime(g);
    std::vector<Matrix> seeds;
    const std::vector<Matrix>& gens = g.generators();
    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = i + 1; j < gens.size(); ++j) {
            seeds.push_back(group_commutator(gens[i], gens[j]));
        }
        seeds.push_back(gens[i].pow(q));
    }
    return normal_closure(g, std::move(seeds));
}

FiniteMatrixGroup derived_subgroup(const FiniteMatrixGroup& g) {
    std::vector<Matrix> seeds;
    const std::vector<Matrix>& gens = g.generators();
    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = i + 1; j < gens.size(); ++j) {
            seeds.push_back(group_commutator(gens[i], gens[j]));
        }
    }
    return normal_closure(g, std::move(seeds));
}

FiniteMatrixGroup center(const FiniteMatrixGroup& g) {
    std::vector<Matrix> elems;
    for (const Matrix& m : g.elements()) {
        bool central = true;
        for (const Matrix& gen : g.generators()) {
            if (!(m * gen == gen * m)) {
                central = false;
                break;
            }
        }
        if (central) elems.push_back(m);
    }
    return wrap_subgroup(g, std::move(elems));
}

FiniteMatrixGroup mho1_subgroup(const FiniteMatrixGroup& g) {
    // The set of q-th powers is closed under conjugation, so its
    // multiplicative closure is the (normal) subgroup they generate.
    const uint64_t q = structural_prime(g);
    MatrixSet seeds;
    for (const Matrix& m : g.elements()) seeds.insert(m.pow(q));
    return FiniteMatrixGroup(PrimeModulus(g.prime()), seeds.take(), g.cap());
}

FiniteMatrixGroup centralizer(const FiniteMatrixGroup& g, const FiniteMatrixGroup& sub) {
    std::vector<Matrix> elems;
    for (const Matrix& m : g.elements()) {
        bool commutes = true;
        for (const Matrix& s : sub.generators()) {
            if (!(m * s == s * m)) {
                commutes = false;
                break;
            }
        }
        if (commutes) elems.push_back(m);
    }
    return wrap_subgroup(g, std::move(elems));
}

uint32_t min_generator_count(const FiniteMatrixGroup& g) {
    const uint64_t q = structural_prime(g);
    auto total = exact_log(g.order(), q);
    if (!total) throw Error("min_generator_count needs a group of prime-power order");
    FiniteMatrixGroup phi = frattini_subgroup(g);
    auto phi_log = exact_log(phi.order(), q);
    if (!phi_log) throw InternalInvariantViolation("Frattini subgroup of a q-group is a q-group");
    return *total - *phi_log;
}

} // namespace pgrl
