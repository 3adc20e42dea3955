#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgrl/isotropy.hpp"
#include "pgrl/nilring.hpp"
#include "testutil.hpp"

using namespace pgrl;
namespace tu = pgrl::testutil;

namespace {

NilRingElement random_element(tu::Rng& rng, const VectorForm& form) {
    NilRingElement s = ring_zero(form);
    for (uint32_t i = 0; i < form.n; ++i) s.a[i] = static_cast<uint32_t>(rng() % form.modulus);
    for (uint32_t c = 0; c < form.k; ++c) s.b[c] = static_cast<uint32_t>(rng() % form.modulus);
    return s;
}

bool a_part_zero(const GroupElement& g) {
    return std::all_of(g.s.a.begin(), g.s.a.end(), [](uint32_t x) { return x == 0; });
}

std::vector<VectorForm> sample_forms(tu::Rng& rng, int count) {
    std::vector<VectorForm> forms;
    for (int i = 0; i < count; ++i) {
        uint64_t p = i % 2 == 0 ? 2 : 3;
        uint32_t r = 1 + static_cast<uint32_t>(rng() % 2);
        uint32_t n = 2 + static_cast<uint32_t>(rng() % 5); // up to 6
        uint32_t k = 1 + static_cast<uint32_t>(rng() % 3);
        forms.push_back(VectorForm::random(PrimeModulus(p), r, n, k, rng));
    }
    return forms;
}

} // namespace

TEST_CASE("alternating invariant is enforced at construction") {
    Matrix bad(4, 2, 2);
    bad.set(0, 1, 1);
    bad.set(1, 0, 1); // should be -1 = 3
    CHECK_THROWS_AS(VectorForm(PrimeModulus(2), 2, 2, 1, {bad}), ShapeError);

    Matrix good(4, 2, 2);
    good.set(0, 1, 1);
    good.set(1, 0, 3);
    CHECK_NOTHROW(VectorForm(PrimeModulus(2), 2, 2, 1, {good}));

    Matrix diag_bad(4, 2, 2);
    diag_bad.set(0, 0, 2);
    CHECK_THROWS_AS(VectorForm(PrimeModulus(2), 2, 2, 1, {diag_bad}), ShapeError);
}

TEST_CASE("ring multiplication follows the defining relations") {
    tu::Rng rng(51);
    VectorForm form = VectorForm::random(PrimeModulus(3), 2, 4, 2, rng);

    for (uint32_t i = 0; i < form.n; ++i) {
        for (uint32_t j = 0; j < form.n; ++j) {
            NilRingElement prod = ring_mul(ring_basis_a(form, i), ring_basis_a(form, j), form);
            CHECK(std::all_of(prod.a.begin(), prod.a.end(), [](uint32_t x) { return x == 0; }));
            for (uint32_t c = 0; c < form.k; ++c) {
                uint32_t expect = i < j ? form.mats[c].at(i, j) : 0;
                CHECK(prod.b[c] == expect);
            }
        }
    }

    // B annihilates everything on both sides.
    for (int iter = 0; iter < 10; ++iter) {
        NilRingElement s = random_element(rng, form);
        NilRingElement pure_b = ring_zero(form);
        pure_b.b[iter % form.k] = 1 + static_cast<uint32_t>(rng() % (form.modulus - 1));
        CHECK(ring_mul(s, pure_b, form) == ring_zero(form));
        CHECK(ring_mul(pure_b, s, form) == ring_zero(form));
    }
}

TEST_CASE("S^3 = 0: all triple products vanish") {
    tu::Rng rng(52);
    for (const VectorForm& form : sample_forms(rng, 8)) {
        for (int iter = 0; iter < 30; ++iter) {
            NilRingElement s = random_element(rng, form);
            NilRingElement t = random_element(rng, form);
            NilRingElement u = random_element(rng, form);
            CHECK(ring_mul(ring_mul(s, t, form), u, form) == ring_zero(form));
            CHECK(ring_mul(s, ring_mul(t, u, form), form) == ring_zero(form));
        }
    }
}

TEST_CASE("group multiplication: identity, generators, associativity") {
    tu::Rng rng(53);
    VectorForm form = VectorForm::random(PrimeModulus(2), 2, 5, 2, rng);
    GroupElement id = group_identity(form);

    for (int iter = 0; iter < 50; ++iter) {
        GroupElement g{random_element(rng, form)};
        CHECK(group_mul(g, id, form) == g);
        CHECK(group_mul(id, g, form) == g);
    }

    // (1 + e_i)(1 + e_j) = 1 + e_i + e_j + phi(e_i, e_j) for i < j.
    for (uint32_t i = 0; i < form.n; ++i) {
        for (uint32_t j = i + 1; j < form.n; ++j) {
            GroupElement prod =
                group_mul({ring_basis_a(form, i)}, {ring_basis_a(form, j)}, form);
            CHECK(prod.s.a[i] == 1);
            CHECK(prod.s.a[j] == 1);
            for (uint32_t c = 0; c < form.k; ++c) {
                CHECK(prod.s.b[c] == form.mats[c].at(i, j));
            }
        }
    }

    for (const VectorForm& f : sample_forms(rng, 6)) {
        for (int iter = 0; iter < 50; ++iter) {
            GroupElement a{random_element(rng, f)};
            GroupElement b{random_element(rng, f)};
            GroupElement c{random_element(rng, f)};
            CHECK(group_mul(group_mul(a, b, f), c, f) == group_mul(a, group_mul(b, c, f), f));
        }
    }
}

TEST_CASE("inverses: closed form and round trip") {
    tu::Rng rng(54);
    VectorForm form = VectorForm::random(PrimeModulus(3), 2, 4, 2, rng);
    GroupElement id = group_identity(form);
    CHECK(group_inv(id, form) == id);

    // e_i^2 = 0, so (1 + e_i)^-1 = 1 - e_i.
    for (uint32_t i = 0; i < form.n; ++i) {
        GroupElement gi{ring_basis_a(form, i)};
        GroupElement inv = group_inv(gi, form);
        CHECK(inv.s.a[i] == form.modulus - 1);
        CHECK(std::all_of(inv.s.b.begin(), inv.s.b.end(), [](uint32_t x) { return x == 0; }));
        CHECK(group_mul(gi, inv, form) == id);
    }

    for (const VectorForm& f : sample_forms(rng, 6)) {
        GroupElement e = group_identity(f);
        for (int iter = 0; iter < 50; ++iter) {
            GroupElement g{random_element(rng, f)};
            CHECK(group_mul(g, group_inv(g, f), f) == e);
            CHECK(group_mul(group_inv(g, f), g, f) == e);
        }
    }
}

TEST_CASE("commutators: basis pairs, self, central B") {
    tu::Rng rng(55);
    VectorForm form = VectorForm::random(PrimeModulus(2), 2, 4, 3, rng);
    GroupElement id = group_identity(form);

    // [1 + e_i, 1 + e_j] = 1 + phi(e_i, e_j) for i < j.
    for (uint32_t i = 0; i < form.n; ++i) {
        for (uint32_t j = i + 1; j < form.n; ++j) {
            GroupElement c =
                group_commutator({ring_basis_a(form, i)}, {ring_basis_a(form, j)}, form);
            CHECK(a_part_zero(c));
            for (uint32_t comp = 0; comp < form.k; ++comp) {
                CHECK(c.s.b[comp] == form.mats[comp].at(i, j));
            }
        }
    }

    for (int iter = 0; iter < 30; ++iter) {
        GroupElement g{random_element(rng, form)};
        CHECK(group_commutator(g, g, form) == id);
        GroupElement pure_b = id;
        pure_b.s.b[iter % form.k] = 1;
        CHECK(group_commutator(pure_b, g, form) == id);
    }
}

TEST_CASE("the group is 2-nilpotent: commutators are central") {
    tu::Rng rng(56);
    for (const VectorForm& f : sample_forms(rng, 6)) {
        GroupElement id = group_identity(f);
        for (int iter = 0; iter < 30; ++iter) {
            GroupElement g{random_element(rng, f)};
            GroupElement h{random_element(rng, f)};
            GroupElement e{random_element(rng, f)};
            CHECK(group_commutator(group_commutator(g, h, f), e, f) == id);
        }
    }
}

TEST_CASE("commutation criterion: gh = hg iff the full evaluation vanishes") {
    tu::Rng rng(57);
    for (const VectorForm& f : sample_forms(rng, 8)) {
        for (int iter = 0; iter < 60; ++iter) {
            GroupElement g{random_element(rng, f)};
            GroupElement h{random_element(rng, f)};
            bool commute = group_mul(g, h, f) == group_mul(h, g, f);
            Vec eval = form_eval(f, g.s.a, h.s.a);
            bool vanished = std::all_of(eval.begin(), eval.end(),
                                        [](uint32_t x) { return x == 0; });
            CHECK(commute == vanished);
        }
    }
}

TEST_CASE("powers: closed form, repeated multiplication, kernel exponent") {
    tu::Rng rng(58);
    for (const VectorForm& f : sample_forms(rng, 6)) {
        GroupElement id = group_identity(f);
        for (int iter = 0; iter < 20; ++iter) {
            GroupElement g{random_element(rng, f)};
            CHECK(group_pow(g, 0, f) == id);

            GroupElement acc = id;
            for (uint64_t m = 1; m <= 10; ++m) {
                acc = group_mul(acc, g, f);
                CHECK(group_pow(g, m, f) == acc);
            }
        }
    }

    // (1 + e_i)^(p^r) = 1 since e_i^2 = 0.
    VectorForm f32 = VectorForm::random(PrimeModulus(3), 2, 4, 2, rng);
    for (uint32_t i = 0; i < f32.n; ++i) {
        CHECK(group_pow({ring_basis_a(f32, i)}, 9, f32) == group_identity(f32));
    }

    // Elements of 1 + pS have order dividing p^(r-1).
    for (uint64_t p : {2ull, 3ull}) {
        VectorForm f = VectorForm::random(PrimeModulus(p), 2, 5, 2, rng);
        uint64_t exp = p; // p^(r-1) with r = 2
        for (int iter = 0; iter < 200; ++iter) {
            NilRingElement s = random_element(rng, f);
            GroupElement shifted{ring_scale(s, p, f)};
            CHECK(group_pow(shifted, exp, f) == group_identity(f));
        }
    }
}

TEST_CASE("mod-p reduction is a group homomorphism with kernel 1 + pS") {
    tu::Rng rng(59);
    for (uint64_t p : {2ull, 3ull}) {
        VectorForm form = VectorForm::random(PrimeModulus(p), 2, 4, 2, rng);
        VectorForm target = reduce_mod_p(form);
        GroupElement id = group_identity(form);
        CHECK(reduce_mod_p(id, form) == group_identity(target));

        for (int iter = 0; iter < 100; ++iter) {
            GroupElement g{random_element(rng, form)};
            GroupElement h{random_element(rng, form)};
            GroupElement lhs = reduce_mod_p(group_mul(g, h, form), form);
            GroupElement rhs =
                group_mul(reduce_mod_p(g, form), reduce_mod_p(h, form), target);
            CHECK(lhs == rhs);
        }

        // 1 + p s reduces to the identity.
        for (int iter = 0; iter < 20; ++iter) {
            GroupElement shifted{ring_scale(random_element(rng, form), p, form)};
            CHECK(reduce_mod_p(shifted, form) == group_identity(target));
        }
    }
}

TEST_CASE("lift and reduce round-trip exactly") {
    tu::Rng rng(60);
    for (uint64_t p : {2ull, 3ull}) {
        VectorForm base = VectorForm::random(PrimeModulus(p), 1, 4, 2, rng);
        CHECK(lift_form(base, 1) == base);

        for (uint32_t r : {2u, 3u}) {
            VectorForm lifted = lift_form(base, r);
            CHECK(lifted.modulus == pow_sat(p, r));
            CHECK(reduce_mod_p(lifted) == base);
        }
    }
    VectorForm zero = VectorForm::zero(PrimeModulus(2), 1, 3, 1);
    CHECK(lift_form(zero, 3) == VectorForm::zero(PrimeModulus(2), 3, 3, 1));
}

TEST_CASE("quotient type check holds for every sampled form") {
    tu::Rng rng(61);
    for (const VectorForm& f : sample_forms(rng, 10)) {
        CHECK(quotient_type_check(f));
    }
    // n = 1: a single cyclic factor.
    VectorForm tiny = VectorForm::zero(PrimeModulus(3), 2, 1, 1);
    CHECK(quotient_type_check(tiny));
}

TEST_CASE("exhaustive tiny group: |G| = p^(r(n+k)) with full group axioms") {
    // p = 2, r = 1, n = 3, k = 1: sixteen elements, everything checked.
    tu::Rng rng(62);
    VectorForm form = VectorForm::random(PrimeModulus(2), 1, 3, 1, rng);

    std::vector<GroupElement> all;
    for (uint32_t bits = 0; bits < 16; ++bits) {
        GroupElement g = group_identity(form);
        for (uint32_t i = 0; i < 3; ++i) g.s.a[i] = (bits >> i) & 1u;
        g.s.b[0] = (bits >> 3) & 1u;
        all.push_back(g);
    }
    CHECK(all.size() == 16); // p^(r(n+k)) = 2^4

    auto find = [&](const GroupElement& g) {
        return std::find(all.begin(), all.end(), g) != all.end();
    };
    for (const GroupElement& g : all) {
        CHECK(find(group_inv(g, form)));
        for (const GroupElement& h : all) {
            CHECK(find(group_mul(g, h, form)));
            for (const GroupElement& e : all) {
                CHECK(group_mul(group_mul(g, h, form), e, form) ==
                      group_mul(g, group_mul(h, e, form), form));
            }
        }
    }
}
