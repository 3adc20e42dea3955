#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgrl/matalg.hpp"
#include "testutil.hpp"

using namespace pgrl;
namespace tu = pgrl::testutil;

namespace {

// Brute-force minimal polynomial degree: first d with M^d dependent on
// lower powers. Independent of the closure fixpoint it cross-checks.
uint32_t minimal_poly_degree(const Matrix& m) {
    const uint32_t n = m.rows();
    std::vector<Vec> powers;
    Matrix acc = Matrix::identity(m.modulus(), n);
    for (uint32_t d = 0; d <= n * n + 1; ++d) {
        Subspace lower = Subspace::span_of(m.modulus(), n * n, powers);
        if (lower.contains(vectorize(acc))) return d;
        powers.push_back(vectorize(acc));
        acc = acc * m;
    }
    return n * n + 1; // unreachable: degree is at most n
}

} // namespace

TEST_CASE("generate_algebra: identity, nilpotent powers, diagonal closure") {
    Matrix i2 = Matrix::identity(2, 2);
    MatAlgebra just_id = generate_algebra({i2}, false);
    CHECK(just_id.dim() == 1);
    CHECK(just_id.unital());
    CHECK(just_id.contains(i2));

    // Powers of a 3x3 nilpotent block: J and J^2 only, J^3 = 0.
    Matrix j = tu::jordan_nilpotent(2, 3);
    MatAlgebra nil = generate_algebra({j}, false);
    CHECK(nil.dim() == 2);
    CHECK(nil.contains(j));
    CHECK(nil.contains(j * j));
    CHECK_FALSE(nil.unital());

    // diag(1,2) over F_3 squares to the identity, so the closure is 2-dim.
    Matrix d = Matrix::from_rows(3, {{1, 0}, {0, 2}}, 2);
    MatAlgebra alg = generate_algebra({d}, true);
    CHECK(alg.dim() == 2);
    CHECK(alg.contains(Matrix::identity(3, 2)));
    CHECK(alg.contains(d));
}

TEST_CASE("generate_algebra rejects mixed shapes") {
    CHECK_THROWS_AS(generate_algebra({Matrix::identity(2, 2), Matrix::identity(2, 3)}, false),
                    ShapeError);
    CHECK_THROWS_AS(generate_algebra({Matrix::identity(2, 2), Matrix::identity(3, 2)}, false),
                    ShapeError);
}

TEST_CASE("from_span validates closure") {
    // span{E12 + E21} is not closed: its square is the identity.
    Matrix sym = tu::mat_unit(2, 2, 0, 1) + tu::mat_unit(2, 2, 1, 0);
    CHECK_THROWS_AS(MatAlgebra::from_span(2, 2, {sym}), NotClosedInput);
    CHECK_NOTHROW(MatAlgebra::from_span(2, 2, {tu::mat_unit(2, 2, 0, 1)}));
}

TEST_CASE("is_commutative on the three reference algebras") {
    MatAlgebra diag = generate_algebra(
        {tu::mat_unit(3, 2, 0, 0), tu::mat_unit(3, 2, 1, 1)}, false);
    CHECK(is_commutative(diag));

    MatAlgebra full = generate_algebra(
        {tu::mat_unit(2, 2, 0, 1), tu::mat_unit(2, 2, 1, 0)}, false);
    CHECK(full.dim() == 4);
    CHECK_FALSE(is_commutative(full));

    Matrix j = tu::jordan_nilpotent(5, 3);
    CHECK(is_commutative(generate_algebra({j}, false)));
}

TEST_CASE("algebra_square: nilpotents shrink, idempotents stay") {
    MatAlgebra e12 = MatAlgebra::from_span(2, 2, {tu::mat_unit(2, 2, 0, 1)});
    CHECK(algebra_square(e12).dim() == 0);

    Matrix j = tu::jordan_nilpotent(2, 3);
    MatAlgebra nil = generate_algebra({j}, false);
    MatAlgebra sq = algebra_square(nil);
    CHECK(sq.dim() == 1);
    CHECK(sq.contains(j * j));

    MatAlgebra diag = generate_algebra(
        {tu::mat_unit(3, 3, 0, 0), tu::mat_unit(3, 3, 1, 1), tu::mat_unit(3, 3, 2, 2)}, false);
    CHECK(algebra_square(diag) == diag);
}

TEST_CASE("common_kernel on unital, zero and nilpotent algebras") {
    MatAlgebra unital = generate_algebra({Matrix::identity(2, 3)}, true);
    CHECK(common_kernel(unital).dim() == 0);

    CHECK(common_kernel(MatAlgebra::zero(2, 3)) == Subspace::full(2, 3));

    Matrix j = tu::jordan_nilpotent(2, 3);
    Subspace k = common_kernel(generate_algebra({j}, false));
    CHECK(k.dim() == 1);
    CHECK(k.contains(Vec{1, 0, 0}));
}

TEST_CASE("image_of_vector") {
    Matrix j = tu::jordan_nilpotent(2, 3);
    MatAlgebra nil = generate_algebra({j}, false);

    CHECK(image_of_vector(nil, Vec{0, 0, 0}).dim() == 0);

    // J e3 = e2 and J^2 e3 = e1.
    Subspace im = image_of_vector(nil, Vec{0, 0, 1});
    CHECK(im.dim() == 2);
    CHECK(im.contains(Vec{1, 0, 0}));
    CHECK(im.contains(Vec{0, 1, 0}));

    MatAlgebra unital = generate_algebra({Matrix::identity(2, 3)}, true);
    Vec x{1, 1, 0};
    CHECK(image_of_vector(unital, x).contains(x));
}

TEST_CASE("is_ideal basics") {
    MatAlgebra diag = generate_algebra(
        {tu::mat_unit(2, 2, 0, 0), tu::mat_unit(2, 2, 1, 1)}, false);
    CHECK(is_ideal(diag, diag));
    CHECK(is_ideal(MatAlgebra::zero(2, 2), diag));

    // span{I} inside the diagonal algebra: I * diag(1,0) leaves the span.
    MatAlgebra just_id = generate_algebra({Matrix::identity(2, 2)}, false);
    CHECK_FALSE(is_ideal(just_id, diag));
}

TEST_CASE("closure invariant holds for random generator sets") {
    tu::Rng rng(21);
    for (uint64_t p : {2ull, 3ull, 5ull}) {
        for (int iter = 0; iter < 30; ++iter) {
            uint32_t n = 2 + tu::rnd_below(rng, 5); // up to 6
            std::vector<Matrix> gens;
            uint32_t count = 1 + tu::rnd_below(rng, 2);
            for (uint32_t g = 0; g < count; ++g) gens.push_back(tu::random_matrix(rng, p, n, n));
            MatAlgebra alg = generate_algebra(gens, tu::rnd_below(rng, 2) == 0);
            CHECK(span_is_mult_closed(alg.vectorized(), p, n));
            for (const Matrix& g : gens) CHECK(alg.contains(g));
        }
    }
}

TEST_CASE("single-matrix algebra dimension equals the minimal polynomial degree") {
    tu::Rng rng(22);
    for (uint64_t p : {2ull, 3ull, 5ull}) {
        for (int iter = 0; iter < 40; ++iter) {
            uint32_t n = 1 + tu::rnd_below(rng, 6);
            Matrix m = tu::random_matrix(rng, p, n, n);
            MatAlgebra alg = generate_algebra({m}, true);
            CHECK(is_commutative(alg));
            CHECK(alg.dim() == minimal_poly_degree(m));
        }
    }
}

TEST_CASE("algebra_square is an ideal of commutative algebras") {
    tu::Rng rng(23);
    for (uint64_t p : {2ull, 3ull}) {
        for (int iter = 0; iter < 30; ++iter) {
            uint32_t n = 2 + tu::rnd_below(rng, 5);
            MatAlgebra alg = tu::random_poly_algebra(rng, p, n, tu::rnd_below(rng, 2) == 0);
            MatAlgebra sq = algebra_square(alg);
            CHECK(alg.contains_span(sq));
            CHECK(is_ideal(sq, alg));
        }
    }
}

TEST_CASE("orbit spaces of commutative algebras are invariant under the basis") {
    tu::Rng rng(24);
    for (int iter = 0; iter < 40; ++iter) {
        uint64_t p = iter % 2 == 0 ? 2 : 3;
        uint32_t n = 2 + tu::rnd_below(rng, 5);
        MatAlgebra alg = tu::random_poly_algebra(rng, p, n, false);
        Vec x = tu::random_vec(rng, p, n);
        Subspace orbit = image_of_vector(alg, x);
        for (const Matrix& b : alg.basis()) {
            for (uint32_t r = 0; r < orbit.dim(); ++r) {
                CHECK(orbit.contains(b.apply(orbit.basis_row(r))));
            }
        }
    }
}
