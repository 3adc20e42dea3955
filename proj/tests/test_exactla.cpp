#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pgrl/matrix.hpp"
#include "pgrl/subspace.hpp"
#include "testutil.hpp"

using namespace pgrl;
namespace tu = pgrl::testutil;

namespace {

// Test-only naive elimination over F_p, used as the independent oracle for
// the word-parallel GF(2) path.
std::vector<Vec> naive_rref(std::vector<Vec> rows, uint32_t cols, uint64_t p) {
    size_t lead = 0;
    for (uint32_t c = 0; c < cols && lead < rows.size(); ++c) {
        size_t sel = lead;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[lead]);
        uint64_t inv = *inv_mod(rows[lead][c], p);
        for (uint32_t j = 0; j < cols; ++j) {
            rows[lead][j] = static_cast<uint32_t>(rows[lead][j] * inv % p);
        }
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][c] == 0) continue;
            uint64_t f = rows[r][c];
            for (uint32_t j = 0; j < cols; ++j) {
                rows[r][j] = static_cast<uint32_t>((rows[r][j] + (p - f) * rows[lead][j]) % p);
            }
        }
        ++lead;
    }
    return rows;
}

Vec unit_vec(uint32_t n, uint32_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

} // namespace

TEST_CASE("prime modulus check is deterministic and strict") {
    CHECK_NOTHROW(PrimeModulus(2));
    CHECK_NOTHROW(PrimeModulus(3));
    CHECK_NOTHROW(PrimeModulus(2147483647)); // 2^31 - 1, prime
    CHECK_THROWS_AS(PrimeModulus(1), ModulusNotPrime);
    CHECK_THROWS_AS(PrimeModulus(4), ModulusNotPrime);
    CHECK_THROWS_AS(PrimeModulus(1000000), ModulusNotPrime);
}

TEST_CASE("rref: identity, zero and the rank-1 F2 case") {
    Matrix id3 = Matrix::identity(2, 3);
    RrefResult r = rref(id3);
    CHECK(r.rref == id3);
    CHECK(r.rank == 3);
    CHECK(r.pivots == std::vector<uint32_t>{0, 1, 2});

    Matrix z(3, 2, 4);
    RrefResult rz = rref(z);
    CHECK(rz.rref == z);
    CHECK(rz.rank == 0);
    CHECK(rz.pivots.empty());

    // [[1,1],[1,1]] over F_2: subtracting row 0 from row 1 clears it.
    Matrix ones = Matrix::from_rows(2, {{1, 1}, {1, 1}}, 2);
    RrefResult ro = rref(ones);
    CHECK(ro.rank == 1);
    CHECK(ro.rref == Matrix::from_rows(2, {{1, 1}, {0, 0}}, 2));
}

TEST_CASE("rref rejects composite moduli") {
    Matrix m(4, 2, 2);
    CHECK_THROWS_AS(rref(m), ModulusNotPrime);
}

TEST_CASE("dimension caps are hard errors") {
    CHECK_THROWS_AS(Matrix(2, 1, 600), TooLarge);
    // GF(2) elimination is capped at word width.
    Matrix wide(2, 1, 65);
    CHECK_THROWS_AS(rref(wide), TooLarge);
    // Odd-prime elimination accepts the full width.
    Matrix w3(3, 1, 65);
    CHECK_NOTHROW(rref(w3));
}

TEST_CASE("kernel: identity, zero map, nilpotent Jordan block") {
    CHECK(kernel(Matrix::identity(5, 4)).dim() == 0);

    Subspace full = kernel(Matrix(3, 4, 4));
    CHECK(full.dim() == 4);
    CHECK(full == Subspace::full(3, 4));

    // J(x,y,z) = (y,z,0), so the kernel is exactly span{e1}.
    Matrix j = tu::jordan_nilpotent(2, 3);
    Subspace k = kernel(j);
    CHECK(k.dim() == 1);
    CHECK(k.contains(unit_vec(3, 0)));
}

TEST_CASE("rank-nullity on random matrices") {
    tu::Rng rng(11);
    for (uint64_t p : {2ull, 3ull, 5ull}) {
        for (int iter = 0; iter < 100; ++iter) {
            uint32_t rows = 1 + tu::rnd_below(rng, 6);
            uint32_t cols = 1 + tu::rnd_below(rng, 6);
            Matrix m = tu::random_matrix(rng, p, rows, cols);
            CHECK(kernel(m).dim() + rank(m) == cols);
        }
    }
}

TEST_CASE("rref is idempotent on random matrices") {
    tu::Rng rng(12);
    for (uint64_t p : {2ull, 3ull, 7ull}) {
        for (int iter = 0; iter < 50; ++iter) {
            Matrix m = tu::random_matrix(rng, p, 1 + tu::rnd_below(rng, 5), 1 + tu::rnd_below(rng, 5));
            Matrix once = rref(m).rref;
            CHECK(rref(once).rref == once);
        }
    }
}

TEST_CASE("GF(2) elimination agrees with the naive oracle") {
    tu::Rng rng(13);
    for (int iter = 0; iter < 200; ++iter) {
        uint32_t rows = 1 + tu::rnd_below(rng, 7);
        uint32_t cols = 1 + tu::rnd_below(rng, 9);
        Matrix m = tu::random_matrix(rng, 2, rows, cols);
        std::vector<Vec> raw;
        for (uint32_t r = 0; r < rows; ++r) raw.push_back(m.row(r));
        std::vector<Vec> expect = naive_rref(raw, cols, 2);
        Matrix got = rref(m).rref;
        for (uint32_t r = 0; r < rows; ++r) CHECK(got.row(r) == expect[r]);
    }
}

TEST_CASE("subspace canonicality: different spanning sets, identical basis") {
    tu::Rng rng(14);
    for (uint64_t p : {2ull, 5ull}) {
        for (int iter = 0; iter < 50; ++iter) {
            uint32_t n = 2 + tu::rnd_below(rng, 5);
            Matrix m = tu::random_matrix(rng, p, 1 + tu::rnd_below(rng, 4), n);
            Subspace s = Subspace::span_of(m);

            // Re-span from shuffled random combinations of the basis rows.
            std::vector<Vec> combos;
            for (int c = 0; c < 6; ++c) {
                Vec acc(n, 0);
                for (uint32_t r = 0; r < s.dim(); ++r) {
                    uint64_t coeff = tu::rnd_below(rng, p);
                    for (uint32_t i = 0; i < n; ++i) {
                        acc[i] = static_cast<uint32_t>((acc[i] + coeff * s.basis().at(r, i)) % p);
                    }
                }
                combos.push_back(acc);
            }
            for (uint32_t r = 0; r < s.dim(); ++r) combos.push_back(s.basis_row(r));
            Subspace t = Subspace::span_of(p, n, combos);
            CHECK(s == t);
            CHECK(s.basis().entries() == t.basis().entries());
        }
    }
}

TEST_CASE("codim: trivial cases and the containment guard") {
    Subspace full5 = Subspace::full(2, 5);
    CHECK(codim(full5, full5) == 0);
    CHECK(codim(Subspace::zero(2, 5), full5) == 5);

    Subspace e1 = Subspace::span_of(2, 3, {unit_vec(3, 0)});
    Subspace e12 = Subspace::span_of(2, 3, {unit_vec(3, 0), unit_vec(3, 1)});
    CHECK(codim(e1, e12) == 1);

    Subspace e3 = Subspace::span_of(2, 3, {unit_vec(3, 2)});
    CHECK_THROWS_AS(codim(e3, e12), NotASubspace);
}

TEST_CASE("sum/intersect satisfy the dimension law on random pairs") {
    tu::Rng rng(15);
    for (uint64_t p : {2ull, 3ull}) {
        for (int iter = 0; iter < 150; ++iter) {
            uint32_t n = 2 + tu::rnd_below(rng, 5);
            Subspace a = Subspace::span_of(tu::random_matrix(rng, p, 1 + tu::rnd_below(rng, n), n));
            Subspace b = Subspace::span_of(tu::random_matrix(rng, p, 1 + tu::rnd_below(rng, n), n));
            Subspace s = subspace_sum(a, b);
            Subspace i = subspace_intersect(a, b);
            CHECK(a.dim() + b.dim() == s.dim() + i.dim());
            CHECK(s.contains(a));
            CHECK(s.contains(b));
            CHECK(a.contains(i));
            CHECK(b.contains(i));
        }
    }
}

TEST_CASE("preimage: trivial cases and the brute-force F2 oracle") {
    Subspace w = Subspace::span_of(2, 2, {unit_vec(2, 0)});
    CHECK(preimage(Matrix::identity(2, 2), w) == w);
    CHECK(preimage(Matrix(2, 2, 2), w) == Subspace::full(2, 2));

    // m = diag(1,0): enumerate all four vectors of F_2^2; m v = (v1, 0) is
    // always in span{e1}, so the preimage is the whole plane.
    Matrix m = Matrix::from_rows(2, {{1, 0}, {0, 0}}, 2);
    Subspace pre = preimage(m, w);
    for (uint32_t bits = 0; bits < 4; ++bits) {
        Vec v{bits & 1u, (bits >> 1) & 1u};
        Vec mv = m.apply(v);
        bool in_w = w.contains(mv);
        CHECK(in_w == pre.contains(v));
        CHECK(in_w); // all of them land in w here
    }
    CHECK(pre == Subspace::full(2, 2));

    Matrix shaped(2, 3, 2);
    CHECK_THROWS_AS(preimage(shaped, Subspace::full(2, 2)), ShapeError);
}

TEST_CASE("preimage contains the kernel and maps into the target") {
    tu::Rng rng(16);
    for (uint64_t p : {2ull, 3ull, 5ull}) {
        for (int iter = 0; iter < 100; ++iter) {
            uint32_t rows = 1 + tu::rnd_below(rng, 5);
            uint32_t cols = 1 + tu::rnd_below(rng, 5);
            Matrix m = tu::random_matrix(rng, p, rows, cols);
            Subspace w = Subspace::span_of(tu::random_matrix(rng, p, 1 + tu::rnd_below(rng, rows), rows));
            Subspace pre = preimage(m, w);
            CHECK(pre.contains(kernel(m)));
            for (uint32_t r = 0; r < pre.dim(); ++r) {
                CHECK(w.contains(m.apply(pre.basis_row(r))));
            }
        }
    }
}

TEST_CASE("subspace enumeration hits the Gaussian-binomial counts") {
    // Number of r-dim subspaces of F_2^4: 1, 15, 35, 15, 1 (total 67).
    std::vector<uint32_t> expect{1, 15, 35, 15, 1};
    uint32_t total = 0;
    for (uint32_t r = 0; r <= 4; ++r) {
        uint32_t count = 0;
        enumerate_subspaces(2, 4, r, [&](const Subspace& s) {
            CHECK(s.dim() == r);
            ++count;
        });
        CHECK(count == expect[r]);
        total += count;
    }
    CHECK(total == 67);

    // F_3^3: 1 + 13 + 13 + 1 = 28 subspaces in total.
    uint32_t total3 = 0;
    enumerate_all_subspaces(3, 3, [&](const Subspace&) { ++total3; });
    CHECK(total3 == 28);

    // 4-dim subspaces of F_2^5: 31 of them.
    uint32_t c45 = 0;
    enumerate_subspaces(2, 5, 4, [&](const Subspace&) { ++c45; });
    CHECK(c45 == 31);
}

TEST_CASE("enumerate_vectors walks exactly p^dim vectors") {
    Subspace s = Subspace::span_of(3, 4, {unit_vec(4, 1), unit_vec(4, 3)});
    uint32_t count = 0;
    enumerate_vectors(s, [&](const Vec& v) {
        CHECK(s.contains(v));
        ++count;
    });
    CHECK(count == 9);
}

TEST_CASE("matrix arithmetic basics") {
    Matrix a = Matrix::from_rows(5, {{1, 2}, {3, 4}}, 2);
    Matrix b = Matrix::from_rows(5, {{0, 1}, {1, 0}}, 2);
    CHECK(a * b == Matrix::from_rows(5, {{2, 1}, {4, 3}}, 2));
    CHECK(a + a == a.scaled(2));
    CHECK((a - a).is_zero());
    CHECK(a.negated() + a == Matrix(5, 2, 2));
    CHECK(a.pow(0).is_identity());
    CHECK(a.pow(3) == a * a * a);
    CHECK(Matrix::from_signed(5, 1, 2, {-1, -7}) == Matrix::from_rows(5, {{4, 3}}, 2));

    Matrix c(7, 2, 2);
    CHECK_THROWS_AS(a + c, ShapeError);
    CHECK_THROWS_AS(a * Matrix(5, 3, 3), ShapeError);
}
