#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pgrl/arith.hpp"
#include "pgrl/errors.hpp"

namespace pgrl {

/// Coordinate vector over Z/m, entries reduced into [0, m).
using Vec = std::vector<uint32_t>;

/// A prime that passed a deterministic primality check at construction.
struct PrimeModulus {
    uint64_t p;
    explicit PrimeModulus(uint64_t p_);
};

// Widest row/ambient dimension the elimination kernels accept. GF(2) rows
// are stored bit-packed in 64-bit words and capped separately.
inline constexpr uint32_t kMaxDim = 512;
inline constexpr uint32_t kMaxDimGF2 = 64;

/// Dense matrix over Z/m, row-major. The modulus may be a prime power
/// (nilpotent-ring arithmetic); row reduction is only defined for prime m.
class Matrix {
public:
    Matrix(uint64_t modulus, uint32_t rows, uint32_t cols); // zero matrix

    static Matrix identity(uint64_t modulus, uint32_t n);
    static Matrix from_rows(uint64_t modulus, const std::vector<Vec>& rows, uint32_t cols);
    // Entries given as signed integers, reduced into [0, modulus).
    static Matrix from_signed(uint64_t modulus, uint32_t rows, uint32_t cols,
                              const std::vector<int64_t>& entries);

    uint64_t modulus() const { return mod_; }
    uint32_t rows() const { return rows_; }
    uint32_t cols() const { return cols_; }

    uint32_t at(uint32_t r, uint32_t c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    void set(uint32_t r, uint32_t c, uint64_t v) {
        e_[static_cast<size_t>(r) * cols_ + c] = static_cast<uint32_t>(v % mod_);
    }
    const Vec& entries() const { return e_; }
    Vec row(uint32_t r) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(uint64_t c) const;
    Matrix negated() const;
    Matrix transpose() const;
    Matrix pow(uint64_t e) const; // square matrices only

    /// m·v for a column vector v of length cols().
    Vec apply(std::span<const uint32_t> v) const;

    bool is_zero() const;
    bool is_identity() const;
    bool is_square() const { return rows_ == cols_; }

    bool operator==(const Matrix& o) const = default;

    /// FNV-1a over modulus, shape and entries; used as a dedup key.
    uint64_t hash() const;

    std::string to_string() const;

private:
    uint64_t mod_;
    uint32_t rows_, cols_;
    Vec e_;

    void check_same_shape(const Matrix& o) const;
};

struct RrefResult {
    Matrix rref;
    uint32_t rank;
    std::vector<uint32_t> pivots;
};

/// Inverse of a square matrix over F_p via augmented elimination.
/// Throws ShapeError for non-square input and Error for singular input.
Matrix inverse_matrix(const Matrix& m);

/// Unique reduced row-echelon form over F_p. Throws ModulusNotPrime for
/// composite moduli and TooLarge past the supported widths.
RrefResult rref(const Matrix& m);

uint32_t rank(const Matrix& m);

// Internal elimination entry point shared with the subspace layer: rows are
// reduced in place, zero rows dropped, pivot columns returned. `width_cap`
// lets internal callers (Zassenhaus doubling) exceed the public GF(2) cap.
std::vector<uint32_t> eliminate_rows(std::vector<Vec>& rows, uint32_t cols, uint64_t p,
                                     uint32_t width_cap = 0);

// Reduce v in place against RREF rows with the given pivot columns.
void reduce_against(Vec& v, const std::vector<Vec>& rows, const std::vector<uint32_t>& pivots,
                    uint64_t p);

} // namespace pgrl
