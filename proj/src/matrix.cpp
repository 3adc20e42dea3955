#include "pgrl/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace pgrl {

PrimeModulus::PrimeModulus(uint64_t p_) : p(p_) {
    if (p < 2 || p > INT32_MAX) {
        throw ModulusNotPrime("modulus out of range [2, 2^31-1]: " + std::to_string(p));
    }
    if (!is_prime(p)) {
        throw ModulusNotPrime("modulus is not prime: " + std::to_string(p));
    }
}

Matrix::Matrix(uint64_t modulus, uint32_t rows, uint32_t cols)
    : mod_(modulus), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {
    if (modulus < 2 || modulus > INT32_MAX) {
        throw ShapeError("matrix modulus out of range: " + std::to_string(modulus));
    }
    if (rows > kMaxDim || cols > kMaxDim) {
        throw TooLarge("matrix dimension exceeds " + std::to_string(kMaxDim));
    }
}

Matrix Matrix::identity(uint64_t modulus, uint32_t n) {
    Matrix m(modulus, n, n);
    for (uint32_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

Matrix Matrix::from_rows(uint64_t modulus, const std::vector<Vec>& rows, uint32_t cols) {
    Matrix m(modulus, static_cast<uint32_t>(rows.size()), cols);
    for (uint32_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw ShapeError("row length mismatch");
        for (uint32_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
    }
    return m;
}

Matrix Matrix::from_signed(uint64_t modulus, uint32_t rows, uint32_t cols,
                           const std::vector<int64_t>& entries) {
    if (entries.size() != static_cast<size_t>(rows) * cols) {
        throw ShapeError("entry count mismatch");
    }
    Matrix m(modulus, rows, cols);
    const int64_t mm = static_cast<int64_t>(modulus);
    for (size_t i = 0; i < entries.size(); ++i) {
        int64_t v = entries[i] % mm;
        if (v < 0) v += mm;
        m.e_[i] = static_cast<uint32_t>(v);
    }
    return m;
}

Vec Matrix::row(uint32_t r) const {
    return Vec(e_.begin() + static_cast<size_t>(r) * cols_,
               e_.begin() + static_cast<size_t>(r + 1) * cols_);
}

void Matrix::check_same_shape(const Matrix& o) const {
    if (mod_ != o.mod_ || rows_ != o.rows_ || cols_ != o.cols_) {
        throw ShapeError("matrix shape/modulus mismatch");
    }
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix out(mod_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) {
        out.e_[i] = static_cast<uint32_t>((static_cast<uint64_t>(e_[i]) + o.e_[i]) % mod_);
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix out(mod_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) {
        out.e_[i] = static_cast<uint32_t>((static_cast<uint64_t>(e_[i]) + mod_ - o.e_[i]) % mod_);
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (mod_ != o.mod_) throw ShapeError("modulus mismatch in product");
    if (cols_ != o.rows_) throw ShapeError("inner dimension mismatch in product");
    Matrix out(mod_, rows_, o.cols_);

    // GF(2) fast path: rows of o packed into single words, product rows are
    // XOR accumulations. Group enumeration lives on this path.
    if (mod_ == 2 && o.cols_ <= kMaxDimGF2) {
        std::vector<uint64_t> packed(o.rows_, 0);
        for (uint32_t r = 0; r < o.rows_; ++r) {
            uint64_t w = 0;
            for (uint32_t c = 0; c < o.cols_; ++c) {
                w |= static_cast<uint64_t>(o.at(r, c)) << c;
            }
            packed[r] = w;
        }
        for (uint32_t r = 0; r < rows_; ++r) {
            uint64_t acc = 0;
            for (uint32_t k = 0; k < cols_; ++k) {
                if (at(r, k)) acc ^= packed[k];
            }
            for (uint32_t c = 0; c < o.cols_; ++c) {
                out.set(r, c, (acc >> c) & 1u);
            }
        }
        return out;
    }

    for (uint32_t r = 0; r < rows_; ++r) {
        for (uint32_t c = 0; c < o.cols_; ++c) {
            uint64_t acc = 0;
            for (uint32_t k = 0; k < cols_; ++k) {
                acc = (acc + static_cast<uint64_t>(at(r, k)) * o.at(k, c)) % mod_;
            }
            out.set(r, c, acc);
        }
    }
    return out;
}

Matrix Matrix::scaled(uint64_t c) const {
    c %= mod_;
    Matrix out(mod_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) {
        out.e_[i] = static_cast<uint32_t>(e_[i] * c % mod_);
    }
    return out;
}

Matrix Matrix::negated() const {
    Matrix out(mod_, rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) {
        out.e_[i] = static_cast<uint32_t>((mod_ - e_[i]) % mod_);
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(mod_, cols_, rows_);
    for (uint32_t r = 0; r < rows_; ++r) {
        for (uint32_t c = 0; c < cols_; ++c) out.set(c, r, at(r, c));
    }
    return out;
}

Matrix Matrix::pow(uint64_t e) const {
    if (!is_square()) throw ShapeError("pow requires a square matrix");
    Matrix acc = identity(mod_, rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Vec Matrix::apply(std::span<const uint32_t> v) const {
    if (v.size() != cols_) throw ShapeError("vector length mismatch in apply");
    Vec out(rows_, 0);
    for (uint32_t r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        for (uint32_t c = 0; c < cols_; ++c) {
            acc = (acc + static_cast<uint64_t>(at(r, c)) * v[c]) % mod_;
        }
        out[r] = static_cast<uint32_t>(acc);
    }
    return out;
}

bool Matrix::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](uint32_t x) { return x == 0; });
}

bool Matrix::is_identity() const {
    if (!is_square()) return false;
    for (uint32_t r = 0; r < rows_; ++r) {
        for (uint32_t c = 0; c < cols_; ++c) {
            if (at(r, c) != (r == c ? 1u : 0u)) return false;
        }
    }
    return true;
}

uint64_t Matrix::hash() const {
    uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(mod_);
    mix((static_cast<uint64_t>(rows_) << 32) | cols_);
    for (uint32_t v : e_) mix(v);
    return h;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (uint32_t r = 0; r < rows_; ++r) {
        for (uint32_t c = 0; c < cols_; ++c) {
            if (c) os << ' ';
            os << at(r, c);
        }
        os << '\n';
    }
    return os.str();
}

namespace {

// Word-parallel GF(2) elimination; rows held as multi-word bitsets.
std::vector<uint32_t> eliminate_gf2(std::vector<Vec>& rows, uint32_t cols) {
    const uint32_t words = (cols + 63) / 64;
    std::vector<std::vector<uint64_t>> packed(rows.size(), std::vector<uint64_t>(words, 0));
    for (size_t r = 0; r < rows.size(); ++r) {
        for (uint32_t c = 0; c < cols; ++c) {
            if (rows[r][c]) packed[r][c / 64] |= 1ULL << (c % 64);
        }
    }

    auto test = [&](size_t r, uint32_t c) { return (packed[r][c / 64] >> (c % 64)) & 1u; };

    std::vector<uint32_t> pivots;
    size_t lead = 0;
    for (uint32_t c = 0; c < cols && lead < packed.size(); ++c) {
        size_t sel = lead;
        while (sel < packed.size() && !test(sel, c)) ++sel;
        if (sel == packed.size()) continue;
        std::swap(packed[sel], packed[lead]);
        for (size_t r = 0; r < packed.size(); ++r) {
            if (r != lead && test(r, c)) {
                for (uint32_t w = 0; w < words; ++w) packed[r][w] ^= packed[lead][w];
            }
        }
        pivots.push_back(c);
        ++lead;
    }

    rows.assign(pivots.size(), Vec(cols, 0));
    for (size_t r = 0; r < pivots.size(); ++r) {
        for (uint32_t c = 0; c < cols; ++c) rows[r][c] = static_cast<uint32_t>(test(r, c));
    }
    return pivots;
}

std::vector<uint32_t> eliminate_modp(std::vector<Vec>& rows, uint32_t cols, uint64_t p) {
    std::vector<uint32_t> pivots;
    size_t lead = 0;
    for (uint32_t c = 0; c < cols && lead < rows.size(); ++c) {
        size_t sel = lead;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[lead]);

        uint64_t inv = *inv_mod(rows[lead][c], p);
        for (uint32_t j = c; j < cols; ++j) {
            rows[lead][j] = static_cast<uint32_t>(rows[lead][j] * inv % p);
        }
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == lead || rows[r][c] == 0) continue;
            uint64_t f = rows[r][c];
            for (uint32_t j = c; j < cols; ++j) {
                rows[r][j] = static_cast<uint32_t>(
                    (rows[r][j] + (p - f % p) * rows[lead][j]) % p);
            }
        }
        pivots.push_back(c);
        ++lead;
    }
    rows.resize(pivots.size());
    return pivots;
}

} // namespace

std::vector<uint32_t> eliminate_rows(std::vector<Vec>& rows, uint32_t cols, uint64_t p,
                                     uint32_t width_cap) {
    if (!is_prime(p)) throw ModulusNotPrime("row reduction needs a prime modulus");
    const uint32_t cap = width_cap != 0 ? width_cap : (p == 2 ? kMaxDimGF2 : kMaxDim);
    if (cols > cap) {
        throw TooLarge("elimination width " + std::to_string(cols) + " exceeds cap " +
                       std::to_string(cap));
    }
    if (p == 2) return eliminate_gf2(rows, cols);
    return eliminate_modp(rows, cols, p);
}

void reduce_against(Vec& v, const std::vector<Vec>& rows, const std::vector<uint32_t>& pivots,
                    uint64_t p) {
    for (size_t t = 0; t < rows.size(); ++t) {
        uint64_t f = v[pivots[t]];
        if (f == 0) continue;
        for (uint32_t c = 0; c < v.size(); ++c) {
            v[c] = static_cast<uint32_t>((v[c] + (p - f) * rows[t][c]) % p);
        }
    }
}

RrefResult rref(const Matrix& m) {
    std::vector<Vec> rows;
    rows.reserve(m.rows());
    for (uint32_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    std::vector<uint32_t> pivots = eliminate_rows(rows, m.cols(), m.modulus());

    Matrix out(m.modulus(), m.rows(), m.cols());
    for (uint32_t r = 0; r < rows.size(); ++r) {
        for (uint32_t c = 0; c < m.cols(); ++c) out.set(r, c, rows[r][c]);
    }
    return {std::move(out), static_cast<uint32_t>(pivots.size()), std::move(pivots)};
}

uint32_t rank(const Matrix& m) { return rref(m).rank; }

Matrix inverse_matrix(const Matrix& m) {
    if (!m.is_square()) throw ShapeError("inverse needs a square matrix");
    const uint32_t n = m.rows();
    std::vector<Vec> rows;
    rows.reserve(n);
    for (uint32_t r = 0; r < n; ++r) {
        Vec z(2 * n, 0);
        Vec row = m.row(r);
        std::copy(row.begin(), row.end(), z.begin());
        z[n + r] = 1;
        rows.push_back(std::move(z));
    }
    eliminate_rows(rows, 2 * n, m.modulus(), 2 * kMaxDim);
    if (rows.size() < n) throw Error("matrix is singular");
    for (uint32_t r = 0; r < n; ++r) {
        for (uint32_t c = 0; c < n; ++c) {
            if (rows[r][c] != (r == c ? 1u : 0u)) throw Error("matrix is singular");
        }
    }
    Matrix out(m.modulus(), n, n);
    for (uint32_t r = 0; r < n; ++r) {
        for (uint32_t c = 0; c < n; ++c) out.set(r, c, rows[r][n + c]);
    }
    return out;
}

} // namespace pgrl
