#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace monocat {

using Scalar = std::uint32_t;

bool is_prime(Scalar p);

// Arithmetic in F_p. Inputs are assumed reduced.
inline Scalar fp_add(Scalar a, Scalar b, Scalar p) {
    Scalar s = a + b;
    return s >= p ? s - p : s;
}
inline Scalar fp_sub(Scalar a, Scalar b, Scalar p) { return a >= b ? a - b : a + p - b; }
inline Scalar fp_neg(Scalar a, Scalar p) { return a == 0 ? 0 : p - a; }
inline Scalar fp_mul(Scalar a, Scalar b, Scalar p) {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p);
}
Scalar fp_inv(Scalar a, Scalar p);
Scalar fp_pow(Scalar a, std::uint64_t e, Scalar p);
Scalar fp_reduce(long long v, Scalar p);

// A field element carrying its modulus.
struct Fp {
    Scalar value = 0;
    Scalar p = 2;

    Fp() = default;
    Fp(long long v, Scalar prime) : value(fp_reduce(v, prime)), p(prime) {}

    Fp operator+(Fp o) const { return {static_cast<long long>(fp_add(value, o.value, p)), p}; }
    Fp operator-(Fp o) const { return {static_cast<long long>(fp_sub(value, o.value, p)), p}; }
    Fp operator*(Fp o) const { return {static_cast<long long>(fp_mul(value, o.value, p)), p}; }
    Fp operator-() const { return {static_cast<long long>(fp_neg(value, p)), p}; }
    Fp inverse() const;
    bool operator==(const Fp& o) const { return value == o.value && p == o.p; }
};

// Dense matrix over F_p, row-major.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, Scalar p);
    Mat(std::size_t rows, std::size_t cols, Scalar p, std::vector<Scalar> data);

    static Mat identity(std::size_t n, Scalar p);
    static Mat from_rows(const std::vector<std::vector<long long>>& rows, Scalar p,
                         std::size_t cols_if_empty = 0);
    static Mat column(const std::vector<Scalar>& v, Scalar p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar p() const { return p_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Scalar>& data() const { return data_; }
    std::vector<Scalar>& data() { return data_; }

    bool is_zero() const;
    bool is_identity() const;
    Mat transpose() const;
    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Mat& b);
    Mat col(std::size_t c) const;
    std::vector<Scalar> col_vector(std::size_t c) const;
    Mat select_cols(const std::vector<std::size_t>& cols) const;
    Mat select_rows(const std::vector<std::size_t>& rows) const;
    Mat scaled(Scalar s) const;
    // Row-major flattening as a single column.
    Mat flatten() const;

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && data_ == o.data_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Scalar p_ = 2;
    std::vector<Scalar> data_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator-(const Mat& a);
Mat hstack(const std::vector<Mat>& parts);
Mat vstack(const std::vector<Mat>& parts);
Mat block_diag(const std::vector<Mat>& parts);
Mat matrix_power(const Mat& a, std::uint64_t e);

struct Rref {
    Mat reduced;
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank = 0;
};

// Reduced row echelon form; pivots are taken as the first nonzero entry of
// each column scanning left to right, top to bottom among unused rows.
Rref rref(const Mat& m);

std::size_t rank(const Mat& m);

// Basis of the null space, as columns.
Mat kernel_basis(const Mat& m);

// Basis of the column space, as columns chosen from m.
Mat image_basis(const Mat& m);

struct LinearSolution {
    Mat particular;  // one solution x of a x = b
    Mat kernel;      // basis of the homogeneous solutions, as columns
};

std::optional<LinearSolution> solve_linear(const Mat& a, const Mat& b);

std::optional<Mat> inverse(const Mat& m);

// Column indices of standard basis vectors that extend the column space of
// `basis` (assumed independent columns) to the whole space.
std::vector<std::size_t> complement_indices(const Mat& basis, std::size_t ambient);

// Coordinates of the columns of `v` in terms of the independent columns of
// `basis`. Returns nullopt if some column is outside the span.
std::optional<Mat> coordinates(const Mat& basis, const Mat& v);

// Reusable coordinate solver for a fixed set of independent columns.
class SpanSolver {
public:
    SpanSolver() = default;
    explicit SpanSolver(const Mat& basis);
    std::size_t ambient() const { return ambient_; }
    std::size_t dimension() const { return pivots_.size(); }
    // Coordinates of v (a column vector as a flat list), or nullopt.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& v) const;
    bool contains(const std::vector<Scalar>& v) const { return solve(v).has_value(); }

private:
    std::size_t ambient_ = 0;
    std::size_t cols_ = 0;
    Scalar p_ = 2;
    Mat reduced_;  // rref of [basis | I]
    std::vector<std::size_t> pivots_;
};

// Incrementally maintained row space, used for span tests and closures.
class RowSpace {
public:
    RowSpace(std::size_t width, Scalar p);
    // Returns true if v was independent of what was there and got added.
    bool insert(std::vector<Scalar> v);
    bool contains(std::vector<Scalar> v) const;
    std::size_t dimension() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    // The inserted original vectors that were independent, in insertion order.
    const std::vector<std::vector<Scalar>>& generators() const { return originals_; }
    // Positions of leading entries; the remainder of reduce() vanishes there.
    const std::vector<std::size_t>& leads() const { return leads_; }
    // Positions where a remainder can be nonzero, in increasing order.
    std::vector<std::size_t> free_positions() const;
    // Reduce v modulo the span; returns the remainder.
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;

private:
    std::size_t width_;
    Scalar p_;
    std::vector<std::vector<Scalar>> rows_;  // echelon rows, leading entry 1
    std::vector<std::size_t> leads_;
    std::vector<std::vector<Scalar>> originals_;
};

}  // namespace monocat
