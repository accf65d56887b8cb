#include "monocat/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "monocat/errors.hpp"

namespace monocat {

bool is_prime(Scalar p) {
    if (p < 2) return false;
    for (Scalar d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Scalar fp_pow(Scalar a, std::uint64_t e, Scalar p) {
    Scalar result = 1 % p;
    Scalar base = a % p;
    while (e) {
        if (e & 1) result = fp_mul(result, base, p);
        base = fp_mul(base, base, p);
        e >>= 1;
    }
    return result;
}

Scalar fp_inv(Scalar a, Scalar p) {
    if (a % p == 0) throw PreconditionError("inverse of zero in F_" + std::to_string(p));
    long long t = 0, newt = 1;
    long long r = p, newr = a % p;
    while (newr != 0) {
        long long q = r / newr;
        std::tie(t, newt) = std::make_pair(newt, t - q * newt);
        std::tie(r, newr) = std::make_pair(newr, r - q * newr);
    }
    return fp_reduce(t, p);
}

Scalar fp_reduce(long long v, Scalar p) {
    long long m = v % static_cast<long long>(p);
    if (m < 0) m += p;
    return static_cast<Scalar>(m);
}

Fp Fp::inverse() const { return {static_cast<long long>(fp_inv(value, p)), p}; }

Mat::Mat(std::size_t rows, std::size_t cols, Scalar p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

Mat::Mat(std::size_t rows, std::size_t cols, Scalar p, std::vector<Scalar> data)
    : rows_(rows), cols_(cols), p_(p), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw InputError("matrix data has wrong length");
}

Mat Mat::identity(std::size_t n, Scalar p) {
    Mat m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Mat Mat::from_rows(const std::vector<std::vector<long long>>& rows, Scalar p,
                   std::size_t cols_if_empty) {
    std::size_t c = rows.empty() ? cols_if_empty : rows.front().size();
    Mat m(rows.size(), c, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != c) throw InputError("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = fp_reduce(rows[i][j], p);
    }
    return m;
}

Mat Mat::column(const std::vector<Scalar>& v, Scalar p) { return Mat(v.size(), 1, p, v); }

bool Mat::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw PreconditionError("block out of range");
    Mat b(nr, nc, p_);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
        throw PreconditionError("set_block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::col(std::size_t c) const { return block(0, c, rows_, 1); }

std::vector<Scalar> Mat::col_vector(std::size_t c) const {
    std::vector<Scalar> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
    return v;
}

Mat Mat::select_cols(const std::vector<std::size_t>& cols) const {
    Mat m(rows_, cols.size(), p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(i, cols[j]);
    return m;
}

Mat Mat::select_rows(const std::vector<std::size_t>& rows) const {
    Mat m(rows.size(), cols_, p_);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(rows[i], j);
    return m;
}

Mat Mat::scaled(Scalar s) const {
    Mat m = *this;
    for (auto& x : m.data_) x = fp_mul(x, s % p_, p_);
    return m;
}

Mat Mat::flatten() const { return Mat(rows_ * cols_, 1, p_, data_); }

std::string Mat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    }
    os << "]";
    return os.str();
}

static void check_same_field(const Mat& a, const Mat& b) {
    if (a.p() != b.p()) throw PreconditionError("matrices over different fields");
}

Mat operator*(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.cols() != b.rows())
        throw PreconditionError("matrix product shape mismatch " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " * " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
    const Scalar p = a.p();
    Mat c(a.rows(), b.cols(), p);
    if (a.empty() || b.empty()) return c;
    std::vector<std::uint64_t> acc(b.cols());
    // Entries are < 2^16 in practice; flush the accumulator periodically anyway.
    const std::size_t flush = (p < (1u << 16)) ? (1u << 30) : 1;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        std::size_t since = 0;
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint64_t x = a(i, k);
            if (!x) continue;
            const Scalar* brow = &b.data()[k * b.cols()];
            for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += x * brow[j];
            if (++since >= flush) {
                for (auto& v : acc) v %= p;
                since = 0;
            }
        }
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<Scalar>(acc[j] % p);
    }
    return c;
}

Mat operator+(const Mat& a, const Mat& b) {
    check_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw PreconditionError("matrix sum shape mismatch");
    Mat c = a;
    for (std::size_t i = 0; i < c.data().size(); ++i)
        c.data()[i] = fp_add(a.data()[i], b.data()[i], a.p());
    return c;
}

Mat operator-(const Mat& a) {
    Mat c = a;
    for (auto& x : c.data()) x = fp_neg(x, a.p());
    return c;
}

Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

Mat hstack(const std::vector<Mat>& parts) {
    if (parts.empty()) throw PreconditionError("hstack of nothing");
    std::size_t r = parts.front().rows(), c = 0;
    for (const auto& m : parts) {
        if (m.rows() != r) throw PreconditionError("hstack row mismatch");
        c += m.cols();
    }
    Mat out(r, c, parts.front().p());
    std::size_t off = 0;
    for (const auto& m : parts) {
        out.set_block(0, off, m);
        off += m.cols();
    }
    return out;
}

Mat vstack(const std::vector<Mat>& parts) {
    if (parts.empty()) throw PreconditionError("vstack of nothing");
    std::size_t c = parts.front().cols(), r = 0;
    for (const auto& m : parts) {
        if (m.cols() != c) throw PreconditionError("vstack column mismatch");
        r += m.rows();
    }
    Mat out(r, c, parts.front().p());
    std::size_t off = 0;
    for (const auto& m : parts) {
        out.set_block(off, 0, m);
        off += m.rows();
    }
    return out;
}

Mat block_diag(const std::vector<Mat>& parts) {
    if (parts.empty()) throw PreconditionError("block_diag of nothing");
    std::size_t r = 0, c = 0;
    for (const auto& m : parts) r += m.rows(), c += m.cols();
    Mat out(r, c, parts.front().p());
    std::size_t ro = 0, co = 0;
    for (const auto& m : parts) {
        out.set_block(ro, co, m);
        ro += m.rows();
        co += m.cols();
    }
    return out;
}

Mat matrix_power(const Mat& a, std::uint64_t e) {
    Mat result = Mat::identity(a.rows(), a.p());
    Mat base = a;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

Rref rref(const Mat& m) {
    Rref out;
    out.reduced = m;
    Mat& a = out.reduced;
    const Scalar p = m.p();
    const std::size_t rows = a.rows(), cols = a.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (a(i, c)) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(piv, j));
        Scalar inv = fp_inv(a(r, c), p);
        for (std::size_t j = c; j < cols; ++j) a(r, j) = fp_mul(a(r, j), inv, p);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Scalar f = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (a(r, j)) a(i, j) = fp_sub(a(i, j), fp_mul(f, a(r, j), p), p);
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    return out;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
    Rref r = rref(m);
    const Scalar p = m.p();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k(m.cols(), free_cols.size(), p);
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t f = free_cols[j];
        k(f, j) = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i)
            k(r.pivots[i], j) = fp_neg(r.reduced(i, f), p);
    }
    return k;
}

Mat image_basis(const Mat& m) {
    Rref r = rref(m);
    return m.select_cols(r.pivots);
}

std::optional<LinearSolution> solve_linear(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw PreconditionError("solve_linear shape mismatch");
    const Scalar p = a.p();
    Mat aug = hstack({a, b});
    Rref r = rref(aug);
    for (auto c : r.pivots)
        if (c >= a.cols()) return std::nullopt;
    Mat x(a.cols(), b.cols(), p);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x(r.pivots[i], j) = r.reduced(i, a.cols() + j);
    LinearSolution s{x, kernel_basis(a)};
    return s;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    if (n == 0) return Mat(0, 0, m.p());
    Rref r = rref(hstack({m, Mat::identity(n, m.p())}));
    if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
    return r.reduced.block(0, n, n, n);
}

std::vector<std::size_t> complement_indices(const Mat& basis, std::size_t ambient) {
    RowSpace rs(ambient, basis.p());
    for (std::size_t j = 0; j < basis.cols(); ++j) rs.insert(basis.col_vector(j));
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < ambient && rs.dimension() < ambient; ++i) {
        std::vector<Scalar> e(ambient, 0);
        e[i] = 1;
        if (rs.insert(e)) out.push_back(i);
    }
    return out;
}

std::optional<Mat> coordinates(const Mat& basis, const Mat& v) {
    auto s = solve_linear(basis, v);
    if (!s) return std::nullopt;
    return s->particular;
}

SpanSolver::SpanSolver(const Mat& basis)
    : ambient_(basis.rows()), cols_(basis.cols()), p_(basis.p()) {
    // rref of [B | I]: rows whose left part is nonzero give the coordinate map.
    Rref r = rref(hstack({basis, Mat::identity(ambient_, p_)}));
    reduced_ = r.reduced;
    for (auto c : r.pivots) {
        if (c < cols_) pivots_.push_back(c);
    }
    if (pivots_.size() != cols_) throw PreconditionError("SpanSolver basis is not independent");
}

std::optional<std::vector<Scalar>> SpanSolver::solve(const std::vector<Scalar>& v) const {
    // For rows i of reduced_: left part L_i, right part R_i with L = R * B.
    // Then R * v gives coordinates on the pivot rows and must vanish elsewhere.
    std::vector<Scalar> coords(cols_, 0);
    for (std::size_t i = 0; i < ambient_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < ambient_; ++k) acc += static_cast<std::uint64_t>(reduced_(i, cols_ + k)) * v[k];
        Scalar val = static_cast<Scalar>(acc % p_);
        if (i < pivots_.size()) {
            coords[pivots_[i]] = val;
        } else if (val != 0) {
            return std::nullopt;
        }
    }
    return coords;
}

RowSpace::RowSpace(std::size_t width, Scalar p) : width_(width), p_(p) {}

std::vector<Scalar> RowSpace::reduce(std::vector<Scalar> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Scalar f = v[leads_[i]];
        if (!f) continue;
        const auto& r = rows_[i];
        for (std::size_t j = leads_[i]; j < width_; ++j)
            if (r[j]) v[j] = fp_sub(v[j], fp_mul(f, r[j], p_), p_);
    }
    return v;
}

std::vector<std::size_t> RowSpace::free_positions() const {
    std::vector<bool> lead(width_, false);
    for (auto l : leads_) lead[l] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < width_; ++i)
        if (!lead[i]) out.push_back(i);
    return out;
}

bool RowSpace::contains(std::vector<Scalar> v) const {
    v = reduce(std::move(v));
    return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

bool RowSpace::insert(std::vector<Scalar> v) {
    if (v.size() != width_) throw PreconditionError("RowSpace width mismatch");
    std::vector<Scalar> original = v;
    v = reduce(std::move(v));
    std::size_t lead = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (v[j]) {
            lead = j;
            break;
        }
    if (lead == width_) return false;
    Scalar inv = fp_inv(v[lead], p_);
    for (auto& x : v) x = fp_mul(x, inv, p_);
    // Keep rows fully reduced against each other.
    for (auto& r : rows_) {
        Scalar f = r[lead];
        if (!f) continue;
        for (std::size_t j = lead; j < width_; ++j)
            if (v[j]) r[j] = fp_sub(r[j], fp_mul(f, v[j], p_), p_);
    }
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    originals_.push_back(std::move(original));
    return true;
}

}  // namespace monocat
