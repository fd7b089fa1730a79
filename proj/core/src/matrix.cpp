#include "orbitcodes/matrix.hpp"

#include <algorithm>
#include <cstring>

namespace orbitcodes {

namespace {

// c^{-1} mod q for prime q
inline unsigned mod_inverse(unsigned c, unsigned q) {
    unsigned r = 1, b = c % q, e = q - 2;
    while (e) {
        if (e & 1) r = r * b % q;
        b = b * b % q;
        e >>= 1;
    }
    return r;
}

// rows[dst] -= c * rows[src]
inline void row_axpy(std::uint8_t* dst, const std::uint8_t* src, unsigned c, unsigned q,
                     std::size_t cols) {
    if (q == 2) {
        for (std::size_t j = 0; j < cols; ++j) dst[j] ^= src[j];
        return;
    }
    for (std::size_t j = 0; j < cols; ++j) {
        unsigned v = dst[j] + (q - c) * src[j] % q;
        dst[j] = static_cast<std::uint8_t>(v >= q ? v - q : v);
    }
}

} // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, unsigned q)
    : rows_(rows), cols_(cols), q_(q), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(unsigned q, const std::vector<std::vector<std::uint8_t>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size(), q);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw Error(errc::wrong_length, "ragged rows in Matrix::from_rows");
        std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * m.cols_);
    }
    return m;
}

Matrix Matrix::identity(std::size_t n, unsigned q) {
    Matrix m(n, n, q);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

void Matrix::append_row(std::span<const std::uint8_t> r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw Error(errc::wrong_length, "appended row width mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

void Matrix::append_rows(const Matrix& other) {
    if (rows_ == 0 && cols_ == 0) cols_ = other.cols_;
    if (other.cols_ != cols_) throw Error(errc::wrong_length, "stacked matrix width mismatch");
    data_.insert(data_.end(), other.data_.begin(), other.data_.end());
    rows_ += other.rows_;
}

bool Matrix::row_is_zero(std::size_t i) const {
    auto r = row(i);
    return std::all_of(r.begin(), r.end(), [](std::uint8_t v) { return v == 0; });
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
    const unsigned q = m.q();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t next = 0; // next pivot row
    for (std::size_t col = 0; col < cols && next < rows; ++col) {
        std::size_t pr = next;
        while (pr < rows && m(pr, col) == 0) ++pr;
        if (pr == rows) continue;
        if (pr != next) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(pr, j), m(next, j));
        }
        unsigned pv = m(next, col);
        if (pv != 1) {
            unsigned inv = mod_inverse(pv, q);
            for (std::size_t j = col; j < cols; ++j)
                m(next, j) = static_cast<std::uint8_t>(m(next, j) * inv % q);
        }
        const std::uint8_t* prow = m.row(next).data();
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == next) continue;
            unsigned c = m(i, col);
            if (c) row_axpy(m.row(i).data(), prow, c, q, cols);
        }
        pivots.push_back(col);
        ++next;
    }
    // drop zero rows
    Matrix out(pivots.size(), cols, q);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        std::memcpy(out.row(i).data(), m.row(i).data(), cols);
    m = std::move(out);
    return pivots;
}

Matrix rref(Matrix m) {
    rref_in_place(m);
    return m;
}

std::size_t rank(Matrix m) {
    const unsigned q = m.q();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pr = r;
        while (pr < rows && m(pr, col) == 0) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t j = col; j < cols; ++j) std::swap(m(pr, j), m(r, j));
        unsigned pv = m(r, col);
        unsigned inv = pv == 1 ? 1 : mod_inverse(pv, q);
        const std::uint8_t* prow = m.row(r).data();
        for (std::size_t i = r + 1; i < rows; ++i) {
            unsigned c = m(i, col);
            if (!c) continue;
            c = c * inv % q;
            row_axpy(m.row(i).data() + col, prow + col, c, q, cols - col);
        }
        ++r;
    }
    return r;
}

std::size_t rank_of_stack(const Matrix& a, const Matrix& b) {
    Matrix s = a;
    s.append_rows(b);
    return rank(std::move(s));
}

Matrix vconcat(const Matrix& a, const Matrix& b) {
    Matrix s = a;
    s.append_rows(b);
    return s;
}

Matrix hconcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw Error(errc::dimension_mismatch, "hconcat row count");
    Matrix m(a.rows(), a.cols() + b.cols(), a.q());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::memcpy(m.row(i).data(), a.row(i).data(), a.cols());
        std::memcpy(m.row(i).data() + a.cols(), b.row(i).data(), b.cols());
    }
    return m;
}

Matrix nullspace(const Matrix& m) {
    const unsigned q = m.q();
    Matrix r = m;
    std::vector<std::size_t> pivots = rref_in_place(r);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix out(0, cols, q);
    std::vector<std::uint8_t> row(cols);
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::fill(row.begin(), row.end(), 0);
        row[fc] = 1;
        // kernel vector: x_{pivot_i} = -r(i, fc)
        for (std::size_t i = 0; i < pivots.size(); ++i)
            row[pivots[i]] = static_cast<std::uint8_t>((q - r(i, fc)) % q);
        out.append_row(row);
    }
    rref_in_place(out);
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(errc::dimension_mismatch, "mat_mul shapes");
    const unsigned q = a.q();
    Matrix out(a.rows(), b.cols(), q);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t l = 0; l < a.cols(); ++l) {
            unsigned c = a(i, l);
            if (!c) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out(i, j) = static_cast<std::uint8_t>((out(i, j) + c * b(l, j)) % q);
            }
        }
    }
    return out;
}

Matrix mat_pow(Matrix a, std::uint64_t e) {
    if (a.rows() != a.cols()) throw Error(errc::dimension_mismatch, "mat_pow needs square");
    Matrix r = Matrix::identity(a.rows(), a.q());
    while (e) {
        if (e & 1) r = mat_mul(r, a);
        a = mat_mul(a, a);
        e >>= 1;
    }
    return r;
}

int compare_bytes(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows() ? -1 : 1;
    if (a.cols() != b.cols()) return a.cols() < b.cols() ? -1 : 1;
    if (a.data() == b.data()) return 0;
    return a.data() < b.data() ? -1 : 1;
}

} // namespace orbitcodes
