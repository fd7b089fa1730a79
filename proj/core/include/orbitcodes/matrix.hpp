#ifndef ORBITCODES_MATRIX_HPP
#define ORBITCODES_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "orbitcodes/errors.hpp"

namespace orbitcodes {

/// Dense row-major matrix over the prime field F_q, one digit per byte.
/// Entries are kept reduced mod q at all times.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, unsigned q);

    static Matrix from_rows(unsigned q, const std::vector<std::vector<std::uint8_t>>& rows);
    static Matrix identity(std::size_t n, unsigned q);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned q() const { return q_; }

    std::uint8_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::uint8_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const std::uint8_t> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    std::span<std::uint8_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    void append_row(std::span<const std::uint8_t> r);
    void append_rows(const Matrix& other);

    bool row_is_zero(std::size_t i) const;

    const std::vector<std::uint8_t>& data() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    unsigned q_ = 2;
    std::vector<std::uint8_t> data_;
};

/// In-place reduced row echelon form; returns the pivot columns.
/// Zero rows are removed.
std::vector<std::size_t> rref_in_place(Matrix& m);

Matrix rref(Matrix m);
std::size_t rank(Matrix m);

/// Rank of the rows of a stacked on the rows of b (no copy of inputs kept).
std::size_t rank_of_stack(const Matrix& a, const Matrix& b);

Matrix vconcat(const Matrix& a, const Matrix& b);
Matrix hconcat(const Matrix& a, const Matrix& b);

/// Basis of the right kernel {x : m x^T = 0}, returned as RREF rows.
Matrix nullspace(const Matrix& m);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_pow(Matrix a, std::uint64_t e);

/// Row-major lexicographic comparison of the digit sequences (shapes first).
int compare_bytes(const Matrix& a, const Matrix& b);

} // namespace orbitcodes

#endif
