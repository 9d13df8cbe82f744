#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclica/rational.hpp"

namespace cyclica {

struct Entry {
    std::uint32_t idx;
    Rational val;
    friend bool operator==(const Entry& a, const Entry& b) { return a.idx == b.idx && a.val == b.val; }
};

/// Sparse vector: entries sorted by index, no stored zeros.
using SparseVec = std::vector<Entry>;

/// y += a * x
void axpy(SparseVec& y, const Rational& a, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Rational& a);
SparseVec unit_vec(std::uint32_t i);
/// Coefficient at index i (zero when absent).
Rational coeff(const SparseVec& v, std::uint32_t i);
/// Builds a sorted sparse vector from unsorted (index, value) pairs, summing duplicates.
SparseVec normalize(std::vector<Entry> raw);
SparseVec shifted(const SparseVec& v, std::uint32_t offset);

/// Exact rational matrix stored as sparse rows. As a linear map the matrix
/// acts on column vectors, so cols() is the domain and rows() the codomain.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix from_dense(const std::vector<std::vector<Rational>>& rows);
    /// Matrix whose columns are the given vectors, in a space of dimension `dim`.
    static Matrix from_columns(std::size_t dim, const std::vector<SparseVec>& cols);
    static Matrix from_rows(std::size_t cols, std::vector<SparseVec> rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }
    [[nodiscard]] std::size_t domain_dim() const { return cols_; }
    [[nodiscard]] std::size_t codomain_dim() const { return rows_; }
    [[nodiscard]] std::size_t nnz() const;
    [[nodiscard]] bool is_zero() const;

    [[nodiscard]] const SparseVec& row(std::size_t i) const { return data_[i]; }
    SparseVec& row_mut(std::size_t i) { return data_[i]; }
    [[nodiscard]] const std::vector<SparseVec>& row_data() const { return data_; }

    [[nodiscard]] Rational at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Rational& v);
    void add_to(std::size_t i, std::size_t j, const Rational& v);

    [[nodiscard]] Matrix transpose() const;
    /// Columns as sparse vectors (one transpose).
    [[nodiscard]] std::vector<SparseVec> columns() const;
    [[nodiscard]] SparseVec apply(const SparseVec& x) const;
    [[nodiscard]] std::vector<std::vector<Rational>> to_dense() const;

    [[nodiscard]] Matrix select_rows(const std::vector<std::uint32_t>& idx) const;
    [[nodiscard]] Matrix select_cols(const std::vector<std::uint32_t>& idx) const;
    [[nodiscard]] Matrix submatrix(const std::vector<std::uint32_t>& rows,
                                   const std::vector<std::uint32_t>& cols) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Rational& a);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
    friend Matrix operator-(Matrix a) { return a *= Rational(-1); }
    /// Composition: (a*b)(x) = a(b(x)).
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    [[nodiscard]] std::string debug_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<SparseVec> data_;
};

/// A linear map between coordinate spaces; its matrix is codomain x domain.
using LinMap = Matrix;

Matrix kron(const Matrix& a, const Matrix& b);
/// Block diagonal a ⊕ b.
Matrix direct_sum(const Matrix& a, const Matrix& b);
/// [a | b]
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b]
Matrix vstack(const Matrix& a, const Matrix& b);
/// Block matrix from a grid; blocks in a row share a row count, blocks in a
/// column share a column count. Zero blocks may be given as empty matrices of
/// the right shape.
Matrix block(const std::vector<std::vector<Matrix>>& grid);
/// Embeds `m` into a rows x cols zero matrix with top-left corner at (r0, c0).
Matrix embed(const Matrix& m, std::size_t rows, std::size_t cols, std::size_t r0, std::size_t c0);

}  // namespace cyclica
