#pragma once

#include <optional>
#include <vector>

#include "nucal/scalar.hpp"

namespace nucal {

using Vec = std::vector<Scalar>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);
Vec vec_zero(std::size_t n, const Field& f);

// Dense row-major matrix over one exact field.  Values are immutable in
// spirit: operations return fresh matrices.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const Field& f);

    static Matrix identity(std::size_t n, const Field& f);
    static Matrix zero(std::size_t rows, std::size_t cols, const Field& f);
    static Matrix from_rows(const std::vector<Vec>& rows, const Field& f,
                            std::size_t cols_hint = 0);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    const Scalar& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

    Vec row(std::size_t r) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transpose() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;
    bool is_identity() const;

    Vec apply(const Vec& v) const;  // matrix * column vector

    // Kronecker product; index (i,j) of the result flattens as i*o.rows()+j.
    Matrix kron(const Matrix& o) const;

    // Row-reduced echelon form: pivot = first nonzero entry in column order,
    // pivots scaled to 1, pivot columns cleared.  Canonical for the row space.
    Matrix rref() const;
    std::size_t rank() const;

    std::optional<Matrix> inverse() const;

    // One solution x of (*this) x = b, or nullopt if inconsistent.
    std::optional<Vec> solve(const Vec& b) const;

    void check_field(const Field& f) const;

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> e_;

    friend struct RrefResult;
};

// rref together with pivot bookkeeping, for kernel/solve consumers.
struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivot_cols;
};
RrefResult rref_with_pivots(const Matrix& m);

}  // namespace nucal
