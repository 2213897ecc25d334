#include "nucal/matrix.hpp"

namespace nucal {

Vec vec_zero(std::size_t n, const Field& f) {
    return Vec(n, Scalar::zero(f));
}

Vec vec_add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionError("vector length mismatch");
    Vec r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
    Vec r(v);
    for (auto& x : r) x = c * x;
    return r;
}

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const Field& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::zero(std::size_t rows, std::size_t cols, const Field& f) {
    return Matrix(rows, cols, f);
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, const Field& f,
                         std::size_t cols_hint) {
    std::size_t cols = rows.empty() ? cols_hint : rows[0].size();
    Matrix m(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("ragged row list");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

void Matrix::check_field(const Field& f) const {
    if (field_ != f)
        throw FieldMismatchError("matrix over " + field_.str() + ", expected " + f.str());
}

Vec Matrix::row(std::size_t r) const {
    return Vec(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

Matrix Matrix::operator+(const Matrix& o) const {
    o.check_field(field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in +");
    Matrix r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    o.check_field(field_);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch in -");
    Matrix r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    o.check_field(field_);
    if (cols_ != o.rows_) throw DimensionError("matrix shape mismatch in *");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Scalar& b = o.at(k, j);
                if (!b.is_zero()) r.at(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r(*this);
    for (auto& x : r.e_) x = c * x;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_, field_);
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != cols_) throw DimensionError("vector length mismatch in apply");
    Vec r = vec_zero(rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::kron(const Matrix& o) const {
    o.check_field(field_);
    Matrix r(rows_ * o.rows_, cols_ * o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& a = at(i, j);
            if (a.is_zero()) continue;
            for (std::size_t k = 0; k < o.rows_; ++k)
                for (std::size_t l = 0; l < o.cols_; ++l)
                    r.at(i * o.rows_ + k, j * o.cols_ + l) = a * o.at(k, l);
        }
    return r;
}

RrefResult rref_with_pivots(const Matrix& m) {
    RrefResult res{m, {}};
    Matrix& a = res.mat;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        // first nonzero entry in this column at or below `lead`
        std::size_t piv = lead;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(piv, j), a.at(lead, j));
        Scalar inv = a.at(lead, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j) a.at(lead, j) = inv * a.at(lead, j);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == lead) continue;
            Scalar f = a.at(i, col);
            if (f.is_zero()) continue;
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(lead, j);
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    return res;
}

Matrix Matrix::rref() const { return rref_with_pivots(*this).mat; }

std::size_t Matrix::rank() const { return rref_with_pivots(*this).pivot_cols.size(); }

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    // Gauss-Jordan on [A | I]
    Matrix aug(rows_, 2 * cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = Scalar::one(field_);
    }
    RrefResult r = rref_with_pivots(aug);
    for (std::size_t i = 0; i < rows_; ++i)
        if (i >= r.pivot_cols.size() || r.pivot_cols[i] != i) return std::nullopt;
    Matrix inv(rows_, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.at(i, j) = r.mat.at(i, cols_ + j);
    return inv;
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
    if (b.size() != rows_) throw DimensionError("rhs length mismatch in solve");
    Matrix aug(rows_, cols_ + 1, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    RrefResult r = rref_with_pivots(aug);
    // inconsistent iff some pivot lands in the rhs column
    for (std::size_t c : r.pivot_cols)
        if (c == cols_) return std::nullopt;
    Vec x = vec_zero(cols_, field_);
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        x[r.pivot_cols[i]] = r.mat.at(i, cols_);
    return x;
}

}  // namespace nucal
