#include "nucal/subspace.hpp"

namespace nucal {

Subspace Subspace::span(const Matrix& rows, std::size_t ambient_dim) {
    if (rows.cols() != ambient_dim && rows.rows() > 0)
        throw DimensionError("spanning rows do not match ambient dimension");
    Subspace s;
    s.ambient_ = ambient_dim;
    RrefResult r = rref_with_pivots(
        rows.rows() > 0 ? rows : Matrix::zero(0, ambient_dim, rows.field()));
    // keep only the nonzero rows
    Matrix basis(r.pivot_cols.size(), ambient_dim, rows.field());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        for (std::size_t j = 0; j < ambient_dim; ++j) basis.at(i, j) = r.mat.at(i, j);
    s.basis_ = basis;
    return s;
}

Subspace Subspace::zero(std::size_t ambient_dim, const Field& f) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = Matrix::zero(0, ambient_dim, f);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim, const Field& f) {
    Subspace s;
    s.ambient_ = ambient_dim;
    s.basis_ = Matrix::identity(ambient_dim, f);
    return s;
}

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_)
        throw DimensionError("vector length does not match ambient dimension");
    if (vec_is_zero(v)) return true;
    if (basis_.rows() == 0) return false;
    return basis_.transpose().solve(v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw DimensionError("ambient dimension mismatch in containment");
    for (std::size_t i = 0; i < other.dim(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
}

Subspace kernel(const Matrix& m) {
    RrefResult r = rref_with_pivots(m);
    const Field& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v = vec_zero(m.cols(), f);
        v[free_col] = Scalar::one(f);
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
            v[r.pivot_cols[i]] = -r.mat.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return Subspace::span(Matrix::from_rows(basis, f, m.cols()), m.cols());
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionError("ambient dimension mismatch in intersect");
    if (a.field() != b.field())
        throw FieldMismatchError("field mismatch in intersect");
    const Field& f = a.field();
    std::size_t n = a.ambient_dim();
    std::size_t ra = a.dim(), rb = b.dim();
    if (ra == 0 || rb == 0) return Subspace::zero(n, f);

    // Solve A^T u = B^T v: kernel of [A^T | -B^T], then map u back through A.
    Matrix stacked(n, ra + rb, f);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < ra; ++j) stacked.at(i, j) = a.basis().at(j, i);
        for (std::size_t j = 0; j < rb; ++j) stacked.at(i, ra + j) = -b.basis().at(j, i);
    }
    Subspace ker = kernel(stacked);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ker.dim(); ++i) {
        Vec uv = ker.basis().row(i);
        Vec x = vec_zero(n, f);
        for (std::size_t j = 0; j < ra; ++j)
            if (!uv[j].is_zero()) x = vec_add(x, vec_scale(uv[j], a.basis().row(j)));
        rows.push_back(std::move(x));
    }
    return Subspace::span(Matrix::from_rows(rows, f, n), n);
}

}  // namespace nucal
