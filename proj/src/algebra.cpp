#include "nucal/algebra.hpp"

#include "nucal/monoid.hpp"

namespace nucal {

Algebra::Algebra(Field field, std::size_t dim, std::vector<Scalar> structure_constants,
                 std::optional<Vec> unit, std::vector<std::string> names)
    : field_(field), n_(dim), c_(std::move(structure_constants)),
      unit_(std::move(unit)), names_(std::move(names)) {
    if (n_ == 0) throw InputError("algebra of dimension zero");
    if (c_.size() != n_ * n_ * n_)
        throw InputError("structure constant array must have dim^3 entries");
    for (const auto& s : c_)
        if (s.field() != field_)
            throw FieldMismatchError("structure constant over wrong field");
    table_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            auto& cell = table_[i * n_ + j];
            for (std::size_t k = 0; k < n_; ++k)
                if (!c(i, j, k).is_zero()) cell.emplace_back(k, c(i, j, k));
        }
    if (unit_) {
        if (unit_->size() != n_) throw InputError("unit vector has wrong length");
        for (std::size_t i = 0; i < n_; ++i) {
            Vec e = basis_vector(i);
            if (multiply(*unit_, e) != e || multiply(e, *unit_) != e)
                throw InputError("declared unit fails the unit law on basis " +
                                 std::to_string(i));
        }
    }
    if (!names_.empty() && names_.size() != n_)
        throw InputError("names list has wrong length");
}

Vec Algebra::basis_vector(std::size_t i) const {
    Vec v = vec_zero(n_, field_);
    v[i] = Scalar::one(field_);
    return v;
}

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
    Vec v = vec_zero(n_, field_);
    for (const auto& [k, s] : table_[i * n_ + j]) v[k] = s;
    return v;
}

Vec Algebra::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != n_ || y.size() != n_)
        throw DimensionError("vector length does not match algebra dimension");
    Vec out = vec_zero(n_, field_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        if (x[i].field() != field_) throw FieldMismatchError("vector over wrong field");
        for (std::size_t j = 0; j < n_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar coeff = x[i] * y[j];
            for (const auto& [k, s] : table_[i * n_ + j]) out[k] += coeff * s;
        }
    }
    return out;
}

Vec Algebra::associator(const Vec& x, const Vec& y, const Vec& z) const {
    return vec_sub(multiply(x, multiply(y, z)), multiply(multiply(x, y), z));
}

bool Algebra::is_associative() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) {
            Vec pij = basis_product(i, j);
            for (std::size_t k = 0; k < n_; ++k) {
                Vec lhs = multiply(basis_vector(i), basis_product(j, k));
                Vec rhs = multiply(pij, basis_vector(k));
                if (lhs != rhs) return false;
            }
        }
    return true;
}

bool Algebra::is_commutative() const {
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = i + 1; j < n_; ++j)
            if (basis_product(i, j) != basis_product(j, i)) return false;
    return true;
}

std::optional<Vec> Algebra::find_unit() const {
    // Stack u e_i = e_i and e_i u = e_i over all i into one linear system.
    Matrix sys(2 * n_ * n_, n_, field_);
    Vec rhs = vec_zero(2 * n_ * n_, field_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            for (std::size_t t = 0; t < n_; ++t) {
                sys.at(i * n_ + k, t) = c(t, i, k);                 // (u e_i)_k
                sys.at(n_ * n_ + i * n_ + k, t) = c(i, t, k);       // (e_i u)_k
            }
            Scalar d = (k == i) ? Scalar::one(field_) : Scalar::zero(field_);
            rhs[i * n_ + k] = d;
            rhs[n_ * n_ + i * n_ + k] = d;
        }
    }
    auto sol = sys.solve(rhs);
    if (!sol) return std::nullopt;
    // A positive-dimensional solution set would mean two distinct two-sided
    // units, which is impossible; treat as "no unit" on degenerate input.
    if (kernel(sys).dim() != 0) return std::nullopt;
    return sol;
}

bool Algebra::operator==(const Algebra& o) const {
    return field_ == o.field_ && n_ == o.n_ && c_ == o.c_;
}

LinearMap::LinearMap(AlgebraPtr src, AlgebraPtr tgt, Matrix m)
    : source(std::move(src)), target(std::move(tgt)), matrix(std::move(m)) {
    if (!source || !target) throw InputError("linear map with missing algebra");
    if (matrix.rows() != target->dim() || matrix.cols() != source->dim())
        throw DimensionError("linear map matrix must be target_dim x source_dim");
    if (source->field() != target->field() || matrix.field() != source->field())
        throw FieldMismatchError("linear map field mismatch");
}

Vec multiplicative_defect(const LinearMap& f, const Vec& x, const Vec& y) {
    Vec fxy = f.apply(f.source->multiply(x, y));
    Vec fxfy = f.target->multiply(f.apply(x), f.apply(y));
    return vec_sub(fxy, fxfy);
}

bool is_subalgebra_closed(const Algebra& a, const Subspace& s) {
    if (s.ambient_dim() != a.dim())
        throw DimensionError("subspace ambient does not match algebra dimension");
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            if (!s.contains(a.multiply(s.basis().row(i), s.basis().row(j))))
                return false;
    return true;
}

Algebra zero_algebra(const Field& f, std::size_t dim) {
    return Algebra(f, dim, std::vector<Scalar>(dim * dim * dim, Scalar::zero(f)));
}

Algebra ground_field_algebra(const Field& f) {
    return Algebra(f, 1, {Scalar::one(f)}, Vec{Scalar::one(f)});
}

Algebra matrix_algebra(const Field& f, std::size_t m) {
    std::size_t n = m * m;
    std::vector<Scalar> c(n * n * n, Scalar::zero(f));
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t u = 0; u < m; ++u) {
                std::size_t i = r * m + s, j = s * m + u, k = r * m + u;
                c[(i * n + j) * n + k] = Scalar::one(f);
            }
    Vec unit = vec_zero(n, f);
    for (std::size_t r = 0; r < m; ++r) unit[r * m + r] = Scalar::one(f);
    std::vector<std::string> names(n);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s)
            names[r * m + s] = "e" + std::to_string(r + 1) + std::to_string(s + 1);
    return Algebra(f, n, std::move(c), unit, std::move(names));
}

Algebra function_algebra(const Field& f, std::size_t n) {
    std::vector<Scalar> c(n * n * n, Scalar::zero(f));
    for (std::size_t i = 0; i < n; ++i) c[(i * n + i) * n + i] = Scalar::one(f);
    return Algebra(f, n, std::move(c), Vec(n, Scalar::one(f)));
}

Algebra monoid_algebra(const Field& f, const FiniteMonoid& m) {
    std::size_t n = m.size();
    std::vector<Scalar> c(n * n * n, Scalar::zero(f));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            c[(a * n + b) * n + m.op(a, b)] = Scalar::one(f);
    Vec unit = vec_zero(n, f);
    unit[m.unit()] = Scalar::one(f);
    return Algebra(f, n, std::move(c), unit);
}

Algebra change_basis(const Algebra& a, const Matrix& g) {
    std::size_t n = a.dim();
    if (g.rows() != n || g.cols() != n) throw DimensionError("basis matrix shape");
    auto ginv = g.inverse();
    if (!ginv) throw InputError("basis change matrix is singular");
    const Field& f = a.field();
    std::vector<Scalar> c(n * n * n, Scalar::zero(f));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec prod = a.multiply(g.row(i), g.row(j));  // in the old basis
            for (std::size_t k = 0; k < n; ++k) {
                Scalar v = Scalar::zero(f);
                for (std::size_t t = 0; t < n; ++t)
                    if (!prod[t].is_zero()) v += prod[t] * ginv->at(t, k);
                c[(i * n + j) * n + k] = v;
            }
        }
    std::optional<Vec> unit;
    if (a.unit()) unit = g.transpose().solve(*a.unit());
    return Algebra(f, n, std::move(c), unit);
}

InvolutiveAlgebra cayley_dickson_double(const InvolutiveAlgebra& base) {
    const Algebra& A = base.algebra;
    const Matrix& conj = base.conjugation;
    const Field& f = A.field();
    std::size_t n = A.dim(), m = 2 * n;

    auto lower = [&](const Vec& v) { return Vec(v.begin(), v.begin() + n); };
    auto upper = [&](const Vec& v) { return Vec(v.begin() + n, v.end()); };
    auto pack = [&](const Vec& lo, const Vec& hi) {
        Vec v(lo);
        v.insert(v.end(), hi.begin(), hi.end());
        return v;
    };
    // (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))
    auto mul = [&](const Vec& x, const Vec& y) {
        Vec a = lower(x), b = upper(x), c = lower(y), d = upper(y);
        Vec lo = vec_sub(A.multiply(a, c), A.multiply(conj.apply(d), b));
        Vec hi = vec_add(A.multiply(d, a), A.multiply(b, conj.apply(c)));
        return pack(lo, hi);
    };

    std::vector<Scalar> c(m * m * m, Scalar::zero(f));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            Vec ei = vec_zero(m, f), ej = vec_zero(m, f);
            ei[i] = Scalar::one(f);
            ej[j] = Scalar::one(f);
            Vec prod = mul(ei, ej);
            for (std::size_t k = 0; k < m; ++k) c[(i * m + j) * m + k] = prod[k];
        }
    Vec unit = vec_zero(m, f);
    if (A.unit()) {
        for (std::size_t i = 0; i < n; ++i) unit[i] = (*A.unit())[i];
    } else {
        throw InputError("Cayley-Dickson doubling needs a unital base algebra");
    }
    // conj(a,b) = (conj(a), -b)
    Matrix conj2 = Matrix::zero(m, m, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) conj2.at(i, j) = conj.at(i, j);
    for (std::size_t i = 0; i < n; ++i) conj2.at(n + i, n + i) = -Scalar::one(f);
    return {Algebra(f, m, std::move(c), unit), conj2};
}

InvolutiveAlgebra cayley_dickson_algebra(const Field& f, unsigned doublings) {
    InvolutiveAlgebra cur{ground_field_algebra(f), Matrix::identity(1, f)};
    for (unsigned i = 0; i < doublings; ++i) cur = cayley_dickson_double(cur);
    return cur;
}

}  // namespace nucal
