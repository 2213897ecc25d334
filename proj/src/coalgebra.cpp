#include "nucal/coalgebra.hpp"

#include "nucal/group.hpp"

namespace nucal {

namespace {

// product in R (x) R of two coefficient vectors indexed a*n+b
Vec tensor2_product(const Algebra& R, const Vec& x, const Vec& y) {
    std::size_t n = R.dim();
    const Field& f = R.field();
    Vec out = vec_zero(n * n, f);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (x[a * n + b].is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    if (y[c * n + d].is_zero()) continue;
                    Scalar coeff = x[a * n + b] * y[c * n + d];
                    for (std::size_t u = 0; u < n; ++u) {
                        if (R.c(a, c, u).is_zero()) continue;
                        for (std::size_t v = 0; v < n; ++v) {
                            if (R.c(b, d, v).is_zero()) continue;
                            out[u * n + v] += coeff * R.c(a, c, u) * R.c(b, d, v);
                        }
                    }
                }
        }
    return out;
}

}  // namespace

Coalgebra::Coalgebra(AlgebraPtr algebra, Matrix delta, std::optional<Vec> epsilon)
    : algebra_(std::move(algebra)), delta_(std::move(delta)), epsilon_(std::move(epsilon)) {
    if (!algebra_) throw InputError("coalgebra with missing algebra");
    const Algebra& R = *algebra_;
    std::size_t n = R.dim();
    const Field& f = R.field();
    if (!R.is_associative())
        throw PreconditionError("coalgebra base must be associative");
    if (!R.unit())
        throw PreconditionError("coalgebra base must be unital");
    if (delta_.rows() != n * n || delta_.cols() != n)
        throw DimensionError("delta matrix must be dim^2 x dim");
    delta_.check_field(f);

    // delta must be an algebra homomorphism
    const Vec& one = *R.unit();
    Vec delta_one = vec_zero(n * n, f);
    for (std::size_t i = 0; i < n; ++i)
        if (!one[i].is_zero())
            for (std::size_t ab = 0; ab < n * n; ++ab)
                delta_one[ab] += one[i] * delta_.at(ab, i);
    Vec one_one = vec_zero(n * n, f);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) one_one[a * n + b] = one[a] * one[b];
    if (delta_one != one_one)
        throw InputError("delta(1) != 1 (x) 1");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec dij = vec_zero(n * n, f);
            Vec pij = R.basis_product(i, j);
            for (std::size_t t = 0; t < n; ++t)
                if (!pij[t].is_zero())
                    for (std::size_t ab = 0; ab < n * n; ++ab)
                        dij[ab] += pij[t] * delta_.at(ab, t);
            Vec prod = tensor2_product(R, delta_.transpose().row(i),
                                       delta_.transpose().row(j));
            if (dij != prod)
                throw InputError("delta is not multiplicative on basis pair (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
        }

    if (epsilon_) {
        if (epsilon_->size() != n) throw DimensionError("epsilon has wrong length");
        // algebra map to k and both counit laws
        auto eps = [&](const Vec& v) {
            Scalar s = Scalar::zero(f);
            for (std::size_t i = 0; i < n; ++i)
                if (!v[i].is_zero()) s += v[i] * (*epsilon_)[i];
            return s;
        };
        if (!eps(one).is_one()) throw InputError("epsilon(1) != 1");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (eps(R.basis_product(i, j)) != (*epsilon_)[i] * (*epsilon_)[j])
                    throw InputError("epsilon is not multiplicative");
        for (std::size_t i = 0; i < n; ++i) {
            Vec left = vec_zero(n, f), right = vec_zero(n, f);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b) {
                    const Scalar& d = delta_.at(a * n + b, i);
                    if (d.is_zero()) continue;
                    left[b] += (*epsilon_)[a] * d;   // (eps (x) I) delta
                    right[a] += d * (*epsilon_)[b];  // (I (x) eps) delta
                }
            if (left != R.basis_vector(i) || right != R.basis_vector(i))
                throw InputError("counit law fails on basis " + std::to_string(i));
        }
    }

    // coassociativity flag: (delta (x) I) delta vs (I (x) delta) delta
    coassociative_ = true;
    for (std::size_t i = 0; i < n && coassociative_; ++i) {
        Vec lhs = vec_zero(n * n * n, f), rhs = vec_zero(n * n * n, f);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& d = delta_.at(a * n + b, i);
                if (d.is_zero()) continue;
                for (std::size_t u = 0; u < n; ++u)
                    for (std::size_t v = 0; v < n; ++v) {
                        const Scalar& da = delta_.at(u * n + v, a);
                        if (!da.is_zero()) lhs[(u * n + v) * n + b] += d * da;
                        const Scalar& db = delta_.at(u * n + v, b);
                        if (!db.is_zero()) rhs[(a * n + u) * n + v] += d * db;
                    }
            }
        if (lhs != rhs) coassociative_ = false;
    }
}

const Vec& Coalgebra::epsilon() const {
    if (!epsilon_) throw PreconditionError("coalgebra has no counit");
    return *epsilon_;
}

RModule::RModule(AlgebraPtr algebra, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), action_(std::move(action)) {
    if (!algebra_) throw InputError("module with missing algebra");
    const Algebra& R = *algebra_;
    std::size_t n = R.dim();
    if (action_.size() != n) throw DimensionError("need one action matrix per basis");
    dim_ = action_[0].rows();
    const Field& f = R.field();
    for (const Matrix& a : action_) {
        a.check_field(f);
        if (a.rows() != dim_ || a.cols() != dim_)
            throw DimensionError("action matrices must be square of equal size");
    }
    if (!R.unit()) throw PreconditionError("module base algebra must be unital");
    if (!rho(*R.unit()).is_identity())
        throw InputError("rho(1) is not the identity");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (action_[i] * action_[j] != rho(R.basis_product(i, j)))
                throw InputError("action is not multiplicative on basis pair (" +
                                 std::to_string(i) + "," + std::to_string(j) + ")");
}

Matrix RModule::rho(const Vec& r) const {
    if (r.size() != algebra_->dim()) throw DimensionError("element length mismatch");
    Matrix out = Matrix::zero(dim_, dim_, algebra_->field());
    for (std::size_t i = 0; i < r.size(); ++i)
        if (!r[i].is_zero()) out = out + action_[i].scaled(r[i]);
    return out;
}

RModule module_tensor(const Coalgebra& base, const RModule& m, const RModule& n) {
    if (m.algebra() != n.algebra() && !(*m.algebra() == *n.algebra()))
        throw InputError("module tensor product needs a common base algebra");
    std::size_t nb = base.dim();
    std::vector<Matrix> action;
    action.reserve(nb);
    for (std::size_t i = 0; i < nb; ++i) {
        Matrix acc = Matrix::zero(m.dim() * n.dim(), m.dim() * n.dim(), base.field());
        for (std::size_t a = 0; a < nb; ++a)
            for (std::size_t b = 0; b < nb; ++b) {
                const Scalar& d = base.delta(i, a, b);
                if (!d.is_zero()) acc = acc + m.rho(a).kron(n.rho(b)).scaled(d);
            }
        action.push_back(std::move(acc));
    }
    return RModule(m.algebra(), std::move(action));
}

RModule regular_module(AlgebraPtr algebra) {
    const Algebra& R = *algebra;
    std::size_t n = R.dim();
    std::vector<Matrix> action;
    action.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Matrix L(n, n, R.field());
        for (std::size_t j = 0; j < n; ++j) {
            Vec p = R.basis_product(i, j);
            for (std::size_t k = 0; k < n; ++k) L.at(k, j) = p[k];
        }
        action.push_back(std::move(L));
    }
    return RModule(algebra, std::move(action));
}

RModule counit_module(const Coalgebra& base) {
    const Vec& eps = base.epsilon();
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < base.dim(); ++i) {
        Matrix m(1, 1, base.field());
        m.at(0, 0) = eps[i];
        action.push_back(std::move(m));
    }
    return RModule(base.algebra(), std::move(action));
}

Coalgebra function_bialgebra(const Field& f, const FiniteGroup& g) {
    std::size_t n = g.size();
    auto alg = std::make_shared<Algebra>(function_algebra(f, n));
    Matrix delta(n * n, n, f);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            delta.at(a * n + b, g.op(a, b)) = Scalar::one(f);
    Vec eps = vec_zero(n, f);
    eps[g.unit()] = Scalar::one(f);
    return Coalgebra(alg, std::move(delta), eps);
}

RModule graded_module(AlgebraPtr function_alg, const std::vector<std::size_t>& grading) {
    const Algebra& R = *function_alg;
    std::size_t n = R.dim(), d = grading.size();
    if (d == 0) throw InputError("graded module of dimension zero");
    for (std::size_t gv : grading)
        if (gv >= n) throw InputError("grading index out of range");
    std::vector<Matrix> action;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix m = Matrix::zero(d, d, R.field());
        for (std::size_t x = 0; x < d; ++x)
            if (grading[x] == i) m.at(x, x) = Scalar::one(R.field());
        action.push_back(std::move(m));
    }
    return RModule(function_alg, std::move(action));
}

}  // namespace nucal
