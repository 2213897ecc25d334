#include "nucal/tensor_element.hpp"

namespace nucal {

namespace {

std::size_t pow_sz(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

}  // namespace

bool has_orthogonal_idempotent_basis(const Algebra& a) {
    std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                bool expect_one = (i == j && j == k);
                const Scalar& c = a.c(i, j, k);
                if (expect_one ? !c.is_one() : !c.is_zero()) return false;
            }
    return true;
}

std::optional<Vec> algebra_inverse(const Algebra& a, const Vec& r) {
    if (!a.unit()) return std::nullopt;
    std::size_t n = a.dim();
    // right multiplication by r as a matrix acting on x: (x r)
    Matrix mul(n, n, a.field());
    for (std::size_t t = 0; t < n; ++t) {
        Vec col = a.multiply(a.basis_vector(t), r);
        for (std::size_t k = 0; k < n; ++k) mul.at(k, t) = col[k];
    }
    auto x = mul.solve(*a.unit());
    if (!x) return std::nullopt;
    if (a.multiply(r, *x) != *a.unit()) return std::nullopt;
    return x;
}

TensorElement::TensorElement(AlgebraPtr base, std::size_t end_dim, std::size_t legs)
    : base_(std::move(base)), end_dim_(end_dim), legs_(legs) {
    if (!base_) throw InputError("tensor element with missing base algebra");
    coeffs_.assign(pow_sz(base_->dim(), legs_),
                   Matrix::zero(end_dim_, end_dim_, base_->field()));
}

TensorElement TensorElement::unit(AlgebraPtr base, std::size_t end_dim,
                                  std::size_t legs) {
    if (!base->unit())
        throw PreconditionError("unit tensor element needs a unital base");
    TensorElement t(base, end_dim, legs);
    const Vec& one = *base->unit();
    std::size_t n = base->dim();
    Matrix id = Matrix::identity(end_dim, base->field());
    for (std::size_t flat = 0; flat < t.coeffs_.size(); ++flat) {
        Scalar c = Scalar::one(base->field());
        std::size_t rem = flat;
        for (std::size_t l = legs; l-- > 0;) {
            c = c * one[rem % n];
            rem /= n;
        }
        if (!c.is_zero()) t.coeffs_[flat] = id.scaled(c);
    }
    return t;
}

TensorElement TensorElement::from_coeffs(AlgebraPtr base, std::size_t end_dim,
                                         std::size_t legs, std::vector<Matrix> coeffs) {
    TensorElement t(base, end_dim, legs);
    if (coeffs.size() != t.coeffs_.size())
        throw DimensionError("tensor element needs dim^legs coefficient matrices");
    for (const Matrix& m : coeffs) {
        m.check_field(base->field());
        if (m.rows() != end_dim || m.cols() != end_dim)
            throw DimensionError("coefficient matrix of wrong shape");
    }
    t.coeffs_ = std::move(coeffs);
    return t;
}

TensorElement TensorElement::from_element(AlgebraPtr base, const Vec& r) {
    if (r.size() != base->dim()) throw DimensionError("element length mismatch");
    TensorElement t(base, 1, 1);
    for (std::size_t i = 0; i < r.size(); ++i) t.coeffs_[i].at(0, 0) = r[i];
    return t;
}

std::size_t TensorElement::flat_index(const std::vector<std::size_t>& tuple) const {
    if (tuple.size() != legs_) throw DimensionError("index tuple length mismatch");
    std::size_t n = base_->dim(), flat = 0;
    for (std::size_t x : tuple) {
        if (x >= n) throw DimensionError("leg index out of range");
        flat = flat * n + x;
    }
    return flat;
}

void TensorElement::check_compatible(const TensorElement& o) const {
    if (base_ != o.base_ && !(*base_ == *o.base_))
        throw InputError("tensor elements over different base algebras");
    if (end_dim_ != o.end_dim_ || legs_ != o.legs_)
        throw DimensionError("tensor element shape mismatch");
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    check_compatible(o);
    std::size_t n = base_->dim();
    TensorElement out(base_, end_dim_, legs_);
    std::vector<std::size_t> ia(legs_), ib(legs_);
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> lists(legs_);
    for (std::size_t fa = 0; fa < coeffs_.size(); ++fa) {
        if (coeffs_[fa].is_zero()) continue;
        std::size_t rem = fa;
        for (std::size_t l = legs_; l-- > 0;) { ia[l] = rem % n; rem /= n; }
        for (std::size_t fb = 0; fb < o.coeffs_.size(); ++fb) {
            if (o.coeffs_[fb].is_zero()) continue;
            rem = fb;
            for (std::size_t l = legs_; l-- > 0;) { ib[l] = rem % n; rem /= n; }
            // nonzero (k, c_ab^k) per leg; a fully zero leg kills the pair
            bool dead = false;
            for (std::size_t l = 0; l < legs_ && !dead; ++l) {
                lists[l].clear();
                for (std::size_t k = 0; k < n; ++k) {
                    const Scalar& c = base_->c(ia[l], ib[l], k);
                    if (!c.is_zero()) lists[l].emplace_back(k, c);
                }
                dead = lists[l].empty();
            }
            if (dead) continue;
            Matrix prod = coeffs_[fa] * o.coeffs_[fb];
            if (prod.is_zero()) continue;
            // odometer over the per-leg lists (one iteration when legs == 0)
            std::vector<std::size_t> pos(legs_, 0);
            bool more = true;
            while (more) {
                Scalar c = Scalar::one(base_->field());
                std::size_t flat = 0;
                for (std::size_t l = 0; l < legs_; ++l) {
                    c = c * lists[l][pos[l]].second;
                    flat = flat * n + lists[l][pos[l]].first;
                }
                out.coeffs_[flat] = out.coeffs_[flat] + prod.scaled(c);
                more = false;
                for (std::size_t l = legs_; l-- > 0;) {
                    if (++pos[l] < lists[l].size()) { more = true; break; }
                    pos[l] = 0;
                }
            }
        }
    }
    return out;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    check_compatible(o);
    TensorElement out(*this);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return out;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
    check_compatible(o);
    TensorElement out(*this);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return out;
}

TensorElement TensorElement::scaled(const Scalar& c) const {
    TensorElement out(*this);
    for (auto& m : out.coeffs_) m = m.scaled(c);
    return out;
}

bool TensorElement::operator==(const TensorElement& o) const {
    if (base_ != o.base_ && !(*base_ == *o.base_)) return false;
    if (end_dim_ != o.end_dim_ || legs_ != o.legs_) return false;
    return coeffs_ == o.coeffs_;
}

bool TensorElement::is_unit() const {
    return *this == unit(base_, end_dim_, legs_);
}

std::optional<TensorElement> TensorElement::inverse() const {
    const Field& f = base_->field();
    if (has_orthogonal_idempotent_basis(*base_)) {
        // products are pointwise over the multi-index grid
        TensorElement out(base_, end_dim_, legs_);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            auto inv = coeffs_[i].inverse();
            if (!inv) return std::nullopt;
            out.coeffs_[i] = std::move(*inv);
        }
        return out;
    }
    // Generic: solve x * this = unit as a linear system, verify this * x too.
    std::size_t cells = coeffs_.size();
    std::size_t dim = cells * end_dim_ * end_dim_;
    TensorElement u = unit(base_, end_dim_, legs_);
    Matrix sys(dim, dim, f);
    for (std::size_t cell = 0; cell < cells; ++cell)
        for (std::size_t r = 0; r < end_dim_; ++r)
            for (std::size_t c = 0; c < end_dim_; ++c) {
                TensorElement basis(base_, end_dim_, legs_);
                basis.coeffs_[cell].at(r, c) = Scalar::one(f);
                TensorElement img = basis * (*this);
                std::size_t col = (cell * end_dim_ + r) * end_dim_ + c;
                for (std::size_t cell2 = 0; cell2 < cells; ++cell2)
                    for (std::size_t r2 = 0; r2 < end_dim_; ++r2)
                        for (std::size_t c2 = 0; c2 < end_dim_; ++c2)
                            sys.at((cell2 * end_dim_ + r2) * end_dim_ + c2, col) =
                                img.coeffs_[cell2].at(r2, c2);
            }
    Vec rhs(dim, Scalar::zero(f));
    for (std::size_t cell = 0; cell < cells; ++cell)
        for (std::size_t r = 0; r < end_dim_; ++r)
            for (std::size_t c = 0; c < end_dim_; ++c)
                rhs[(cell * end_dim_ + r) * end_dim_ + c] = u.coeffs_[cell].at(r, c);
    auto sol = sys.solve(rhs);
    if (!sol) return std::nullopt;
    TensorElement out(base_, end_dim_, legs_);
    for (std::size_t cell = 0; cell < cells; ++cell)
        for (std::size_t r = 0; r < end_dim_; ++r)
            for (std::size_t c = 0; c < end_dim_; ++c)
                out.coeffs_[cell].at(r, c) = (*sol)[(cell * end_dim_ + r) * end_dim_ + c];
    if (!((*this) * out == u)) return std::nullopt;
    return out;
}

TensorElement TensorElement::apply_delta(const Coalgebra& base, std::size_t leg) const {
    if (!(*base.algebra() == *base_))
        throw InputError("coalgebra does not match the element base");
    if (leg >= legs_) throw DimensionError("leg index out of range");
    std::size_t n = base_->dim();
    TensorElement out(base_, end_dim_, legs_ + 1);
    std::vector<std::size_t> idx(legs_);
    for (std::size_t flat = 0; flat < coeffs_.size(); ++flat) {
        if (coeffs_[flat].is_zero()) continue;
        std::size_t rem = flat;
        for (std::size_t l = legs_; l-- > 0;) { idx[l] = rem % n; rem /= n; }
        std::size_t a = idx[leg];
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = 0; v < n; ++v) {
                const Scalar& d = base.delta(a, u, v);
                if (d.is_zero()) continue;
                std::size_t out_flat = 0;
                for (std::size_t l = 0; l < legs_ + 1; ++l) {
                    std::size_t x;
                    if (l < leg) x = idx[l];
                    else if (l == leg) x = u;
                    else if (l == leg + 1) x = v;
                    else x = idx[l - 1];
                    out_flat = out_flat * n + x;
                }
                out.coeffs_[out_flat] = out.coeffs_[out_flat] + coeffs_[flat].scaled(d);
            }
    }
    return out;
}

TensorElement TensorElement::apply_counit(const Coalgebra& base, std::size_t leg) const {
    if (!(*base.algebra() == *base_))
        throw InputError("coalgebra does not match the element base");
    if (leg >= legs_) throw DimensionError("leg index out of range");
    const Vec& eps = base.epsilon();
    std::size_t n = base_->dim();
    TensorElement out(base_, end_dim_, legs_ - 1);
    std::vector<std::size_t> idx(legs_);
    for (std::size_t flat = 0; flat < coeffs_.size(); ++flat) {
        if (coeffs_[flat].is_zero()) continue;
        std::size_t rem = flat;
        for (std::size_t l = legs_; l-- > 0;) { idx[l] = rem % n; rem /= n; }
        if (eps[idx[leg]].is_zero()) continue;
        std::size_t out_flat = 0;
        for (std::size_t l = 0; l < legs_; ++l)
            if (l != leg) out_flat = out_flat * n + idx[l];
        out.coeffs_[out_flat] =
            out.coeffs_[out_flat] + coeffs_[flat].scaled(eps[idx[leg]]);
    }
    return out;
}

TensorElement TensorElement::push_leg(const RModule& mod, std::size_t leg) const {
    if (!(*mod.algebra() == *base_))
        throw InputError("module does not match the element base");
    if (leg >= legs_) throw DimensionError("leg index out of range");
    std::size_t n = base_->dim();
    TensorElement out(base_, end_dim_ * mod.dim(), legs_ - 1);
    std::vector<std::size_t> idx(legs_);
    for (std::size_t flat = 0; flat < coeffs_.size(); ++flat) {
        if (coeffs_[flat].is_zero()) continue;
        std::size_t rem = flat;
        for (std::size_t l = legs_; l-- > 0;) { idx[l] = rem % n; rem /= n; }
        std::size_t out_flat = 0;
        for (std::size_t l = 0; l < legs_; ++l)
            if (l != leg) out_flat = out_flat * n + idx[l];
        out.coeffs_[out_flat] =
            out.coeffs_[out_flat] + coeffs_[flat].kron(mod.rho(idx[leg]));
    }
    return out;
}

TensorElement TensorElement::insert_unit_leg(std::size_t pos) const {
    if (pos > legs_) throw DimensionError("insert position out of range");
    if (!base_->unit())
        throw PreconditionError("unit leg insertion needs a unital base");
    const Vec& one = *base_->unit();
    std::size_t n = base_->dim();
    TensorElement out(base_, end_dim_, legs_ + 1);
    std::vector<std::size_t> idx(legs_);
    for (std::size_t flat = 0; flat < coeffs_.size(); ++flat) {
        if (coeffs_[flat].is_zero()) continue;
        std::size_t rem = flat;
        for (std::size_t l = legs_; l-- > 0;) { idx[l] = rem % n; rem /= n; }
        for (std::size_t j = 0; j < n; ++j) {
            if (one[j].is_zero()) continue;
            std::size_t out_flat = 0;
            for (std::size_t l = 0; l < legs_ + 1; ++l) {
                std::size_t x;
                if (l < pos) x = idx[l];
                else if (l == pos) x = j;
                else x = idx[l - 1];
                out_flat = out_flat * n + x;
            }
            out.coeffs_[out_flat] = out.coeffs_[out_flat] + coeffs_[flat].scaled(one[j]);
        }
    }
    return out;
}

TensorElement TensorElement::end_tensor_left(std::size_t d) const {
    Matrix id = Matrix::identity(d, base_->field());
    TensorElement out(base_, end_dim_ * d, legs_);
    for (std::size_t flat = 0; flat < coeffs_.size(); ++flat)
        out.coeffs_[flat] = id.kron(coeffs_[flat]);
    return out;
}

TensorElement TensorElement::end_tensor_right(std::size_t d) const {
    Matrix id = Matrix::identity(d, base_->field());
    TensorElement out(base_, end_dim_ * d, legs_);
    for (std::size_t flat = 0; flat < coeffs_.size(); ++flat)
        out.coeffs_[flat] = coeffs_[flat].kron(id);
    return out;
}

Matrix TensorElement::evaluate(const std::vector<const RModule*>& modules) const {
    if (modules.size() != legs_)
        throw DimensionError("evaluate needs one module per leg");
    TensorElement cur(*this);
    for (const RModule* m : modules) cur = cur.push_leg(*m, 0);
    return cur.coeffs_[0];
}

}  // namespace nucal
