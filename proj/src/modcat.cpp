#include "nucal/modcat.hpp"

namespace nucal {

namespace {

void require_pair_shape(const NucleusPair& p) {
    if (p.m.legs() != 2 || p.m.end_dim() != p.module.dim())
        throw DimensionError("nucleus pair element must have two legs over End(M)");
}

void require_same_base(const Coalgebra& base, const NucleusPair& p) {
    if (!(*base.algebra() == *p.module.algebra()))
        throw InputError("pair base algebra does not match the coalgebra");
    require_pair_shape(p);
}

// (delta (x) I) delta(r) resp. (I (x) delta) delta(r), first leg through rho.
TensorElement coassoc_side(const Coalgebra& base, const RModule& mod,
                           std::size_t basis_index, bool delta_on_first) {
    Vec r = vec_zero(base.dim(), base.field());
    r[basis_index] = Scalar::one(base.field());
    TensorElement d1 = TensorElement::from_element(base.algebra(), r).apply_delta(base, 0);
    TensorElement d2 = d1.apply_delta(base, delta_on_first ? 0 : 1);
    return d2.push_leg(mod, 0);
}

}  // namespace

NucleusPair make_nucleus_pair(RModule module, TensorElement m) {
    if (m.legs() != 2) throw DimensionError("nucleus pair element needs two legs");
    if (m.end_dim() != module.dim())
        throw DimensionError("nucleus pair End dimension does not match the module");
    if (!(*m.base() == *module.algebra()))
        throw InputError("element and module have different base algebras");
    auto inv = m.inverse();
    if (!inv) throw PreconditionError("nucleus pair element is not invertible");
    return {std::move(module), std::move(m), std::move(*inv)};
}

NucleusPair identity_pair(RModule module) {
    TensorElement u = TensorElement::unit(module.algebra(), module.dim(), 2);
    return {std::move(module), u, u};
}

bool check_inv(const Coalgebra& base, const NucleusPair& p) {
    require_same_base(base, p);
    for (std::size_t t = 0; t < base.dim(); ++t) {
        TensorElement lhs = coassoc_side(base, p.module, t, true);
        TensorElement rhs = coassoc_side(base, p.module, t, false);
        if (lhs * p.m != p.m * rhs) return false;
    }
    return true;
}

namespace {

// The four transported factors of m|n; from == p.m gives the element, and
// feeding inverses in reverse order gives its inverse.
struct TensorFactors {
    TensorElement f1, f2, f3, f4inv;
};

TensorFactors tensor_factors(const Coalgebra& base, const NucleusPair& p,
                             const NucleusPair& q) {
    const RModule& n = q.module;
    TensorFactors f{
        p.m.push_leg(n, 0).insert_unit_leg(1),
        p.m.apply_delta(base, 0).push_leg(n, 0),
        q.m.end_tensor_left(p.module.dim()),
        p.m_inv.apply_delta(base, 1).push_leg(n, 0),
    };
    return f;
}

}  // namespace

NucleusPair tensor_pairs(const Coalgebra& base, const NucleusPair& p,
                         const NucleusPair& q) {
    require_same_base(base, p);
    require_same_base(base, q);
    TensorFactors f = tensor_factors(base, p, q);
    TensorElement mn = f.f1 * f.f2 * f.f3 * f.f4inv;
    // inverse assembled from the transported inverses, in reverse order
    TensorElement f4 = p.m.apply_delta(base, 1).push_leg(q.module, 0);
    TensorElement f3inv = q.m_inv.end_tensor_left(p.module.dim());
    TensorElement f2inv = p.m_inv.apply_delta(base, 0).push_leg(q.module, 0);
    TensorElement f1inv = p.m_inv.push_leg(q.module, 0).insert_unit_leg(1);
    TensorElement mn_inv = f4 * f3inv * f2inv * f1inv;
    if (!(mn * mn_inv).is_unit() || !(mn_inv * mn).is_unit())
        throw InternalError("transported inverse of a tensor pair failed");
    return {module_tensor(base, p.module, q.module), std::move(mn), std::move(mn_inv)};
}

Matrix associativity_constraint(const NucleusPair& p, const NucleusPair& q,
                                const NucleusPair& r) {
    require_pair_shape(p);
    return p.m.evaluate({&q.module, &r.module});
}

bool verify_pentagon(const Coalgebra& base, const NucleusPair& p,
                     const NucleusPair& q, const NucleusPair& r,
                     const NucleusPair& s) {
    require_same_base(base, p);
    require_same_base(base, q);
    require_same_base(base, r);
    require_same_base(base, s);
    const Field& f = base.field();
    RModule lp = module_tensor(base, r.module, s.module);
    RModule ql = module_tensor(base, q.module, r.module);
    NucleusPair pq = tensor_pairs(base, p, q);

    Matrix phi1 = pq.m.evaluate({&r.module, &s.module});
    Matrix phi2 = p.m.evaluate({&q.module, &lp});
    Matrix lhs = phi1 * phi2;

    Matrix phi3 = p.m.evaluate({&q.module, &r.module})
                      .kron(Matrix::identity(s.module.dim(), f));
    Matrix phi4 = p.m.evaluate({&ql, &s.module});
    Matrix phi5 = Matrix::identity(p.module.dim(), f)
                      .kron(q.m.evaluate({&r.module, &s.module}));
    Matrix rhs = phi3 * phi4 * phi5;
    return lhs == rhs;
}

bool check_normalization(const Coalgebra& base, const NucleusPair& p) {
    require_same_base(base, p);
    TensorElement u = TensorElement::unit(p.m.base(), p.module.dim(), 1);
    return p.m.apply_counit(base, 0) == u && p.m.apply_counit(base, 1) == u;
}

NucleusPair twist_pair(const Coalgebra& base, const NucleusPair& p,
                       const TensorElement& c) {
    require_same_base(base, p);
    if (c.legs() != 2 || c.end_dim() != 1)
        throw DimensionError("twist element must have two legs and trivial End part");
    auto cinv_opt = c.inverse();
    if (!cinv_opt) throw PreconditionError("twist element is not invertible");
    const TensorElement& cinv = *cinv_opt;
    const RModule& mod = p.module;

    TensorElement c1 = c.push_leg(mod, 0).insert_unit_leg(1);
    TensorElement c2 = c.apply_delta(base, 0).push_leg(mod, 0);
    TensorElement c3inv = cinv.apply_delta(base, 1).push_leg(mod, 0);
    TensorElement c4inv = cinv.end_tensor_left(mod.dim());
    TensorElement mc = c1 * c2 * p.m * c3inv * c4inv;

    TensorElement c1inv = cinv.push_leg(mod, 0).insert_unit_leg(1);
    TensorElement c2inv = cinv.apply_delta(base, 0).push_leg(mod, 0);
    TensorElement c3 = c.apply_delta(base, 1).push_leg(mod, 0);
    TensorElement c4 = c.end_tensor_left(mod.dim());
    TensorElement mc_inv = c4 * c3 * p.m_inv * c2inv * c1inv;
    if (!(mc * mc_inv).is_unit() || !(mc_inv * mc).is_unit())
        throw InternalError("transported inverse of a twisted pair failed");
    return {mod, std::move(mc), std::move(mc_inv)};
}

TensorElement twist_transformation(const Coalgebra& base, const TensorElement& c,
                                   const Vec& z) {
    if (c.legs() != 2 || c.end_dim() != 1)
        throw DimensionError("twist element must have two legs and trivial End part");
    const Algebra& R = base.R();
    auto zinv = algebra_inverse(R, z);
    if (!zinv) throw PreconditionError("central element is not invertible");
    for (std::size_t i = 0; i < R.dim(); ++i) {
        Vec ei = R.basis_vector(i);
        if (R.multiply(z, ei) != R.multiply(ei, z))
            throw PreconditionError("element is not central");
    }
    // z (x) z as a two-leg element
    TensorElement zz(c.base(), 1, 2);
    std::size_t n = R.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            zz.coeff(a * n + b).at(0, 0) = z[a] * z[b];
    TensorElement dz_inv =
        TensorElement::from_element(c.base(), *zinv).apply_delta(base, 0);
    return zz * c * dz_inv;
}

MultiplicantPair make_multiplicant_pair(CoalgebraPtr h1, CoalgebraPtr h2, Matrix f,
                                        RModule module, TensorElement m) {
    if (!h1 || !h2) throw InputError("multiplicant pair with missing bialgebra");
    if (!h1->coassociative() || !h2->coassociative() || !h1->has_counit() ||
        !h2->has_counit())
        throw PreconditionError("multiplicant pairs need coassociative bialgebras "
                                "with counits");
    if (f.rows() != h2->dim() || f.cols() != h1->dim())
        throw DimensionError("homomorphism matrix must be dim(H2) x dim(H1)");
    const Algebra& A1 = h1->R();
    const Algebra& A2 = h2->R();
    if (f.apply(*A1.unit()) != *A2.unit())
        throw PreconditionError("f does not preserve the unit");
    for (std::size_t i = 0; i < A1.dim(); ++i)
        for (std::size_t j = 0; j < A1.dim(); ++j) {
            Vec lhs = f.apply(A1.basis_product(i, j));
            Vec rhs = A2.multiply(f.apply(A1.basis_vector(i)), f.apply(A1.basis_vector(j)));
            if (lhs != rhs)
                throw PreconditionError("f is not an algebra homomorphism");
        }
    if (m.legs() != 1 || m.end_dim() != module.dim())
        throw DimensionError("multiplicant pair element must be one-leg over End(M)");
    if (!(*m.base() == A2) || !(*module.algebra() == A2))
        throw InputError("module and element must live over H2");
    auto inv = m.inverse();
    if (!inv) throw PreconditionError("multiplicant pair element is not invertible");
    return {std::move(h1), std::move(h2), std::move(f), std::move(module),
            std::move(m), std::move(*inv)};
}

namespace {

// (f (x) f) delta_H1(e_h) as a two-leg element over H2.
TensorElement mapped_coproduct(const MultiplicantPair& mp, std::size_t h) {
    const Coalgebra& H1 = *mp.h1;
    std::size_t n1 = H1.dim();
    std::size_t n2 = mp.h2->dim();
    TensorElement out(mp.h2->algebra(), 1, 2);
    for (std::size_t a = 0; a < n1; ++a)
        for (std::size_t b = 0; b < n1; ++b) {
            const Scalar& d = H1.delta(h, a, b);
            if (d.is_zero()) continue;
            Vec fa = mp.f.apply(H1.R().basis_vector(a));
            Vec fb = mp.f.apply(H1.R().basis_vector(b));
            for (std::size_t u = 0; u < n2; ++u) {
                if (fa[u].is_zero()) continue;
                for (std::size_t v = 0; v < n2; ++v)
                    if (!fb[v].is_zero())
                        out.coeff(u * n2 + v).at(0, 0) += d * fa[u] * fb[v];
            }
        }
    return out;
}

}  // namespace

bool multiplicant_check(const MultiplicantPair& mp) {
    const Coalgebra& H2 = *mp.h2;
    for (std::size_t h = 0; h < mp.h1->dim(); ++h) {
        Vec fh = mp.f.apply(mp.h1->R().basis_vector(h));
        TensorElement lhs_factor = TensorElement::from_element(mp.h2->algebra(), fh)
                                       .apply_delta(H2, 0)
                                       .push_leg(mp.module, 0);
        TensorElement rhs_factor = mapped_coproduct(mp, h).push_leg(mp.module, 0);
        if (mp.m * lhs_factor != rhs_factor * mp.m) return false;
    }
    return true;
}

MultiplicantPair multiplicant_tensor(const MultiplicantPair& a,
                                     const MultiplicantPair& b) {
    if (!(*a.h1->algebra() == *b.h1->algebra()) ||
        !(*a.h2->algebra() == *b.h2->algebra()) || a.f != b.f)
        throw InputError("multiplicant pairs live over different data");
    const Coalgebra& H2 = *a.h2;
    const RModule& N = b.module;
    TensorElement f1inv = a.m_inv.push_leg(N, 0).insert_unit_leg(0);
    TensorElement f2 = b.m.end_tensor_left(a.module.dim());
    TensorElement f3 = a.m.apply_delta(H2, 0).push_leg(N, 0);
    TensorElement mn = f1inv * f2 * f3;
    RModule mod = module_tensor(H2, a.module, N);
    return make_multiplicant_pair(a.h1, a.h2, a.f, std::move(mod), std::move(mn));
}

Matrix multiplicant_semigroupal_structure(const MultiplicantPair& a,
                                          const RModule& n) {
    return a.m.evaluate({&n});
}

TensorElement gamma_element(const Coalgebra& h2, const RModule& module, const Vec& x) {
    auto xinv = algebra_inverse(h2.R(), x);
    if (!xinv) throw PreconditionError("gamma element needs an invertible x");
    TensorElement dxinv =
        TensorElement::from_element(h2.algebra(), *xinv).apply_delta(h2, 0);
    std::size_t n = h2.dim();
    TensorElement xx(h2.algebra(), 1, 2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            xx.coeff(a * n + b).at(0, 0) = x[a] * x[b];
    return (dxinv * xx).push_leg(module, 0);
}

bool multiplicant_gamma_membership(const MultiplicantPair& mp, const Vec& x) {
    return mp.m == gamma_element(*mp.h2, mp.module, x);
}

FreeActionResult free_algebra_action(const TensorElement& v) {
    if (v.legs() != 1) throw DimensionError("free-algebra action needs one leg");
    auto vinv = v.inverse();
    if (!vinv) throw PreconditionError("element is not invertible");
    const Algebra& R = *v.base();
    std::size_t n = R.dim(), d = v.end_dim();
    FreeActionResult res;
    for (std::size_t i = 0; i < n; ++i) {
        res.images.push_back(v.coeff(i));
        res.inv_images.push_back(vinv->coeff(i));
    }
    res.relations_hold = true;
    const Vec& one = *R.unit();
    for (std::size_t k = 0; k < n; ++k) {
        // delta(l) pairs against products: sum_{ij} c_ij^k E_i F_j = l(1) Id
        Matrix acc1 = Matrix::zero(d, d, R.field());
        Matrix acc2 = Matrix::zero(d, d, R.field());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& c = R.c(i, j, k);
                if (c.is_zero()) continue;
                acc1 = acc1 + (res.images[i] * res.inv_images[j]).scaled(c);
                acc2 = acc2 + (res.inv_images[i] * res.images[j]).scaled(c);
            }
        Matrix expect = Matrix::identity(d, R.field()).scaled(one[k]);
        if (acc1 != expect || acc2 != expect) res.relations_hold = false;
    }
    return res;
}

}  // namespace nucal
