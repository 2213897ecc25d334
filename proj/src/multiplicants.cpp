#include "nucal/multiplicants.hpp"

#include <algorithm>

namespace nucal {

namespace {

void require_associative(const LinearMap& f) {
    if (!f.source->is_associative())
        throw PreconditionError("multiplicant requires an associative source algebra");
    if (!f.target->is_associative())
        throw PreconditionError("multiplicant requires an associative target algebra");
}

}  // namespace

Subspace multiplicant(const LinearMap& f, Side side) {
    if (side == Side::Middle)
        throw InputError("multiplicants are left or right only");
    require_associative(f);
    const Algebra& A = *f.source;
    const Algebra& B = *f.target;
    std::size_t n = A.dim(), m = B.dim();
    const Field& fd = A.field();
    // Stack a -> m_f(a, e_j) (left) or a -> m_f(e_j, a) (right) over all j.
    Matrix sys(n * m, n, fd);
    for (std::size_t j = 0; j < n; ++j) {
        Vec ej = A.basis_vector(j);
        Vec fej = f.apply(ej);
        for (std::size_t t = 0; t < n; ++t) {
            Vec et = A.basis_vector(t);
            Vec col;
            if (side == Side::Left) {
                col = vec_sub(f.apply(A.multiply(et, ej)),
                              B.multiply(f.apply(et), fej));
            } else {
                col = vec_sub(f.apply(A.multiply(ej, et)),
                              B.multiply(fej, f.apply(et)));
            }
            for (std::size_t k = 0; k < m; ++k) sys.at(j * m + k, t) = col[k];
        }
    }
    return kernel(sys);
}

MultiplicantReport multiplicant_report(const LinearMap& f, Side side) {
    MultiplicantReport rep;
    rep.subspace = multiplicant(f, side);
    rep.closed = is_subalgebra_closed(*f.source, rep.subspace);
    rep.multiplicative = true;
    const Subspace& s = rep.subspace;
    for (std::size_t i = 0; i < s.dim() && rep.multiplicative; ++i)
        for (std::size_t j = 0; j < s.dim(); ++j) {
            Vec d = multiplicative_defect(f, s.basis().row(i), s.basis().row(j));
            if (!vec_is_zero(d)) {
                rep.multiplicative = false;
                break;
            }
        }
    if (!rep.closed || !rep.multiplicative)
        throw InternalError("computed multiplicant is not a subalgebra with "
                            "multiplicative restriction");
    return rep;
}

bool verify_multiplicant_identity(const LinearMap& f) {
    require_associative(f);
    const Algebra& A = *f.source;
    const Algebra& B = *f.target;
    std::size_t n = A.dim();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z) {
                Vec ex = A.basis_vector(x), ey = A.basis_vector(y), ez = A.basis_vector(z);
                Vec acc = B.multiply(f.apply(ex), multiplicative_defect(f, ey, ez));
                acc = vec_sub(acc, multiplicative_defect(f, A.multiply(ex, ey), ez));
                acc = vec_add(acc, multiplicative_defect(f, ex, A.multiply(ey, ez)));
                acc = vec_sub(acc, B.multiply(multiplicative_defect(f, ex, ey),
                                              f.apply(ez)));
                if (!vec_is_zero(acc)) return false;
            }
    return true;
}

CommutativeMultiplicantReport commutative_multiplicant_equality(const LinearMap& f) {
    if (!f.source->is_commutative() || !f.target->is_commutative())
        throw PreconditionError("both algebras must be commutative");
    require_associative(f);
    Subspace l = multiplicant(f, Side::Left);
    Subspace r = multiplicant(f, Side::Right);
    return {l == r, l.dim()};
}

std::vector<std::size_t> monoid_multiplicant(const MonoidMap& f, Side side) {
    if (side == Side::Middle)
        throw InputError("multiplicants are left or right only");
    std::vector<std::size_t> out;
    const FiniteMonoid& A = f.source;
    const FiniteMonoid& B = f.target;
    for (std::size_t a = 0; a < A.size(); ++a) {
        bool ok = true;
        for (std::size_t x = 0; x < A.size() && ok; ++x) {
            if (side == Side::Left)
                ok = f.apply(A.op(a, x)) == B.op(f.apply(a), f.apply(x));
            else
                ok = f.apply(A.op(x, a)) == B.op(f.apply(x), f.apply(a));
        }
        if (ok) out.push_back(a);
    }
    return out;  // ascending by construction
}

MonoidMultiplicantReport monoid_multiplicant_report(const MonoidMap& f, Side side) {
    MonoidMultiplicantReport rep;
    rep.elements = monoid_multiplicant(f, side);
    rep.contains_unit =
        std::binary_search(rep.elements.begin(), rep.elements.end(), f.source.unit());
    rep.closed = true;
    for (std::size_t a : rep.elements)
        for (std::size_t b : rep.elements)
            if (!std::binary_search(rep.elements.begin(), rep.elements.end(),
                                    f.source.op(a, b))) {
                rep.closed = false;
            }
    return rep;
}

PullbackReport multiplicant_pullback(const MonoidMap& f, const MonoidMap& g) {
    MonoidMap gf = compose(f, g);
    auto mlf = monoid_multiplicant(f, Side::Left);
    auto mlg = monoid_multiplicant(g, Side::Left);
    auto mlgf = monoid_multiplicant(gf, Side::Left);
    auto in = [](const std::vector<std::size_t>& v, std::size_t x) {
        return std::binary_search(v.begin(), v.end(), x);
    };

    PullbackReport rep;
    for (std::size_t a : mlf)
        if (in(mlg, f.apply(a))) rep.pairs.emplace_back(a, f.apply(a));

    auto in_pairs = [&](std::size_t a, std::size_t b) {
        return std::find(rep.pairs.begin(), rep.pairs.end(),
                         std::make_pair(a, b)) != rep.pairs.end();
    };
    rep.closed_under_product = true;
    rep.projection_multiplicative = true;
    for (const auto& [a, b] : rep.pairs)
        for (const auto& [a2, b2] : rep.pairs) {
            std::size_t pa = f.source.op(a, a2);
            std::size_t pb = f.target.op(b, b2);
            if (!in_pairs(pa, pb)) rep.closed_under_product = false;
            // the componentwise product stays of the form (x, f(x)), so the
            // projection identifies pair products with products in M_l(gf)
            if (pb != f.apply(pa)) rep.projection_multiplicative = false;
        }
    rep.projection_in_composite = true;
    for (const auto& [a, b] : rep.pairs)
        if (!in(mlgf, a)) rep.projection_in_composite = false;
    return rep;
}

}  // namespace nucal
