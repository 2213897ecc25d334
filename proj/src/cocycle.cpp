#include "nucal/cocycle.hpp"

namespace nucal {

Cocycle3::Cocycle3(const FiniteGroup& group, std::vector<Scalar> values)
    : group_(group), values_(std::move(values)) {
    std::size_t n = group_.size();
    if (values_.size() != n * n * n)
        throw InputError("cocycle table must have |G|^3 entries");
    for (const Scalar& v : values_) {
        if (v.field() != values_[0].field())
            throw FieldMismatchError("cocycle values over mixed fields");
        if (v.is_zero()) throw InputError("cocycle values must be nonzero");
    }
}

Cocycle3 Cocycle3::constant_one(const FiniteGroup& group, const Field& f) {
    std::size_t n = group.size();
    return Cocycle3(group, std::vector<Scalar>(n * n * n, Scalar::one(f)));
}

bool cocycle_check(const Cocycle3& alpha) {
    const FiniteGroup& g = alpha.group();
    std::size_t n = g.size();
    for (std::size_t g1 = 0; g1 < n; ++g1)
        for (std::size_t g2 = 0; g2 < n; ++g2)
            for (std::size_t g3 = 0; g3 < n; ++g3)
                for (std::size_t g4 = 0; g4 < n; ++g4) {
                    Scalar lhs = alpha.at(g2, g3, g4) *
                                 alpha.at(g1, g.op(g2, g3), g4) *
                                 alpha.at(g1, g2, g3);
                    Scalar rhs = alpha.at(g.op(g1, g2), g3, g4) *
                                 alpha.at(g1, g2, g.op(g3, g4));
                    if (lhs != rhs) return false;
                }
    return true;
}

Cocycle3 coboundary(const FiniteGroup& g, const std::vector<Scalar>& beta) {
    std::size_t n = g.size();
    if (beta.size() != n * n) throw InputError("coboundary data must have |G|^2 entries");
    for (const Scalar& v : beta)
        if (v.is_zero()) throw InputError("coboundary values must be nonzero");
    std::vector<Scalar> vals;
    vals.reserve(n * n * n);
    auto b = [&](std::size_t x, std::size_t y) -> const Scalar& {
        return beta[x * n + y];
    };
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k)
                vals.push_back(b(h, k) * b(g.op(f, h), k).inverse() *
                               b(f, g.op(h, k)) * b(f, h).inverse());
    return Cocycle3(g, std::move(vals));
}

Matrix constraint_from_cocycle(const Cocycle3& alpha, const RModule& m,
                               const RModule& n, const RModule& l,
                               bool enforce_cocycle) {
    if (enforce_cocycle && !cocycle_check(alpha))
        throw PreconditionError("table fails the cocycle condition");
    std::size_t ng = alpha.group().size();
    if (m.algebra()->dim() != ng)
        throw DimensionError("modules must live over k(G) of the cocycle's group");
    const Field& fd = alpha.field();
    std::size_t dim = m.dim() * n.dim() * l.dim();
    Matrix out = Matrix::zero(dim, dim, fd);
    for (std::size_t f = 0; f < ng; ++f)
        for (std::size_t g = 0; g < ng; ++g)
            for (std::size_t h = 0; h < ng; ++h) {
                Matrix proj = m.rho(f).kron(n.rho(g)).kron(l.rho(h));
                if (!proj.is_zero()) out = out + proj.scaled(alpha.at(f, g, h));
            }
    return out;
}

NucleusPair pair_from_cocycle(const Cocycle3& alpha, const RModule& m,
                              bool enforce_cocycle) {
    if (enforce_cocycle && !cocycle_check(alpha))
        throw PreconditionError("table fails the cocycle condition");
    std::size_t ng = alpha.group().size();
    if (m.algebra()->dim() != ng)
        throw DimensionError("module must live over k(G) of the cocycle's group");
    TensorElement elem(m.algebra(), m.dim(), 2);
    for (std::size_t f = 0; f < ng; ++f)
        for (std::size_t g = 0; g < ng; ++g) {
            Matrix block = Matrix::zero(m.dim(), m.dim(), alpha.field());
            for (std::size_t h = 0; h < ng; ++h)
                block = block + m.rho(h).scaled(alpha.at(h, f, g));
            elem.coeff(f * ng + g) = std::move(block);
        }
    return make_nucleus_pair(m, std::move(elem));
}

bool cocycle_pentagon_holds(const Coalgebra& base, const Cocycle3& alpha,
                            const RModule& m, const RModule& n, const RModule& l,
                            const RModule& p) {
    RModule mn = module_tensor(base, m, n);
    RModule lp = module_tensor(base, l, p);
    RModule nl = module_tensor(base, n, l);
    const Field& fd = alpha.field();
    Matrix lhs = constraint_from_cocycle(alpha, mn, l, p, false) *
                 constraint_from_cocycle(alpha, m, n, lp, false);
    Matrix rhs = constraint_from_cocycle(alpha, m, n, l, false)
                     .kron(Matrix::identity(p.dim(), fd)) *
                 constraint_from_cocycle(alpha, m, nl, p, false) *
                 Matrix::identity(m.dim(), fd)
                     .kron(constraint_from_cocycle(alpha, n, l, p, false));
    return lhs == rhs;
}

std::vector<Cocycle3> enumerate_sign_cocycles(const FiniteGroup& g, const Field& f) {
    if (g.size() > 4) throw InputError("sign cocycle enumeration supports |G| <= 4");
    Scalar minus_one = -Scalar::one(f);
    if (minus_one == Scalar::one(f))
        throw InputError("field must contain -1 distinct from 1");
    std::size_t n = g.size();
    std::size_t cells = n * n * n;
    auto cell = [&](std::size_t a, std::size_t b, std::size_t c) {
        return (a * n + b) * n + c;
    };
    // The condition in sign exponents is linear over GF(2): one equation per
    // quadruple, variables = table cells.
    Field f2 = Field::gf(2);
    Matrix sys(n * n * n * n, cells, f2);
    std::size_t row = 0;
    for (std::size_t g1 = 0; g1 < n; ++g1)
        for (std::size_t g2 = 0; g2 < n; ++g2)
            for (std::size_t g3 = 0; g3 < n; ++g3)
                for (std::size_t g4 = 0; g4 < n; ++g4, ++row) {
                    Scalar one2 = Scalar::one(f2);
                    sys.at(row, cell(g2, g3, g4)) += one2;
                    sys.at(row, cell(g1, g.op(g2, g3), g4)) += one2;
                    sys.at(row, cell(g1, g2, g3)) += one2;
                    sys.at(row, cell(g.op(g1, g2), g3, g4)) += one2;
                    sys.at(row, cell(g1, g2, g.op(g3, g4))) += one2;
                }
    Subspace ker = kernel(sys);
    if (ker.dim() > 24)
        throw InputError("sign cocycle solution space too large to enumerate");
    std::vector<Cocycle3> out;
    std::size_t count = std::size_t(1) << ker.dim();
    for (std::size_t mask = 0; mask < count; ++mask) {
        Vec expo = vec_zero(cells, f2);
        for (std::size_t b = 0; b < ker.dim(); ++b)
            if (mask >> b & 1) expo = vec_add(expo, ker.basis().row(b));
        std::vector<Scalar> vals;
        vals.reserve(cells);
        for (std::size_t i = 0; i < cells; ++i)
            vals.push_back(expo[i].is_zero() ? Scalar::one(f) : minus_one);
        Cocycle3 cand(g, std::move(vals));
        if (!cocycle_check(cand))
            throw InternalError("sign table from the linearized condition fails "
                                "the cocycle condition");
        out.push_back(std::move(cand));
    }
    return out;
}

}  // namespace nucal
