#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nucal/subspace.hpp"

namespace nucal {

class FiniteMonoid;

// Finite-dimensional algebra given by structure constants
// e_i e_j = sum_k c[i][j][k] e_k.  Not assumed associative, commutative or
// unital; those are computed properties.  Validated eagerly at construction.
class Algebra {
public:
    Algebra(Field field, std::size_t dim, std::vector<Scalar> structure_constants,
            std::optional<Vec> unit = std::nullopt,
            std::vector<std::string> names = {});

    const Field& field() const { return field_; }
    std::size_t dim() const { return n_; }
    const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * n_ + j) * n_ + k];
    }
    const std::optional<Vec>& unit() const { return unit_; }
    const std::vector<std::string>& names() const { return names_; }

    Vec basis_vector(std::size_t i) const;
    Vec basis_product(std::size_t i, std::size_t j) const;

    // Bilinear extension of the structure constants.
    Vec multiply(const Vec& x, const Vec& y) const;

    // J(x,y,z) = x(yz) - (xy)z
    Vec associator(const Vec& x, const Vec& y, const Vec& z) const;

    bool is_associative() const;
    bool is_commutative() const;

    // The unique two-sided unit, if one exists (linear solve; see below).
    std::optional<Vec> find_unit() const;

    bool operator==(const Algebra& o) const;

private:
    Field field_;
    std::size_t n_;
    std::vector<Scalar> c_;  // n^3 entries, row-major (i,j,k)
    std::optional<Vec> unit_;
    std::vector<std::string> names_;
    // nonzero (k, c_ijk) pairs per basis pair, for sparse products
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> table_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

// Linear map between algebras; matrix is target_dim x source_dim.
struct LinearMap {
    AlgebraPtr source;
    AlgebraPtr target;
    Matrix matrix;

    LinearMap(AlgebraPtr src, AlgebraPtr tgt, Matrix m);
    Vec apply(const Vec& x) const { return matrix.apply(x); }
};

// m_f(x,y) = f(xy) - f(x)f(y)
Vec multiplicative_defect(const LinearMap& f, const Vec& x, const Vec& y);

bool is_subalgebra_closed(const Algebra& a, const Subspace& s);

// ---- stock constructions ----

Algebra zero_algebra(const Field& f, std::size_t dim);
Algebra ground_field_algebra(const Field& f);
// Full matrix algebra M_m(k), basis e_{rs} flattened row-major (dim m^2).
Algebra matrix_algebra(const Field& f, std::size_t m);
// Functions on an n-point set with pointwise product (diagonal constants).
Algebra function_algebra(const Field& f, std::size_t n);
// Group/monoid algebra k[M] from a multiplication table.
Algebra monoid_algebra(const Field& f, const FiniteMonoid& m);
// Same algebra expressed in the basis given by the rows of an invertible g.
Algebra change_basis(const Algebra& a, const Matrix& g);

// One Cayley-Dickson doubling step: from (A, conjugation) of dimension n to
// dimension 2n via (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
struct InvolutiveAlgebra {
    Algebra algebra;
    Matrix conjugation;
};
InvolutiveAlgebra cayley_dickson_double(const InvolutiveAlgebra& base);
// Repeated doubling from the ground field: 1 -> C -> H -> O -> ...
InvolutiveAlgebra cayley_dickson_algebra(const Field& f, unsigned doublings);
inline Algebra octonion_algebra(const Field& f) {
    return cayley_dickson_algebra(f, 3).algebra;
}

}  // namespace nucal
