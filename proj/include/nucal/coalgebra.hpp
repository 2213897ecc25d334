#pragma once

#include "nucal/algebra.hpp"

namespace nucal {

class FiniteGroup;

// Associative unital algebra R with an algebra map delta: R -> R (x) R and
// optionally a counit.  Coassociativity is a computed flag, never assumed:
// non-coassociative deltas give honestly magmoidal module categories.
class Coalgebra {
public:
    // delta is (n^2 x n): column i holds delta(e_i) with row index a*n+b for
    // the e_a (x) e_b component.  epsilon, when given, has length n.
    Coalgebra(AlgebraPtr algebra, Matrix delta, std::optional<Vec> epsilon);

    const Algebra& R() const { return *algebra_; }
    const AlgebraPtr& algebra() const { return algebra_; }
    const Field& field() const { return algebra_->field(); }
    std::size_t dim() const { return algebra_->dim(); }

    // delta(e_i) coefficient at e_a (x) e_b.
    const Scalar& delta(std::size_t i, std::size_t a, std::size_t b) const {
        return delta_.at(a * dim() + b, i);
    }
    const Matrix& delta_matrix() const { return delta_; }
    bool has_counit() const { return epsilon_.has_value(); }
    const Vec& epsilon() const;
    bool coassociative() const { return coassociative_; }

private:
    AlgebraPtr algebra_;
    Matrix delta_;
    std::optional<Vec> epsilon_;
    bool coassociative_;
};

using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

// Left R-module of dimension d given by action matrices rho(e_i).
class RModule {
public:
    RModule(AlgebraPtr algebra, std::vector<Matrix> action);

    const AlgebraPtr& algebra() const { return algebra_; }
    std::size_t dim() const { return dim_; }
    const Matrix& rho(std::size_t i) const { return action_[i]; }
    // rho extended linearly to an algebra element.
    Matrix rho(const Vec& r) const;

private:
    AlgebraPtr algebra_;
    std::size_t dim_;
    std::vector<Matrix> action_;
};

// M (x) N with action rho(e_i) = (rho_M (x) rho_N)(delta(e_i)); the carrier
// is the flattened tensor space (index i_M * dim(N) + i_N).
RModule module_tensor(const Coalgebra& base, const RModule& m, const RModule& n);

// R acting on itself by left multiplication.
RModule regular_module(AlgebraPtr algebra);
// One-dimensional module through the counit.
RModule counit_module(const Coalgebra& base);

// Function bialgebra k(G): pointwise product, delta(p_g) = sum_{ab=g} p_a(x)p_b,
// epsilon = evaluation at the group unit.  Always coassociative.
Coalgebra function_bialgebra(const Field& f, const FiniteGroup& g);

// k(G)-module from an assignment of a group element to each coordinate
// (rho(p_g) = diagonal 0/1 projector onto the matching coordinates).
RModule graded_module(AlgebraPtr function_alg, const std::vector<std::size_t>& grading);

}  // namespace nucal
