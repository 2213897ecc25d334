#pragma once

#include "nucal/coalgebra.hpp"

namespace nucal {

// Element of End(V) (x) R^((x)k): one d x d coefficient matrix per k-tuple of
// R basis indices.  Multiplication is matrix product on the End leg and
// structure-constant convolution on each R leg.  The flat index of a tuple
// (i_0,...,i_{k-1}) is i_0 n^{k-1} + ... + i_{k-1}.
class TensorElement {
public:
    TensorElement(AlgebraPtr base, std::size_t end_dim, std::size_t legs);  // zero

    static TensorElement unit(AlgebraPtr base, std::size_t end_dim, std::size_t legs);
    static TensorElement from_coeffs(AlgebraPtr base, std::size_t end_dim,
                                     std::size_t legs, std::vector<Matrix> coeffs);
    // r in R as a one-leg element with trivial End part.
    static TensorElement from_element(AlgebraPtr base, const Vec& r);

    const AlgebraPtr& base() const { return base_; }
    std::size_t end_dim() const { return end_dim_; }
    std::size_t legs() const { return legs_; }
    std::size_t index_count() const { return coeffs_.size(); }
    const Matrix& coeff(std::size_t flat) const { return coeffs_[flat]; }
    Matrix& coeff(std::size_t flat) { return coeffs_[flat]; }
    std::size_t flat_index(const std::vector<std::size_t>& tuple) const;

    TensorElement operator*(const TensorElement& o) const;
    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator-(const TensorElement& o) const;
    TensorElement scaled(const Scalar& c) const;
    bool operator==(const TensorElement& o) const;
    bool operator!=(const TensorElement& o) const { return !(*this == o); }
    bool is_unit() const;

    // Two-sided inverse, or nullopt.  Blockwise over an orthogonal idempotent
    // basis (e.g. k(G) in the delta basis), linear solve otherwise.
    std::optional<TensorElement> inverse() const;

    // Replace R leg `leg` by its coproduct: one more leg, new pair sits at
    // positions (leg, leg+1).
    TensorElement apply_delta(const Coalgebra& base, std::size_t leg) const;
    // Contract R leg `leg` with the counit.
    TensorElement apply_counit(const Coalgebra& base, std::size_t leg) const;
    // Evaluate R leg `leg` through the module action, enlarging the End part
    // on the right: E (x) e_a  |->  E (x) rho(e_a).
    TensorElement push_leg(const RModule& n, std::size_t leg) const;
    // New R leg carrying the unit of R at position pos.
    TensorElement insert_unit_leg(std::size_t pos) const;
    // Enlarge the End part by an identity factor.
    TensorElement end_tensor_left(std::size_t d) const;
    TensorElement end_tensor_right(std::size_t d) const;

    // Push every leg (left to right) through the given modules; the result is
    // the operator on V (x) X_1 (x) ... (x) X_k.
    Matrix evaluate(const std::vector<const RModule*>& modules) const;

private:
    void check_compatible(const TensorElement& o) const;

    AlgebraPtr base_;
    std::size_t end_dim_;
    std::size_t legs_;
    std::vector<Matrix> coeffs_;  // n^legs matrices, each end_dim x end_dim
};

// Diagonal structure constants over an idempotent basis (pointwise products).
bool has_orthogonal_idempotent_basis(const Algebra& a);

// Inverse of r in R via a linear solve (two-sidedness verified).
std::optional<Vec> algebra_inverse(const Algebra& a, const Vec& r);

}  // namespace nucal
