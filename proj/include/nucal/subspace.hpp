#pragma once

#include "nucal/matrix.hpp"

namespace nucal {

// Linear subspace of k^n in canonical form: the basis matrix is the rref of
// any spanning set, so equal subspaces compare bit-equal.
class Subspace {
public:
    Subspace() : ambient_(0) {}

    // Canonicalizes the given spanning rows (they need not be independent).
    static Subspace span(const Matrix& rows, std::size_t ambient_dim);
    static Subspace zero(std::size_t ambient_dim, const Field& f);
    static Subspace full(std::size_t ambient_dim, const Field& f);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const Field& field() const { return basis_.field(); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;
    bool operator==(const Subspace& o) const;
    bool operator!=(const Subspace& o) const { return !(*this == o); }

private:
    std::size_t ambient_;
    Matrix basis_;  // dim x ambient, rref rows
};

// Null space {v : m v = 0} with canonical basis.
Subspace kernel(const Matrix& m);

// Intersection of two subspaces of the same ambient space.
Subspace intersect(const Subspace& a, const Subspace& b);

}  // namespace nucal
