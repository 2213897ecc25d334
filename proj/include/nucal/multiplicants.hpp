#pragma once

#include "nucal/algebra.hpp"
#include "nucal/monoid.hpp"
#include "nucal/nuclei.hpp"

namespace nucal {

// Elements on which f is multiplicative from the given side:
// left  = {a : f(a x) = f(a) f(x) for all x},
// right = {a : f(x a) = f(x) f(a) for all x}.
// Source and target must be associative; Side::Middle is rejected.
Subspace multiplicant(const LinearMap& f, Side side);

struct MultiplicantReport {
    Subspace subspace;
    bool closed;          // closed under the source product
    bool multiplicative;  // f restricted to it intertwines products
};
MultiplicantReport multiplicant_report(const LinearMap& f, Side side);

// f(x) m_f(y,z) - m_f(xy,z) + m_f(x,yz) - m_f(x,y) f(z) on basis triples.
bool verify_multiplicant_identity(const LinearMap& f);

struct CommutativeMultiplicantReport {
    bool sides_equal;
    std::size_t dim;
};
// Requires both algebras commutative (and associative).
CommutativeMultiplicantReport commutative_multiplicant_equality(const LinearMap& f);

// ---- monoid level ----

// Sorted element indices a with f(ax) = f(a)f(x) for all x (left), or the
// mirror condition (right).
std::vector<std::size_t> monoid_multiplicant(const MonoidMap& f, Side side);

struct MonoidMultiplicantReport {
    std::vector<std::size_t> elements;
    bool closed;          // closed under the monoid product
    bool contains_unit;   // the unit itself satisfies the condition
};
MonoidMultiplicantReport monoid_multiplicant_report(const MonoidMap& f, Side side);

struct PullbackReport {
    // {(a, f(a)) : a in M_l(f), f(a) in M_l(g)}
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    bool closed_under_product;        // componentwise products stay inside
    bool projection_in_composite;     // first components lie in M_l(gf)
    bool projection_multiplicative;   // projection preserves products
};
PullbackReport multiplicant_pullback(const MonoidMap& f, const MonoidMap& g);

}  // namespace nucal
