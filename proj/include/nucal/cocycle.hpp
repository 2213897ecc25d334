#pragma once

#include "nucal/group.hpp"
#include "nucal/modcat.hpp"

namespace nucal {

// Table of nonzero field values alpha(f,g,h) on G^3.  The cocycle condition
// is a property checked by cocycle_check, never assumed.
class Cocycle3 {
public:
    Cocycle3(const FiniteGroup& group, std::vector<Scalar> values);
    static Cocycle3 constant_one(const FiniteGroup& group, const Field& f);

    const FiniteGroup& group() const { return group_; }
    Field field() const { return values_[0].field(); }
    const Scalar& at(std::size_t f, std::size_t g, std::size_t h) const {
        std::size_t n = group_.size();
        return values_[(f * n + g) * n + h];
    }
    const std::vector<Scalar>& values() const { return values_; }

private:
    FiniteGroup group_;
    std::vector<Scalar> values_;  // |G|^3 entries, all nonzero
};

// alpha(g2,g3,g4) alpha(g1,g2g3,g4) alpha(g1,g2,g3)
//   = alpha(g1g2,g3,g4) alpha(g1,g2,g3g4) for all quadruples.
bool cocycle_check(const Cocycle3& alpha);

// d(beta)(f,g,h) = beta(g,h) beta(fg,h)^{-1} beta(f,gh) beta(f,g)^{-1};
// passes cocycle_check by construction.
Cocycle3 coboundary(const FiniteGroup& g, const std::vector<Scalar>& beta);

// The operator multiplying the (f,g,h) isotypic component of M (x) N (x) L
// by alpha(f,g,h).  Rejects non-cocycle tables unless enforcement is off
// (testing hook for the pentagon <-> cocycle equivalence).
Matrix constraint_from_cocycle(const Cocycle3& alpha, const RModule& m,
                               const RModule& n, const RModule& l,
                               bool enforce_cocycle = true);

// Nucleus pair (M, m) with m(f,g) = sum_h alpha(h,f,g) rho(p_h).
NucleusPair pair_from_cocycle(const Cocycle3& alpha, const RModule& m,
                              bool enforce_cocycle = true);

// Pentagon identity for the constraint built directly from the table on all
// stages of M (x) N (x) L (x) P.  Holds iff the table is a cocycle (exercised
// both ways in tests); `base` must be the function bialgebra of the group.
bool cocycle_pentagon_holds(const Coalgebra& base, const Cocycle3& alpha,
                            const RModule& m, const RModule& n, const RModule& l,
                            const RModule& p);

// All {+1,-1}-valued tables satisfying the cocycle condition, via the
// GF(2)-linear form of the condition (the sign tables form a group, so the
// full solution set is the span of a kernel basis).  |G| <= 4.
std::vector<Cocycle3> enumerate_sign_cocycles(const FiniteGroup& g, const Field& f);

}  // namespace nucal
