#pragma once

#include "nucal/tensor_element.hpp"

namespace nucal {

// Module M together with an invertible m in End(M) (x) R (x) R; the data of
// an object of the left nucleus of R-Mod once check_inv holds.
struct NucleusPair {
    RModule module;
    TensorElement m;
    TensorElement m_inv;
};

// Builds the pair, computing and verifying the two-sided inverse.
NucleusPair make_nucleus_pair(RModule module, TensorElement m);
// (M, 1): the image of M under the canonical splitting when delta is
// coassociative.
NucleusPair identity_pair(RModule module);

// (delta (x) I) delta(r) m = m (I (x) delta) delta(r) for all basis r, with
// the first legs evaluated through the module action.
bool check_inv(const Coalgebra& base, const NucleusPair& p);

// (M,m) (x) (N,n) = (M (x) N, m|n), the four-factor composite element.
NucleusPair tensor_pairs(const Coalgebra& base, const NucleusPair& p,
                         const NucleusPair& q);

// phi_{p,q,r} = (I (x) rho_N (x) rho_L)(m), an operator on M (x) N (x) L.
Matrix associativity_constraint(const NucleusPair& p, const NucleusPair& q,
                                const NucleusPair& r);

// Pentagon identity of the induced constraint on M (x) N (x) L (x) P.
// Theorem-backed: false signals an implementation fault.
bool verify_pentagon(const Coalgebra& base, const NucleusPair& p,
                     const NucleusPair& q, const NucleusPair& r,
                     const NucleusPair& s);

// (I (x) eps (x) I)(m) = 1 = (I (x) I (x) eps)(m).
bool check_normalization(const Coalgebra& base, const NucleusPair& p);

// Twist by an invertible c in R (x) R (trivial End leg):
// m^c = C1 C2 m C3^{-1} C4^{-1}.
NucleusPair twist_pair(const Coalgebra& base, const NucleusPair& p,
                       const TensorElement& c);

// Action of multiplication-by-z (z central invertible) on twists:
// c^f = (z (x) z) c delta(z)^{-1}.
TensorElement twist_transformation(const Coalgebra& base, const TensorElement& c,
                                   const Vec& z);

// ---- multiplicants of pullback functors between bialgebra module
// categories ----

// H2-module M with invertible m in End(M) (x) H2, against an algebra map
// f: H1 -> H2 of coassociative bialgebras.
struct MultiplicantPair {
    CoalgebraPtr h1;
    CoalgebraPtr h2;
    Matrix f;  // h2.dim x h1.dim, an algebra homomorphism (validated)
    RModule module;
    TensorElement m;
    TensorElement m_inv;
};

MultiplicantPair make_multiplicant_pair(CoalgebraPtr h1, CoalgebraPtr h2, Matrix f,
                                        RModule module, TensorElement m);

// m delta(f(h)) = (f (x) f) delta(h) m for all basis h of H1.
bool multiplicant_check(const MultiplicantPair& mp);

// (m|n) = (m (x) 1)^{-1} (1 (x) n) (I (x) delta)(m) on M (x) N.
MultiplicantPair multiplicant_tensor(const MultiplicantPair& a,
                                     const MultiplicantPair& b);

// Semigroupal structure of the pullback functor: (I (x) rho_N)(m).
Matrix multiplicant_semigroupal_structure(const MultiplicantPair& a,
                                          const RModule& n);

// m == (rho_M (x) I)(delta(x)^{-1} (x (x) x)) for an invertible x in H2.
bool multiplicant_gamma_membership(const MultiplicantPair& mp, const Vec& x);
// The element above, for constructing valid pairs.
TensorElement gamma_element(const Coalgebra& h2, const RModule& module, const Vec& x);

// ---- invertible elements of End(V) (x) R as free-algebra actions ----

struct FreeActionResult {
    std::vector<Matrix> images;      // f_v(e_i^dual) = i-th coefficient of v
    std::vector<Matrix> inv_images;  // from v^{-1}
    bool relations_hold;             // both quotient relations, all functionals
};
FreeActionResult free_algebra_action(const TensorElement& v);

}  // namespace nucal
