#pragma once

#include <map>

#include "nucal/cocycle.hpp"

namespace nucal {

// Freely reduced word in the generators u(f,g) indexed by pairs of group
// elements; letters carry exponent +1 or -1 and adjacent inverses cancel.
class FreeWord {
public:
    using Letter = std::pair<std::uint32_t, int>;  // (f * |G| + g, +-1)

    FreeWord() = default;
    static FreeWord generator(std::uint32_t gen, int exp);

    bool empty() const { return letters_.empty(); }
    const std::vector<Letter>& letters() const { return letters_; }

    FreeWord concat(const FreeWord& o) const;
    FreeWord inverse() const;

    bool operator==(const FreeWord& o) const { return letters_ == o.letters_; }
    bool operator<(const FreeWord& o) const { return letters_ < o.letters_; }

private:
    std::vector<Letter> letters_;
};

// Basis element p_a (x) w of k(G) (x) k[F(G x G)].
struct QbBasis {
    std::size_t grp;
    FreeWord word;
    bool operator==(const QbBasis& o) const { return grp == o.grp && word == o.word; }
    bool operator<(const QbBasis& o) const {
        if (grp != o.grp) return grp < o.grp;
        return word < o.word;
    }
};

// Element of the `legs`-fold tensor power of k(G) (x) k[F(G x G)], stored in
// normal form: reduced words, sorted keys, no zero coefficients.
class QbTensor {
public:
    using Key = std::vector<QbBasis>;

    QbTensor(const FiniteGroup& g, const Field& f, std::size_t legs);

    static QbTensor unit(const FiniteGroup& g, const Field& f, std::size_t legs);
    // p_g as a one-leg element.
    static QbTensor delta_function(const FiniteGroup& g, const Field& f, std::size_t a);
    // u(f,g)^exp as a one-leg element (1 on the k(G) factor).
    static QbTensor generator(const FiniteGroup& g, const Field& f, std::size_t a,
                              std::size_t b, int exp = 1);

    const FiniteGroup& group() const { return group_; }
    const Field& field() const { return field_; }
    std::size_t legs() const { return legs_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Key& key, const Scalar& coeff);

    QbTensor operator*(const QbTensor& o) const;
    QbTensor operator+(const QbTensor& o) const;
    QbTensor operator-(const QbTensor& o) const;
    QbTensor scaled(const Scalar& c) const;
    bool operator==(const QbTensor& o) const;
    bool operator!=(const QbTensor& o) const { return !(*this == o); }
    bool is_unit() const;

private:
    FiniteGroup group_;
    Field field_;
    std::size_t legs_;
    std::map<Key, Scalar> terms_;
};

// Coproduct: delta(p_g) = sum_{ab=g} p_a (x) p_b and
// delta(u(f,g)) = sum_h u(h,f) u(hf,g) u(h,fg)^{-1} (x) p_h u(f,g),
// extended multiplicatively to words and linearly to sums.
QbTensor qb_coproduct(const QbTensor& x);
// Same, applied to one leg of a tensor (legs grow by one).
QbTensor qb_coproduct_on_leg(const QbTensor& x, std::size_t leg);

// Phi = sum_{f,g} u(f,g) (x) p_f (x) p_g and its inverse.
struct Associator {
    QbTensor phi;
    QbTensor phi_inv;
};
Associator associator_phi(const FiniteGroup& g, const Field& f);

// The coproduct is coassociative up to conjugation by the associator:
// (delta (x) I) delta(x) * Phi = Phi * (I (x) delta) delta(x), checked in
// normal form on every generator p_g and u(f,g); theorem-backed.
bool quasi_coassoc_check(const FiniteGroup& g, const Field& f);
// The same identity for one element (used for word-level spot checks).
bool quasi_coassoc_holds_for(const QbTensor& x, const Associator& assoc);

// k(G) is a sub-bialgebra: the coproduct of pure delta-function elements
// agrees with the k(G) coproduct.
bool qb_sub_bialgebra_check(const FiniteGroup& g, const Field& f);

// Splitting homomorphism pi determined by a value table alpha:
// pi(p_g) = p_g, pi(u(f,g)) = sum_h alpha(h,f,g) p_h.
class SplittingHom {
public:
    SplittingHom(const FiniteGroup& g, std::vector<Scalar> alpha_values);

    // Image of a one-leg element in k(G) coordinates.
    Vec apply(const QbTensor& x) const;
    // (pi (x) pi) of a two-leg element, flattened a*|G|+b.
    Vec apply2(const QbTensor& x) const;

    const FiniteGroup& group() const { return group_; }
    Field field() const { return values_[0].field(); }
    const Scalar& alpha(std::size_t h, std::size_t f, std::size_t g) const {
        std::size_t n = group_.size();
        return values_[(h * n + f) * n + g];
    }

private:
    FiniteGroup group_;
    std::vector<Scalar> values_;  // |G|^3, nonzero
};

struct SplittingReport {
    bool splits_inclusion;   // pi restricted to k(G) is the identity
    bool delta_compatible;   // (pi (x) pi) delta_N = delta_{k(G)} pi on generators
};
SplittingReport splitting_verify(const SplittingHom& pi);

inline SplittingHom splitting_hom(const Cocycle3& alpha) {
    return SplittingHom(alpha.group(), alpha.values());
}

}  // namespace nucal
