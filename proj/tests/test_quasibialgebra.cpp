#include <doctest.h>

#include "nucal/quasibialgebra.hpp"
#include "nucal/selftest.hpp"

using namespace nucal;

namespace {

FreeWord random_word(gen::Rng& rng, std::size_t gens, std::size_t len) {
    FreeWord w;
    for (std::size_t i = 0; i < len; ++i)
        w = w.concat(FreeWord::generator(
            static_cast<std::uint32_t>(gen::pick(rng, gens)),
            gen::pick(rng, 2) ? 1 : -1));
    return w;
}

}  // namespace

TEST_CASE("free word reduction") {
    FreeWord u = FreeWord::generator(3, 1);
    CHECK(u.concat(u.inverse()).empty());
    CHECK(u.inverse().concat(u).empty());

    gen::Rng rng(121);
    for (int t = 0; t < 50; ++t) {
        FreeWord w = random_word(rng, 9, gen::pick(rng, 8));
        CHECK(w.concat(w.inverse()).empty());
        CHECK(w.inverse().concat(w).empty());
        // no adjacent cancelling letters survive reduction
        const auto& ls = w.letters();
        for (std::size_t i = 0; i + 1 < ls.size(); ++i)
            CHECK(!(ls[i].first == ls[i + 1].first &&
                    ls[i].second == -ls[i + 1].second));
    }
}

TEST_CASE("multiplication in the group-indexed tensor algebra") {
    Field q = Field::rationals();
    FiniteGroup z2 = cyclic_group(2);
    // (p_a (x) w)(p_b (x) w') = delta_{a,b} p_a (x) ww'
    QbTensor pe = QbTensor::delta_function(z2, q, 0);
    QbTensor pg = QbTensor::delta_function(z2, q, 1);
    CHECK((pe * pg).term_count() == 0);
    CHECK(pe * pe == pe);
    CHECK(pe + pg == QbTensor::unit(z2, q, 1));

    QbTensor u = QbTensor::generator(z2, q, 1, 1);
    QbTensor uinv = QbTensor::generator(z2, q, 1, 1, -1);
    CHECK((u * uinv).is_unit());
    gen::Rng rng(123);
    for (int t = 0; t < 20; ++t) {
        // random invertible monomial times its inverse is the identity
        FreeWord w = random_word(rng, 4, 1 + gen::pick(rng, 5));
        QbTensor x(z2, q, 1);
        std::size_t a = gen::pick(rng, 2);
        x.add_term({QbBasis{a, w}}, Scalar::from_int(3, q));
        QbTensor y(z2, q, 1);
        y.add_term({QbBasis{a, w.inverse()}}, Scalar::from_fraction(1, 3));
        QbTensor prod = x * y;
        CHECK(prod.term_count() == 1);
        CHECK(prod.terms().begin()->first[0].grp == a);
        CHECK(prod.terms().begin()->first[0].word.empty());
        CHECK(prod.terms().begin()->second.is_one());
    }
}

TEST_CASE("coproduct of delta functions is the k(G) coproduct") {
    Field q = Field::rationals();
    for (std::size_t n : {1ul, 2ul, 3ul}) {
        FiniteGroup g = cyclic_group(n);
        CHECK(qb_sub_bialgebra_check(g, q));
    }
    // delta(p_e) over Z/2 = p_e (x) p_e + p_g (x) p_g
    FiniteGroup z2 = cyclic_group(2);
    QbTensor d = qb_coproduct(QbTensor::delta_function(z2, q, 0));
    QbTensor expect(z2, q, 2);
    expect.add_term({QbBasis{0, FreeWord()}, QbBasis{0, FreeWord()}}, Scalar::one(q));
    expect.add_term({QbBasis{1, FreeWord()}, QbBasis{1, FreeWord()}}, Scalar::one(q));
    CHECK(d == expect);
}

TEST_CASE("coproduct of a generator: direct expansion over Z/2") {
    Field q = Field::rationals();
    FiniteGroup z2 = cyclic_group(2);
    std::size_t n = 2;
    auto gen_id = [&](std::size_t f, std::size_t g) {
        return static_cast<std::uint32_t>(f * n + g);
    };
    // delta(u(g,g)) = sum_h u(h,g) u(hg,g) u(h,e)^{-1} (x) p_h u(g,g)
    QbTensor d = qb_coproduct(QbTensor::generator(z2, q, 1, 1));
    QbTensor expect(z2, q, 2);
    for (std::size_t h = 0; h < 2; ++h) {
        FreeWord w = FreeWord::generator(gen_id(h, 1), 1)
                         .concat(FreeWord::generator(gen_id(z2.op(h, 1), 1), 1))
                         .concat(FreeWord::generator(gen_id(h, 0), -1));
        for (std::size_t a = 0; a < 2; ++a)
            expect.add_term(
                {QbBasis{a, w}, QbBasis{h, FreeWord::generator(gen_id(1, 1), 1)}},
                Scalar::one(q));
    }
    CHECK(d == expect);

    // delta(1) = 1 (x) 1
    CHECK(qb_coproduct(QbTensor::unit(z2, q, 1)).is_unit());
}

TEST_CASE("associator and its inverse") {
    Field q = Field::rationals();
    // trivial group: Phi = u(e,e) (x) 1 (x) 1, one generator monomial
    FiniteGroup triv = trivial_group();
    Associator a1 = associator_phi(triv, q);
    CHECK(a1.phi.term_count() == 1);
    CHECK(a1.phi.terms().begin()->first[0].word.letters().size() == 1);
    CHECK((a1.phi * a1.phi_inv).is_unit());

    FiniteGroup z2 = cyclic_group(2);
    Associator a2 = associator_phi(z2, q);
    // four u(f,g) summands, each with two delta components on the first leg
    CHECK(a2.phi.term_count() == 8);
    CHECK((a2.phi * a2.phi_inv).is_unit());

    FiniteGroup s3 = symmetric_group(3);
    Associator a3 = associator_phi(s3, q);
    CHECK((a3.phi * a3.phi_inv).is_unit());
    CHECK((a3.phi_inv * a3.phi).is_unit());
}

TEST_CASE("quasi-coassociativity on generators") {
    Field q = Field::rationals();
    CHECK(quasi_coassoc_check(trivial_group(), q));
    CHECK(quasi_coassoc_check(cyclic_group(2), q));
    CHECK(quasi_coassoc_check(cyclic_group(3), q));
}

TEST_CASE("quasi-coassociativity for S_3") {
    CHECK(quasi_coassoc_check(symmetric_group(3), Field::rationals()));
}

TEST_CASE("quasi-coassociativity spot checks on random words") {
    Field q = Field::rationals();
    FiniteGroup z2 = cyclic_group(2);
    Associator assoc = associator_phi(z2, q);
    gen::Rng rng(127);
    for (int t = 0; t < 10; ++t) {
        // random product of generators and delta functions
        QbTensor x = QbTensor::delta_function(z2, q, gen::pick(rng, 2));
        for (std::size_t i = 0; i < 1 + gen::pick(rng, 3); ++i)
            x = x * QbTensor::generator(z2, q, gen::pick(rng, 2), gen::pick(rng, 2),
                                        gen::pick(rng, 2) ? 1 : -1);
        if (x.term_count() == 0) continue;
        CHECK(quasi_coassoc_holds_for(x, assoc));
    }
}

TEST_CASE("splitting homomorphisms") {
    Field q = Field::rationals();
    FiniteGroup z2 = cyclic_group(2);

    // alpha = 1: pi(u(f,g)) = 1
    SplittingHom triv(z2, std::vector<Scalar>(8, Scalar::one(q)));
    Vec img = triv.apply(QbTensor::generator(z2, q, 1, 1));
    CHECK(img == Vec{Scalar::one(q), Scalar::one(q)});
    auto rep = splitting_verify(triv);
    CHECK(rep.splits_inclusion);
    CHECK(rep.delta_compatible);

    // nontrivial cocycle: both flags hold
    std::vector<Scalar> vals(8, Scalar::one(q));
    vals[7] = -Scalar::one(q);
    auto rep2 = splitting_verify(SplittingHom(z2, vals));
    CHECK(rep2.splits_inclusion);
    CHECK(rep2.delta_compatible);

    // non-cocycle: inclusion still splits, coproduct compatibility fails
    std::vector<Scalar> bad = vals;
    bad[(0 * 2 + 1) * 2 + 1] = -Scalar::one(q);
    auto rep3 = splitting_verify(SplittingHom(z2, bad));
    CHECK(rep3.splits_inclusion);
    CHECK(!rep3.delta_compatible);
}

TEST_CASE("delta compatibility of the splitting equals the cocycle condition") {
    Field q = Field::rationals();
    FiniteGroup z2 = cyclic_group(2);
    for (std::uint32_t mask = 0; mask < 256; ++mask) {
        std::vector<Scalar> vals;
        for (std::size_t i = 0; i < 8; ++i)
            vals.push_back(mask >> i & 1 ? -Scalar::one(q) : Scalar::one(q));
        bool cc = cocycle_check(Cocycle3(z2, vals));
        auto rep = splitting_verify(SplittingHom(z2, vals));
        CHECK(rep.splits_inclusion);
        CHECK(rep.delta_compatible == cc);
    }
}

TEST_CASE("splitting with roots of unity over GF(7) on Z/3") {
    // GF(7) contains a cube root of unity (2^3 = 1), supporting honest
    // Z/3-valued cocycles
    Field f = Field::gf(7);
    FiniteGroup z3 = cyclic_group(3);
    gen::Rng rng(131);
    std::vector<Scalar> beta;
    for (int i = 0; i < 9; ++i) beta.push_back(gen::scalar(rng, f, true));
    Cocycle3 alpha = coboundary(z3, beta);
    auto rep = splitting_verify(splitting_hom(alpha));
    CHECK(rep.splits_inclusion);
    CHECK(rep.delta_compatible);

    // the standard cube-root cocycle alpha(a,b,c) = w^{a*floor((b+c)/3)}
    Scalar w = Scalar::from_int(2, f);  // order 3 in GF(7)*
    std::vector<Scalar> vals;
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b)
            for (std::size_t c = 0; c < 3; ++c) {
                std::size_t e = a * ((b + c) / 3);
                Scalar v = Scalar::one(f);
                for (std::size_t i = 0; i < e; ++i) v = v * w;
                vals.push_back(v);
            }
    Cocycle3 root_cocycle(z3, vals);
    CHECK(cocycle_check(root_cocycle));
    auto rep2 = splitting_verify(splitting_hom(root_cocycle));
    CHECK(rep2.splits_inclusion);
    CHECK(rep2.delta_compatible);
}
