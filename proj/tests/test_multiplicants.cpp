#include <doctest.h>

#include <algorithm>

#include "nucal/multiplicants.hpp"
#include "nucal/selftest.hpp"

using namespace nucal;

namespace {

LinearMap trace_map(const Field& q) {
    auto m2 = std::make_shared<Algebra>(matrix_algebra(q, 2));
    auto k1 = std::make_shared<Algebra>(ground_field_algebra(q));
    Matrix tr(1, 4, q);
    tr.at(0, 0) = Scalar::one(q);
    tr.at(0, 3) = Scalar::one(q);
    return LinearMap(m2, k1, tr);
}

}  // namespace

TEST_CASE("multiplicant of a homomorphism is everything") {
    Field q = Field::rationals();
    auto m2 = std::make_shared<Algebra>(matrix_algebra(q, 2));
    LinearMap id(m2, m2, Matrix::identity(4, q));
    CHECK(multiplicant(id, Side::Left) == Subspace::full(4, q));
    CHECK(multiplicant(id, Side::Right) == Subspace::full(4, q));
}

TEST_CASE("multiplicant of the trace is zero") {
    LinearMap trace = trace_map(Field::rationals());
    CHECK(multiplicant(trace, Side::Left).dim() == 0);
    CHECK(multiplicant(trace, Side::Right).dim() == 0);
}

TEST_CASE("multiplicant of the zero map is everything") {
    Field q = Field::rationals();
    auto m2 = std::make_shared<Algebra>(matrix_algebra(q, 2));
    auto k1 = std::make_shared<Algebra>(ground_field_algebra(q));
    LinearMap zero(m2, k1, Matrix::zero(1, 4, q));
    CHECK(multiplicant(zero, Side::Left) == Subspace::full(4, q));
}

TEST_CASE("non-associative algebras are rejected") {
    Field q = Field::rationals();
    auto oct = std::make_shared<Algebra>(octonion_algebra(q));
    LinearMap id(oct, oct, Matrix::identity(8, q));
    CHECK_THROWS_AS((void)multiplicant(id, Side::Left), PreconditionError);
    CHECK_THROWS_AS((void)verify_multiplicant_identity(id), PreconditionError);
}

TEST_CASE("defect derivation identity on random maps") {
    LinearMap trace = trace_map(Field::rationals());
    CHECK(verify_multiplicant_identity(trace));

    gen::Rng rng(51);
    Field f = Field::gf(5);
    for (int t = 0; t < 10; ++t) {
        auto a = std::make_shared<Algebra>(gen::random_associative_algebra(rng, f, 4));
        auto b = std::make_shared<Algebra>(gen::random_associative_algebra(rng, f, 4));
        LinearMap fm(a, b, gen::matrix(rng, b->dim(), a->dim(), f));
        CHECK(verify_multiplicant_identity(fm));
        // closure and multiplicativity of the computed subspaces
        for (Side s : {Side::Left, Side::Right}) {
            auto rep = multiplicant_report(fm, s);
            CHECK(rep.closed);
            CHECK(rep.multiplicative);
        }
    }
}

TEST_CASE("left and right multiplicants coincide over commutative algebras") {
    gen::Rng rng(53);
    Field q = Field::rationals();
    auto kz2 = std::make_shared<Algebra>(function_algebra(q, 2));
    for (int t = 0; t < 10; ++t) {
        LinearMap f(kz2, kz2, gen::matrix(rng, 2, 2, q));
        auto rep = commutative_multiplicant_equality(f);
        CHECK(rep.sides_equal);
    }
    auto q2 = std::make_shared<Algebra>(function_algebra(q, 2));
    LinearMap diag(q2, q2, gen::matrix(rng, 2, 2, q));
    CHECK(commutative_multiplicant_equality(diag).sides_equal);

    auto m2 = std::make_shared<Algebra>(matrix_algebra(q, 2));
    LinearMap id(m2, m2, Matrix::identity(4, q));
    CHECK_THROWS_AS(commutative_multiplicant_equality(id), PreconditionError);
}

TEST_CASE("monoid multiplicants") {
    FiniteMonoid z2 = cyclic_monoid(2);
    // identity map: everything
    MonoidMap ident(z2, z2, {0, 1});
    CHECK(monoid_multiplicant(ident, Side::Left) ==
          std::vector<std::size_t>{0, 1});
    CHECK(monoid_multiplicant(ident, Side::Right) ==
          std::vector<std::size_t>{0, 1});
    // swap map f(e)=g, f(g)=e: direct 2x2 table check gives the empty set
    MonoidMap swap(z2, z2, {1, 0});
    CHECK(monoid_multiplicant(swap, Side::Left).empty());
    CHECK(monoid_multiplicant(swap, Side::Right).empty());
    auto rep = monoid_multiplicant_report(swap, Side::Left);
    CHECK(rep.closed);  // empty set is closed
    CHECK(!rep.contains_unit);

    // homomorphism: everything, including the unit
    FiniteMonoid z4 = cyclic_monoid(4);
    MonoidMap quot(z4, z2, {0, 1, 0, 1});
    CHECK(quot.is_homomorphism());
    auto rep2 = monoid_multiplicant_report(quot, Side::Left);
    CHECK(rep2.elements == std::vector<std::size_t>{0, 1, 2, 3});
    CHECK(rep2.contains_unit);
    CHECK(rep2.closed);
}

TEST_CASE("pullback span of composable monoid maps") {
    FiniteMonoid z4 = cyclic_monoid(4), z2 = cyclic_monoid(2);
    MonoidMap f(z4, z2, {0, 1, 0, 1});
    MonoidMap g(z2, z2, {0, 1});

    // homomorphisms: all pairs (a, f(a)), projection is everything
    auto rep = multiplicant_pullback(f, g);
    CHECK(rep.pairs.size() == 4);
    CHECK(rep.closed_under_product);
    CHECK(rep.projection_in_composite);
    CHECK(rep.projection_multiplicative);

    // g = identity: pullback is M_l(f)
    auto mlf = monoid_multiplicant(f, Side::Left);
    CHECK(rep.pairs.size() == mlf.size());

    CHECK_THROWS_AS(multiplicant_pullback(g, f), InputError);
}

TEST_CASE("pullback inclusion over the exhaustive small-monoid corpus") {
    auto corpus = enumerate_monoids(1);
    for (std::size_t s : {2ul, 3ul}) {
        auto more = enumerate_monoids(s);
        corpus.insert(corpus.end(), more.begin(), more.end());
    }
    for (const auto& m : corpus) CHECK(m.is_monoid());

    // all maps between all order-<=2 monoids, composed in every way
    std::vector<FiniteMonoid> small;
    for (const auto& m : corpus)
        if (m.size() <= 2) small.push_back(m);
    for (const auto& a : small)
        for (const auto& b : small)
            for (const auto& c : small) {
                std::size_t nf = 1, ng = 1;
                for (std::size_t i = 0; i < a.size(); ++i) nf *= b.size();
                for (std::size_t i = 0; i < b.size(); ++i) ng *= c.size();
                for (std::size_t fc = 0; fc < nf; ++fc)
                    for (std::size_t gc = 0; gc < ng; ++gc) {
                        std::vector<std::size_t> fi(a.size()), gi(b.size());
                        std::size_t rem = fc;
                        for (auto& x : fi) { x = rem % b.size(); rem /= b.size(); }
                        rem = gc;
                        for (auto& x : gi) { x = rem % c.size(); rem /= c.size(); }
                        auto rep = multiplicant_pullback(MonoidMap(a, b, fi),
                                                         MonoidMap(b, c, gi));
                        CHECK(rep.closed_under_product);
                        CHECK(rep.projection_in_composite);
                        CHECK(rep.projection_multiplicative);
                    }
            }

    // seeded random map pairs across the order-<=3 corpus
    gen::Rng rng(61);
    for (int t = 0; t < 120; ++t) {
        const FiniteMonoid& a = corpus[gen::pick(rng, corpus.size())];
        const FiniteMonoid& b = corpus[gen::pick(rng, corpus.size())];
        const FiniteMonoid& c = corpus[gen::pick(rng, corpus.size())];
        std::vector<std::size_t> fi(a.size()), gi(b.size());
        for (auto& x : fi) x = gen::pick(rng, b.size());
        for (auto& x : gi) x = gen::pick(rng, c.size());
        auto rep = multiplicant_pullback(MonoidMap(a, b, fi), MonoidMap(b, c, gi));
        CHECK(rep.closed_under_product);
        CHECK(rep.projection_in_composite);
        CHECK(rep.projection_multiplicative);
    }
}

TEST_CASE("order-4 corpus exists and random pullbacks stay coherent") {
    auto m4 = enumerate_monoids(4);
    CHECK(!m4.empty());
    // the cyclic table is in the corpus
    FiniteMonoid z4 = cyclic_monoid(4);
    bool found = false;
    for (const auto& m : m4)
        if (m.table() == z4.table() && m.unit() == z4.unit()) found = true;
    CHECK(found);

    gen::Rng rng(67);
    for (int t = 0; t < 40; ++t) {
        const FiniteMonoid& a = m4[gen::pick(rng, m4.size())];
        const FiniteMonoid& b = m4[gen::pick(rng, m4.size())];
        std::vector<std::size_t> fi(a.size()), gi(b.size());
        for (auto& x : fi) x = gen::pick(rng, b.size());
        for (auto& x : gi) x = gen::pick(rng, a.size());
        auto rep = multiplicant_pullback(MonoidMap(a, b, fi), MonoidMap(b, a, gi));
        CHECK(rep.closed_under_product);
        CHECK(rep.projection_in_composite);
    }
}

TEST_CASE("monoid multiplicant spans into the algebra multiplicant") {
    gen::Rng rng(71);
    Field f = Field::gf(5);
    auto corpus = enumerate_monoids(3);
    for (int t = 0; t < 15; ++t) {
        const FiniteMonoid& a = corpus[gen::pick(rng, corpus.size())];
        const FiniteMonoid& b = corpus[gen::pick(rng, corpus.size())];
        std::vector<std::size_t> fi(a.size());
        for (auto& x : fi) x = gen::pick(rng, b.size());
        MonoidMap set_map(a, b, fi);
        auto ka = std::make_shared<Algebra>(monoid_algebra(f, a));
        auto kb = std::make_shared<Algebra>(monoid_algebra(f, b));
        Matrix fm = Matrix::zero(b.size(), a.size(), f);
        for (std::size_t i = 0; i < a.size(); ++i)
            fm.at(fi[i], i) = Scalar::one(f);
        LinearMap lin(ka, kb, fm);
        for (Side s : {Side::Left, Side::Right}) {
            Subspace alg_mult = multiplicant(lin, s);
            for (std::size_t el : monoid_multiplicant(set_map, s))
                CHECK(alg_mult.contains(ka->basis_vector(el)));
        }
    }
}
