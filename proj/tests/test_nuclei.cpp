#include <doctest.h>

#include "nucal/nuclei.hpp"
#include "nucal/selftest.hpp"
#include "oracle_octonion.hpp"

using namespace nucal;

namespace {

// Octonion algebra rebuilt from oracle products only.
Algebra oracle_octonions(const Field& q) {
    std::size_t n = 8;
    std::vector<Scalar> c;
    c.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ei = vec_zero(n, q), ej = vec_zero(n, q);
            ei[i] = Scalar::one(q);
            ej[j] = Scalar::one(q);
            Vec p = oracle::cd_mul(ei, ej);
            for (std::size_t k = 0; k < n; ++k) c.push_back(p[k]);
        }
    return Algebra(q, n, std::move(c));
}

}  // namespace

TEST_CASE("nuclei of associative algebras are everything") {
    Field q = Field::rationals();
    Algebra m2 = matrix_algebra(q, 2);
    for (Side s : {Side::Left, Side::Middle, Side::Right})
        CHECK(nucleus(m2, s) == Subspace::full(4, q));
    Algebra kz4 = function_algebra(q, 4);
    for (Side s : {Side::Left, Side::Middle, Side::Right})
        CHECK(nucleus(kz4, s) == Subspace::full(4, q));
}

TEST_CASE("octonion nuclei are span{1} on every side") {
    Field q = Field::rationals();
    Algebra oct = octonion_algebra(q);
    Algebra from_oracle = oracle_octonions(q);
    Matrix one_row(1, 8, q);
    one_row.at(0, 0) = Scalar::one(q);
    Subspace span_one = Subspace::span(one_row, 8);
    for (Side s : {Side::Left, Side::Middle, Side::Right}) {
        NucleusReport rep = nucleus_report(oct, s);
        CHECK(rep.subspace == span_one);
        CHECK(rep.closed);
        CHECK(rep.associative);
        // brute-force kernel solve against the oracle-built table agrees
        CHECK(nucleus(from_oracle, s) == rep.subspace);
    }
}

TEST_CASE("zero-product algebra has full nuclei") {
    Field f = Field::gf(5);
    Algebra z = zero_algebra(f, 3);
    for (Side s : {Side::Left, Side::Middle, Side::Right})
        CHECK(nucleus(z, s) == Subspace::full(3, f));
}

TEST_CASE("associator derivation identity") {
    Field q = Field::rationals();
    CHECK(verify_associator_identity(matrix_algebra(q, 2)));
    CHECK(verify_associator_identity(octonion_algebra(q)));
    gen::Rng rng(41);
    for (int t = 0; t < 6; ++t) {
        Algebra a = gen::random_algebra(rng, Field::gf(7), 3);
        CHECK(verify_associator_identity(a));
        CHECK(verify_associator_identity(a, 4));  // worker split agrees
    }
}

TEST_CASE("commutative relations between nuclei") {
    Field q = Field::rationals();
    // commutative associative: all flags true, nuclei full
    auto rep = commutative_nucleus_relations(function_algebra(q, 3));
    CHECK(rep.is_commutative);
    CHECK(rep.left_equals_right);
    CHECK(rep.left_in_middle);
    CHECK(rep.dim_left == 3);

    gen::Rng rng(43);
    for (int t = 0; t < 20; ++t) {
        Algebra a = gen::random_commutative_algebra(rng, Field::gf(5), 3);
        auto r = commutative_nucleus_relations(a);
        CHECK(r.is_commutative);
        CHECK(r.left_equals_right);
        CHECK(r.left_in_middle);
    }

    // guard path: non-commutative input reports the flag only
    auto r2 = commutative_nucleus_relations(matrix_algebra(q, 2));
    CHECK(!r2.is_commutative);
}

TEST_CASE("the unit lies in all nuclei") {
    Field q = Field::rationals();
    CHECK(unit_in_nuclei(octonion_algebra(q)));
    CHECK(unit_in_nuclei(matrix_algebra(q, 2)));
    CHECK_THROWS_AS(unit_in_nuclei(zero_algebra(q, 2)), PreconditionError);

    // unital commutative non-associative algebra, dim 3:
    // e unit, x*x = y, y*y = x, x*y = 0; then (xx)y = yy = x but x(xy) = 0
    std::size_t n = 3;
    std::vector<Scalar> c(n * n * n, Scalar::zero(q));
    auto set = [&](std::size_t i, std::size_t j, std::size_t k) {
        c[(i * n + j) * n + k] = Scalar::one(q);
    };
    for (std::size_t i = 0; i < n; ++i) {
        set(0, i, i);
        if (i) set(i, 0, i);
    }
    set(1, 1, 2);  // x*x = y
    set(2, 2, 1);  // y*y = x
    Vec unit = vec_zero(n, q);
    unit[0] = Scalar::one(q);
    Algebra a(q, n, std::move(c), unit);
    CHECK(a.is_commutative());
    CHECK(!a.is_associative());
    CHECK(unit_in_nuclei(a));
}

TEST_CASE("nucleus transforms with basis rescaling") {
    Field q = Field::rationals();
    Algebra oct = octonion_algebra(q);
    // rescale basis vector e_i by nonzero weights
    Matrix g = Matrix::zero(8, 8, q);
    long weights[8] = {1, 2, 3, 1, 5, 1, 7, 2};
    for (std::size_t i = 0; i < 8; ++i) g.at(i, i) = Scalar::from_int(weights[i], q);
    Algebra scaled = change_basis(oct, g);
    for (Side s : {Side::Left, Side::Middle, Side::Right}) {
        Subspace orig = nucleus(oct, s);
        Subspace moved = nucleus(scaled, s);
        // map the original basis into the scaled coordinates and compare
        std::vector<Vec> rows;
        for (std::size_t i = 0; i < orig.dim(); ++i)
            rows.push_back(*g.transpose().solve(orig.basis().row(i)));
        CHECK(moved == Subspace::span(Matrix::from_rows(rows, q, 8), 8));
    }
}

TEST_CASE("nucleus certification on a genuinely middle-sized example") {
    // direct sum of M_2(Q) and the octonions: nuclei are M_2 plus span{1}
    Field q = Field::rationals();
    Algebra m2 = matrix_algebra(q, 2);
    Algebra oct = octonion_algebra(q);
    std::size_t n = 12;
    std::vector<Scalar> c(n * n * n, Scalar::zero(q));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            for (std::size_t k = 0; k < 4; ++k)
                c[(i * n + j) * n + k] = m2.c(i, j, k);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            for (std::size_t k = 0; k < 8; ++k)
                c[((4 + i) * n + (4 + j)) * n + (4 + k)] = oct.c(i, j, k);
    Algebra sum(q, n, std::move(c));
    for (Side s : {Side::Left, Side::Middle, Side::Right}) {
        NucleusReport rep = nucleus_report(sum, s);
        CHECK(rep.subspace.dim() == 5);
        CHECK(rep.closed);
        CHECK(rep.associative);
    }
}
