#include <doctest.h>

#include "nucal/io.hpp"
#include "nucal/selftest.hpp"

using namespace nucal;

TEST_CASE("field and scalar JSON round trips") {
    Field q = Field::rationals();
    CHECK(field_from_json(field_to_json(q)) == q);
    Field f7 = Field::gf(7);
    CHECK(field_from_json(field_to_json(f7)) == f7);
    CHECK_THROWS_AS(field_from_json(json{{"type", "R"}}), InputError);

    gen::Rng rng(141);
    for (int t = 0; t < 20; ++t) {
        Scalar s = gen::scalar(rng, q);
        CHECK(scalar_from_json(scalar_to_json(s), q) == s);
        Scalar r = gen::scalar(rng, f7);
        CHECK(scalar_from_json(scalar_to_json(r), f7) == r);
    }
    // integers are accepted directly
    CHECK(scalar_from_json(json(-3), q) == Scalar::from_int(-3, q));
    CHECK_THROWS_AS(scalar_from_json(json(1.5), q), InputError);
}

TEST_CASE("algebra JSON round trip") {
    Field q = Field::rationals();
    Algebra oct = octonion_algebra(q);
    AlgebraPtr back = algebra_from_json(algebra_to_json(oct));
    CHECK(*back == oct);
    CHECK(back->unit() == oct.unit());

    Algebra m2gf = matrix_algebra(Field::gf(5), 2);
    CHECK(*algebra_from_json(algebra_to_json(m2gf)) == m2gf);
}

TEST_CASE("group, monoid and cocycle files") {
    FiniteGroup s3 = symmetric_group(3);
    FiniteGroup back = group_from_json(group_to_json(s3));
    CHECK(back.table() == s3.table());

    FiniteMonoid z4 = cyclic_monoid(4);
    CHECK(monoid_from_json(monoid_to_json(z4)).table() == z4.table());

    // omitted cocycle entries default to one
    FiniteGroup z2 = cyclic_group(2);
    json cj;
    cj["values"] = {{"1,1,1", "-1"}};
    Cocycle3 alpha = cocycle_from_json(cj, z2);
    CHECK(alpha.at(1, 1, 1) == -Scalar::one(Field::rationals()));
    CHECK(alpha.at(0, 1, 1).is_one());
    CHECK(cocycle_check(alpha));
    Cocycle3 round = cocycle_from_json(cocycle_to_json(alpha), z2);
    CHECK(round.values() == alpha.values());

    json badj;
    badj["values"] = {{"5,0,0", "-1"}};
    CHECK_THROWS_AS(cocycle_from_json(badj, z2), InputError);
}

TEST_CASE("coalgebra and pair files") {
    Field q = Field::rationals();
    FiniteGroup z2 = cyclic_group(2);
    Coalgebra kz2 = function_bialgebra(q, z2);
    CoalgebraPtr back = coalgebra_from_json(coalgebra_to_json(kz2));
    CHECK(back->coassociative());
    CHECK(back->has_counit());
    CHECK(*back->algebra() == kz2.R());

    gen::Rng rng(143);
    auto base = std::make_shared<Coalgebra>(function_bialgebra(q, z2));
    RModule reg = graded_module(base->algebra(), {0, 1});
    NucleusPair p = gen::commutant_pair(rng, reg);
    json pj;
    pj["module"] = json::object();
    pj["module"]["dim"] = 2;
    json action = json::array();
    for (std::size_t i = 0; i < 2; ++i) action.push_back(matrix_to_json(reg.rho(i)));
    pj["module"]["action"] = action;
    pj["m"] = tensor_element_to_json(p.m);
    NucleusPair loaded = nucleus_pair_from_json(pj, base);
    CHECK(loaded.m == p.m);
    CHECK(check_inv(*base, loaded));
}

TEST_CASE("error paths carry the offending path or literal") {
    CHECK_THROWS_WITH_AS(read_json_file("/no/such/file.json"),
                         doctest::Contains("/no/such/file.json"), InputError);
    Field q = Field::rationals();
    CHECK_THROWS_WITH_AS(Scalar::parse("2/0", q), doctest::Contains("2/0"),
                         InputError);
}

TEST_CASE("JSON reports are deterministic") {
    Field q = Field::rationals();
    Algebra oct = octonion_algebra(q);
    CHECK(algebra_to_json(oct).dump(2) == algebra_to_json(oct).dump(2));
    // object keys are sorted by the library, so assembly order cannot leak
    json a;
    a["zeta"] = 1;
    a["alpha"] = 2;
    json b;
    b["alpha"] = 2;
    b["zeta"] = 1;
    CHECK(a.dump() == b.dump());
}
