// Writes ready-to-use input files for the CLI: algebras (octonions via
// Cayley-Dickson doubling), groups, cocycles, linear maps and module pairs.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "nucal/selftest.hpp"

using namespace nucal;
namespace fs = std::filesystem;

namespace {

void write(const fs::path& dir, const std::string& name, const json& j) {
    fs::path p = dir / name;
    std::ofstream out(p);
    if (!out) throw InputError("cannot write " + p.string());
    out << j.dump(2) << "\n";
    std::cout << "wrote " << p.string() << "\n";
}

json monoid_map_json(const std::string& source, const std::string& target,
                     const std::vector<std::size_t>& images) {
    json j;
    j["source"] = source;
    j["target"] = target;
    j["images"] = images;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    fs::path dir = argc > 1 ? argv[1] : "samples";
    fs::create_directories(dir);
    Field q = Field::rationals();

    write(dir, "octonions.json", algebra_to_json(octonion_algebra(q)));
    write(dir, "quaternions.json",
          algebra_to_json(cayley_dickson_algebra(q, 2).algebra));
    write(dir, "m2q.json", algebra_to_json(matrix_algebra(q, 2)));
    write(dir, "kz4.json", algebra_to_json(function_algebra(q, 4)));

    FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3), s3 = symmetric_group(3);
    write(dir, "z2.json", group_to_json(z2));
    write(dir, "z3.json", group_to_json(z3));
    write(dir, "s3.json", group_to_json(s3));

    // the nontrivial sign cocycle on Z/2 and a table that fails the condition
    json cocycle;
    cocycle["values"] = {{"1,1,1", "-1"}};
    write(dir, "z2_cocycle.json", cocycle);
    json bad;
    bad["values"] = {{"1,1,1", "-1"}, {"0,1,1", "-1"}};
    write(dir, "z2_noncocycle.json", bad);

    // trace on M_2(Q) as a linear map file
    json trace;
    trace["source"] = "m2q.json";
    trace["target"] = algebra_to_json(ground_field_algebra(q));
    trace["matrix"] = {{"1", "0", "0", "1"}};
    write(dir, "trace_m2q.json", trace);

    // monoid maps for the pullback span
    write(dir, "z4_monoid.json", monoid_to_json(cyclic_monoid(4)));
    write(dir, "z2_monoid.json", monoid_to_json(cyclic_monoid(2)));
    write(dir, "map_z4_z2.json",
          monoid_map_json("z4_monoid.json", "z2_monoid.json", {0, 1, 0, 1}));
    write(dir, "map_z2_z2.json",
          monoid_map_json("z2_monoid.json", "z2_monoid.json", {0, 1}));

    // k(Z/2) as a coalgebra plus a commutant-valued nucleus pair
    Coalgebra kz2 = function_bialgebra(q, z2);
    write(dir, "kz2_coalgebra.json", coalgebra_to_json(kz2));
    {
        gen::Rng rng(2024);
        auto base = std::make_shared<Coalgebra>(function_bialgebra(q, z2));
        RModule reg = graded_module(base->algebra(), {0, 1});
        NucleusPair p = gen::commutant_pair(rng, reg);
        json pj;
        pj["module"] = {{"dim", 2}};
        json action = json::array();
        for (std::size_t i = 0; i < 2; ++i) action.push_back(matrix_to_json(reg.rho(i)));
        pj["module"]["action"] = action;
        pj["m"] = tensor_element_to_json(p.m);
        write(dir, "kz2_pair.json", pj);

        TensorElement c = gen::random_twist(rng, base->algebra(), q);
        json cj;
        cj["values"] = json::object();
        for (std::size_t a = 0; a < 2; ++a)
            for (std::size_t b = 0; b < 2; ++b)
                cj["values"][std::to_string(a) + "," + std::to_string(b)] =
                    scalar_to_json(c.coeff(a * 2 + b).at(0, 0));
        write(dir, "kz2_twist.json", cj);

        // identity homomorphism H1 = H2 = k(Z/2) and a one-leg gamma pair
        json hj;
        hj["source"] = "kz2_coalgebra.json";
        hj["matrix"] = matrix_to_json(Matrix::identity(2, q));
        write(dir, "kz2_id_hom.json", hj);
        Vec x{Scalar::from_int(2, q), Scalar::from_int(3, q)};
        TensorElement gm = gamma_element(*base, reg, x);
        json mj;
        mj["module"] = pj["module"];
        mj["m"] = tensor_element_to_json(gm);
        write(dir, "kz2_mult_pair.json", mj);
    }
    return 0;
}
