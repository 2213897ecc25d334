#pragma once

#include <json.hpp>

#include "nucal/modcat.hpp"
#include "nucal/multiplicants.hpp"
#include "nucal/quasibialgebra.hpp"

namespace nucal {

using json = nlohmann::json;

json read_json_file(const std::string& path);

Field field_from_json(const json& j);
json field_to_json(const Field& f);
Scalar scalar_from_json(const json& j, const Field& f);
json scalar_to_json(const Scalar& s);

Vec vec_from_json(const json& j, const Field& f);
json vec_to_json(const Vec& v);
Matrix matrix_from_json(const json& j, const Field& f);
json matrix_to_json(const Matrix& m);
json subspace_to_json(const Subspace& s);

// {"field":..., "dim":n, "c":[[[...]]], "unit":[...]?, "names":[...]?}
AlgebraPtr algebra_from_json(const json& j);
AlgebraPtr load_algebra(const std::string& path);
json algebra_to_json(const Algebra& a);

// {"size":n, "table":[[...]], "unit":i, "names":[...]?}
FiniteMonoid monoid_from_json(const json& j);
FiniteMonoid load_monoid(const std::string& path);
json monoid_to_json(const FiniteMonoid& m);

// group file shares the monoid schema ("unit" optional, axioms validated)
FiniteGroup group_from_json(const json& j);
FiniteGroup load_group(const std::string& path);
json group_to_json(const FiniteGroup& g);

// {"source": path-or-inline, "target": path-or-inline, "matrix": [[...]]}
LinearMap linear_map_from_json(const json& j, const std::string& base_dir);
LinearMap load_linear_map(const std::string& path);

// algebra fields plus {"delta": [[...]] (n^2 x n), "epsilon": [...]?}
CoalgebraPtr coalgebra_from_json(const json& j);
CoalgebraPtr load_coalgebra(const std::string& path);
json coalgebra_to_json(const Coalgebra& c);

// {"dim": d, "action": [ [[...]], ... ]}
RModule module_from_json(const json& j, AlgebraPtr base, const Field& f);

// keyed coefficient table {"a,b,...": [[...]]}; omitted keys are zero
TensorElement tensor_element_from_json(const json& j, AlgebraPtr base,
                                       std::size_t end_dim, std::size_t legs,
                                       const Field& f);
json tensor_element_to_json(const TensorElement& t);

// {"module": {...}, "m": {...}}
NucleusPair nucleus_pair_from_json(const json& j, const CoalgebraPtr& base);
NucleusPair load_nucleus_pair(const std::string& path, const CoalgebraPtr& base);

// {"values": {"f,g,h": scalar, ...}, "field": {...}?}; omitted entries are 1
Cocycle3 cocycle_from_json(const json& j, const FiniteGroup& g);
Cocycle3 load_cocycle(const std::string& path, const FiniteGroup& g);
json cocycle_to_json(const Cocycle3& alpha);

// two-leg twist element {"values": {"a,b": scalar, ...}}; omitted entries 0
TensorElement twist_from_json(const json& j, AlgebraPtr base, const Field& f);
TensorElement load_twist(const std::string& path, AlgebraPtr base, const Field& f);

}  // namespace nucal
