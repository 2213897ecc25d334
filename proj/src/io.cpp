#include "nucal/io.hpp"

#include <filesystem>
#include <fstream>

namespace nucal {

namespace fs = std::filesystem;

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

Field field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type"))
        throw InputError("field descriptor needs a \"type\"");
    std::string t = j.at("type").get<std::string>();
    if (t == "Q") return Field::rationals();
    if (t == "GF") {
        if (!j.contains("p")) throw InputError("GF field descriptor needs \"p\"");
        return Field::gf(j.at("p").get<std::uint32_t>());
    }
    throw InputError("unknown field type: " + t);
}

json field_to_json(const Field& f) {
    json j;
    if (f.is_rational()) {
        j["type"] = "Q";
    } else {
        j["type"] = "GF";
        j["p"] = f.modulus();
    }
    return j;
}

Scalar scalar_from_json(const json& j, const Field& f) {
    if (j.is_number_integer()) return Scalar::from_int(j.get<long>(), f);
    if (j.is_string()) return Scalar::parse(j.get<std::string>(), f);
    throw InputError("scalar must be an integer or a string literal");
}

json scalar_to_json(const Scalar& s) {
    if (s.field().is_rational()) return s.str();
    return s.residue();
}

Vec vec_from_json(const json& j, const Field& f) {
    if (!j.is_array()) throw InputError("vector must be an array");
    Vec v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(scalar_from_json(x, f));
    return v;
}

json vec_to_json(const Vec& v) {
    json j = json::array();
    for (const auto& x : v) j.push_back(scalar_to_json(x));
    return j;
}

Matrix matrix_from_json(const json& j, const Field& f) {
    if (!j.is_array()) throw InputError("matrix must be an array of rows");
    std::vector<Vec> rows;
    for (const auto& r : j) rows.push_back(vec_from_json(r, f));
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    return Matrix::from_rows(rows, f, cols);
}

json matrix_to_json(const Matrix& m) {
    json j = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(vec_to_json(m.row(i)));
    return j;
}

json subspace_to_json(const Subspace& s) {
    json j;
    j["ambient_dim"] = s.ambient_dim();
    j["dim"] = s.dim();
    j["basis"] = matrix_to_json(s.basis());
    return j;
}

AlgebraPtr algebra_from_json(const json& j) {
    Field f = field_from_json(j.at("field"));
    std::size_t n = j.at("dim").get<std::size_t>();
    const json& cj = j.at("c");
    if (!cj.is_array() || cj.size() != n)
        throw InputError("\"c\" must be an n-element array of n x n tables");
    std::vector<Scalar> c;
    c.reserve(n * n * n);
    for (const auto& plane : cj) {
        if (!plane.is_array() || plane.size() != n)
            throw InputError("structure constant plane of wrong size");
        for (const auto& row : plane) {
            if (!row.is_array() || row.size() != n)
                throw InputError("structure constant row of wrong size");
            for (const auto& x : row) c.push_back(scalar_from_json(x, f));
        }
    }
    std::optional<Vec> unit;
    if (j.contains("unit")) unit = vec_from_json(j.at("unit"), f);
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return std::make_shared<Algebra>(f, n, std::move(c), std::move(unit),
                                     std::move(names));
}

AlgebraPtr load_algebra(const std::string& path) {
    return algebra_from_json(read_json_file(path));
}

json algebra_to_json(const Algebra& a) {
    json j;
    j["field"] = field_to_json(a.field());
    j["dim"] = a.dim();
    json c = json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        json plane = json::array();
        for (std::size_t k = 0; k < a.dim(); ++k) {
            json row = json::array();
            for (std::size_t l = 0; l < a.dim(); ++l)
                row.push_back(scalar_to_json(a.c(i, k, l)));
            plane.push_back(row);
        }
        c.push_back(plane);
    }
    j["c"] = c;
    if (a.unit()) j["unit"] = vec_to_json(*a.unit());
    if (!a.names().empty()) j["names"] = a.names();
    return j;
}

namespace {

std::vector<std::size_t> table_from_json(const json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n) throw InputError("table must have n rows");
    std::vector<std::size_t> t;
    t.reserve(n * n);
    for (const auto& row : j) {
        if (!row.is_array() || row.size() != n)
            throw InputError("table row of wrong size");
        for (const auto& x : row) t.push_back(x.get<std::size_t>());
    }
    return t;
}

json table_to_json(const std::vector<std::size_t>& t, std::size_t n) {
    json j = json::array();
    for (std::size_t a = 0; a < n; ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < n; ++b) row.push_back(t[a * n + b]);
        j.push_back(row);
    }
    return j;
}

std::vector<std::size_t> parse_index_key(const std::string& key, std::size_t legs) {
    std::vector<std::size_t> idx;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = key.find(',', start);
        std::string part = key.substr(start, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - start);
        try {
            idx.push_back(std::stoul(part));
        } catch (const std::exception&) {
            throw InputError("bad index key: \"" + key + "\"");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (idx.size() != legs)
        throw InputError("index key \"" + key + "\" needs " + std::to_string(legs) +
                         " components");
    return idx;
}

}  // namespace

FiniteMonoid monoid_from_json(const json& j) {
    std::size_t n = j.at("size").get<std::size_t>();
    auto t = table_from_json(j.at("table"), n);
    std::size_t unit = j.at("unit").get<std::size_t>();
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return FiniteMonoid(n, std::move(t), unit, std::move(names));
}

FiniteMonoid load_monoid(const std::string& path) {
    return monoid_from_json(read_json_file(path));
}

json monoid_to_json(const FiniteMonoid& m) {
    json j;
    j["size"] = m.size();
    j["table"] = table_to_json(m.table(), m.size());
    j["unit"] = m.unit();
    if (!m.names().empty()) j["names"] = m.names();
    return j;
}

FiniteGroup group_from_json(const json& j) {
    std::size_t n = j.at("size").get<std::size_t>();
    auto t = table_from_json(j.at("table"), n);
    std::vector<std::string> names;
    if (j.contains("names")) names = j.at("names").get<std::vector<std::string>>();
    return FiniteGroup(n, std::move(t), std::move(names));
}

FiniteGroup load_group(const std::string& path) {
    return group_from_json(read_json_file(path));
}

json group_to_json(const FiniteGroup& g) {
    json j;
    j["size"] = g.size();
    j["table"] = table_to_json(g.table(), g.size());
    j["unit"] = g.unit();
    if (!g.names().empty()) j["names"] = g.names();
    return j;
}

namespace {

AlgebraPtr algebra_from_json_or_path(const json& j, const std::string& base_dir) {
    if (j.is_string()) {
        fs::path p = j.get<std::string>();
        if (p.is_relative() && !base_dir.empty()) p = fs::path(base_dir) / p;
        return load_algebra(p.string());
    }
    return algebra_from_json(j);
}

}  // namespace

LinearMap linear_map_from_json(const json& j, const std::string& base_dir) {
    AlgebraPtr src = algebra_from_json_or_path(j.at("source"), base_dir);
    AlgebraPtr tgt = algebra_from_json_or_path(j.at("target"), base_dir);
    Matrix m = matrix_from_json(j.at("matrix"), src->field());
    return LinearMap(std::move(src), std::move(tgt), std::move(m));
}

LinearMap load_linear_map(const std::string& path) {
    return linear_map_from_json(read_json_file(path),
                                fs::path(path).parent_path().string());
}

CoalgebraPtr coalgebra_from_json(const json& j) {
    AlgebraPtr alg = algebra_from_json(j);
    Matrix delta = matrix_from_json(j.at("delta"), alg->field());
    std::optional<Vec> eps;
    if (j.contains("epsilon")) eps = vec_from_json(j.at("epsilon"), alg->field());
    return std::make_shared<Coalgebra>(std::move(alg), std::move(delta),
                                       std::move(eps));
}

CoalgebraPtr load_coalgebra(const std::string& path) {
    return coalgebra_from_json(read_json_file(path));
}

json coalgebra_to_json(const Coalgebra& c) {
    json j = algebra_to_json(c.R());
    j["delta"] = matrix_to_json(c.delta_matrix());
    if (c.has_counit()) j["epsilon"] = vec_to_json(c.epsilon());
    return j;
}

RModule module_from_json(const json& j, AlgebraPtr base, const Field& f) {
    std::size_t d = j.at("dim").get<std::size_t>();
    const json& aj = j.at("action");
    if (!aj.is_array() || aj.size() != base->dim())
        throw InputError("module needs one action matrix per base basis element");
    std::vector<Matrix> action;
    for (const auto& mj : aj) {
        Matrix m = matrix_from_json(mj, f);
        if (m.rows() != d || m.cols() != d)
            throw InputError("action matrix of wrong shape");
        action.push_back(std::move(m));
    }
    return RModule(std::move(base), std::move(action));
}

TensorElement tensor_element_from_json(const json& j, AlgebraPtr base,
                                       std::size_t end_dim, std::size_t legs,
                                       const Field& f) {
    TensorElement t(base, end_dim, legs);
    if (!j.is_object()) throw InputError("tensor element must be a keyed object");
    for (const auto& [key, val] : j.items()) {
        auto idx = parse_index_key(key, legs);
        Matrix m = matrix_from_json(val, f);
        if (m.rows() != end_dim || m.cols() != end_dim)
            throw InputError("coefficient matrix of wrong shape at key " + key);
        t.coeff(t.flat_index(idx)) = std::move(m);
    }
    return t;
}

json tensor_element_to_json(const TensorElement& t) {
    json j = json::object();
    std::size_t n = t.base()->dim();
    for (std::size_t flat = 0; flat < t.index_count(); ++flat) {
        if (t.coeff(flat).is_zero()) continue;
        std::vector<std::size_t> idx(t.legs());
        std::size_t rem = flat;
        for (std::size_t l = t.legs(); l-- > 0;) {
            idx[l] = rem % n;
            rem /= n;
        }
        std::string key;
        for (std::size_t l = 0; l < idx.size(); ++l) {
            if (l) key += ',';
            key += std::to_string(idx[l]);
        }
        j[key] = matrix_to_json(t.coeff(flat));
    }
    return j;
}

NucleusPair nucleus_pair_from_json(const json& j, const CoalgebraPtr& base) {
    RModule mod = module_from_json(j.at("module"), base->algebra(), base->field());
    TensorElement m = tensor_element_from_json(j.at("m"), base->algebra(), mod.dim(),
                                               2, base->field());
    return make_nucleus_pair(std::move(mod), std::move(m));
}

NucleusPair load_nucleus_pair(const std::string& path, const CoalgebraPtr& base) {
    return nucleus_pair_from_json(read_json_file(path), base);
}

Cocycle3 cocycle_from_json(const json& j, const FiniteGroup& g) {
    Field f = j.contains("field") ? field_from_json(j.at("field")) : Field::rationals();
    std::size_t n = g.size();
    std::vector<Scalar> vals(n * n * n, Scalar::one(f));
    if (j.contains("values")) {
        for (const auto& [key, val] : j.at("values").items()) {
            auto idx = parse_index_key(key, 3);
            for (std::size_t x : idx)
                if (x >= n) throw InputError("cocycle key out of range: " + key);
            vals[(idx[0] * n + idx[1]) * n + idx[2]] = scalar_from_json(val, f);
        }
    }
    return Cocycle3(g, std::move(vals));
}

Cocycle3 load_cocycle(const std::string& path, const FiniteGroup& g) {
    return cocycle_from_json(read_json_file(path), g);
}

json cocycle_to_json(const Cocycle3& alpha) {
    json values = json::object();
    std::size_t n = alpha.group().size();
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t g = 0; g < n; ++g)
            for (std::size_t h = 0; h < n; ++h) {
                const Scalar& v = alpha.at(f, g, h);
                if (v.is_one()) continue;
                values[std::to_string(f) + "," + std::to_string(g) + "," +
                       std::to_string(h)] = scalar_to_json(v);
            }
    json j;
    j["field"] = field_to_json(alpha.field());
    j["values"] = values;
    return j;
}

TensorElement twist_from_json(const json& j, AlgebraPtr base, const Field& f) {
    std::size_t n = base->dim();
    TensorElement t(base, 1, 2);
    const json& values = j.contains("values") ? j.at("values") : j;
    for (const auto& [key, val] : values.items()) {
        auto idx = parse_index_key(key, 2);
        for (std::size_t x : idx)
            if (x >= n) throw InputError("twist key out of range: " + key);
        t.coeff(idx[0] * n + idx[1]).at(0, 0) = scalar_from_json(val, f);
    }
    return t;
}

TensorElement load_twist(const std::string& path, AlgebraPtr base, const Field& f) {
    return twist_from_json(read_json_file(path), base, f);
}

}  // namespace nucal
