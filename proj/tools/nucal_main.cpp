// Command-line front end: every operation of the library behind one binary
// with JSON-file inputs, human or JSON reports, and deterministic seeds.
//
// Exit codes: 0 = verified/true, 1 = falsified mathematical check,
//             2 = unusable input (bad file, bad flags, field mismatch).

#include <CLI11.hpp>

#include <filesystem>
#include <functional>
#include <iostream>

#include "nucal/selftest.hpp"

namespace {

using namespace nucal;

struct Options {
    bool json = false;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

int report(const Options& opt, const std::string& command, bool ok, json result,
           const std::string& human) {
    if (opt.json) {
        json out;
        out["command"] = command;
        out["seed"] = opt.seed;
        out["workers"] = opt.workers;
        out["ok"] = ok;
        out["result"] = std::move(result);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << human << "\n";
    }
    return ok ? 0 : 1;
}

Side parse_side(const std::string& s, bool allow_middle) {
    if (s == "l") return Side::Left;
    if (s == "r") return Side::Right;
    if (s == "m" && allow_middle) return Side::Middle;
    throw InputError("bad --side value: " + s);
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string part = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            out.push_back(std::stoul(part));
        } catch (const std::exception&) {
            throw InputError("bad index list: \"" + text + "\"");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

MonoidMap monoid_map_from_file(const std::string& path) {
    json j = read_json_file(path);
    auto base_dir = std::filesystem::path(path).parent_path();
    auto load_side = [&](const json& side) {
        if (!side.is_string()) return monoid_from_json(side);
        std::filesystem::path p = side.get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        return load_monoid(p.string());
    };
    FiniteMonoid src = load_side(j.at("source"));
    FiniteMonoid tgt = load_side(j.at("target"));
    std::vector<std::size_t> images = j.at("images").get<std::vector<std::size_t>>();
    return MonoidMap(std::move(src), std::move(tgt), std::move(images));
}

int cmd_nuclei_compute(const Options& opt, const std::string& algebra_path,
                       const std::string& side_str) {
    AlgebraPtr a = load_algebra(algebra_path);
    Side side = parse_side(side_str, true);
    NucleusReport rep = nucleus_report(*a, side);
    json res;
    res["side"] = side_name(side);
    res["dim"] = rep.subspace.dim();
    res["basis"] = matrix_to_json(rep.subspace.basis());
    res["closed"] = rep.closed;
    res["associative"] = rep.associative;
    std::string human = std::string(side_name(side)) + " nucleus: dim " +
                        std::to_string(rep.subspace.dim()) + " of " +
                        std::to_string(a->dim()) + ", closed=" +
                        (rep.closed ? "yes" : "no") + ", associative=" +
                        (rep.associative ? "yes" : "no");
    return report(opt, "nuclei compute", rep.closed && rep.associative, res, human);
}

int cmd_nuclei_identity(const Options& opt, const std::string& algebra_path) {
    AlgebraPtr a = load_algebra(algebra_path);
    bool ok = verify_associator_identity(*a, opt.workers);
    json res;
    res["identity_holds"] = ok;
    res["quadruples"] = a->dim() * a->dim() * a->dim() * a->dim();
    return report(opt, "nuclei identity-check", ok, res,
                  ok ? "associator identity holds on all basis quadruples"
                     : "associator identity FAILED");
}

int cmd_nuclei_commutative(const Options& opt, const std::string& algebra_path) {
    AlgebraPtr a = load_algebra(algebra_path);
    auto rep = commutative_nucleus_relations(*a);
    json res;
    res["is_commutative"] = rep.is_commutative;
    res["left_equals_right"] = rep.left_equals_right;
    res["left_in_middle"] = rep.left_in_middle;
    res["dims"] = {rep.dim_left, rep.dim_middle, rep.dim_right};
    bool ok = !rep.is_commutative || (rep.left_equals_right && rep.left_in_middle);
    std::string human =
        rep.is_commutative
            ? std::string("commutative: N_l ") +
                  (rep.left_equals_right ? "=" : "!=") + " N_r, N_l " +
                  (rep.left_in_middle ? "inside" : "NOT inside") + " N_m"
            : "algebra is not commutative; relations not asserted";
    return report(opt, "nuclei commutative-report", ok, res, human);
}

int cmd_mult_compute(const Options& opt, const std::string& map_path,
                     const std::string& side_str) {
    LinearMap f = load_linear_map(map_path);
    Side side = parse_side(side_str, false);
    auto rep = multiplicant_report(f, side);
    json res;
    res["side"] = side_name(side);
    res["dim"] = rep.subspace.dim();
    res["basis"] = matrix_to_json(rep.subspace.basis());
    res["closed"] = rep.closed;
    res["multiplicative_restriction"] = rep.multiplicative;
    return report(opt, "multiplicant compute", rep.closed && rep.multiplicative, res,
                  std::string(side_name(side)) + " multiplicant: dim " +
                      std::to_string(rep.subspace.dim()) + " of " +
                      std::to_string(f.source->dim()));
}

int cmd_mult_identity(const Options& opt, const std::string& map_path) {
    LinearMap f = load_linear_map(map_path);
    bool ok = verify_multiplicant_identity(f);
    json res;
    res["identity_holds"] = ok;
    return report(opt, "multiplicant identity-check", ok, res,
                  ok ? "multiplicative-defect identity holds on all basis triples"
                     : "multiplicative-defect identity FAILED");
}

int cmd_mult_monoid(const Options& opt, const std::string& source_path,
                    const std::string& target_path, const std::string& images_str,
                    const std::string& side_str) {
    FiniteMonoid src = load_monoid(source_path);
    FiniteMonoid tgt = load_monoid(target_path);
    MonoidMap f(src, tgt, parse_index_list(images_str));
    Side side = parse_side(side_str, false);
    auto rep = monoid_multiplicant_report(f, side);
    json res;
    res["side"] = side_name(side);
    res["elements"] = rep.elements;
    res["closed"] = rep.closed;
    res["contains_unit"] = rep.contains_unit;
    std::string human = std::string(side_name(side)) + " monoid multiplicant: {";
    for (std::size_t i = 0; i < rep.elements.size(); ++i) {
        if (i) human += ",";
        human += std::to_string(rep.elements[i]);
    }
    human += std::string("}, closed=") + (rep.closed ? "yes" : "no") +
             ", contains unit=" + (rep.contains_unit ? "yes" : "no");
    return report(opt, "multiplicant monoid", rep.closed, res, human);
}

int cmd_mult_pullback(const Options& opt, const std::string& f_path,
                      const std::string& g_path) {
    MonoidMap f = monoid_map_from_file(f_path);
    MonoidMap g = monoid_map_from_file(g_path);
    auto rep = multiplicant_pullback(f, g);
    json res;
    json pairs = json::array();
    for (auto& [a, b] : rep.pairs) pairs.push_back({a, b});
    res["pairs"] = pairs;
    res["closed_under_product"] = rep.closed_under_product;
    res["projection_in_composite"] = rep.projection_in_composite;
    res["projection_multiplicative"] = rep.projection_multiplicative;
    bool ok = rep.closed_under_product && rep.projection_in_composite &&
              rep.projection_multiplicative;
    return report(opt, "multiplicant pullback", ok, res,
                  "pullback span has " + std::to_string(rep.pairs.size()) +
                      " pairs; projection lands in M_l(gf): " +
                      (rep.projection_in_composite ? "yes" : "no"));
}

int cmd_modcat(const Options& opt, const std::string& what,
               const std::string& base_path, const std::vector<std::string>& pair_paths,
               const std::string& twist_path, const std::string& hom_path) {
    CoalgebraPtr base = load_coalgebra(base_path);
    auto need_pairs = [&](std::size_t n) {
        if (pair_paths.size() != n)
            throw InputError(what + " needs exactly " + std::to_string(n) +
                             " --pair file(s)");
    };
    if (what == "check-inv") {
        need_pairs(1);
        NucleusPair p = load_nucleus_pair(pair_paths[0], base);
        bool ok = check_inv(*base, p);
        json res;
        res["invariance_holds"] = ok;
        return report(opt, "modcat check-inv", ok, res,
                      ok ? "pair satisfies the invariance equation"
                         : "pair FAILS the invariance equation");
    }
    if (what == "tensor") {
        need_pairs(2);
        NucleusPair p = load_nucleus_pair(pair_paths[0], base);
        NucleusPair q = load_nucleus_pair(pair_paths[1], base);
        NucleusPair pq = tensor_pairs(*base, p, q);
        bool ok = check_inv(*base, pq);
        json res;
        res["module_dim"] = pq.module.dim();
        res["m"] = tensor_element_to_json(pq.m);
        res["invariance_holds"] = ok;
        return report(opt, "modcat tensor", ok, res,
                      "tensor pair on a dim-" + std::to_string(pq.module.dim()) +
                          " module; invariance " + (ok ? "holds" : "FAILS"));
    }
    if (what == "phi") {
        need_pairs(3);
        NucleusPair p = load_nucleus_pair(pair_paths[0], base);
        NucleusPair q = load_nucleus_pair(pair_paths[1], base);
        NucleusPair r = load_nucleus_pair(pair_paths[2], base);
        Matrix phi = associativity_constraint(p, q, r);
        bool ok = phi.inverse().has_value();
        json res;
        res["operator"] = matrix_to_json(phi);
        res["invertible"] = ok;
        return report(opt, "modcat phi", ok, res,
                      "constraint operator of size " + std::to_string(phi.rows()) +
                          (ok ? " (invertible)" : " (SINGULAR)"));
    }
    if (what == "pentagon") {
        need_pairs(4);
        NucleusPair p = load_nucleus_pair(pair_paths[0], base);
        NucleusPair q = load_nucleus_pair(pair_paths[1], base);
        NucleusPair r = load_nucleus_pair(pair_paths[2], base);
        NucleusPair s = load_nucleus_pair(pair_paths[3], base);
        bool ok = verify_pentagon(*base, p, q, r, s);
        json res;
        res["pentagon_holds"] = ok;
        return report(opt, "modcat pentagon", ok, res,
                      ok ? "pentagon identity holds" : "pentagon identity FAILED");
    }
    if (what == "normalize") {
        need_pairs(1);
        NucleusPair p = load_nucleus_pair(pair_paths[0], base);
        bool ok = check_normalization(*base, p);
        json res;
        res["normalized"] = ok;
        return report(opt, "modcat normalize", ok, res,
                      ok ? "pair is normalized" : "pair is NOT normalized");
    }
    if (what == "twist") {
        need_pairs(1);
        if (twist_path.empty()) throw InputError("twist needs --twist FILE");
        NucleusPair p = load_nucleus_pair(pair_paths[0], base);
        TensorElement c = load_twist(twist_path, base->algebra(), base->field());
        NucleusPair pc = twist_pair(*base, p, c);
        bool ok = check_inv(*base, pc);
        json res;
        res["m"] = tensor_element_to_json(pc.m);
        res["invariance_holds"] = ok;
        return report(opt, "modcat twist", ok, res,
                      std::string("twisted pair computed; invariance ") +
                          (ok ? "holds" : "FAILS"));
    }
    if (what == "multiplicant-check") {
        need_pairs(1);
        if (hom_path.empty()) throw InputError("multiplicant-check needs --hom FILE");
        json hj = read_json_file(hom_path);
        CoalgebraPtr h1;
        if (hj.at("source").is_string()) {
            std::filesystem::path p = hj.at("source").get<std::string>();
            if (p.is_relative())
                p = std::filesystem::path(hom_path).parent_path() / p;
            h1 = load_coalgebra(p.string());
        } else {
            h1 = coalgebra_from_json(hj.at("source"));
        }
        Matrix fm = matrix_from_json(hj.at("matrix"), base->field());
        json pj = read_json_file(pair_paths[0]);
        RModule mod = module_from_json(pj.at("module"), base->algebra(), base->field());
        TensorElement m = tensor_element_from_json(pj.at("m"), base->algebra(),
                                                   mod.dim(), 1, base->field());
        auto mp = make_multiplicant_pair(h1, base, fm, std::move(mod), std::move(m));
        bool ok = multiplicant_check(mp);
        json res;
        res["multiplicant_equation_holds"] = ok;
        return report(opt, "modcat multiplicant-check", ok, res,
                      ok ? "pair satisfies the multiplicant equation"
                         : "pair FAILS the multiplicant equation");
    }
    throw InputError("unknown modcat subcommand: " + what);
}

int cmd_cocycle_check(const Options& opt, const std::string& group_path,
                      const std::string& cocycle_path) {
    FiniteGroup g = load_group(group_path);
    Cocycle3 alpha = load_cocycle(cocycle_path, g);
    bool ok = cocycle_check(alpha);
    json res;
    res["is_cocycle"] = ok;
    return report(opt, "cocycle check", ok, res,
                  ok ? "table satisfies the 3-cocycle condition"
                     : "table FAILS the 3-cocycle condition");
}

int cmd_cocycle_enumerate(const Options& opt, const std::string& group_path,
                          const std::string& field_spec) {
    FiniteGroup g = load_group(group_path);
    Field f = Field::rationals();
    if (!field_spec.empty()) {
        if (field_spec == "Q") f = Field::rationals();
        else f = Field::gf(static_cast<std::uint32_t>(std::stoul(field_spec)));
    }
    auto list = enumerate_sign_cocycles(g, f);
    json res;
    res["count"] = list.size();
    json arr = json::array();
    for (const auto& c : list) arr.push_back(cocycle_to_json(c)["values"]);
    res["cocycles"] = arr;
    return report(opt, "cocycle enumerate", true, res,
                  "found " + std::to_string(list.size()) + " sign-valued cocycles");
}

int cmd_quasibialgebra(const Options& opt, const std::string& group_path) {
    FiniteGroup g = load_group(group_path);
    Field f = Field::rationals();
    Associator assoc = associator_phi(g, f);
    bool phi_inv_ok = (assoc.phi * assoc.phi_inv).is_unit();
    bool coassoc = quasi_coassoc_check(g, f);
    bool sub = qb_sub_bialgebra_check(g, f);
    bool ok = phi_inv_ok && coassoc && sub;
    json res;
    res["phi_terms"] = assoc.phi.term_count();
    res["phi_invertible"] = phi_inv_ok;
    res["quasi_coassociative"] = coassoc;
    res["function_subbialgebra"] = sub;
    return report(opt, "quasibialgebra check", ok, res,
                  std::string("Phi*Phi^-1=1: ") + (phi_inv_ok ? "yes" : "NO") +
                      ", quasi-coassociativity: " + (coassoc ? "yes" : "NO") +
                      ", k(G) sub-bialgebra: " + (sub ? "yes" : "NO"));
}

int cmd_splitting(const Options& opt, const std::string& group_path,
                  const std::string& cocycle_path) {
    FiniteGroup g = load_group(group_path);
    json cj = read_json_file(cocycle_path);
    Field f = cj.contains("field") ? field_from_json(cj.at("field"))
                                   : Field::rationals();
    std::size_t n = g.size();
    std::vector<Scalar> vals(n * n * n, Scalar::one(f));
    if (cj.contains("values"))
        for (const auto& [key, val] : cj.at("values").items()) {
            auto idx = parse_index_list(key);
            if (idx.size() != 3) throw InputError("bad cocycle key: " + key);
            vals[(idx[0] * n + idx[1]) * n + idx[2]] = scalar_from_json(val, f);
        }
    SplittingHom pi(g, vals);
    auto rep = splitting_verify(pi);
    bool ok = rep.splits_inclusion && rep.delta_compatible;
    json res;
    res["splits_inclusion"] = rep.splits_inclusion;
    res["delta_compatible"] = rep.delta_compatible;
    return report(opt, "splitting verify", ok, res,
                  std::string("splits inclusion: ") +
                      (rep.splits_inclusion ? "yes" : "NO") +
                      ", coproduct compatible: " +
                      (rep.delta_compatible ? "yes" : "NO"));
}

int cmd_selftest(const Options& opt) {
    SelftestOptions so;
    so.seed = opt.seed;
    so.workers = opt.workers;
    auto results = run_selftest(so);
    bool all = true;
    json arr = json::array();
    for (const auto& r : results) {
        all = all && r.pass;
        json jr;
        jr["name"] = r.name;
        jr["pass"] = r.pass;
        jr["detail"] = r.detail;
        arr.push_back(jr);
        if (!opt.json)
            std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name
                      << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
    }
    json res;
    res["checks"] = arr;
    if (opt.json) return report(opt, "selftest", all, res, "");
    std::cout << (all ? "selftest: all checks passed" : "selftest: FAILURES") << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations of nuclei, multiplicants and quasi-bialgebra "
                 "structures on finite-dimensional algebras"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "emit a machine-readable JSON report");
    app.add_option("--seed", opt.seed, "seed for randomized sweeps");
    app.add_option("--workers", opt.workers, "worker count for sweeps")
        ->check(CLI::PositiveNumber);

    std::string algebra_path, side = "l", map_path, source_path, target_path;
    std::string images, f_path, g_path, base_path, twist_path, hom_path;
    std::string group_path, cocycle_path, field_spec;
    std::vector<std::string> pair_paths;

    auto* nuclei_cmd = app.add_subcommand("nuclei", "nuclei of an algebra");
    nuclei_cmd->require_subcommand(1);
    auto* n_compute = nuclei_cmd->add_subcommand("compute", "compute one nucleus");
    n_compute->add_option("--algebra", algebra_path)->required();
    n_compute->add_option("--side", side, "l|m|r");
    auto* n_ident = nuclei_cmd->add_subcommand("identity-check",
                                               "associator derivation identity");
    n_ident->add_option("--algebra", algebra_path)->required();
    auto* n_comm = nuclei_cmd->add_subcommand("commutative-report",
                                              "nucleus relations when commutative");
    n_comm->add_option("--algebra", algebra_path)->required();

    auto* mult_cmd = app.add_subcommand("multiplicant", "multiplicants of maps");
    mult_cmd->require_subcommand(1);
    auto* m_compute = mult_cmd->add_subcommand("compute", "multiplicant of a linear map");
    m_compute->add_option("--map", map_path)->required();
    m_compute->add_option("--side", side, "l|r");
    auto* m_ident = mult_cmd->add_subcommand("identity-check",
                                             "multiplicative-defect identity");
    m_ident->add_option("--map", map_path)->required();
    auto* m_monoid = mult_cmd->add_subcommand("monoid", "multiplicant of a set map");
    m_monoid->add_option("--source", source_path)->required();
    m_monoid->add_option("--target", target_path)->required();
    m_monoid->add_option("--images", images)->required();
    m_monoid->add_option("--side", side, "l|r");
    auto* m_pull = mult_cmd->add_subcommand("pullback", "composition span of two maps");
    m_pull->add_option("--f", f_path)->required();
    m_pull->add_option("--g", g_path)->required();

    auto* modcat_cmd = app.add_subcommand("modcat", "module-category element calculus");
    modcat_cmd->require_subcommand(1);
    std::vector<CLI::App*> modcat_subs;
    for (const char* name : {"check-inv", "tensor", "phi", "pentagon", "normalize",
                             "twist", "multiplicant-check"}) {
        auto* sub = modcat_cmd->add_subcommand(name);
        sub->add_option("--base", base_path)->required();
        sub->add_option("--pair", pair_paths);
        sub->add_option("--twist", twist_path);
        sub->add_option("--hom", hom_path);
        modcat_subs.push_back(sub);
    }

    auto* cocycle_cmd = app.add_subcommand("cocycle", "group 3-cocycles");
    cocycle_cmd->require_subcommand(1);
    auto* c_check = cocycle_cmd->add_subcommand("check", "verify the cocycle condition");
    c_check->add_option("--group", group_path)->required();
    c_check->add_option("--cocycle", cocycle_path)->required();
    auto* c_enum = cocycle_cmd->add_subcommand("enumerate", "all sign-valued cocycles");
    c_enum->add_option("--group", group_path)->required();
    c_enum->add_option("--field", field_spec, "Q (default) or a prime p");

    auto* qb_cmd = app.add_subcommand("quasibialgebra",
                                      "coproduct and associator of N_l(k(G))");
    qb_cmd->require_subcommand(1);
    auto* qb_check = qb_cmd->add_subcommand("check", "quasi-coassociativity report");
    qb_check->add_option("--group", group_path)->required();

    auto* split_cmd = app.add_subcommand("splitting", "cocycle splitting homomorphisms");
    split_cmd->require_subcommand(1);
    auto* s_verify = split_cmd->add_subcommand("verify", "verify a splitting table");
    s_verify->add_option("--group", group_path)->required();
    s_verify->add_option("--cocycle", cocycle_path)->required();

    app.add_subcommand("selftest", "run the deterministic oracle suites");

    // allow the global flags (--json, --seed, --workers) after subcommands
    std::function<void(CLI::App*)> enable_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands({})) enable_fallthrough(sub);
    };
    enable_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (n_compute->parsed()) return cmd_nuclei_compute(opt, algebra_path, side);
        if (n_ident->parsed()) return cmd_nuclei_identity(opt, algebra_path);
        if (n_comm->parsed()) return cmd_nuclei_commutative(opt, algebra_path);
        if (m_compute->parsed()) return cmd_mult_compute(opt, map_path, side);
        if (m_ident->parsed()) return cmd_mult_identity(opt, map_path);
        if (m_monoid->parsed())
            return cmd_mult_monoid(opt, source_path, target_path, images, side);
        if (m_pull->parsed()) return cmd_mult_pullback(opt, f_path, g_path);
        for (CLI::App* sub : modcat_subs)
            if (sub->parsed())
                return cmd_modcat(opt, sub->get_name(), base_path, pair_paths,
                                  twist_path, hom_path);
        if (c_check->parsed()) return cmd_cocycle_check(opt, group_path, cocycle_path);
        if (c_enum->parsed()) return cmd_cocycle_enumerate(opt, group_path, field_spec);
        if (qb_check->parsed()) return cmd_quasibialgebra(opt, group_path);
        if (s_verify->parsed()) return cmd_splitting(opt, group_path, cocycle_path);
        if (app.get_subcommand("selftest")->parsed()) return cmd_selftest(opt);
        std::cerr << "error: no subcommand selected\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition not met: " << e.what() << "\n";
        return 1;
    } catch (const InternalError& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
