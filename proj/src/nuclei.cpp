#include "nucal/nuclei.hpp"

#include <thread>

namespace nucal {

const char* side_name(Side s) {
    switch (s) {
        case Side::Left: return "left";
        case Side::Middle: return "middle";
        case Side::Right: return "right";
    }
    return "?";
}

Subspace nucleus(const Algebra& a, Side side) {
    std::size_t n = a.dim();
    const Field& f = a.field();
    // One n^2-block stack of the maps v -> J(v,e_i,e_j) (slot per side).
    Matrix sys(n * n * n, n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Vec ei = a.basis_vector(i), ej = a.basis_vector(j);
            for (std::size_t t = 0; t < n; ++t) {
                Vec et = a.basis_vector(t);
                Vec col;
                switch (side) {
                    case Side::Left: col = a.associator(et, ei, ej); break;
                    case Side::Middle: col = a.associator(ei, et, ej); break;
                    case Side::Right: col = a.associator(ei, ej, et); break;
                }
                for (std::size_t k = 0; k < n; ++k)
                    sys.at((i * n + j) * n + k, t) = col[k];
            }
        }
    return kernel(sys);
}

NucleusReport nucleus_report(const Algebra& a, Side side) {
    NucleusReport rep;
    rep.subspace = nucleus(a, side);
    rep.closed = is_subalgebra_closed(a, rep.subspace);
    rep.associative = true;
    const Subspace& s = rep.subspace;
    for (std::size_t i = 0; i < s.dim() && rep.associative; ++i)
        for (std::size_t j = 0; j < s.dim() && rep.associative; ++j)
            for (std::size_t k = 0; k < s.dim(); ++k) {
                Vec jv = a.associator(s.basis().row(i), s.basis().row(j),
                                      s.basis().row(k));
                if (!vec_is_zero(jv)) {
                    rep.associative = false;
                    break;
                }
            }
    if (!rep.closed || !rep.associative)
        throw InternalError(std::string("computed ") + side_name(side) +
                            " nucleus is not an associative subalgebra");
    return rep;
}

namespace {

// x J(y,z,w) - J(xy,z,w) + J(x,yz,w) - J(x,y,zw) + J(x,y,z) w
bool identity_holds_at(const Algebra& a, std::size_t x, std::size_t y,
                       std::size_t z, std::size_t w) {
    Vec ex = a.basis_vector(x), ey = a.basis_vector(y);
    Vec ez = a.basis_vector(z), ew = a.basis_vector(w);
    Vec acc = a.multiply(ex, a.associator(ey, ez, ew));
    acc = vec_sub(acc, a.associator(a.basis_product(x, y), ez, ew));
    acc = vec_add(acc, a.associator(ex, a.basis_product(y, z), ew));
    acc = vec_sub(acc, a.associator(ex, ey, a.basis_product(z, w)));
    acc = vec_add(acc, a.multiply(a.associator(ex, ey, ez), ew));
    return vec_is_zero(acc);
}

}  // namespace

bool verify_associator_identity(const Algebra& a, unsigned workers) {
    std::size_t n = a.dim();
    std::size_t total = n * n * n * n;
    if (workers <= 1) {
        for (std::size_t q = 0; q < total; ++q) {
            std::size_t x = q / (n * n * n);
            std::size_t y = q / (n * n) % n;
            std::size_t z = q / n % n;
            std::size_t w = q % n;
            if (!identity_holds_at(a, x, y, z, w)) return false;
        }
        return true;
    }
    std::vector<char> ok(workers, 1);
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < workers; ++t) {
        threads.emplace_back([&, t] {
            for (std::size_t q = t; q < total; q += workers) {
                std::size_t x = q / (n * n * n);
                std::size_t y = q / (n * n) % n;
                std::size_t z = q / n % n;
                std::size_t w = q % n;
                if (!identity_holds_at(a, x, y, z, w)) {
                    ok[t] = 0;
                    return;
                }
            }
        });
    }
    for (auto& th : threads) th.join();
    for (char c : ok)
        if (!c) return false;
    return true;
}

CommutativeNucleusReport commutative_nucleus_relations(const Algebra& a) {
    CommutativeNucleusReport rep{};
    rep.is_commutative = a.is_commutative();
    Subspace l = nucleus(a, Side::Left);
    Subspace m = nucleus(a, Side::Middle);
    Subspace r = nucleus(a, Side::Right);
    rep.dim_left = l.dim();
    rep.dim_middle = m.dim();
    rep.dim_right = r.dim();
    rep.left_equals_right = (l == r);
    rep.left_in_middle = m.contains(l);
    return rep;
}

bool unit_in_nuclei(const Algebra& a) {
    auto unit = a.find_unit();
    if (!unit) throw PreconditionError("algebra has no unit");
    for (Side s : {Side::Left, Side::Middle, Side::Right})
        if (!nucleus(a, s).contains(*unit)) return false;
    return true;
}

}  // namespace nucal
