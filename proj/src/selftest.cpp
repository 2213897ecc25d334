#include "nucal/selftest.hpp"

#include <chrono>
#include <functional>

namespace nucal {

namespace gen {

std::size_t pick(Rng& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

Scalar scalar(Rng& rng, const Field& f, bool nonzero) {
    for (;;) {
        Scalar s;
        if (f.is_rational()) {
            long num = static_cast<long>(pick(rng, 9)) - 4;
            long den = static_cast<long>(pick(rng, 3)) + 1;
            s = Scalar::from_fraction(num, den);
        } else {
            s = Scalar::from_int(static_cast<long>(pick(rng, f.modulus())), f);
        }
        if (!nonzero || !s.is_zero()) return s;
    }
}

Vec vector(Rng& rng, std::size_t n, const Field& f) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(rng, f));
    return v;
}

Matrix matrix(Rng& rng, std::size_t rows, std::size_t cols, const Field& f) {
    Matrix m(rows, cols, f);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = scalar(rng, f);
    return m;
}

Matrix invertible_matrix(Rng& rng, std::size_t n, const Field& f) {
    for (;;) {
        Matrix m = matrix(rng, n, n, f);
        if (m.inverse()) return m;
    }
}

Vec invertible_function_element(Rng& rng, std::size_t n, const Field& f) {
    Vec v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(rng, f, true));
    return v;
}

Algebra random_algebra(Rng& rng, const Field& f, std::size_t dim) {
    std::vector<Scalar> c;
    c.reserve(dim * dim * dim);
    for (std::size_t i = 0; i < dim * dim * dim; ++i) c.push_back(scalar(rng, f));
    return Algebra(f, dim, std::move(c));
}

Algebra random_commutative_algebra(Rng& rng, const Field& f, std::size_t dim) {
    std::vector<Scalar> c(dim * dim * dim, Scalar::zero(f));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k) {
                Scalar v = scalar(rng, f);
                c[(i * dim + j) * dim + k] = v;
                c[(j * dim + i) * dim + k] = v;
            }
    return Algebra(f, dim, std::move(c));
}

Algebra random_associative_algebra(Rng& rng, const Field& f, std::size_t max_dim) {
    std::vector<Algebra> stock;
    stock.push_back(function_algebra(f, 1 + pick(rng, max_dim)));
    if (max_dim >= 4) stock.push_back(matrix_algebra(f, 2));
    stock.push_back(monoid_algebra(f, cyclic_monoid(1 + pick(rng, max_dim))));
    const Algebra& seed = stock[pick(rng, stock.size())];
    return change_basis(seed, invertible_matrix(rng, seed.dim(), f));
}

Matrix commutant_invertible(Rng& rng, const RModule& mod) {
    const Algebra& R = *mod.algebra();
    const Field& f = R.field();
    std::size_t d = mod.dim(), n = R.dim();
    // adapted basis: independent columns of each idempotent's image
    std::vector<Vec> rows;
    std::vector<std::size_t> block_sizes;
    for (std::size_t g = 0; g < n; ++g) {
        Subspace img = Subspace::span(mod.rho(g).transpose(), d);
        for (std::size_t i = 0; i < img.dim(); ++i) rows.push_back(img.basis().row(i));
        if (img.dim() > 0) block_sizes.push_back(img.dim());
    }
    if (rows.size() != d)
        throw PreconditionError("module does not split into isotypic components");
    Matrix cb = Matrix::from_rows(rows, f, d).transpose();  // columns = adapted basis
    Matrix block = Matrix::zero(d, d, f);
    std::size_t off = 0;
    for (std::size_t bs : block_sizes) {
        Matrix b = invertible_matrix(rng, bs, f);
        for (std::size_t i = 0; i < bs; ++i)
            for (std::size_t j = 0; j < bs; ++j) block.at(off + i, off + j) = b.at(i, j);
        off += bs;
    }
    return cb * block * *cb.inverse();
}

NucleusPair commutant_pair(Rng& rng, const RModule& mod) {
    const Algebra& R = *mod.algebra();
    std::size_t n = R.dim();
    TensorElement m(mod.algebra(), mod.dim(), 2);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            m.coeff(a * n + b) = commutant_invertible(rng, mod);
    return make_nucleus_pair(mod, std::move(m));
}

TensorElement random_twist(Rng& rng, AlgebraPtr function_alg, const Field& f) {
    std::size_t n = function_alg->dim();
    TensorElement c(function_alg, 1, 2);
    for (std::size_t i = 0; i < n * n; ++i)
        c.coeff(i).at(0, 0) = scalar(rng, f, true);
    return c;
}

RModule random_graded_module(Rng& rng, AlgebraPtr function_alg, std::size_t max_dim) {
    std::size_t d = 1 + pick(rng, max_dim);
    std::vector<std::size_t> grading(d);
    for (auto& g : grading) g = pick(rng, function_alg->dim());
    return graded_module(function_alg, grading);
}

}  // namespace gen

namespace {

using Clock = std::chrono::steady_clock;

struct Runner {
    std::vector<CheckResult> results;
    void run(const std::string& name, const std::function<bool(std::string&)>& fn) {
        CheckResult r{name, false, "", 0.0};
        auto t0 = Clock::now();
        try {
            r.pass = fn(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        r.millis = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
        results.push_back(std::move(r));
    }
};

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& opts) {
    Runner run;
    Field q = Field::rationals();
    Field gf5 = Field::gf(5);
    Field gf7 = Field::gf(7);

    run.run("linalg-rank-nullity", [&](std::string& detail) {
        gen::Rng rng(opts.seed ^ 0x101);
        for (int t = 0; t < 12; ++t) {
            const Field& f = (t % 2) ? q : gf7;
            Matrix m = gen::matrix(rng, 1 + t % 4, 1 + (t / 2) % 5, f);
            if (m.rank() + kernel(m).dim() != m.cols()) return false;
            if (m.rref() != m.rref().rref()) return false;
        }
        detail = "12 random matrices over Q and GF(7)";
        return true;
    });

    run.run("linalg-intersection", [&](std::string& detail) {
        gen::Rng rng(opts.seed ^ 0x102);
        for (int t = 0; t < 10; ++t) {
            const Field& f = (t % 2) ? q : gf5;
            std::size_t n = 4;
            Subspace a = Subspace::span(gen::matrix(rng, 2, n, f), n);
            Subspace b = Subspace::span(gen::matrix(rng, 2, n, f), n);
            Subspace c = intersect(a, b);
            if (!a.contains(c) || !b.contains(c)) return false;
            if (intersect(a, a) != a) return false;
        }
        detail = "containment and idempotence on random subspaces";
        return true;
    });

    run.run("associator-identity", [&](std::string& detail) {
        Algebra oct = octonion_algebra(q);
        if (!verify_associator_identity(oct, opts.workers)) return false;
        gen::Rng rng(opts.seed ^ 0x103);
        for (int t = 0; t < 8; ++t) {
            Algebra a = gen::random_algebra(rng, gf7, 2 + t % 3);
            if (!verify_associator_identity(a, opts.workers)) return false;
        }
        detail = "octonions (4096 quadruples) and 8 random GF(7) algebras";
        return true;
    });

    run.run("octonion-nuclei", [&](std::string& detail) {
        Algebra oct = octonion_algebra(q);
        for (Side s : {Side::Left, Side::Middle, Side::Right}) {
            NucleusReport rep = nucleus_report(oct, s);
            if (rep.subspace.dim() != 1) return false;
        }
        if (!unit_in_nuclei(oct)) return false;
        detail = "all three nuclei are span{1}";
        return true;
    });

    run.run("associative-coincidence", [&](std::string& detail) {
        Algebra m2 = matrix_algebra(q, 2);
        Algebra kz4 = function_algebra(q, 4);
        for (Side s : {Side::Left, Side::Middle, Side::Right}) {
            if (nucleus(m2, s).dim() != 4) return false;
            if (nucleus(kz4, s).dim() != 4) return false;
        }
        detail = "nuclei of M_2(Q) and k(Z/4) are everything";
        return true;
    });

    run.run("commutative-nucleus-relations", [&](std::string& detail) {
        gen::Rng rng(opts.seed ^ 0x104);
        for (int t = 0; t < 10; ++t) {
            Algebra a = gen::random_commutative_algebra(rng, gf5, 3);
            auto rep = commutative_nucleus_relations(a);
            if (!rep.is_commutative || !rep.left_equals_right || !rep.left_in_middle)
                return false;
        }
        detail = "N_l = N_r inside N_m on 10 random commutative algebras";
        return true;
    });

    run.run("multiplicant-identity", [&](std::string& detail) {
        gen::Rng rng(opts.seed ^ 0x105);
        for (int t = 0; t < 8; ++t) {
            auto src = std::make_shared<Algebra>(
                gen::random_associative_algebra(rng, gf7, 4));
            auto tgt = std::make_shared<Algebra>(
                gen::random_associative_algebra(rng, gf7, 4));
            LinearMap f(src, tgt, gen::matrix(rng, tgt->dim(), src->dim(), gf7));
            if (!verify_multiplicant_identity(f)) return false;
            multiplicant_report(f, Side::Left);
            multiplicant_report(f, Side::Right);
        }
        auto m2 = std::make_shared<Algebra>(matrix_algebra(q, 2));
        auto k1 = std::make_shared<Algebra>(ground_field_algebra(q));
        Matrix tr(1, 4, q);
        tr.at(0, 0) = Scalar::one(q);
        tr.at(0, 3) = Scalar::one(q);
        LinearMap trace(m2, k1, tr);
        if (multiplicant(trace, Side::Left).dim() != 0) return false;
        if (multiplicant(trace, Side::Right).dim() != 0) return false;
        detail = "8 random maps plus the trace on M_2(Q)";
        return true;
    });

    run.run("monoid-composition-span", [&](std::string& detail) {
        gen::Rng rng(opts.seed ^ 0x106);
        auto corpus = enumerate_monoids(1);
        auto c2 = enumerate_monoids(2);
        auto c3 = enumerate_monoids(3);
        corpus.insert(corpus.end(), c2.begin(), c2.end());
        corpus.insert(corpus.end(), c3.begin(), c3.end());
        for (int t = 0; t < 60; ++t) {
            const FiniteMonoid& a = corpus[gen::pick(rng, corpus.size())];
            const FiniteMonoid& b = corpus[gen::pick(rng, corpus.size())];
            const FiniteMonoid& c = corpus[gen::pick(rng, corpus.size())];
            std::vector<std::size_t> fi(a.size()), gi(b.size());
            for (auto& x : fi) x = gen::pick(rng, b.size());
            for (auto& x : gi) x = gen::pick(rng, c.size());
            MonoidMap f(a, b, fi), g(b, c, gi);
            auto rep = multiplicant_pullback(f, g);
            if (!rep.closed_under_product || !rep.projection_in_composite ||
                !rep.projection_multiplicative)
                return false;
        }
        detail = "60 random map pairs over the order-<=3 corpus";
        return true;
    });

    run.run("modcat-coherence", [&](std::string& detail) {
        gen::Rng rng(opts.seed ^ 0x107);
        for (std::size_t gs : {2ul, 3ul}) {
            FiniteGroup g = cyclic_group(gs);
            auto base = std::make_shared<Coalgebra>(function_bialgebra(gf7, g));
            AlgebraPtr alg = base->algebra();
            for (int t = 0; t < 4; ++t) {
                RModule m = gen::random_graded_module(rng, alg, 2);
                RModule n = gen::random_graded_module(rng, alg, 2);
                RModule l = gen::random_graded_module(rng, alg, 2);
                RModule p = gen::random_graded_module(rng, alg, 2);
                NucleusPair pm = gen::commutant_pair(rng, m);
                NucleusPair pn = gen::commutant_pair(rng, n);
                NucleusPair pl = gen::commutant_pair(rng, l);
                NucleusPair pp = gen::commutant_pair(rng, p);
                if (!check_inv(*base, pm)) return false;
                NucleusPair mn = tensor_pairs(*base, pm, pn);
                if (!check_inv(*base, mn)) return false;
                if (!verify_pentagon(*base, pm, pn, pl, pp)) return false;
                TensorElement c = gen::random_twist(rng, alg, gf7);
                TensorElement d = gen::random_twist(rng, alg, gf7);
                NucleusPair twisted = twist_pair(*base, pm, c);
                if (!check_inv(*base, twisted)) return false;
                // (m^c)^d = m^{cd}
                if (twist_pair(*base, twisted, d).m != twist_pair(*base, pm, c * d).m)
                    return false;
                // (m|n)^c = m^c | n^c
                if (twist_pair(*base, mn, c).m !=
                    tensor_pairs(*base, twist_pair(*base, pm, c),
                                 twist_pair(*base, pn, c)).m)
                    return false;
            }
        }
        detail = "check_inv, tensor, pentagon and twist laws over k(Z/2), k(Z/3)";
        return true;
    });

    run.run("cocycle-pentagon-sweep", [&](std::string& detail) {
        FiniteGroup z2 = cyclic_group(2);
        auto base = std::make_shared<Coalgebra>(function_bialgebra(q, z2));
        RModule reg = graded_module(base->algebra(), {0, 1});
        std::size_t agree = 0;
        for (std::size_t mask = 0; mask < 256; ++mask) {
            std::vector<Scalar> vals;
            for (std::size_t bit = 0; bit < 8; ++bit)
                vals.push_back(mask >> bit & 1 ? -Scalar::one(q) : Scalar::one(q));
            Cocycle3 alpha(z2, vals);
            bool cc = cocycle_check(alpha);
            bool pent = cocycle_pentagon_holds(*base, alpha, reg, reg, reg, reg);
            if (cc != pent) return false;
            if (cc) ++agree;
        }
        detail = std::to_string(agree) + " of 256 sign tables are cocycles";
        return true;
    });

    run.run("quasi-bialgebra", [&](std::string& detail) {
        for (std::size_t n : {1ul, 2ul, 3ul}) {
            FiniteGroup g = cyclic_group(n);
            if (!quasi_coassoc_check(g, q)) return false;
            if (!qb_sub_bialgebra_check(g, q)) return false;
        }
        detail = "quasi-coassociativity for trivial, Z/2, Z/3";
        return true;
    });

    run.run("splitting", [&](std::string& detail) {
        FiniteGroup z2 = cyclic_group(2);
        std::vector<Scalar> vals(8, Scalar::one(q));
        vals[(1 * 2 + 1) * 2 + 1] = -Scalar::one(q);  // alpha(g,g,g) = -1
        Cocycle3 alpha(z2, vals);
        if (!cocycle_check(alpha)) return false;
        auto rep = splitting_verify(splitting_hom(alpha));
        if (!rep.splits_inclusion || !rep.delta_compatible) return false;
        // break the condition: also alpha(e,g,g) = -1
        std::vector<Scalar> bad = vals;
        bad[(0 * 2 + 1) * 2 + 1] = -Scalar::one(q);
        auto rep2 = splitting_verify(SplittingHom(z2, bad));
        if (!rep2.splits_inclusion || rep2.delta_compatible) return false;
        detail = "nontrivial Z/2 cocycle splits; non-cocycle detected";
        return true;
    });

    run.run("bialgebra-multiplicant", [&](std::string& detail) {
        gen::Rng rng(opts.seed ^ 0x108);
        FiniteGroup z3 = cyclic_group(3);
        auto h = std::make_shared<Coalgebra>(function_bialgebra(gf7, z3));
        Matrix id = Matrix::identity(3, gf7);
        for (int t = 0; t < 5; ++t) {
            RModule m = gen::random_graded_module(rng, h->algebra(), 2);
            RModule n = gen::random_graded_module(rng, h->algebra(), 2);
            Vec x = gen::invertible_function_element(rng, 3, gf7);
            Vec y = gen::invertible_function_element(rng, 3, gf7);
            auto mp = make_multiplicant_pair(h, h, id, m, gamma_element(*h, m, x));
            auto np = make_multiplicant_pair(h, h, id, n, gamma_element(*h, n, y));
            if (!multiplicant_check(mp) || !multiplicant_check(np)) return false;
            if (!multiplicant_gamma_membership(mp, x)) return false;
            auto tp = multiplicant_tensor(mp, np);
            if (!multiplicant_check(tp)) return false;
        }
        // free-algebra action relations on a random invertible element
        auto alg = h->algebra();
        for (int t = 0; t < 5; ++t) {
            TensorElement v(alg, 2, 1);
            for (std::size_t i = 0; i < 3; ++i)
                v.coeff(i) = gen::invertible_matrix(rng, 2, gf7);
            if (!free_algebra_action(v).relations_hold) return false;
        }
        detail = "gamma pairs, tensor products and free-action relations over k(Z/3)";
        return true;
    });

    return run.results;
}

}  // namespace nucal
