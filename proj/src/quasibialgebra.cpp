#include "nucal/quasibialgebra.hpp"

namespace nucal {

FreeWord FreeWord::generator(std::uint32_t gen, int exp) {
    if (exp != 1 && exp != -1) throw InputError("letter exponent must be +-1");
    FreeWord w;
    w.letters_.push_back({gen, exp});
    return w;
}

FreeWord FreeWord::concat(const FreeWord& o) const {
    FreeWord w(*this);
    for (const Letter& l : o.letters_) {
        if (!w.letters_.empty() && w.letters_.back().first == l.first &&
            w.letters_.back().second == -l.second)
            w.letters_.pop_back();
        else
            w.letters_.push_back(l);
    }
    return w;
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->first, -it->second});
    return w;
}

QbTensor::QbTensor(const FiniteGroup& g, const Field& f, std::size_t legs)
    : group_(g), field_(f), legs_(legs) {}

void QbTensor::add_term(const Key& key, const Scalar& coeff) {
    if (key.size() != legs_) throw DimensionError("term key has wrong leg count");
    if (coeff.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QbTensor QbTensor::unit(const FiniteGroup& g, const Field& f, std::size_t legs) {
    QbTensor t(g, f, legs);
    std::size_t n = g.size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < legs; ++i) total *= n;
    for (std::size_t flat = 0; flat < total; ++flat) {
        Key key(legs);
        std::size_t rem = flat;
        for (std::size_t l = legs; l-- > 0;) {
            key[l] = QbBasis{rem % n, FreeWord()};
            rem /= n;
        }
        t.terms_.emplace(std::move(key), Scalar::one(f));
    }
    return t;
}

QbTensor QbTensor::delta_function(const FiniteGroup& g, const Field& f, std::size_t a) {
    QbTensor t(g, f, 1);
    t.add_term({QbBasis{a, FreeWord()}}, Scalar::one(f));
    return t;
}

QbTensor QbTensor::generator(const FiniteGroup& g, const Field& f, std::size_t a,
                             std::size_t b, int exp) {
    QbTensor t(g, f, 1);
    std::uint32_t gen = static_cast<std::uint32_t>(a * g.size() + b);
    for (std::size_t h = 0; h < g.size(); ++h)
        t.add_term({QbBasis{h, FreeWord::generator(gen, exp)}}, Scalar::one(f));
    return t;
}

QbTensor QbTensor::operator*(const QbTensor& o) const {
    if (legs_ != o.legs_) throw DimensionError("leg count mismatch");
    if (field_ != o.field_) throw FieldMismatchError("field mismatch");
    QbTensor out(group_, field_, legs_);
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_) {
            bool live = true;
            for (std::size_t l = 0; l < legs_ && live; ++l)
                live = (ka[l].grp == kb[l].grp);
            if (!live) continue;
            Key key(legs_);
            for (std::size_t l = 0; l < legs_; ++l)
                key[l] = QbBasis{ka[l].grp, ka[l].word.concat(kb[l].word)};
            out.add_term(key, ca * cb);
        }
    return out;
}

QbTensor QbTensor::operator+(const QbTensor& o) const {
    if (legs_ != o.legs_) throw DimensionError("leg count mismatch");
    QbTensor out(*this);
    for (const auto& [k, c] : o.terms_) out.add_term(k, c);
    return out;
}

QbTensor QbTensor::operator-(const QbTensor& o) const {
    if (legs_ != o.legs_) throw DimensionError("leg count mismatch");
    QbTensor out(*this);
    for (const auto& [k, c] : o.terms_) out.add_term(k, -c);
    return out;
}

QbTensor QbTensor::scaled(const Scalar& c) const {
    QbTensor out(group_, field_, legs_);
    if (c.is_zero()) return out;
    for (const auto& [k, v] : terms_) out.terms_.emplace(k, c * v);
    return out;
}

bool QbTensor::operator==(const QbTensor& o) const {
    return legs_ == o.legs_ && terms_ == o.terms_;
}

bool QbTensor::is_unit() const { return *this == unit(group_, field_, legs_); }

namespace {

// delta of one letter u(f,g)^{+-1} as a two-leg tensor.
QbTensor delta_letter(const FiniteGroup& g, const Field& fd, std::uint32_t gen,
                      int exp) {
    std::size_t n = g.size();
    std::size_t f = gen / n, gg = gen % n;
    QbTensor out(g, fd, 2);
    for (std::size_t h = 0; h < n; ++h) {
        FreeWord w = FreeWord::generator(static_cast<std::uint32_t>(h * n + f), 1)
                         .concat(FreeWord::generator(
                             static_cast<std::uint32_t>(g.op(h, f) * n + gg), 1))
                         .concat(FreeWord::generator(
                             static_cast<std::uint32_t>(h * n + g.op(f, gg)), -1));
        FreeWord right = FreeWord::generator(gen, 1);
        if (exp == -1) {
            w = w.inverse();
            right = right.inverse();
        }
        for (std::size_t a = 0; a < n; ++a) {
            QbTensor::Key key{QbBasis{a, w}, QbBasis{h, right}};
            out.add_term(key, Scalar::one(fd));
        }
    }
    return out;
}

// delta of one basis element p_a (x) w.
QbTensor delta_basis(const FiniteGroup& g, const Field& fd, const QbBasis& b) {
    std::size_t n = g.size();
    // delta(p_a) = sum_{xy=a} p_x (x) p_y
    QbTensor acc(g, fd, 2);
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            if (g.op(x, y) == b.grp)
                acc.add_term({QbBasis{x, FreeWord()}, QbBasis{y, FreeWord()}},
                             Scalar::one(fd));
    for (const auto& letter : b.word.letters())
        acc = acc * delta_letter(g, fd, letter.first, letter.second);
    return acc;
}

}  // namespace

QbTensor qb_coproduct_on_leg(const QbTensor& x, std::size_t leg) {
    if (leg >= x.legs()) throw DimensionError("leg index out of range");
    QbTensor out(x.group(), x.field(), x.legs() + 1);
    for (const auto& [key, coeff] : x.terms()) {
        QbTensor d = delta_basis(x.group(), x.field(), key[leg]);
        for (const auto& [dk, dc] : d.terms()) {
            QbTensor::Key nk;
            nk.reserve(x.legs() + 1);
            for (std::size_t l = 0; l < leg; ++l) nk.push_back(key[l]);
            nk.push_back(dk[0]);
            nk.push_back(dk[1]);
            for (std::size_t l = leg + 1; l < x.legs(); ++l) nk.push_back(key[l]);
            out.add_term(nk, coeff * dc);
        }
    }
    return out;
}

QbTensor qb_coproduct(const QbTensor& x) {
    if (x.legs() != 1) throw DimensionError("coproduct input must have one leg");
    return qb_coproduct_on_leg(x, 0);
}

Associator associator_phi(const FiniteGroup& g, const Field& fd) {
    std::size_t n = g.size();
    QbTensor phi(g, fd, 3), phi_inv(g, fd, 3);
    for (std::size_t f = 0; f < n; ++f)
        for (std::size_t gg = 0; gg < n; ++gg) {
            std::uint32_t gen = static_cast<std::uint32_t>(f * n + gg);
            for (std::size_t a = 0; a < n; ++a) {
                phi.add_term({QbBasis{a, FreeWord::generator(gen, 1)},
                              QbBasis{f, FreeWord()}, QbBasis{gg, FreeWord()}},
                             Scalar::one(fd));
                phi_inv.add_term({QbBasis{a, FreeWord::generator(gen, -1)},
                                  QbBasis{f, FreeWord()}, QbBasis{gg, FreeWord()}},
                                 Scalar::one(fd));
            }
        }
    Associator assoc{std::move(phi), std::move(phi_inv)};
    if (!(assoc.phi * assoc.phi_inv).is_unit() ||
        !(assoc.phi_inv * assoc.phi).is_unit())
        throw InternalError("associator inverse failed");
    return assoc;
}

bool quasi_coassoc_holds_for(const QbTensor& x, const Associator& assoc) {
    QbTensor d = qb_coproduct(x);
    QbTensor outer = qb_coproduct_on_leg(d, 0);  // (delta (x) I) delta
    QbTensor inner = qb_coproduct_on_leg(d, 1);  // (I (x) delta) delta
    // The two iterated coproducts are conjugate through the associator, with
    // the orientation matching the constraint A (x) (X (x) Y) -> (A (x) X) (x) Y:
    // (delta (x) I) delta(x) * Phi = Phi * (I (x) delta) delta(x).
    return outer * assoc.phi == assoc.phi * inner;
}

bool quasi_coassoc_check(const FiniteGroup& g, const Field& f) {
    Associator assoc = associator_phi(g, f);
    for (std::size_t a = 0; a < g.size(); ++a)
        if (!quasi_coassoc_holds_for(QbTensor::delta_function(g, f, a), assoc))
            return false;
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b)
            if (!quasi_coassoc_holds_for(QbTensor::generator(g, f, a, b), assoc))
                return false;
    return true;
}

bool qb_sub_bialgebra_check(const FiniteGroup& g, const Field& f) {
    std::size_t n = g.size();
    for (std::size_t a = 0; a < n; ++a) {
        QbTensor d = qb_coproduct(QbTensor::delta_function(g, f, a));
        QbTensor expect(g, f, 2);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y)
                if (g.op(x, y) == a)
                    expect.add_term({QbBasis{x, FreeWord()}, QbBasis{y, FreeWord()}},
                                    Scalar::one(f));
        if (d != expect) return false;
    }
    return true;
}

SplittingHom::SplittingHom(const FiniteGroup& g, std::vector<Scalar> alpha_values)
    : group_(g), values_(std::move(alpha_values)) {
    std::size_t n = group_.size();
    if (values_.size() != n * n * n)
        throw InputError("splitting table must have |G|^3 entries");
    for (const Scalar& v : values_)
        if (v.is_zero()) throw InputError("splitting table values must be nonzero");
}

Vec SplittingHom::apply(const QbTensor& x) const {
    if (x.legs() != 1) throw DimensionError("splitting applies to one-leg elements");
    std::size_t n = group_.size();
    const Field& f = field();
    Vec out = vec_zero(n, f);
    for (const auto& [key, coeff] : x.terms()) {
        // pi(p_a w) = p_a * prod of pi(letters), a pointwise product in k(G);
        // only the coordinate at a survives.
        Scalar v = coeff;
        for (const auto& [gen, exp] : key[0].word.letters()) {
            std::size_t fg = gen / n, gg = gen % n;
            const Scalar& al = alpha(key[0].grp, fg, gg);
            v = (exp == 1) ? v * al : v * al.inverse();
        }
        out[key[0].grp] += v;
    }
    return out;
}

Vec SplittingHom::apply2(const QbTensor& x) const {
    if (x.legs() != 2) throw DimensionError("expected a two-leg element");
    std::size_t n = group_.size();
    const Field& f = field();
    Vec out = vec_zero(n * n, f);
    for (const auto& [key, coeff] : x.terms()) {
        QbTensor single(group_, f, 1);
        single.add_term({key[0]}, coeff);
        Vec left = apply(single);
        QbTensor single2(group_, f, 1);
        single2.add_term({key[1]}, Scalar::one(f));
        Vec right = apply(single2);
        for (std::size_t a = 0; a < n; ++a)
            if (!left[a].is_zero())
                for (std::size_t b = 0; b < n; ++b)
                    if (!right[b].is_zero()) out[a * n + b] += left[a] * right[b];
    }
    return out;
}

SplittingReport splitting_verify(const SplittingHom& pi) {
    const FiniteGroup& g = pi.group();
    const Field& f = pi.field();
    std::size_t n = g.size();
    SplittingReport rep{true, true};
    for (std::size_t a = 0; a < n; ++a) {
        Vec img = pi.apply(QbTensor::delta_function(g, f, a));
        Vec expect = vec_zero(n, f);
        expect[a] = Scalar::one(f);
        if (img != expect) rep.splits_inclusion = false;
    }
    auto kg_coproduct = [&](const Vec& v) {
        Vec out = vec_zero(n * n, f);
        for (std::size_t t = 0; t < n; ++t) {
            if (v[t].is_zero()) continue;
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (g.op(a, b) == t) out[a * n + b] += v[t];
        }
        return out;
    };
    auto compatible_on = [&](const QbTensor& x) {
        Vec lhs = pi.apply2(qb_coproduct(x));
        Vec rhs = kg_coproduct(pi.apply(x));
        return lhs == rhs;
    };
    for (std::size_t a = 0; a < n && rep.delta_compatible; ++a)
        if (!compatible_on(QbTensor::delta_function(g, f, a)))
            rep.delta_compatible = false;
    for (std::size_t a = 0; a < n && rep.delta_compatible; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!compatible_on(QbTensor::generator(g, f, a, b))) {
                rep.delta_compatible = false;
                break;
            }
    return rep;
}

}  // namespace nucal
