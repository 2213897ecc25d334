#include "nucal/scalar.hpp"

namespace nucal {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

Field Field::gf(std::uint32_t p) {
    if (!is_prime_u32(p))
        throw InputError("field modulus " + std::to_string(p) + " is not prime");
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::str() const {
    return p_ ? "GF(" + std::to_string(p_) + ")" : "Q";
}

namespace {

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = acc * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return acc;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    if (a == 0) throw std::domain_error("division by zero in GF(p)");
    return mod_pow(a, p - 2, p);  // Fermat; p prime
}

}  // namespace

Scalar Scalar::zero(const Field& f) { return from_int(0, f); }
Scalar Scalar::one(const Field& f) { return from_int(1, f); }

Scalar Scalar::from_int(long v, const Field& f) {
    Scalar s;
    if (f.is_rational()) {
        s.q_ = mpq_class(v);
        s.p_ = 0;
    } else {
        long m = static_cast<long>(f.modulus());
        long r = v % m;
        if (r < 0) r += m;
        s.r_ = static_cast<std::uint64_t>(r);
        s.p_ = f.modulus();
    }
    return s;
}

Scalar Scalar::from_fraction(long num, long den) {
    if (den == 0) throw InputError("zero denominator in rational literal");
    Scalar s;
    s.q_ = mpq_class(num, den);
    s.q_.canonicalize();
    s.p_ = 0;
    return s;
}

Scalar Scalar::from_mpq(const mpq_class& q) {
    Scalar s;
    s.q_ = q;
    s.q_.canonicalize();
    s.p_ = 0;
    return s;
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
    if (text.empty()) throw InputError("empty scalar literal");
    auto slash = text.find('/');
    try {
        if (f.is_rational()) {
            mpq_class q(text);  // accepts "a" and "a/b"
            if (q.get_den() == 0) throw InputError("zero denominator: " + text);
            q.canonicalize();
            return from_mpq(q);
        }
        // GF(p): integer literal, optionally a fraction a/b with b invertible.
        std::uint32_t p = f.modulus();
        auto parse_int = [&](const std::string& t) {
            mpz_class z(t);
            mpz_class r = z % p;
            if (r < 0) r += p;
            return Scalar::from_int(r.get_si(), f);
        };
        if (slash == std::string::npos) return parse_int(text);
        Scalar a = parse_int(text.substr(0, slash));
        Scalar b = parse_int(text.substr(slash + 1));
        if (b.is_zero()) throw InputError("zero denominator: " + text);
        return a / b;
    } catch (const std::invalid_argument&) {
        throw InputError("bad scalar literal: " + text);
    }
}

bool Scalar::is_zero() const { return p_ ? r_ == 0 : q_ == 0; }

bool Scalar::is_one() const { return p_ ? r_ == 1 % p_ : q_ == 1; }

void Scalar::check_same_field(const Scalar& o) const {
    if (p_ != o.p_)
        throw FieldMismatchError("scalars from different fields: " + field().str() +
                                 " vs " + o.field().str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.p_ = p_;
    if (p_) s.r_ = (r_ + o.r_) % p_;
    else s.q_ = q_ + o.q_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.p_ = p_;
    if (p_) s.r_ = (r_ + p_ - o.r_) % p_;
    else s.q_ = q_ - o.q_;
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s;
    s.p_ = p_;
    if (p_) s.r_ = r_ * o.r_ % p_;
    else s.q_ = q_ * o.q_;
    return s;
}

Scalar Scalar::inverse() const {
    Scalar s;
    s.p_ = p_;
    if (p_) {
        s.r_ = mod_inverse(r_, p_);
    } else {
        if (q_ == 0) throw std::domain_error("division by zero");
        s.q_ = 1 / q_;
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const {
    Scalar s;
    s.p_ = p_;
    if (p_) s.r_ = r_ ? p_ - r_ : 0;
    else s.q_ = -q_;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return p_ ? r_ == o.r_ : q_ == o.q_;
}

std::string Scalar::str() const {
    if (p_) return std::to_string(r_);
    return q_.get_str();
}

const mpq_class& Scalar::rational() const {
    if (p_) throw FieldMismatchError("residue scalar has no rational value");
    return q_;
}

}  // namespace nucal
