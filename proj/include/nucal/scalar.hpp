#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace nucal {

// Input that cannot be processed (bad file, bad shape, unknown option).
// The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Scalars from different ground fields mixed in one operation.
struct FieldMismatchError : InputError {
    explicit FieldMismatchError(const std::string& msg) : InputError(msg) {}
};

// Shape disagreement (matrix sizes, ambient dimensions, leg counts).
struct DimensionError : InputError {
    explicit DimensionError(const std::string& msg) : InputError(msg) {}
};

// A mathematical precondition of an operation does not hold for the given
// input (e.g. a non-associative algebra passed to a multiplicant).
// The CLI maps this to exit code 1.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A theorem-backed internal consistency check failed; indicates a bug.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

// Ground field descriptor: p == 0 means the rationals, otherwise GF(p)
// with p prime (p < 2^32 so products fit into 64-bit intermediates).
class Field {
public:
    Field() : p_(0) {}
    static Field rationals() { return Field(); }
    static Field gf(std::uint32_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t modulus() const { return p_; }

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

    std::string str() const;

private:
    std::uint32_t p_;
};

bool is_prime_u32(std::uint32_t n);

// Exact field element: a reduced rational or a residue mod p.  The field is
// carried by the value itself; mixing fields raises FieldMismatchError.
class Scalar {
public:
    Scalar() : r_(0), p_(0) {}  // rational zero

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    // Reduce an integer into the field (mod p for GF(p)).
    static Scalar from_int(long v, const Field& f);
    static Scalar from_fraction(long num, long den);  // rationals only
    static Scalar from_mpq(const mpq_class& q);
    // Parse "a", "-a", "a/b" (either field; values reduced into GF(p)).
    static Scalar parse(const std::string& text, const Field& f);

    Field field() const { return p_ ? Field::gf(p_) : Field::rationals(); }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // division by zero throws
    Scalar operator-() const;
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical text form: "a" or "a/b" for rationals, "r" for residues.
    std::string str() const;

    const mpq_class& rational() const;
    std::uint64_t residue() const { return r_; }

private:
    void check_same_field(const Scalar& o) const;

    mpq_class q_;        // used iff p_ == 0
    std::uint64_t r_;    // used iff p_ != 0
    std::uint32_t p_;    // 0 = rationals
};

}  // namespace nucal
