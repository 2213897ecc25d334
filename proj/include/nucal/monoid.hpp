#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nucal/scalar.hpp"

namespace nucal {

// Finite monoid as a Cayley table.  table[a*size+b] = index of a*b.
class FiniteMonoid {
public:
    FiniteMonoid(std::size_t size, std::vector<std::size_t> table, std::size_t unit,
                 std::vector<std::string> names = {});

    std::size_t size() const { return size_; }
    std::size_t unit() const { return unit_; }
    std::size_t op(std::size_t a, std::size_t b) const { return table_[a * size_ + b]; }
    const std::vector<std::size_t>& table() const { return table_; }
    const std::vector<std::string>& names() const { return names_; }

    // All unit laws and associativity triples; construction already enforces
    // closure and the unit laws, so this re-checks the full axiom set.
    bool is_monoid() const;

private:
    std::size_t size_;
    std::vector<std::size_t> table_;
    std::size_t unit_;
    std::vector<std::string> names_;
};

// Validates a raw table without constructing (used by enumeration sweeps).
bool is_monoid_table(std::size_t size, const std::vector<std::size_t>& table,
                     std::size_t unit);

// Arbitrary set map between monoids, not required to be multiplicative.
struct MonoidMap {
    FiniteMonoid source;
    FiniteMonoid target;
    std::vector<std::size_t> images;  // images[a] in [0, target.size())

    MonoidMap(FiniteMonoid src, FiniteMonoid tgt, std::vector<std::size_t> im);
    std::size_t apply(std::size_t a) const { return images[a]; }
    bool is_homomorphism() const;
};

MonoidMap compose(const MonoidMap& f, const MonoidMap& g);  // g after f

// All monoid tables on {0..size-1} (every choice of unit; no isomorphism
// dedup).  Sizes above 4 are rejected.
std::vector<FiniteMonoid> enumerate_monoids(std::size_t size);

FiniteMonoid cyclic_monoid(std::size_t n);
FiniteMonoid trivial_monoid();

}  // namespace nucal
