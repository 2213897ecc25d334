#pragma once

#include "nucal/monoid.hpp"

namespace nucal {

// Finite group as a Cayley table; inverses computed and axioms validated at
// construction.
class FiniteGroup {
public:
    FiniteGroup(std::size_t size, std::vector<std::size_t> table,
                std::vector<std::string> names = {});

    std::size_t size() const { return size_; }
    std::size_t unit() const { return unit_; }
    std::size_t op(std::size_t a, std::size_t b) const { return table_[a * size_ + b]; }
    std::size_t inverse(std::size_t a) const { return inv_[a]; }
    const std::vector<std::size_t>& table() const { return table_; }
    const std::vector<std::string>& names() const { return names_; }

    FiniteMonoid as_monoid() const;

private:
    std::size_t size_;
    std::vector<std::size_t> table_;
    std::size_t unit_;
    std::vector<std::size_t> inv_;
    std::vector<std::string> names_;
};

FiniteGroup trivial_group();
FiniteGroup cyclic_group(std::size_t n);
// Symmetric group on n letters, n <= 4; elements are the permutations in
// lexicographic order, composition (st)(x) = s(t(x)).
FiniteGroup symmetric_group(std::size_t n);

}  // namespace nucal
