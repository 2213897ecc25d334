#include "nucal/group.hpp"

#include <algorithm>
#include <numeric>

namespace nucal {

FiniteGroup::FiniteGroup(std::size_t size, std::vector<std::size_t> table,
                         std::vector<std::string> names)
    : size_(size), table_(std::move(table)), names_(std::move(names)) {
    if (size_ == 0) throw InputError("empty group");
    if (table_.size() != size_ * size_) throw InputError("group table has wrong size");
    for (std::size_t x : table_)
        if (x >= size_) throw InputError("group table entry out of range");
    // locate the unit
    bool found = false;
    for (std::size_t e = 0; e < size_ && !found; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < size_; ++a)
            if (op(e, a) != a || op(a, e) != a) { ok = false; break; }
        if (ok) { unit_ = e; found = true; }
    }
    if (!found) throw InputError("group table has no unit");
    if (!is_monoid_table(size_, table_, unit_))
        throw InputError("group table is not associative");
    inv_.assign(size_, size_);
    for (std::size_t a = 0; a < size_; ++a) {
        for (std::size_t b = 0; b < size_; ++b)
            if (op(a, b) == unit_ && op(b, a) == unit_) { inv_[a] = b; break; }
        if (inv_[a] == size_)
            throw InputError("group element " + std::to_string(a) + " has no inverse");
    }
}

FiniteMonoid FiniteGroup::as_monoid() const {
    return FiniteMonoid(size_, table_, unit_, names_);
}

FiniteGroup trivial_group() { return FiniteGroup(1, {0}); }

FiniteGroup cyclic_group(std::size_t n) {
    std::vector<std::size_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < n; ++a) names[a] = "g" + std::to_string(a);
    return FiniteGroup(n, std::move(t), std::move(names));
}

FiniteGroup symmetric_group(std::size_t n) {
    if (n == 0 || n > 4) throw InputError("symmetric_group supports n in 1..4");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    std::size_t m = perms.size();
    auto index_of = [&](const std::vector<std::size_t>& q) {
        return static_cast<std::size_t>(
            std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::size_t> t(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            std::vector<std::size_t> comp(n);
            for (std::size_t x = 0; x < n; ++x) comp[x] = perms[a][perms[b][x]];
            t[a * m + b] = index_of(comp);
        }
    return FiniteGroup(m, std::move(t));
}

}  // namespace nucal
