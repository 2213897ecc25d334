#include "nucal/monoid.hpp"

namespace nucal {

bool is_monoid_table(std::size_t size, const std::vector<std::size_t>& table,
                     std::size_t unit) {
    if (table.size() != size * size || unit >= size) return false;
    for (std::size_t x : table)
        if (x >= size) return false;
    for (std::size_t a = 0; a < size; ++a)
        if (table[unit * size + a] != a || table[a * size + unit] != a) return false;
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = 0; b < size; ++b)
            for (std::size_t c = 0; c < size; ++c)
                if (table[table[a * size + b] * size + c] !=
                    table[a * size + table[b * size + c]])
                    return false;
    return true;
}

FiniteMonoid::FiniteMonoid(std::size_t size, std::vector<std::size_t> table,
                           std::size_t unit, std::vector<std::string> names)
    : size_(size), table_(std::move(table)), unit_(unit), names_(std::move(names)) {
    if (size_ == 0) throw InputError("empty monoid");
    if (table_.size() != size_ * size_)
        throw InputError("monoid table has wrong size");
    for (std::size_t x : table_)
        if (x >= size_) throw InputError("monoid table entry out of range");
    if (unit_ >= size_) throw InputError("monoid unit index out of range");
    if (!is_monoid())
        throw InputError("table is not a monoid (unit law or associativity fails)");
}

bool FiniteMonoid::is_monoid() const {
    return is_monoid_table(size_, table_, unit_);
}

MonoidMap::MonoidMap(FiniteMonoid src, FiniteMonoid tgt, std::vector<std::size_t> im)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(im)) {
    if (images.size() != source.size())
        throw InputError("monoid map image list has wrong length");
    for (std::size_t x : images)
        if (x >= target.size()) throw InputError("monoid map image out of range");
}

bool MonoidMap::is_homomorphism() const {
    if (images[source.unit()] != target.unit()) return false;
    for (std::size_t a = 0; a < source.size(); ++a)
        for (std::size_t b = 0; b < source.size(); ++b)
            if (images[source.op(a, b)] != target.op(images[a], images[b]))
                return false;
    return true;
}

MonoidMap compose(const MonoidMap& f, const MonoidMap& g) {
    if (f.target.size() != g.source.size() ||
        f.target.table() != g.source.table() || f.target.unit() != g.source.unit())
        throw InputError("monoid maps are not composable");
    std::vector<std::size_t> im(f.source.size());
    for (std::size_t a = 0; a < f.source.size(); ++a) im[a] = g.apply(f.apply(a));
    return MonoidMap(f.source, g.target, std::move(im));
}

std::vector<FiniteMonoid> enumerate_monoids(std::size_t size) {
    if (size == 0 || size > 4)
        throw InputError("monoid enumeration supported for sizes 1..4 only");
    std::vector<FiniteMonoid> out;
    std::vector<std::size_t> table(size * size, 0);
    // free cells: all (a,b) with a != unit and b != unit
    std::vector<std::size_t> free_cells;
    for (std::size_t unit = 0; unit < size; ++unit) {
        for (std::size_t a = 0; a < size; ++a) {
            table[unit * size + a] = a;
            table[a * size + unit] = a;
        }
        free_cells.clear();
        for (std::size_t a = 0; a < size; ++a)
            for (std::size_t b = 0; b < size; ++b)
                if (a != unit && b != unit) free_cells.push_back(a * size + b);
        std::size_t total = 1;
        for (std::size_t i = 0; i < free_cells.size(); ++i) total *= size;
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t c = code;
            for (std::size_t cell : free_cells) {
                table[cell] = c % size;
                c /= size;
            }
            if (is_monoid_table(size, table, unit))
                out.emplace_back(size, table, unit);
        }
    }
    return out;
}

FiniteMonoid cyclic_monoid(std::size_t n) {
    std::vector<std::size_t> t(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) t[a * n + b] = (a + b) % n;
    return FiniteMonoid(n, std::move(t), 0);
}

FiniteMonoid trivial_monoid() { return FiniteMonoid(1, {0}, 0); }

}  // namespace nucal
