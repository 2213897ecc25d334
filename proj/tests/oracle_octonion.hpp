#pragma once

// Test-only oracle: Cayley-Dickson multiplication by recursive pair
// arithmetic on coefficient vectors.  Deliberately independent of the
// library's structure-constant tables.

#include "nucal/matrix.hpp"

namespace oracle {

using nucal::Scalar;
using nucal::Vec;

inline Vec cd_conj(const Vec& x) {
    std::size_t n = x.size();
    if (n == 1) return x;
    Vec lo(x.begin(), x.begin() + n / 2);
    Vec hi(x.begin() + n / 2, x.end());
    Vec clo = cd_conj(lo);
    Vec out;
    out.reserve(n);
    for (auto& s : clo) out.push_back(s);
    for (auto& s : hi) out.push_back(-s);
    return out;
}

// (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c))
inline Vec cd_mul(const Vec& x, const Vec& y) {
    std::size_t n = x.size();
    if (n == 1) return {x[0] * y[0]};
    std::size_t h = n / 2;
    Vec a(x.begin(), x.begin() + h), b(x.begin() + h, x.end());
    Vec c(y.begin(), y.begin() + h), d(y.begin() + h, y.end());
    Vec lo = nucal::vec_sub(cd_mul(a, c), cd_mul(cd_conj(d), b));
    Vec hi = nucal::vec_add(cd_mul(d, a), cd_mul(b, cd_conj(c)));
    Vec out;
    out.reserve(n);
    for (auto& s : lo) out.push_back(s);
    for (auto& s : hi) out.push_back(s);
    return out;
}

inline Vec cd_associator(const Vec& x, const Vec& y, const Vec& z) {
    return nucal::vec_sub(cd_mul(x, cd_mul(y, z)), cd_mul(cd_mul(x, y), z));
}

}  // namespace oracle
