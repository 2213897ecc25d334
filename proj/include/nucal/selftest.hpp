#pragma once

#include <random>

#include "nucal/io.hpp"

namespace nucal {

// Deterministic generators for randomized sweeps.  All draws go through the
// caller's engine so a seed pins the whole run.
namespace gen {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t bound);  // uniform in [0, bound)
Scalar scalar(Rng& rng, const Field& f, bool nonzero = false);
Vec vector(Rng& rng, std::size_t n, const Field& f);
Matrix matrix(Rng& rng, std::size_t rows, std::size_t cols, const Field& f);
Matrix invertible_matrix(Rng& rng, std::size_t n, const Field& f);
Vec invertible_function_element(Rng& rng, std::size_t n, const Field& f);

Algebra random_algebra(Rng& rng, const Field& f, std::size_t dim);
Algebra random_commutative_algebra(Rng& rng, const Field& f, std::size_t dim);
// A random-looking associative algebra: a stock associative algebra in a
// random basis.
Algebra random_associative_algebra(Rng& rng, const Field& f, std::size_t max_dim);

// Invertible element of the commutant of rho(k(G)) on the module.
Matrix commutant_invertible(Rng& rng, const RModule& mod);
// Valid nucleus pair over k(G): commutant-valued invertible blocks.
NucleusPair commutant_pair(Rng& rng, const RModule& mod);
// Invertible twist c in k(G) (x) k(G) with trivial End leg.
TensorElement random_twist(Rng& rng, AlgebraPtr function_alg, const Field& f);
// Random k(G)-module of dimension <= max_dim (graded coordinates).
RModule random_graded_module(Rng& rng, AlgebraPtr function_alg, std::size_t max_dim);

}  // namespace gen

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
    double millis;
};

struct SelftestOptions {
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

// The oracle suites: theorem-backed identities on deterministic random
// inputs across every module.  All exact, no tolerances.
std::vector<CheckResult> run_selftest(const SelftestOptions& opts);

}  // namespace nucal
