#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "acs/diffeo.hpp"
#include "acs/jet.hpp"

namespace acs {

/// Deterministic generator used for every corpus. Draws come straight from
/// std::mt19937_64 (bit-identical on every conforming platform) and integers
/// in [lo, hi] are lo + draw % (hi - lo + 1); no std distributions are used.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    bool coin() { return (next() & 1u) != 0; }
    /// Nonzero p/q with |p| <= 2 and q in {1, 2}.
    Rational small_coefficient();

private:
    std::mt19937_64 engine_;
};

/// Random polynomial in the variables `vars` (indices into x1..x{nvars})
/// with one or two monomials of total degree in [min_degree, max_degree].
Polynomial random_polynomial(std::size_t nvars, const std::vector<std::size_t>& vars, std::size_t min_degree,
                             std::size_t max_degree, SeededRng& rng);

/// Point with coordinates in {-3, ..., 3} / {1, 2}.
RatVector random_point(std::size_t dim, SeededRng& rng);
/// Random invertible integer matrix with entries in [-2, 2].
RatMatrix random_invertible(std::size_t dim, SeededRng& rng);
/// A J0 A^{-1} for a random invertible A.
RatMatrix random_conjugate_structure(std::size_t n, SeededRng& rng);
/// Jet in J1(pi) at a random point: u a random conjugate of J0, each du_k the
/// anticommuting part of a random matrix.
Jet1 random_j1pi_jet(std::size_t n, SeededRng& rng);

TensorField constant_structure(std::size_t n);

/// A J0 A^{-1} with A = I + N, N strictly upper triangular with random
/// polynomial entries of degree <= degree; A^{-1} = sum (-N)^k.
Acs generate_gauge(std::size_t n, std::size_t degree, std::uint64_t seed);

/// Block shear: one half of the coordinates is shifted by random polynomials
/// (degree 2..degree, or linear when degree < 2) of the other half. The exact
/// inverse subtracts the same shift.
PolyDiffeo random_shear(std::size_t n, std::size_t degree, SeededRng& rng);

struct PullbackStructure {
    Acs structure;
    PolyDiffeo shear;
};
/// Pullback of the constant J0 by a seeded shear; integrable by construction.
PullbackStructure generate_pullback(std::size_t n, std::size_t degree, std::uint64_t seed);

}  // namespace acs
