#include "acs/corpus.hpp"

#include <algorithm>

#include "acs/linalg.hpp"
#include "acs/spencer.hpp"

namespace acs {

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw std::invalid_argument("SeededRng::uniform: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
}

Rational SeededRng::small_coefficient() {
    const std::int64_t mag = uniform(1, 2);
    const std::int64_t num = coin() ? mag : -mag;
    const std::int64_t den = uniform(1, 2);
    return Rational(num, den);
}

Polynomial random_polynomial(std::size_t nvars, const std::vector<std::size_t>& vars, std::size_t min_degree,
                             std::size_t max_degree, SeededRng& rng) {
    Polynomial p(nvars);
    const auto terms = rng.uniform(1, 2);
    for (std::int64_t t = 0; t < terms; ++t) {
        const auto deg = static_cast<std::size_t>(
            rng.uniform(static_cast<std::int64_t>(min_degree), static_cast<std::int64_t>(max_degree)));
        Exponent e(nvars, 0);
        for (std::size_t unit = 0; unit < deg; ++unit)
            ++e[vars[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(vars.size()) - 1))]];
        p += Polynomial::monomial(e, rng.small_coefficient());
    }
    return p;
}

RatVector random_point(std::size_t dim, SeededRng& rng) {
    RatVector p;
    for (std::size_t i = 0; i < dim; ++i) {
        const std::int64_t num = rng.uniform(-3, 3);
        const std::int64_t den = rng.uniform(1, 2);
        p.emplace_back(num, den);
    }
    return p;
}

RatMatrix random_invertible(std::size_t dim, SeededRng& rng) {
    for (;;) {
        RatMatrix m = zero_matrix(dim, dim);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) m(i, j) = Rational(rng.uniform(-2, 2));
        if (rank(m) == dim) return m;
    }
}

RatMatrix random_conjugate_structure(std::size_t n, SeededRng& rng) {
    const RatMatrix a = random_invertible(2 * n, rng);
    return a * standard_structure(n) * inverse(a);
}

Jet1 random_j1pi_jet(std::size_t n, SeededRng& rng) {
    const std::size_t d = 2 * n;
    Jet1 jet{random_point(d, rng), random_conjugate_structure(n, rng), {}};
    for (std::size_t k = 0; k < d; ++k) {
        RatMatrix x = zero_matrix(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) x(i, j) = Rational(rng.uniform(-3, 3));
        jet.du.push_back(split_endo(jet.u, x).anticommuting);
    }
    return jet;
}

TensorField constant_structure(std::size_t n) { return TensorField::constant(standard_structure(n)); }

Acs generate_gauge(std::size_t n, std::size_t degree, std::uint64_t seed) {
    SeededRng rng(seed);
    const std::size_t d = Chart(n).dim();
    std::vector<std::size_t> all_vars(d);
    for (std::size_t v = 0; v < d; ++v) all_vars[v] = v;

    PolyMatrix nil(d, d, Polynomial(d));
    bool any = false;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (rng.coin()) {
                nil(i, j) = random_polynomial(d, all_vars, degree == 0 ? 0 : 1, degree, rng);
                any = true;
            }
    if (!any) nil(0, d - 1) = random_polynomial(d, all_vars, degree == 0 ? 0 : 1, degree, rng);

    const PolyMatrix id = poly_identity(d, d);
    PolyMatrix a = id + nil;
    PolyMatrix a_inv = id;
    PolyMatrix power = id;
    for (std::size_t k = 1; k < d; ++k) {
        power = power * nil;
        PolyMatrix term = power;
        if (k % 2 == 1) term = -term;
        a_inv += term;
    }
    PolyMatrix s = a * constant_poly_matrix(standard_structure(n), d) * a_inv;
    return Acs(TensorField(Chart(n), std::move(s)));
}

PolyDiffeo random_shear(std::size_t n, std::size_t degree, SeededRng& rng) {
    const std::size_t d = Chart(n).dim();
    const bool shift_first = rng.coin();
    std::vector<std::size_t> sources;
    for (std::size_t v = 0; v < n; ++v) sources.push_back(shift_first ? n + v : v);

    std::vector<Polynomial> f, g;
    for (std::size_t i = 0; i < d; ++i) {
        const bool shifted = shift_first ? i < n : i >= n;
        Polynomial xi = Polynomial::variable(d, i);
        if (!shifted) {
            f.push_back(xi);
            g.push_back(xi);
            continue;
        }
        const std::size_t lo = degree < 2 ? degree : 2;
        Polynomial shift = random_polynomial(d, sources, lo, std::max(lo, degree), rng);
        f.push_back(xi + shift);
        g.push_back(xi - shift);
    }
    return PolyDiffeo(n, std::move(f), std::move(g));
}

PullbackStructure generate_pullback(std::size_t n, std::size_t degree, std::uint64_t seed) {
    SeededRng rng(seed);
    PolyDiffeo shear = random_shear(n, degree, rng);
    Acs s = pullback_acs(shear, Acs(constant_structure(n)));
    return PullbackStructure{std::move(s), std::move(shear)};
}

}  // namespace acs
