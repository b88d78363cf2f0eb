// Acceptance suite: one PASS/FAIL line per criterion, with wall time against
// its limit. Exit status is the number of failing criteria (capped at 1 for
// ctest).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "acs/corpus.hpp"
#include "acs/invariants.hpp"
#include "acs/spencer.hpp"
#include "oracles.hpp"

namespace {

using namespace acs;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> run;
};

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& s : parts) out += (out.empty() ? "" : "; ") + s;
    return out;
}

// Base seeds; case c of a criterion uses base + c.
constexpr std::uint64_t kConjugateSeed = 1000;
constexpr std::uint64_t kDecompSeed = 2000;
constexpr std::uint64_t kJetSeed = 3000;
constexpr std::uint64_t kChiSeed = 4000;
constexpr std::uint64_t kTripleSeed = 5000;
constexpr std::uint64_t kPullbackSeed = 6000;
constexpr std::uint64_t kGaugeSeed = 7000;
constexpr std::uint64_t kNormSeed = 8000;
constexpr std::uint64_t kPlaneSeed = 9000;

// Frozen after the first run: Nijenhuis coordinate formula / bracket definition.
const Rational kNijenhuisScale(2);

Outcome isotropy_dimensions() {
    Outcome o;
    double worst = 0;
    std::size_t cases = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
        SeededRng rng(kConjugateSeed + n);
        for (int c = 0; c <= 10; ++c) {
            const RatMatrix theta0 = c == 0 ? standard_structure(n) : random_conjugate_structure(n, rng);
            const auto t0 = std::chrono::steady_clock::now();
            const std::size_t dim = isotropy_algebra(theta0).dim();
            const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            worst = std::max(worst, dt);
            ++cases;
            if (dim != 2 * n * n) {
                o.pass = false;
                o.detail += "n=" + std::to_string(n) + " case " + std::to_string(c) + " dim " + std::to_string(dim) + "; ";
            }
        }
    }
    if (worst >= 1.0) o.pass = false;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu cases, slowest %.3f s (limit 1 s each)", cases, worst);
    o.detail += buf;
    return o;
}

Outcome prolongation_plane() {
    const std::size_t dim = prolongation(isotropy_algebra(standard_structure(1))).dim();
    return {dim == 2, "dim g1 at n=1: " + std::to_string(dim)};
}

Outcome spencer_cohomology() {
    Outcome o;
    std::vector<std::string> parts;
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::size_t h = h02_dimension(standard_structure(n));
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = (n == 1 ? h == 0 : h > 0) && (n != 3 || dt < 10.0);
        o.pass = o.pass && ok;
        char buf[64];
        std::snprintf(buf, sizeof buf, "n=%zu H02=%zu (%.2f s)", n, h, dt);
        parts.push_back(buf);
    }
    o.detail = join(parts);
    return o;
}

Outcome decomposition() {
    Outcome o;
    std::size_t endo_fail = 0, overlap_fail = 0, sum_fail = 0, onto_fail = 0, total = 0;
    std::vector<std::string> overlaps;
    for (std::size_t n = 1; n <= 3; ++n) {
        SeededRng rng(kDecompSeed + n);
        const std::size_t d = 2 * n;
        const std::size_t forms = two_form_coord_count(d);
        const bool onto = rank(spencer_delta_matrix(d)) == forms;
        std::size_t overlap_dim = 0;
        for (int c = 0; c < 20; ++c, ++total) {
            const RatMatrix theta0 = random_conjugate_structure(n, rng);
            const SubspaceBasis g = isotropy_algebra(theta0);
            const SubspaceBasis im = hat_image(theta0);
            if (subspace_intersect(g, im).dim() != 0 || g.dim() != 2 * n * n || im.dim() != 2 * n * n ||
                subspace_sum(g, im).dim() != 4 * n * n)
                ++endo_fail;
            const Splitting s(theta0);
            overlap_dim = s.delta_intersection().dim();
            if (!s.is_direct()) ++overlap_fail;
            if (s.sum_dim() != 4 * n * n * n - 2 * n * n) ++sum_fail;
            if (!onto) ++onto_fail;
        }
        overlaps.push_back("n=" + std::to_string(n) + ": " + std::to_string(overlap_dim));
    }
    o.pass = endo_fail == 0 && overlap_fail == 0 && sum_fail == 0 && onto_fail == 0;
    o.detail = std::to_string(total) + " structures; endo split failures " + std::to_string(endo_fail) +
               ", delta-image overlap nonzero " + std::to_string(overlap_fail) + " (overlap dims " +
               join(overlaps) + "), sum-dimension failures " + std::to_string(sum_fail) +
               ", surjectivity failures " + std::to_string(onto_fail);
    return o;
}

Outcome omega_consistency() {
    std::size_t bad = 0, outside = 0, total = 0;
    for (std::size_t n = 1; n <= 2; ++n) {
        SeededRng rng(kJetSeed + n);
        for (int c = 0; c < 50; ++c, ++total) {
            const Jet1 jet = random_j1pi_jet(n, rng);
            const Hom1 h = solve_horizontal(jet).particular;
            const TwoForm piped = omega_pipeline(jet, h);
            const TwoForm closed = omega_point(jet);
            if (!(piped == closed)) ++bad;
            if (!delta_image(hat_image(jet.u)).contains(closed.antisymmetric_coords())) ++outside;
        }
    }
    return {bad == 0 && outside == 0, std::to_string(total) + " jets; pipeline != closed form: " + std::to_string(bad) +
                                          ", outside delta(Im hat x T*): " + std::to_string(outside)};
}

Hom1 random_horizontal(const Jet1& jet, SeededRng& rng) {
    const HorizontalSolutions sol = solve_horizontal(jet);
    RatVector flat = sol.particular.flat();
    for (std::size_t b = 0; b < sol.homogeneous.dim(); ++b) {
        const Rational c(rng.uniform(-3, 3));
        for (std::size_t t = 0; t < flat.size(); ++t) flat[t] += c * sol.homogeneous[b][t];
    }
    return Hom1::from_flat(jet.dim(), flat);
}

Outcome chi_well_defined() {
    SeededRng rng(kChiSeed);
    std::size_t bad = 0, distinct = 0;
    for (int c = 0; c < 20; ++c) {
        const std::size_t n = 1 + static_cast<std::size_t>(c % 2);
        const Jet1 jet = random_j1pi_jet(n, rng);
        const Hom1 h1 = random_horizontal(jet, rng);
        const Hom1 h2 = random_horizontal(jet, rng);
        if (!(h1 == h2)) ++distinct;
        const SubspaceBasis boundaries = delta_image(isotropy_algebra(jet.u));
        const TwoForm diff = omega_h(jet, h1) - omega_h(jet, h2);
        if (!boundaries.contains(diff.antisymmetric_coords()) || !(chi(jet, h1) == chi(jet, h2))) ++bad;
    }
    return {bad == 0, "20 jets (" + std::to_string(distinct) + " with distinct solutions); coset mismatches: " +
                          std::to_string(bad)};
}

Outcome naturality() {
    std::size_t a_bad = 0, bracket_bad = 0, chi_bad = 0, omega_bad = 0;
    for (int c = 0; c < 20; ++c) {
        const std::uint64_t seed = kTripleSeed + static_cast<std::uint64_t>(c);
        const Acs s = generate_gauge(2, 1, seed);
        SeededRng rng(seed);
        const PolyDiffeo f = random_shear(2, 2, rng);
        const RatVector p = random_point(4, rng);

        const Jet1 jet = jet1_at(s.field(), p);
        const Diffeo2Jet j2f = diffeo_2jet(f, p);
        const Jet1 moved = lift1(j2f, jet);

        const IsotropySpace a = isotropy_space(jet);
        const IsotropySpace a_moved = isotropy_space(moved);
        bool a_ok = a.dim() == a_moved.dim();
        for (std::size_t b = 0; b < a.solutions.dim() && a_ok; ++b) {
            const RatVector& v = a.solutions[b];
            VFJet1 x{p, RatVector(v.begin(), v.begin() + 4), unflatten_endo(4, RatVector(v.begin() + 4, v.end()))};
            a_ok = a_moved.contains(pushforward_vfjet(j2f, x));
        }
        if (!a_ok) ++a_bad;

        const Hom1 h = solve_horizontal(jet).particular;
        const Hom1 h_moved = transport_horizontal(j2f, jet, h);
        if (!is_horizontal(moved, h_moved) ||
            !(omega_h(moved, h_moved) == transport_two_form(j2f.jacobian, omega_h(jet, h))))
            ++bracket_bad;

        const ChiClass transported(transport_two_form(j2f.jacobian, chi(jet).representative()),
                                   delta_image(isotropy_algebra(moved.u)));
        if (!(chi(moved) == transported)) ++chi_bad;

        if (!naturality_check(s, f, p)) ++omega_bad;
    }
    return {a_bad + bracket_bad + chi_bad + omega_bad == 0,
            "20 triples; A transport failures " + std::to_string(a_bad) + ", bracket identity failures " +
                std::to_string(bracket_bad) + ", chi transport failures " + std::to_string(chi_bad) +
                ", omega transport failures " + std::to_string(omega_bad)};
}

Outcome integrable_side() {
    std::size_t omega_nonzero = 0, nij_nonzero = 0;
    for (int c = 0; c < 10; ++c) {
        const PullbackStructure pb = generate_pullback(2, 3, kPullbackSeed + static_cast<std::uint64_t>(c));
        if (!omega_symbolic(pb.structure).is_zero()) ++omega_nonzero;
        if (!nijenhuis_symbolic(pb.structure).is_zero()) ++nij_nonzero;
    }
    return {omega_nonzero == 0 && nij_nonzero == 0, "10 pullbacks of J0; omega not identically zero in " +
                                                        std::to_string(omega_nonzero) + ", N not identically zero in " +
                                                        std::to_string(nij_nonzero)};
}

Outcome non_integrable_side() {
    std::size_t flag_bad = 0, no_witness = 0, violations = 0;
    for (int c = 0; c < 10; ++c) {
        const std::uint64_t seed = kGaugeSeed + static_cast<std::uint64_t>(c);
        const Acs s = generate_gauge(2, 2, seed);
        const PolyTwoForm omega = omega_symbolic(s);
        const PolyTwoForm nij = nijenhuis_symbolic(s);
        if (omega.is_zero() || nij.is_zero()) ++flag_bad;
        SeededRng rng(seed);
        bool witness = false;
        for (int k = 0; k < 32; ++k) {
            const RatVector p = random_point(4, rng);
            const bool w0 = omega.at(p).is_zero();
            const bool n0 = nij.at(p).is_zero();
            if (!w0 && !n0) witness = true;
            if (w0 && !n0) ++violations;
        }
        if (!witness) ++no_witness;
    }
    return {flag_bad == 0 && no_witness == 0 && violations == 0,
            "10 gauge structures; flag failures " + std::to_string(flag_bad) + ", without witness " +
                std::to_string(no_witness) + ", points with omega=0 and N!=0: " + std::to_string(violations)};
}

Outcome nijenhuis_normalization() {
    std::optional<Rational> scale;
    std::size_t mismatched = 0, usable = 0;
    for (int c = 0; c < 20; ++c) {
        const std::size_t n = 2 + static_cast<std::size_t>(c % 2);
        const Acs s = generate_gauge(n, 2, kNormSeed + static_cast<std::uint64_t>(c));
        const PolyTwoForm coord = nijenhuis_symbolic(s);
        const PolyTwoForm ref = oracle::bracket_nijenhuis(s);
        const std::size_t d = s.dim();
        for (std::size_t i = 0; i < d && !scale; ++i)
            for (std::size_t j = 0; j < d && !scale; ++j)
                for (std::size_t k = j + 1; k < d && !scale; ++k)
                    if (!ref(i, j, k).is_zero()) {
                        const auto& lead = *ref(i, j, k).terms().begin();
                        auto it = coord(i, j, k).terms().find(lead.first);
                        scale = it == coord(i, j, k).terms().end() ? Rational(0) : it->second / lead.second;
                    }
        if (!ref.is_zero()) ++usable;
        const Rational c_here = scale.value_or(Rational(0));
        bool same = true;
        for (std::size_t i = 0; i < d && same; ++i)
            for (std::size_t j = 0; j < d && same; ++j)
                for (std::size_t k = 0; k < d && same; ++k) same = coord(i, j, k) == ref(i, j, k) * c_here;
        if (!same) ++mismatched;
    }
    const bool frozen = scale && *scale == kNijenhuisScale;
    return {mismatched == 0 && usable > 0 && frozen,
            "20 structures (" + std::to_string(usable) + " non-integrable); c = " +
                (scale ? scale->str() : std::string("undetermined")) + " (frozen " + kNijenhuisScale.str() +
                "), mismatches " + std::to_string(mismatched)};
}

Outcome plane_degeneracy() {
    std::size_t nonzero = 0;
    std::string first;
    for (int c = 0; c < 20; ++c) {
        const std::uint64_t seed = kPlaneSeed + static_cast<std::uint64_t>(c);
        const bool gauge = c % 2 == 0;
        const Acs s = gauge ? generate_gauge(1, 2, seed) : generate_pullback(1, 3, seed).structure;
        if (!omega_symbolic(s).is_zero()) {
            ++nonzero;
            if (first.empty()) first = std::string(gauge ? "gauge" : "pullback") + " seed " + std::to_string(seed);
        }
    }
    return {nonzero == 0, "20 structures on R^2; omega not identically zero in " + std::to_string(nonzero) +
                              (first.empty() ? "" : " (first: " + first + ")")};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "isotropy dimension 2n^2", 0, isotropy_dimensions},
        {2, "prolongation dimension at n=1", 1, prolongation_plane},
        {3, "H02 vanishing pattern", 0, spencer_cohomology},
        {4, "decomposition of endomorphisms and 2-forms", 0, decomposition},
        {5, "omega pipeline vs closed form", 30, omega_consistency},
        {6, "chi independent of horizontal choice", 0, chi_well_defined},
        {7, "naturality under shears", 30, naturality},
        {8, "integrable side: omega and N vanish", 60, integrable_side},
        {9, "non-integrable side: omega and N nonzero", 0, non_integrable_side},
        {10, "Nijenhuis normalization constant", 0, nijenhuis_normalization},
        {11, "omega vanishes identically on R^2", 0, plane_degeneracy},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_seconds > 0 && dt >= c.limit_seconds) o.pass = false;
        if (!o.pass) ++failed;
        char timing[64];
        if (c.limit_seconds > 0)
            std::snprintf(timing, sizeof timing, "%.2f s / limit %.0f s", dt, c.limit_seconds);
        else
            std::snprintf(timing, sizeof timing, "%.2f s", dt);
        std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.title << " (" << timing << "): "
                  << o.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
