#include "acs/invariants.hpp"

#include <future>
#include <stdexcept>

namespace acs {

namespace {

void require_j1pi(const Jet1& theta1, const char* where) {
    if (!jet1_in_j1pi(theta1)) throw NotAlmostComplex(std::string(where) + ": jet does not lie in J1(pi)");
}

void require_horizontal(const Jet1& theta1, const Hom1& h, const char* where) {
    if (h.dim() != theta1.dim() || !is_horizontal(theta1, h))
        throw std::invalid_argument(std::string(where) + ": h is not a horizontal solution for this jet");
}

// Coefficients of X' -> X' u - u X' on the flattened X' block, written into
// the rows of m starting at column offset.
void write_commutator_block(RatMatrix& m, const RatMatrix& u, std::size_t offset) {
    const std::size_t d = u.rows();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const std::size_t col = offset + a * d + b;
            for (std::size_t j = 0; j < d; ++j) m(a * d + j, col) += u(b, j);
            for (std::size_t i = 0; i < d; ++i) m(i * d + b, col) -= u(i, a);
        }
}

}  // namespace

RatVector isotropy_coords(const VFJet1& x) {
    RatVector v = x.value;
    const RatVector& flat = x.partials.data();
    v.insert(v.end(), flat.begin(), flat.end());
    return v;
}

RatMatrix isotropy_residual(const Jet1& theta1, const VFJet1& x) {
    const std::size_t d = theta1.dim();
    if (x.value.size() != d || x.partials.rows() != d) throw std::invalid_argument("isotropy_residual: shape mismatch");
    RatMatrix res = x.partials * theta1.u - theta1.u * x.partials;
    for (std::size_t r = 0; r < d; ++r)
        if (!x.value[r].is_zero()) res -= scaled(theta1.du[r], x.value[r]);
    return res;
}

bool IsotropySpace::contains(const VFJet1& x) const { return solutions.contains(isotropy_coords(x)); }

SubspaceBasis IsotropySpace::base_projection() const {
    const std::size_t d = jet.dim();
    std::vector<RatVector> heads;
    for (const auto& v : solutions.vectors()) heads.emplace_back(v.begin(), v.begin() + static_cast<long>(d));
    return SubspaceBasis::span(d, heads);
}

SubspaceBasis IsotropySpace::vertical_slice() const {
    const std::size_t d = jet.dim();
    SubspaceBasis zero_head(d + d * d);
    {
        std::vector<RatVector> tail;
        for (std::size_t a = 0; a < d * d; ++a) {
            RatVector v(d + d * d);
            v[d + a] = Rational(1);
            tail.push_back(std::move(v));
        }
        zero_head = SubspaceBasis::span(d + d * d, tail);
    }
    SubspaceBasis slice = subspace_intersect(solutions, zero_head);
    std::vector<RatVector> endos;
    for (const auto& v : slice.vectors()) endos.emplace_back(v.begin() + static_cast<long>(d), v.end());
    return SubspaceBasis::span(d * d, endos);
}

IsotropySpace isotropy_space(const Jet1& theta1) {
    require_j1pi(theta1, "isotropy_space");
    const std::size_t d = theta1.dim();
    RatMatrix m = zero_matrix(d * d, d + d * d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i * d + j, r) = -theta1.du[r](i, j);
    write_commutator_block(m, theta1.u, d);
    return IsotropySpace{theta1, kernel_basis(m), horizontal_subspace(theta1)};
}

bool is_horizontal(const Jet1& theta1, const Hom1& h) {
    for (std::size_t k = 0; k < theta1.dim(); ++k) {
        const Endo hk = h.slot(k);
        if (hk * theta1.u - theta1.u * hk != theta1.du[k]) return false;
    }
    return true;
}

Hom1 horizontal_subspace(const Jet1& theta1) {
    require_j1pi(theta1, "horizontal_subspace");
    std::vector<Endo> slots;
    for (const auto& dk : theta1.du) slots.push_back(scaled(dk * theta1.u, Rational(-1, 2)));
    return Hom1::from_slots(slots);
}

HorizontalSolutions solve_horizontal(const Jet1& theta1) {
    const std::size_t d = theta1.dim();
    const std::size_t unknowns = d * d * d;
    // equation (k, i, j): sum_r h^i_{r|k} u^r_j - u^i_r h^r_{j|k} = u^i_{j,k}
    RatMatrix m = zero_matrix(unknowns, unknowns);
    RatVector rhs(unknowns);
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const std::size_t row = (k * d + i) * d + j;
                for (std::size_t r = 0; r < d; ++r) {
                    m(row, (i * d + r) * d + k) += theta1.u(r, j);
                    m(row, (r * d + j) * d + k) -= theta1.u(i, r);
                }
                rhs[row] = theta1.du[k](i, j);
            }
    auto sol = solve_linear(m, rhs);
    if (!sol) throw NotAlmostComplex("solve_horizontal: inconsistent system, jet is not in J1(pi)");
    return HorizontalSolutions{Hom1::from_flat(d, sol->particular), sol->kernel};
}

Hom1 horizontal_difference(const Hom1& h1, const Hom1& h2, const Endo& theta0) {
    Hom1 diff = h1 - h2;
    for (std::size_t k = 0; k < diff.dim(); ++k) {
        const Endo s = diff.slot(k);
        if (s * theta0 != theta0 * s)
            throw std::invalid_argument("horizontal_difference: difference leaves the isotropy algebra");
    }
    return diff;
}

VFJet1 horizontal_lift(const Jet1& theta1, const Hom1& h, const RatVector& x) {
    const std::size_t d = theta1.dim();
    if (x.size() != d) throw std::invalid_argument("horizontal_lift: vector length mismatch");
    RatMatrix partials = zero_matrix(d, d);
    for (std::size_t k = 0; k < d; ++k)
        if (!x[k].is_zero()) partials += scaled(h.slot(k), x[k]);
    return VFJet1{theta1.point, x, std::move(partials)};
}

RatVector bracket_1jets(const VFJet1& a, const VFJet1& b) {
    if (a.point != b.point) throw std::invalid_argument("bracket_1jets: base points differ");
    // [X, Y]^i = X^j dY^i/dx^j - Y^j dX^i/dx^j
    RatVector out = b.partials * a.value;
    const RatVector back = a.partials * b.value;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= back[i];
    return out;
}

TwoForm omega_h(const Jet1& theta1, const Hom1& h) {
    require_horizontal(theta1, h, "omega_h");
    return spencer_delta(h);
}

ChiClass::ChiClass(TwoForm representative, SubspaceBasis boundaries)
    : representative_(std::move(representative)), boundaries_(std::move(boundaries)) {}

bool ChiClass::contains(const TwoForm& w) const {
    return boundaries_.contains((w - representative_).antisymmetric_coords());
}

ChiClass chi(const Jet1& theta1, const Hom1& h) {
    require_j1pi(theta1, "chi");
    return ChiClass(omega_h(theta1, h), delta_image(isotropy_algebra(theta1.u)));
}

ChiClass chi(const Jet1& theta1) { return chi(theta1, horizontal_subspace(theta1)); }

TwoForm omega_point(const Jet1& theta1) {
    require_j1pi(theta1, "omega_point");
    const std::size_t d = theta1.dim();
    std::vector<RatMatrix> prod;
    for (const auto& dk : theta1.du) prod.push_back(dk * theta1.u);
    const Rational half(1, 2);
    TwoForm w(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) w.set(i, j, k, half * (prod[j](i, k) - prod[k](i, j)));
    return w;
}

TwoForm omega_pipeline(const Jet1& theta1, const Hom1& h) {
    require_j1pi(theta1, "omega_pipeline");
    require_horizontal(theta1, h, "omega_pipeline");
    std::vector<Endo> projected;
    for (std::size_t k = 0; k < h.dim(); ++k) projected.push_back(split_endo(theta1.u, h.slot(k)).anticommuting);
    return spencer_delta(Hom1::from_slots(projected));
}

PolyTwoForm::PolyTwoForm(std::size_t dim) : dim_(dim), c_(dim * dim * dim, Polynomial(dim)) {}

bool PolyTwoForm::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

TwoForm PolyTwoForm::at(std::span<const Rational> p) const {
    TwoForm w(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) w.set(i, j, k, (*this)(i, j, k).eval(p));
    return w;
}

TwoForm omega_field(const Acs& s, std::span<const Rational> p) { return omega_point(jet1_at(s.field(), p)); }

PolyTwoForm omega_symbolic(const Acs& s) {
    const std::size_t d = s.dim();
    const PolyMatrix& m = s.field().entries();
    std::vector<PolyMatrix> prod;
    for (std::size_t k = 0; k < d; ++k) prod.push_back(differentiate(m, k) * m);
    const Rational half(1, 2);
    PolyTwoForm w(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                Polynomial c = (prod[j](i, k) - prod[k](i, j)) * half;
                w(i, k, j) = -c;
                w(i, j, k) = std::move(c);
            }
    return w;
}

TwoForm nijenhuis_point(const Jet1& theta1) {
    require_j1pi(theta1, "nijenhuis_point");
    const std::size_t d = theta1.dim();
    const RatMatrix& u = theta1.u;
    TwoForm n(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                Rational acc;
                for (std::size_t r = 0; r < d; ++r) {
                    acc += theta1.du[r](i, k) * u(r, j);
                    acc -= theta1.du[r](i, j) * u(r, k);
                    acc -= theta1.du[j](r, k) * u(i, r);
                    acc += theta1.du[k](r, j) * u(i, r);
                }
                n.set(i, j, k, Rational(2) * acc);
            }
    return n;
}

TwoForm nijenhuis(const Acs& s, std::span<const Rational> p) { return nijenhuis_point(jet1_at(s.field(), p)); }

PolyTwoForm nijenhuis_symbolic(const Acs& s) {
    const std::size_t d = s.dim();
    const PolyMatrix& m = s.field().entries();
    std::vector<PolyMatrix> dm;
    for (std::size_t k = 0; k < d; ++k) dm.push_back(differentiate(m, k));
    PolyTwoForm n(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                Polynomial acc(d);
                for (std::size_t r = 0; r < d; ++r) {
                    acc += dm[r](i, k) * m(r, j);
                    acc -= dm[r](i, j) * m(r, k);
                    acc -= dm[j](r, k) * m(i, r);
                    acc += dm[k](r, j) * m(i, r);
                }
                acc *= Rational(2);
                n(i, k, j) = -acc;
                n(i, j, k) = std::move(acc);
            }
    return n;
}

Hom1 transport_horizontal(const Diffeo2Jet& j2f, const Jet1& theta1, const Hom1& h) {
    const std::size_t d = theta1.dim();
    const RatMatrix g = inverse(j2f.jacobian);
    std::vector<RatMatrix> pushed;
    for (std::size_t k = 0; k < d; ++k) {
        RatVector e(d);
        e[k] = Rational(1);
        pushed.push_back(pushforward_vfjet(j2f, horizontal_lift(theta1, h, e)).partials);
    }
    // h'(F e_k) = pushed[k], so h'(e_m) = sum_k g(k, m) pushed[k]
    std::vector<Endo> slots;
    for (std::size_t m = 0; m < d; ++m) {
        Endo acc = zero_matrix(d, d);
        for (std::size_t k = 0; k < d; ++k)
            if (!g(k, m).is_zero()) acc += scaled(pushed[k], g(k, m));
        slots.push_back(std::move(acc));
    }
    return Hom1::from_slots(slots);
}

bool naturality_check(const Acs& s, const PolyDiffeo& f, std::span<const Rational> p) {
    const Diffeo2Jet j2f = diffeo_2jet(f, p);
    const Acs moved = pullback_acs(f, s);
    const TwoForm lhs = omega_field(moved, j2f.target);
    const TwoForm rhs = transport_two_form(j2f.jacobian, omega_field(s, p));
    return lhs == rhs;
}

IntegrabilityReport integrability_report(const Acs& s, const std::vector<RatVector>& points) {
    const PolyTwoForm omega = omega_symbolic(s);
    const PolyTwoForm nij = nijenhuis_symbolic(s);

    IntegrabilityReport report;
    report.omega_identically_zero = omega.is_zero();
    report.nijenhuis_identically_zero = nij.is_zero();

    std::vector<std::future<PointReport>> pending;
    for (const auto& p : points) {
        if (p.size() != s.dim()) throw std::invalid_argument("integrability_report: point has wrong arity");
        pending.push_back(std::async(std::launch::async, [&omega, &nij, p] {
            return PointReport{p, omega.at(p), nij.at(p)};
        }));
    }
    for (std::size_t a = 0; a < pending.size(); ++a) {
        report.points.push_back(pending[a].get());
        const auto& pr = report.points.back();
        if (pr.omega.is_zero() && !pr.nijenhuis.is_zero()) report.pointwise_violations.push_back(a);
    }
    report.consistent = report.omega_identically_zero == report.nijenhuis_identically_zero &&
                        report.pointwise_violations.empty();
    return report;
}

}  // namespace acs
