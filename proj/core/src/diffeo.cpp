#include "acs/diffeo.hpp"

#include "acs/linalg.hpp"

namespace acs {

namespace {

// Matrix-valued function truncated at first order: value and d/dx^s.
struct MatrixJet {
    RatMatrix value;
    std::vector<RatMatrix> d;
};

MatrixJet operator*(const MatrixJet& a, const MatrixJet& b) {
    MatrixJet out{a.value * b.value, {}};
    for (std::size_t s = 0; s < a.d.size(); ++s) out.d.push_back(a.d[s] * b.value + a.value * b.d[s]);
    return out;
}

MatrixJet invert(const MatrixJet& a) {
    RatMatrix inv = inverse(a.value);
    MatrixJet out{inv, {}};
    for (const auto& ds : a.d) out.d.push_back(-(inv * ds * inv));
    return out;
}

// Change of independent variable x = g(x~), with dx^s/dx~^k = chain(s, k).
MatrixJet reparametrize(const MatrixJet& a, const RatMatrix& chain) {
    MatrixJet out{a.value, {}};
    const std::size_t dim = chain.cols();
    for (std::size_t k = 0; k < dim; ++k) {
        RatMatrix acc = zero_matrix(a.value.rows(), a.value.cols());
        for (std::size_t s = 0; s < a.d.size(); ++s) {
            if (chain(s, k).is_zero()) continue;
            acc += scaled(a.d[s], chain(s, k));
        }
        out.d.push_back(std::move(acc));
    }
    return out;
}

MatrixJet jacobian_jet(const Diffeo2Jet& j) { return MatrixJet{j.jacobian, j.hessian}; }

RatMatrix checked_inverse(const RatMatrix& jac) {
    try {
        return inverse(jac);
    } catch (const SingularMatrix&) {
        throw SingularJacobian("Jacobian is singular at the base point");
    }
}

void check_inverse_pair(const std::vector<Polynomial>& outer, const std::vector<Polynomial>& inner,
                        std::size_t dim) {
    for (std::size_t i = 0; i < dim; ++i) {
        if (outer[i].compose(inner) != Polynomial::variable(dim, i))
            throw std::invalid_argument("diffeomorphism: supplied inverse does not compose to the identity (component " +
                                        std::to_string(i + 1) + ")");
    }
}

}  // namespace

PolyDiffeo::PolyDiffeo(std::size_t n, std::vector<Polynomial> forward,
                       std::optional<std::vector<Polynomial>> inverse)
    : n_(n), forward_(std::move(forward)), inverse_(std::move(inverse)) {
    const std::size_t d = Chart(n).dim();
    auto check_components = [d](const std::vector<Polynomial>& comps, const char* what) {
        if (comps.size() != d)
            throw std::invalid_argument(std::string("diffeomorphism: ") + what + " needs " + std::to_string(d) +
                                        " components");
        for (const auto& c : comps)
            if (c.nvars() != d)
                throw std::invalid_argument(std::string("diffeomorphism: ") + what +
                                            " components must use x1..x" + std::to_string(d));
    };
    check_components(forward_, "f");
    if (inverse_) {
        check_components(*inverse_, "f_inv");
        check_inverse_pair(forward_, *inverse_, d);
        check_inverse_pair(*inverse_, forward_, d);
    }
}

PolyDiffeo PolyDiffeo::identity(std::size_t n) {
    std::vector<Polynomial> id;
    for (std::size_t i = 0; i < 2 * n; ++i) id.push_back(Polynomial::variable(2 * n, i));
    return PolyDiffeo(n, id, id);
}

const std::vector<Polynomial>& PolyDiffeo::inverse_components() const {
    if (!inverse_) throw std::logic_error("diffeomorphism has no exact inverse");
    return *inverse_;
}

PolyDiffeo PolyDiffeo::inverted() const { return PolyDiffeo(n_, inverse_components(), forward_); }

RatVector PolyDiffeo::apply(std::span<const Rational> p) const {
    if (p.size() != dim()) throw std::invalid_argument("diffeomorphism: point has wrong arity");
    RatVector out;
    for (const auto& c : forward_) out.push_back(c.eval(p));
    return out;
}

PolyMatrix PolyDiffeo::jacobian() const {
    const std::size_t d = dim();
    PolyMatrix jac(d, d, Polynomial(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t r = 0; r < d; ++r) jac(i, r) = forward_[i].diff(r);
    return jac;
}

Diffeo2Jet diffeo_2jet(const PolyDiffeo& f, std::span<const Rational> p) {
    const std::size_t d = f.dim();
    PolyMatrix jac = f.jacobian();
    Diffeo2Jet j{RatVector(p.begin(), p.end()), f.apply(p), evaluate(jac, p), {}};
    checked_inverse(j.jacobian);
    for (std::size_t s = 0; s < d; ++s) j.hessian.push_back(evaluate(differentiate(jac, s), p));
    return j;
}

Diffeo2Jet identity_2jet(std::span<const Rational> p) {
    const std::size_t d = p.size();
    return Diffeo2Jet{RatVector(p.begin(), p.end()), RatVector(p.begin(), p.end()), identity_matrix(d),
                      std::vector<RatMatrix>(d, zero_matrix(d, d))};
}

Diffeo2Jet invert_2jet(const Diffeo2Jet& j) {
    const std::size_t d = j.dim();
    const RatMatrix g = checked_inverse(j.jacobian);
    // g^i_{ab} = -g^i_c f^c_{rs} g^r_a g^s_b
    std::vector<RatMatrix> hess(d, zero_matrix(d, d));
    for (std::size_t b = 0; b < d; ++b) {
        RatMatrix mixed = zero_matrix(d, d);  // (c, r) -> f^c_{rs} g^s_b
        for (std::size_t s = 0; s < d; ++s) {
            if (g(s, b).is_zero()) continue;
            mixed += scaled(j.hessian[s], g(s, b));
        }
        hess[b] = -(g * mixed * g);
    }
    return Diffeo2Jet{j.target, j.source, g, std::move(hess)};
}

Diffeo2Jet compose_2jets(const Diffeo2Jet& first, const Diffeo2Jet& second) {
    if (first.target != second.source) throw std::invalid_argument("compose_2jets: base points do not match");
    const std::size_t d = first.dim();
    const RatMatrix& a = first.jacobian;
    const RatMatrix& b = second.jacobian;
    // (b o a)^i_{rs} = b^i_{tu} a^t_r a^u_s + b^i_t a^t_{rs}
    std::vector<RatMatrix> hess;
    for (std::size_t s = 0; s < d; ++s) {
        RatMatrix bu = zero_matrix(d, d);  // (i, t) -> b^i_{tu} a^u_s
        for (std::size_t u = 0; u < d; ++u) {
            if (a(u, s).is_zero()) continue;
            bu += scaled(second.hessian[u], a(u, s));
        }
        hess.push_back(bu * a + b * first.hessian[s]);
    }
    return Diffeo2Jet{first.source, second.target, b * a, std::move(hess)};
}

RatMatrix lift0(const RatMatrix& jacobian, const RatMatrix& u) { return jacobian * u * checked_inverse(jacobian); }

Jet1 lift1(const Diffeo2Jet& j2f, const Jet1& theta1) {
    if (theta1.point != j2f.source) throw std::invalid_argument("lift1: jet and diffeomorphism base points differ");
    const MatrixJet fj = jacobian_jet(j2f);
    MatrixJet finv;
    try {
        finv = invert(fj);
    } catch (const SingularMatrix&) {
        throw SingularJacobian("lift1: Jacobian is singular at the base point");
    }
    const MatrixJet moved = reparametrize(fj * MatrixJet{theta1.u, theta1.du} * finv, finv.value);
    return Jet1{j2f.target, moved.value, moved.d};
}

LiftedVector lift0_vf(const VFJet1& x, const RatMatrix& u) {
    if (x.partials.rows() != u.rows() || x.value.size() != u.rows())
        throw std::invalid_argument("lift0_vf: shape mismatch");
    return LiftedVector{x.value, x.partials * u - u * x.partials};
}

VFJet1 pushforward_vfjet(const Diffeo2Jet& j2f, const VFJet1& x) {
    if (x.point != j2f.source) throw std::invalid_argument("pushforward_vfjet: base points differ");
    const std::size_t d = j2f.dim();
    MatrixJet xj{column(x.value), {}};
    for (std::size_t s = 0; s < d; ++s) xj.d.push_back(column(x.partials.col(s)));
    const MatrixJet pushed = reparametrize(jacobian_jet(j2f) * xj, checked_inverse(j2f.jacobian));

    VFJet1 out{j2f.target, pushed.value.col(0), zero_matrix(d, d)};
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t i = 0; i < d; ++i) out.partials(i, k) = pushed.d[k](i, 0);
    return out;
}

Acs pullback_acs(const PolyDiffeo& f, const Acs& s) {
    if (!f.has_inverse()) throw std::invalid_argument("pullback_acs: diffeomorphism has no exact inverse");
    if (f.dim() != s.dim()) throw std::invalid_argument("pullback_acs: dimension mismatch");
    const std::size_t d = f.dim();
    const auto& g = f.inverse_components();

    auto compose_all = [&g](const PolyMatrix& m) {
        PolyMatrix out = m;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).compose(g);
        return out;
    };

    PolyMatrix dg(d, d, Polynomial(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t r = 0; r < d; ++r) dg(i, r) = g[i].diff(r);

    PolyMatrix moved = compose_all(f.jacobian()) * compose_all(s.field().entries()) * dg;
    return Acs(TensorField(Chart(f.half_dim()), std::move(moved)));
}

}  // namespace acs
