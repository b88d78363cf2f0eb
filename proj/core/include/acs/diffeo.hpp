#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "acs/jet.hpp"
#include "acs/matrix.hpp"

namespace acs {

class SingularJacobian : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Polynomial local diffeomorphism x~ = f(x) of R^{2n}, with an optional
/// exact polynomial inverse g = f^{-1}.
class PolyDiffeo {
public:
    /// Throws std::invalid_argument when the inverse does not compose to the
    /// identity on both sides.
    PolyDiffeo(std::size_t n, std::vector<Polynomial> forward,
               std::optional<std::vector<Polynomial>> inverse = std::nullopt);

    static PolyDiffeo identity(std::size_t n);

    std::size_t half_dim() const { return n_; }
    std::size_t dim() const { return 2 * n_; }
    const std::vector<Polynomial>& forward() const { return forward_; }
    bool has_inverse() const { return inverse_.has_value(); }
    const std::vector<Polynomial>& inverse_components() const;
    /// The inverse as a diffeomorphism in its own right.
    PolyDiffeo inverted() const;

    RatVector apply(std::span<const Rational> p) const;
    /// Jacobian matrix df^i/dx^r.
    PolyMatrix jacobian() const;

private:
    std::size_t n_;
    std::vector<Polynomial> forward_;
    std::optional<std::vector<Polynomial>> inverse_;
};

/// Second-order Taylor data of a diffeomorphism at a point.
/// hessian[s](i, r) = d^2 f^i / dx^r dx^s, symmetric in (r, s).
struct Diffeo2Jet {
    RatVector source;
    RatVector target;
    RatMatrix jacobian;
    std::vector<RatMatrix> hessian;

    std::size_t dim() const { return source.size(); }
    friend bool operator==(const Diffeo2Jet&, const Diffeo2Jet&) = default;
};

Diffeo2Jet diffeo_2jet(const PolyDiffeo& f, std::span<const Rational> p);
Diffeo2Jet identity_2jet(std::span<const Rational> p);
/// 2-jet at j.target of the local inverse.
Diffeo2Jet invert_2jet(const Diffeo2Jet& j);
/// 2-jet of second o first; first.target must equal second.source.
Diffeo2Jet compose_2jets(const Diffeo2Jet& first, const Diffeo2Jet& second);

/// f^(0) on a single tensor: F u F^{-1}.
RatMatrix lift0(const RatMatrix& jacobian, const RatMatrix& u);

/// f^(1) on 1-jets of (1,1) tensor fields, by truncated jet composition.
Jet1 lift1(const Diffeo2Jet& j2f, const Jet1& theta1);

/// 1-jet of a vector field at a point: components X^i and partials X^i_j.
struct VFJet1 {
    RatVector point;
    RatVector value;
    RatMatrix partials;

    friend bool operator==(const VFJet1&, const VFJet1&) = default;
};

struct LiftedVector {
    RatVector horizontal;
    RatMatrix vertical;
};

/// Value of the lifted field X^(0) at the tensor u.
LiftedVector lift0_vf(const VFJet1& x, const RatMatrix& u);

/// j^2_p f acting on 1-jets of vector fields: the 1-jet of f_* X at f(p).
VFJet1 pushforward_vfjet(const Diffeo2Jet& j2f, const VFJet1& x);

/// x~ -> Df(g(x~)) S(g(x~)) Dg(x~). Requires an exact inverse.
Acs pullback_acs(const PolyDiffeo& f, const Acs& s);

}  // namespace acs
