#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "acs/diffeo.hpp"
#include "acs/jet.hpp"
#include "acs/linalg.hpp"
#include "acs/spencer.hpp"

namespace acs {

/// Solution space A of the linear system
///   -u^i_{j,r} X^r + X^i_r u^r_j - u^i_r X^r_j = 0
/// in coordinates (X^1..X^d, X^1_1, X^1_2, ..., X^d_d).
struct IsotropySpace {
    Jet1 jet;
    SubspaceBasis solutions;
    Hom1 horizontal;  // distinguished horizontal solution

    std::size_t dim() const { return solutions.dim(); }
    bool contains(const VFJet1& x) const;
    /// Image of the projection (X, X') -> X.
    SubspaceBasis base_projection() const;
    /// The X = 0 slice, as flattened endomorphisms.
    SubspaceBasis vertical_slice() const;
};

/// Coordinates (X, flattened X') of a vector-field jet.
RatVector isotropy_coords(const VFJet1& x);
/// Residual of the isotropy system for a vector-field jet; zero iff the jet lies in A.
RatMatrix isotropy_residual(const Jet1& theta1, const VFJet1& x);

IsotropySpace isotropy_space(const Jet1& theta1);

/// True iff h_k u - u h_k = du_k for every k.
bool is_horizontal(const Jet1& theta1, const Hom1& h);

/// The distinguished horizontal solution h_k = -(1/2) du_k u.
Hom1 horizontal_subspace(const Jet1& theta1);

struct HorizontalSolutions {
    Hom1 particular;
    SubspaceBasis homogeneous;  // flattened Hom1 coordinates; equals g (x) T*
};
/// All solutions of h_k u - u h_k = du_k, by exact elimination.
HorizontalSolutions solve_horizontal(const Jet1& theta1);

/// h1 - h2, checked to lie slotwise in the commutant of theta0.
Hom1 horizontal_difference(const Hom1& h1, const Hom1& h2, const Endo& theta0);

/// 1-jet at p of the horizontal lift X -> (X, h(X)).
VFJet1 horizontal_lift(const Jet1& theta1, const Hom1& h, const RatVector& x);

/// [X, Y]_p from the 1-jets of X and Y.
RatVector bracket_1jets(const VFJet1& a, const VFJet1& b);

/// The 2-form (X, Y) -> [lift X, lift Y]: w^i_{jk} = h^i_{j|k} - h^i_{k|j}.
TwoForm omega_h(const Jet1& theta1, const Hom1& h);

/// Class of a 2-form modulo delta(g (x) T*).
class ChiClass {
public:
    ChiClass(TwoForm representative, SubspaceBasis boundaries);

    const TwoForm& representative() const { return representative_; }
    const SubspaceBasis& boundaries() const { return boundaries_; }
    bool contains(const TwoForm& w) const;
    bool is_zero() const { return contains(TwoForm(representative_.dim())); }

    friend bool operator==(const ChiClass& a, const ChiClass& b) {
        return a.boundaries_ == b.boundaries_ && a.contains(b.representative_);
    }

private:
    TwoForm representative_;
    SubspaceBasis boundaries_;
};

ChiClass chi(const Jet1& theta1);
ChiClass chi(const Jet1& theta1, const Hom1& h);

/// Closed form w^i_{jk} = (1/2)(u^i_{r,j} u^r_k - u^i_{r,k} u^r_j).
TwoForm omega_point(const Jet1& theta1);
/// Same invariant through the linear algebra: project h slotwise onto the
/// anticommutant of u and apply spencer_delta.
TwoForm omega_pipeline(const Jet1& theta1, const Hom1& h);

/// Coefficient tensor of polynomials, index (i, j, k), antisymmetric in (j, k).
class PolyTwoForm {
public:
    explicit PolyTwoForm(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Polynomial& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
    const Polynomial& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    bool is_zero() const;
    TwoForm at(std::span<const Rational> p) const;

private:
    std::size_t dim_;
    std::vector<Polynomial> c_;
};

TwoForm omega_field(const Acs& s, std::span<const Rational> p);
PolyTwoForm omega_symbolic(const Acs& s);

/// N^i_{jk} = 2(S^i_{k,r} S^r_j - S^i_{j,r} S^r_k - S^r_{k,j} S^i_r + S^r_{j,k} S^i_r).
TwoForm nijenhuis_point(const Jet1& theta1);
TwoForm nijenhuis(const Acs& s, std::span<const Rational> p);
PolyTwoForm nijenhuis_symbolic(const Acs& s);

/// The horizontal h' at lift1(theta1) spanned by j^2 f of the lifts of h.
Hom1 transport_horizontal(const Diffeo2Jet& j2f, const Jet1& theta1, const Hom1& h);

/// omega of the pulled-back structure at f(p) against the transport of omega at p.
bool naturality_check(const Acs& s, const PolyDiffeo& f, std::span<const Rational> p);

struct PointReport {
    RatVector point;
    TwoForm omega;
    TwoForm nijenhuis;
};

struct IntegrabilityReport {
    bool omega_identically_zero = false;
    bool nijenhuis_identically_zero = false;
    /// Sampled points with omega(p) = 0 but N(p) != 0.
    std::vector<std::size_t> pointwise_violations;
    bool consistent = false;
    std::vector<PointReport> points;
};

/// Points are evaluated concurrently; the report keeps input order.
IntegrabilityReport integrability_report(const Acs& s, const std::vector<RatVector>& points);

}  // namespace acs
