#pragma once

#include <cstddef>
#include <vector>

#include "acs/linalg.hpp"
#include "acs/matrix.hpp"

namespace acs {

/// Element of T_pM (x) T*_pM as a d x d matrix.
using Endo = RatMatrix;

/// Row-major flattening of an endomorphism, index i*d + j.
RatVector flatten(const Endo& x);
Endo unflatten_endo(std::size_t dim, const RatVector& v);

/// Element of (T (x) T*) (x) T*: coefficients h^i_{j|k}, where h(X)^i_j = h^i_{j|k} X^k.
class Hom1 {
public:
    explicit Hom1(std::size_t dim);
    /// slots[k] is the endomorphism h( e_k ).
    static Hom1 from_slots(const std::vector<Endo>& slots);
    static Hom1 from_flat(std::size_t dim, const RatVector& flat);

    std::size_t dim() const { return dim_; }
    Rational& operator()(std::size_t i, std::size_t j, std::size_t k) { return c_[index(i, j, k)]; }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_[index(i, j, k)]; }

    Endo slot(std::size_t k) const;
    const RatVector& flat() const { return c_; }
    bool is_zero() const { return acs::is_zero(c_); }

    Hom1& operator+=(const Hom1& o);
    Hom1& operator-=(const Hom1& o);
    friend Hom1 operator+(Hom1 a, const Hom1& b) { return a += b; }
    friend Hom1 operator-(Hom1 a, const Hom1& b) { return a -= b; }
    friend bool operator==(const Hom1&, const Hom1&) = default;

    /// Flat index (i*d + j)*d + k.
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const { return (i * dim_ + j) * dim_ + k; }

private:
    std::size_t dim_;
    RatVector c_;
};

/// Tangent-valued 2-form with w^i_{jk} = -w^i_{kj}; evaluates as
/// w(X, Y)^i = sum_{j,k} w^i_{jk} X^j Y^k.
class TwoForm {
public:
    explicit TwoForm(std::size_t dim);
    /// From a full coefficient tensor, index (i*d + j)*d + k. Throws if not antisymmetric.
    static TwoForm from_full(std::size_t dim, const RatVector& full);
    /// From independent coordinates (i, j<k), i outermost.
    static TwoForm from_antisymmetric(std::size_t dim, const RatVector& coords);

    std::size_t dim() const { return dim_; }
    const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return c_[(i * dim_ + j) * dim_ + k];
    }
    /// Sets w^i_{jk} and w^i_{kj} = -value together.
    void set(std::size_t i, std::size_t j, std::size_t k, const Rational& value);

    RatVector antisymmetric_coords() const;
    RatVector evaluate(const RatVector& x, const RatVector& y) const;
    bool is_zero() const { return acs::is_zero(c_); }

    TwoForm& operator+=(const TwoForm& o);
    TwoForm& operator-=(const TwoForm& o);
    friend TwoForm operator+(TwoForm a, const TwoForm& b) { return a += b; }
    friend TwoForm operator-(TwoForm a, const TwoForm& b) { return a -= b; }
    friend bool operator==(const TwoForm&, const TwoForm&) = default;

private:
    std::size_t dim_;
    RatVector c_;
};

/// Number of independent coordinates of a 2-form: d * d(d-1)/2.
std::size_t two_form_coord_count(std::size_t dim);

/// Matrix of X -> X theta0 - theta0 X on flattened endomorphisms.
RatMatrix hat_map(const Endo& theta0);
/// Commutant of theta0 (the isotropy algebra g).
SubspaceBasis isotropy_algebra(const Endo& theta0);
/// Image of the hat map (the anticommutant of theta0).
SubspaceBasis hat_image(const Endo& theta0);

struct EndoSplit {
    Endo commuting;      // (X - theta0 X theta0) / 2, in g
    Endo anticommuting;  // (X + theta0 X theta0) / 2, in Im hat
};
EndoSplit split_endo(const Endo& theta0, const Endo& x);

/// W (x) T* inside the flattened Hom1 space, for W a subspace of flattened endomorphisms.
SubspaceBasis tensor_with_covectors(const SubspaceBasis& w);
/// T (x) (symmetric square of T*): all h with h^i_{j|k} = h^i_{k|j}.
SubspaceBasis symmetric_hom1(std::size_t dim);
/// First prolongation (W (x) T*) intersected with the symmetric h.
SubspaceBasis prolongation(const SubspaceBasis& w);

TwoForm spencer_delta(const Hom1& h);
/// Matrix of spencer_delta from flat Hom1 coordinates to 2-form coordinates.
RatMatrix spencer_delta_matrix(std::size_t dim);
/// spencer_delta(W (x) T*) in 2-form coordinates.
SubspaceBasis delta_image(const SubspaceBasis& w);

struct SpencerDimensions {
    std::size_t isotropy;           // dim g
    std::size_t prolongation;       // dim g^(1)
    std::size_t delta_isotropy;     // dim delta(g (x) T*)
    std::size_t h02;                // dim H^{0,2}
    std::size_t delta_complement;   // dim delta(Im hat (x) T*)
    std::size_t two_forms;          // dim T (x) wedge^2 T*
};

SpencerDimensions spencer_dimensions(const Endo& theta0);
std::size_t h02_dimension(const Endo& theta0);

/// Cached subspaces for decomposing 2-forms at theta0.
class Splitting {
public:
    explicit Splitting(const Endo& theta0);

    const Endo& theta0() const { return theta0_; }
    std::size_t dim() const { return theta0_.rows(); }
    const SubspaceBasis& isotropy() const { return isotropy_; }
    const SubspaceBasis& complement() const { return complement_; }
    const SubspaceBasis& delta_isotropy() const { return delta_isotropy_; }
    const SubspaceBasis& delta_complement() const { return delta_complement_; }
    const SubspaceBasis& delta_intersection() const { return delta_intersection_; }
    /// True when the two delta-images meet only in zero.
    bool is_direct() const { return delta_intersection_.empty(); }
    std::size_t sum_dim() const { return delta_isotropy_.dim() + delta_complement_.dim() - delta_intersection_.dim(); }

    /// Coefficients of a 2-form on [isotropy-side complement | delta_complement].
    RatVector split_coordinates(const TwoForm& w) const;
    const SubspaceBasis& isotropy_side() const { return isotropy_side_; }

private:
    Endo theta0_;
    SubspaceBasis isotropy_;
    SubspaceBasis complement_;
    SubspaceBasis delta_isotropy_;
    SubspaceBasis delta_complement_;
    SubspaceBasis delta_intersection_;
    SubspaceBasis isotropy_side_;  // complement of the intersection inside delta_isotropy
    RatMatrix to_coordinates_;     // inverse of the combined basis matrix
};

Splitting build_splitting(const Endo& theta0);

struct TwoFormSplit {
    TwoForm isotropy_part;    // in delta(g (x) T*)
    TwoForm complement_part;  // in delta(Im hat (x) T*)
};

/// Decomposes w = a + b with b in delta(Im hat (x) T*). When the two images
/// overlap, a is taken in the canonical complement of the overlap inside
/// delta(g (x) T*), which makes the split unique.
TwoFormSplit project_two_form(const Splitting& s, const TwoForm& w);

/// Linear transport by a constant Jacobian F (G = F^{-1}):
/// h'^i_{j|k} = (F h_s F^{-1})^i_j G^s_k and w'^i_{jk} = F^i_a w^a_{bc} G^b_j G^c_k.
Hom1 transport_hom1(const RatMatrix& jacobian, const Hom1& h);
TwoForm transport_two_form(const RatMatrix& jacobian, const TwoForm& w);

}  // namespace acs
