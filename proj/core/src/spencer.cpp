#include "acs/spencer.hpp"

#include <stdexcept>

#include "acs/jet.hpp"

namespace acs {

RatVector flatten(const Endo& x) { return x.data(); }

Endo unflatten_endo(std::size_t dim, const RatVector& v) {
    if (v.size() != dim * dim) throw std::invalid_argument("unflatten_endo: length mismatch");
    Endo out = zero_matrix(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) out(i, j) = v[i * dim + j];
    return out;
}

Hom1::Hom1(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

Hom1 Hom1::from_slots(const std::vector<Endo>& slots) {
    const std::size_t d = slots.size();
    Hom1 h(d);
    for (std::size_t k = 0; k < d; ++k) {
        if (slots[k].rows() != d || slots[k].cols() != d) throw std::invalid_argument("Hom1::from_slots: bad slot shape");
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) h(i, j, k) = slots[k](i, j);
    }
    return h;
}

Hom1 Hom1::from_flat(std::size_t dim, const RatVector& flat) {
    if (flat.size() != dim * dim * dim) throw std::invalid_argument("Hom1::from_flat: length mismatch");
    Hom1 h(dim);
    h.c_ = flat;
    return h;
}

Endo Hom1::slot(std::size_t k) const {
    Endo out = zero_matrix(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out(i, j) = (*this)(i, j, k);
    return out;
}

Hom1& Hom1::operator+=(const Hom1& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("Hom1: dimension mismatch");
    for (std::size_t a = 0; a < c_.size(); ++a) c_[a] += o.c_[a];
    return *this;
}

Hom1& Hom1::operator-=(const Hom1& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("Hom1: dimension mismatch");
    for (std::size_t a = 0; a < c_.size(); ++a) c_[a] -= o.c_[a];
    return *this;
}

std::size_t two_form_coord_count(std::size_t dim) { return dim * (dim * (dim - 1) / 2); }

TwoForm::TwoForm(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

TwoForm TwoForm::from_full(std::size_t dim, const RatVector& full) {
    if (full.size() != dim * dim * dim) throw std::invalid_argument("TwoForm::from_full: length mismatch");
    TwoForm w(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = 0; k < dim; ++k)
                if (full[(i * dim + j) * dim + k] != -full[(i * dim + k) * dim + j])
                    throw std::invalid_argument("TwoForm: coefficients are not antisymmetric in the lower indices");
    w.c_ = full;
    return w;
}

TwoForm TwoForm::from_antisymmetric(std::size_t dim, const RatVector& coords) {
    if (coords.size() != two_form_coord_count(dim))
        throw std::invalid_argument("TwoForm::from_antisymmetric: length mismatch");
    TwoForm w(dim);
    std::size_t a = 0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = j + 1; k < dim; ++k) w.set(i, j, k, coords[a++]);
    return w;
}

void TwoForm::set(std::size_t i, std::size_t j, std::size_t k, const Rational& value) {
    if (j == k) {
        if (!value.is_zero()) throw std::invalid_argument("TwoForm::set: diagonal coefficient must vanish");
        return;
    }
    c_[(i * dim_ + j) * dim_ + k] = value;
    c_[(i * dim_ + k) * dim_ + j] = -value;
}

RatVector TwoForm::antisymmetric_coords() const {
    RatVector out;
    out.reserve(two_form_coord_count(dim_));
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j)
            for (std::size_t k = j + 1; k < dim_; ++k) out.push_back((*this)(i, j, k));
    return out;
}

RatVector TwoForm::evaluate(const RatVector& x, const RatVector& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw std::invalid_argument("TwoForm::evaluate: vector length mismatch");
    RatVector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) {
            if (x[j].is_zero()) continue;
            for (std::size_t k = 0; k < dim_; ++k) {
                const Rational& c = (*this)(i, j, k);
                if (!c.is_zero() && !y[k].is_zero()) out[i] += c * x[j] * y[k];
            }
        }
    return out;
}

TwoForm& TwoForm::operator+=(const TwoForm& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("TwoForm: dimension mismatch");
    for (std::size_t a = 0; a < c_.size(); ++a) c_[a] += o.c_[a];
    return *this;
}

TwoForm& TwoForm::operator-=(const TwoForm& o) {
    if (dim_ != o.dim_) throw std::invalid_argument("TwoForm: dimension mismatch");
    for (std::size_t a = 0; a < c_.size(); ++a) c_[a] -= o.c_[a];
    return *this;
}

RatMatrix hat_map(const Endo& theta0) {
    require_almost_complex(theta0);
    const std::size_t d = theta0.rows();
    RatMatrix m = zero_matrix(d * d, d * d);
    // (X theta - theta X)(i, j) picks up X(a, b) with weight [i==a] theta(b, j) - theta(i, a) [b==j]
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            const std::size_t col = a * d + b;
            for (std::size_t j = 0; j < d; ++j) m(a * d + j, col) += theta0(b, j);
            for (std::size_t i = 0; i < d; ++i) m(i * d + b, col) -= theta0(i, a);
        }
    return m;
}

SubspaceBasis isotropy_algebra(const Endo& theta0) { return kernel_basis(hat_map(theta0)); }

SubspaceBasis hat_image(const Endo& theta0) { return column_space(hat_map(theta0)); }

EndoSplit split_endo(const Endo& theta0, const Endo& x) {
    require_almost_complex(theta0);
    if (x.rows() != theta0.rows() || x.cols() != theta0.cols())
        throw std::invalid_argument("split_endo: shape mismatch");
    const Rational half(1, 2);
    const Endo sandwich = theta0 * x * theta0;
    return EndoSplit{scaled(x - sandwich, half), scaled(x + sandwich, half)};
}

SubspaceBasis tensor_with_covectors(const SubspaceBasis& w) {
    const std::size_t dd = w.ambient();
    std::size_t d = 0;
    while (d * d < dd) ++d;
    if (d * d != dd) throw std::invalid_argument("tensor_with_covectors: ambient is not a square");
    std::vector<RatVector> out;
    for (const auto& v : w.vectors())
        for (std::size_t k = 0; k < d; ++k) {
            RatVector h(d * d * d);
            for (std::size_t ij = 0; ij < dd; ++ij) h[ij * d + k] = v[ij];
            out.push_back(std::move(h));
        }
    return SubspaceBasis::span(d * d * d, out);
}

SubspaceBasis symmetric_hom1(std::size_t dim) {
    std::vector<RatVector> out;
    const std::size_t total = dim * dim * dim;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = j; k < dim; ++k) {
                RatVector h(total);
                h[(i * dim + j) * dim + k] = Rational(1);
                h[(i * dim + k) * dim + j] = Rational(1);
                out.push_back(std::move(h));
            }
    return SubspaceBasis::span(total, out);
}

SubspaceBasis prolongation(const SubspaceBasis& w) {
    SubspaceBasis tensored = tensor_with_covectors(w);
    std::size_t d = 0;
    while (d * d * d < tensored.ambient()) ++d;
    return subspace_intersect(tensored, symmetric_hom1(d));
}

TwoForm spencer_delta(const Hom1& h) {
    const std::size_t d = h.dim();
    TwoForm w(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) w.set(i, j, k, h(i, j, k) - h(i, k, j));
    return w;
}

RatMatrix spencer_delta_matrix(std::size_t dim) {
    RatMatrix m = zero_matrix(two_form_coord_count(dim), dim * dim * dim);
    std::size_t row = 0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t k = j + 1; k < dim; ++k, ++row) {
                m(row, (i * dim + j) * dim + k) += Rational(1);
                m(row, (i * dim + k) * dim + j) -= Rational(1);
            }
    return m;
}

SubspaceBasis delta_image(const SubspaceBasis& w) {
    SubspaceBasis tensored = tensor_with_covectors(w);
    std::size_t d = 0;
    while (d * d * d < tensored.ambient()) ++d;
    const RatMatrix delta = spencer_delta_matrix(d);
    std::vector<RatVector> images;
    for (const auto& v : tensored.vectors()) images.push_back(delta * v);
    return SubspaceBasis::span(two_form_coord_count(d), images);
}

SpencerDimensions spencer_dimensions(const Endo& theta0) {
    require_almost_complex(theta0);
    const std::size_t d = theta0.rows();
    const SubspaceBasis g = isotropy_algebra(theta0);
    const std::size_t delta_g = delta_image(g).dim();
    const std::size_t forms = two_form_coord_count(d);
    return SpencerDimensions{g.dim(),           prolongation(g).dim(),
                             delta_g,           forms - delta_g,
                             delta_image(hat_image(theta0)).dim(), forms};
}

std::size_t h02_dimension(const Endo& theta0) {
    require_almost_complex(theta0);
    return two_form_coord_count(theta0.rows()) - delta_image(isotropy_algebra(theta0)).dim();
}

Splitting::Splitting(const Endo& theta0)
    : theta0_(theta0),
      isotropy_(isotropy_algebra(theta0)),
      complement_(hat_image(theta0)),
      delta_isotropy_(delta_image(isotropy_)),
      delta_complement_(delta_image(complement_)),
      delta_intersection_(subspace_intersect(delta_isotropy_, delta_complement_)),
      isotropy_side_(complement_within(delta_isotropy_, delta_intersection_)) {
    const std::size_t forms = two_form_coord_count(dim());
    const std::size_t combined = isotropy_side_.dim() + delta_complement_.dim();
    if (combined != forms)
        throw std::logic_error("Splitting: delta-images do not span the 2-form space");
    RatMatrix basis = zero_matrix(forms, forms);
    std::size_t col = 0;
    for (const auto* space : {&isotropy_side_, &delta_complement_})
        for (const auto& v : space->vectors()) {
            for (std::size_t r = 0; r < forms; ++r) basis(r, col) = v[r];
            ++col;
        }
    to_coordinates_ = inverse(basis);
}

RatVector Splitting::split_coordinates(const TwoForm& w) const {
    if (w.dim() != dim()) throw std::invalid_argument("Splitting: 2-form dimension mismatch");
    return to_coordinates_ * w.antisymmetric_coords();
}

Splitting build_splitting(const Endo& theta0) { return Splitting(theta0); }

TwoFormSplit project_two_form(const Splitting& s, const TwoForm& w) {
    const RatVector coeffs = s.split_coordinates(w);
    const std::size_t forms = two_form_coord_count(s.dim());
    RatVector first(forms), second(forms);
    const std::size_t k = s.isotropy_side().dim();
    for (std::size_t a = 0; a < coeffs.size(); ++a) {
        if (coeffs[a].is_zero()) continue;
        const RatVector& v = a < k ? s.isotropy_side()[a] : s.delta_complement()[a - k];
        RatVector& target = a < k ? first : second;
        for (std::size_t r = 0; r < forms; ++r) target[r] += coeffs[a] * v[r];
    }
    return TwoFormSplit{TwoForm::from_antisymmetric(s.dim(), first), TwoForm::from_antisymmetric(s.dim(), second)};
}

Hom1 transport_hom1(const RatMatrix& jacobian, const Hom1& h) {
    const std::size_t d = h.dim();
    const RatMatrix g = inverse(jacobian);
    std::vector<Endo> conj;
    for (std::size_t s = 0; s < d; ++s) conj.push_back(jacobian * h.slot(s) * g);
    std::vector<Endo> slots;
    for (std::size_t k = 0; k < d; ++k) {
        Endo acc = zero_matrix(d, d);
        for (std::size_t s = 0; s < d; ++s)
            if (!g(s, k).is_zero()) acc += scaled(conj[s], g(s, k));
        slots.push_back(std::move(acc));
    }
    return Hom1::from_slots(slots);
}

TwoForm transport_two_form(const RatMatrix& jacobian, const TwoForm& w) {
    const std::size_t d = w.dim();
    const RatMatrix g = inverse(jacobian);
    TwoForm out(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = j + 1; k < d; ++k) {
                Rational acc;
                for (std::size_t a = 0; a < d; ++a) {
                    if (jacobian(i, a).is_zero()) continue;
                    for (std::size_t b = 0; b < d; ++b) {
                        if (g(b, j).is_zero()) continue;
                        for (std::size_t c = 0; c < d; ++c) {
                            const Rational& wc = w(a, b, c);
                            if (wc.is_zero() || g(c, k).is_zero()) continue;
                            acc += jacobian(i, a) * wc * g(b, j) * g(c, k);
                        }
                    }
                }
                out.set(i, j, k, acc);
            }
    return out;
}

}  // namespace acs
