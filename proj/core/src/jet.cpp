#include "acs/jet.hpp"

#include <optional>

namespace acs {

Chart::Chart(std::size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("Chart: half-dimension n must be at least 1");
}

RatMatrix standard_structure(std::size_t n) {
    RatMatrix j = zero_matrix(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, n + i) = Rational(-1);
        j(n + i, i) = Rational(1);
    }
    return j;
}

TensorField::TensorField(Chart chart, PolyMatrix entries)
    : chart_(chart), entries_(std::move(entries)) {
    const std::size_t d = chart_.dim();
    if (entries_.rows() != d || entries_.cols() != d)
        throw std::invalid_argument("TensorField: expected a " + std::to_string(d) + "x" + std::to_string(d) +
                                    " matrix");
    for (const auto& p : entries_.data())
        if (p.nvars() != d)
            throw std::invalid_argument("TensorField: entries must be polynomials in x1..x" + std::to_string(d));
}

TensorField TensorField::constant(const RatMatrix& value) {
    if (!value.is_square() || value.rows() % 2 != 0 || value.rows() == 0)
        throw std::invalid_argument("TensorField::constant: need an even-sized square matrix");
    return TensorField(Chart(value.rows() / 2), constant_poly_matrix(value, value.rows()));
}

RatMatrix TensorField::at(std::span<const Rational> p) const {
    if (p.size() != dim()) throw std::invalid_argument("TensorField::at: point has wrong arity");
    return evaluate(entries_, p);
}

std::optional<AcsDefect> acs_defect(const TensorField& field) {
    const std::size_t d = field.dim();
    PolyMatrix sq = field.entries() * field.entries();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Polynomial e = sq(i, j);
            if (i == j) e += Polynomial::constant(d, Rational(1));
            if (!e.is_zero()) return AcsDefect{i, j, std::move(e)};
        }
    }
    return std::nullopt;
}

bool acs_verify(const TensorField& field) { return !acs_defect(field).has_value(); }

Acs::Acs(TensorField field) : field_(std::move(field)) {
    if (auto defect = acs_defect(field_))
        throw NotAlmostComplex("field is not almost-complex: (S^2 + I)[" + std::to_string(defect->row + 1) + "][" +
                               std::to_string(defect->col + 1) + "] = " + defect->value.str());
}

Jet1 jet1_at(const TensorField& field, std::span<const Rational> p) {
    if (p.size() != field.dim()) throw std::invalid_argument("jet1_at: point has wrong arity");
    Jet1 jet{RatVector(p.begin(), p.end()), field.at(p), {}};
    for (std::size_t k = 0; k < field.dim(); ++k) jet.du.push_back(evaluate(differentiate(field.entries(), k), p));
    return jet;
}

bool jet1_in_j1pi(const Jet1& jet) {
    const std::size_t d = jet.dim();
    if (d == 0 || d % 2 != 0 || jet.u.rows() != d || jet.u.cols() != d || jet.du.size() != d) return false;
    RatMatrix sq = jet.u * jet.u;
    sq += identity_matrix(d);
    if (!is_zero(sq)) return false;
    for (const auto& dk : jet.du) {
        if (dk.rows() != d || dk.cols() != d) return false;
        if (!is_zero(dk * jet.u + jet.u * dk)) return false;
    }
    return true;
}

void require_almost_complex(const RatMatrix& theta0) {
    if (!theta0.is_square() || theta0.rows() == 0 || theta0.rows() % 2 != 0)
        throw NotAlmostComplex("expected an even-sized square matrix");
    RatMatrix sq = theta0 * theta0;
    sq += identity_matrix(theta0.rows());
    if (!is_zero(sq)) throw NotAlmostComplex("theta0^2 != -I");
}

}  // namespace acs
