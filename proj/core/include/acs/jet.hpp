#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "acs/matrix.hpp"

namespace acs {

/// Thrown when a field or point fails S^2 = -I.
class NotAlmostComplex : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The single standard chart (x1..x{2n}) on R^{2n}.
class Chart {
public:
    explicit Chart(std::size_t n);

    std::size_t half_dim() const { return n_; }
    std::size_t dim() const { return 2 * n_; }
    std::string variable(std::size_t index) const { return "x" + std::to_string(index + 1); }

    friend bool operator==(const Chart&, const Chart&) = default;

private:
    std::size_t n_;
};

/// The constant structure J0 = [[0, -I], [I, 0]].
RatMatrix standard_structure(std::size_t n);

/// Field of (1,1) tensors u^i_j(x): row i is the upper index, column j the lower.
class TensorField {
public:
    TensorField(Chart chart, PolyMatrix entries);

    static TensorField constant(const RatMatrix& value);

    const Chart& chart() const { return chart_; }
    std::size_t dim() const { return chart_.dim(); }
    const PolyMatrix& entries() const { return entries_; }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

    RatMatrix at(std::span<const Rational> p) const;

    friend bool operator==(const TensorField&, const TensorField&) = default;

private:
    Chart chart_;
    PolyMatrix entries_;
};

/// A tensor field that is known to satisfy S^2 = -I identically.
class Acs {
public:
    /// Throws NotAlmostComplex if the field fails the identity.
    explicit Acs(TensorField field);

    const TensorField& field() const { return field_; }
    std::size_t dim() const { return field_.dim(); }
    std::size_t half_dim() const { return field_.chart().half_dim(); }
    const Polynomial& operator()(std::size_t i, std::size_t j) const { return field_(i, j); }

private:
    TensorField field_;
};

bool acs_verify(const TensorField& field);

/// First failing entry of S*S + I, if any: (row, column, polynomial).
struct AcsDefect {
    std::size_t row;
    std::size_t col;
    Polynomial value;
};
std::optional<AcsDefect> acs_defect(const TensorField& field);

/// Point of J^1(tau) in standard coordinates (x, u^i_j, u^i_{j,k}); du[k] is
/// the matrix of derivatives in direction x^{k+1}.
struct Jet1 {
    RatVector point;
    RatMatrix u;
    std::vector<RatMatrix> du;

    std::size_t dim() const { return point.size(); }
    friend bool operator==(const Jet1&, const Jet1&) = default;
};

Jet1 jet1_at(const TensorField& field, std::span<const Rational> p);

/// Membership in J^1(pi): u^2 = -I and du_k u + u du_k = 0 for every k.
bool jet1_in_j1pi(const Jet1& jet);

/// Throws NotAlmostComplex unless theta0^2 = -I.
void require_almost_complex(const RatMatrix& theta0);

}  // namespace acs
