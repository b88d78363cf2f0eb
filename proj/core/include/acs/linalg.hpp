#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "acs/matrix.hpp"
#include "acs/rational.hpp"

namespace acs {

class SingularMatrix : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct EchelonForm {
    RatMatrix reduced;                // reduced row-echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

EchelonForm rref(RatMatrix m);
std::size_t rank(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);

/// A linear subspace of Q^d held by its reduced row-echelon basis, so two
/// subspaces are equal iff their bases are equal coefficientwise.
class SubspaceBasis {
public:
    explicit SubspaceBasis(std::size_t ambient = 0);

    /// Span of arbitrary (possibly dependent) vectors.
    static SubspaceBasis span(std::size_t ambient, const std::vector<RatVector>& vectors);
    static SubspaceBasis full(std::size_t ambient);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool empty() const { return basis_.empty(); }
    const std::vector<RatVector>& vectors() const { return basis_; }
    const RatVector& operator[](std::size_t i) const { return basis_[i]; }

    bool contains(const RatVector& v) const;
    /// Coefficients c with v = sum c_a * basis_a, when v lies in the span.
    std::optional<RatVector> coordinates(const RatVector& v) const;

    /// Basis vectors as the rows of a dim x ambient matrix.
    RatMatrix as_rows() const;

    friend bool operator==(const SubspaceBasis& a, const SubspaceBasis& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    std::vector<RatVector> basis_;
    std::vector<std::size_t> pivots_;
};

SubspaceBasis kernel_basis(const RatMatrix& m);
/// Span of the columns.
SubspaceBasis column_space(const RatMatrix& m);

struct LinearSolution {
    RatVector particular;
    SubspaceBasis kernel;
};

/// One exact solution of m x = b together with the kernel of m, or nothing
/// when the system is inconsistent.
std::optional<LinearSolution> solve_linear(const RatMatrix& m, std::span<const Rational> b);

SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b);
SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b);

/// A complement of `sub` inside `space`, built from the RREF basis of `space`
/// (vectors of `space` whose addition raises the span dimension, taken in order).
SubspaceBasis complement_within(const SubspaceBasis& space, const SubspaceBasis& sub);

}  // namespace acs
