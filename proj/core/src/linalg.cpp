#include "acs/linalg.hpp"

#include <utility>

namespace acs {

EchelonForm rref(RatMatrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = c; j < cols; ++j) std::swap(m(p, j), m(r, j));

        const Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < cols; ++j) m(r, j) *= inv;

        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            const Rational factor = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivots.size(); }

RatMatrix inverse(const RatMatrix& m) {
    if (!m.is_square()) throw SingularMatrix("inverse: matrix is not square");
    const std::size_t n = m.rows();
    RatMatrix aug = zero_matrix(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rational(1);
    }
    EchelonForm e = rref(std::move(aug));
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw SingularMatrix("inverse: matrix is singular");
    RatMatrix out = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = e.reduced(i, n + j);
    return out;
}

SubspaceBasis::SubspaceBasis(std::size_t ambient) : ambient_(ambient) {}

SubspaceBasis SubspaceBasis::span(std::size_t ambient, const std::vector<RatVector>& vectors) {
    SubspaceBasis out(ambient);
    if (vectors.empty()) return out;
    RatMatrix m = zero_matrix(vectors.size(), ambient);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        if (vectors[i].size() != ambient)
            throw std::invalid_argument("SubspaceBasis::span: vector length differs from ambient dimension");
        for (std::size_t j = 0; j < ambient; ++j) m(i, j) = vectors[i][j];
    }
    EchelonForm e = rref(std::move(m));
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out.basis_.push_back(e.reduced.row(i));
    out.pivots_ = std::move(e.pivots);
    return out;
}

SubspaceBasis SubspaceBasis::full(std::size_t ambient) {
    SubspaceBasis out(ambient);
    for (std::size_t i = 0; i < ambient; ++i) {
        RatVector v(ambient);
        v[i] = Rational(1);
        out.basis_.push_back(std::move(v));
        out.pivots_.push_back(i);
    }
    return out;
}

std::optional<RatVector> SubspaceBasis::coordinates(const RatVector& v) const {
    if (v.size() != ambient_) throw std::invalid_argument("SubspaceBasis: vector length differs from ambient dimension");
    RatVector coeffs(basis_.size());
    RatVector residual = v;
    for (std::size_t a = 0; a < basis_.size(); ++a) {
        coeffs[a] = residual[pivots_[a]];
        if (coeffs[a].is_zero()) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (!basis_[a][j].is_zero()) residual[j] -= coeffs[a] * basis_[a][j];
    }
    if (!is_zero(residual)) return std::nullopt;
    return coeffs;
}

bool SubspaceBasis::contains(const RatVector& v) const { return coordinates(v).has_value(); }

RatMatrix SubspaceBasis::as_rows() const {
    RatMatrix m = zero_matrix(basis_.size(), ambient_);
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < ambient_; ++j) m(i, j) = basis_[i][j];
    return m;
}

SubspaceBasis kernel_basis(const RatMatrix& m) {
    const std::size_t cols = m.cols();
    EchelonForm e = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<RatVector> vectors;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVector v(cols);
        v[free] = Rational(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        vectors.push_back(std::move(v));
    }
    return SubspaceBasis::span(cols, vectors);
}

SubspaceBasis column_space(const RatMatrix& m) {
    std::vector<RatVector> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
    return SubspaceBasis::span(m.rows(), cols);
}

std::optional<LinearSolution> solve_linear(const RatMatrix& m, std::span<const Rational> b) {
    if (b.size() != m.rows())
        throw std::invalid_argument("solve_linear: right-hand side length differs from row count");
    const std::size_t rows = m.rows(), cols = m.cols();
    RatMatrix aug = zero_matrix(rows, cols + 1);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug(i, j) = m(i, j);
        aug(i, cols) = b[i];
    }
    EchelonForm e = rref(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;

    RatVector x(cols);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, cols);
    return LinearSolution{std::move(x), kernel_basis(m)};
}

SubspaceBasis subspace_intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace_intersect: ambient dimensions differ");
    const std::size_t d = a.ambient();
    if (a.empty() || b.empty()) return SubspaceBasis(d);
    // alpha . A = beta . B  <=>  [A^T | -B^T] (alpha; beta) = 0
    const std::size_t ka = a.dim(), kb = b.dim();
    RatMatrix m = zero_matrix(d, ka + kb);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t s = 0; s < ka; ++s) m(i, s) = a[s][i];
        for (std::size_t t = 0; t < kb; ++t) m(i, ka + t) = -b[t][i];
    }
    SubspaceBasis ker = kernel_basis(m);
    std::vector<RatVector> out;
    for (const auto& coeffs : ker.vectors()) {
        RatVector v(d);
        for (std::size_t s = 0; s < ka; ++s) {
            if (coeffs[s].is_zero()) continue;
            for (std::size_t i = 0; i < d; ++i) v[i] += coeffs[s] * a[s][i];
        }
        out.push_back(std::move(v));
    }
    return SubspaceBasis::span(d, out);
}

SubspaceBasis subspace_sum(const SubspaceBasis& a, const SubspaceBasis& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace_sum: ambient dimensions differ");
    std::vector<RatVector> all = a.vectors();
    all.insert(all.end(), b.vectors().begin(), b.vectors().end());
    return SubspaceBasis::span(a.ambient(), all);
}

SubspaceBasis complement_within(const SubspaceBasis& space, const SubspaceBasis& sub) {
    std::vector<RatVector> running = sub.vectors();
    std::vector<RatVector> chosen;
    std::size_t current = sub.dim();
    for (const auto& v : space.vectors()) {
        running.push_back(v);
        std::size_t next = SubspaceBasis::span(space.ambient(), running).dim();
        if (next > current) {
            chosen.push_back(v);
            current = next;
        } else {
            running.pop_back();
        }
    }
    return SubspaceBasis::span(space.ambient(), chosen);
}

}  // namespace acs
