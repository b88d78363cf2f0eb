#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "acs/matrix.hpp"
#include "acs/polynomial.hpp"

namespace acs::test {

inline RatMatrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
    RatMatrix m = zero_matrix(rows.size(), rows.begin()->size());
    std::size_t i = 0;
    for (const auto& r : rows) {
        std::size_t j = 0;
        for (const auto& x : r) m(i, j++) = x;
        ++i;
    }
    return m;
}

inline Polynomial poly(const std::string& text, std::size_t nvars) { return Polynomial::parse(text, nvars); }

inline PolyMatrix poly_mat(const std::vector<std::vector<std::string>>& rows, std::size_t nvars) {
    PolyMatrix m(rows.size(), rows.size(), Polynomial(nvars));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = poly(rows[i][j], nvars);
    return m;
}

}  // namespace acs::test
