#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "acs/rational.hpp"

namespace acs {

using Exponent = std::vector<std::uint32_t>;

/// Multivariate polynomial over the rationals in a fixed number of variables
/// x1..xv. Sparse storage; zero coefficients are never stored.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational>;

    explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    /// The coordinate function x_{index+1}.
    static Polynomial variable(std::size_t nvars, std::size_t index);
    static Polynomial monomial(Exponent exponent, const Rational& c);

    /// Parses the text grammar: rational literals (`3`, `-1/2`), variables
    /// `x1..xv`, `+ - *`, non-negative integer `^` powers and parentheses.
    static Polynomial parse(std::string_view text, std::size_t nvars);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero when absent).
    Rational constant_term() const;
    std::size_t degree() const;
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    Rational eval(std::span<const Rational> point) const;
    Polynomial diff(std::size_t var) const;
    /// Substitutes subs[i] for x_{i+1}. All substitutes share one variable count.
    Polynomial compose(std::span<const Polynomial> subs) const;
    Polynomial pow(unsigned e) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Canonical text in the parse grammar, highest total degree first.
    std::string str() const;

private:
    void add_term(const Exponent& e, const Rational& c);
    void check_compatible(const Polynomial& o) const;

    std::size_t nvars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace acs
