#include "acs/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace acs {

namespace {

std::size_t total_degree(const Exponent& e) {
    return std::accumulate(e.begin(), e.end(), std::size_t{0});
}

class Parser {
public:
    Parser(std::string_view text, std::size_t nvars) : text_(text), nvars_(nvars) {}

    Polynomial run() {
        skip_ws();
        if (pos_ == text_.size()) fail("empty expression");
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) +
                                    " in '" + std::string(text_) + "': " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }

    Polynomial expr() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        while (accept('*')) acc *= unary();
        return acc;
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (accept('^')) {
            std::string e = digits();
            if (e.size() > 6) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(std::stoul(e)));
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'x') {
            ++pos_;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                fail("expected variable index");
            std::string idx = digits();
            std::size_t i = idx.size() > 6 ? 0 : std::stoul(idx);
            if (i == 0 || i > nvars_) fail("variable x" + idx + " out of range");
            return Polynomial::variable(nvars_, i - 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                std::string den = digits();
                return Polynomial::constant(nvars_, Rational::parse(num + "/" + den));
            }
            return Polynomial::constant(nvars_, Rational::parse(num));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    std::size_t nvars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw std::out_of_range("Polynomial::variable: index out of range");
    Exponent e(nvars, 0);
    e[index] = 1;
    Polynomial p(nvars);
    p.add_term(e, Rational(1));
    return p;
}

Polynomial Polynomial::monomial(Exponent exponent, const Rational& c) {
    Polynomial p(exponent.size());
    p.add_term(exponent, c);
    return p;
}

Polynomial Polynomial::parse(std::string_view text, std::size_t nvars) {
    return Parser(text, nvars).run();
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(Exponent(nvars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t Polynomial::degree() const {
    std::size_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
    return d;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_)
        throw std::invalid_argument("Polynomial: variable count mismatch (" + std::to_string(nvars_) +
                                    " vs " + std::to_string(o.nvars_) + ")");
}

Rational Polynomial::eval(std::span<const Rational> point) const {
    if (point.size() != nvars_)
        throw std::invalid_argument("Polynomial::eval: expected " + std::to_string(nvars_) +
                                    " coordinates, got " + std::to_string(point.size()));
    // powers[v][k] = point[v]^k, grown on demand
    std::vector<std::vector<Rational>> powers(nvars_, std::vector<Rational>{Rational(1)});
    Rational sum;
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            auto& pw = powers[v];
            while (pw.size() <= e[v]) pw.push_back(pw.back() * point[v]);
            t *= pw[e[v]];
        }
        sum += t;
    }
    return sum;
}

Polynomial Polynomial::diff(std::size_t var) const {
    if (var >= nvars_) throw std::out_of_range("Polynomial::diff: variable index out of range");
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponent d = e;
        --d[var];
        out.add_term(d, c * Rational(e[var]));
    }
    return out;
}

Polynomial Polynomial::compose(std::span<const Polynomial> subs) const {
    if (subs.size() != nvars_)
        throw std::invalid_argument("Polynomial::compose: expected " + std::to_string(nvars_) +
                                    " substitutes");
    if (nvars_ == 0) return *this;
    const std::size_t target = subs[0].nvars();
    for (const auto& s : subs)
        if (s.nvars() != target)
            throw std::invalid_argument("Polynomial::compose: substitutes disagree on variable count");

    std::vector<std::vector<Polynomial>> powers(nvars_);
    for (std::size_t v = 0; v < nvars_; ++v) powers[v].push_back(constant(target, Rational(1)));

    Polynomial out(target);
    for (const auto& [e, c] : terms_) {
        Polynomial t = constant(target, c);
        for (std::size_t v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            auto& pw = powers[v];
            while (pw.size() <= e[v]) pw.push_back(pw.back() * subs[v]);
            t *= pw[e[v]];
        }
        out += t;
    }
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result = constant(nvars_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial out(a.nvars_);
    Exponent e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < a.nvars_; ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) {
        std::size_t da = total_degree(a->first), db = total_degree(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });

    std::ostringstream os;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        bool negative = c.sign() < 0;
        Rational mag = negative ? -c : c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        bool has_vars = total_degree(e) > 0;
        bool wrote = false;
        if (!has_vars || !mag.is_one()) {
            os << mag.str();
            wrote = true;
        }
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            if (wrote) os << '*';
            os << 'x' << (v + 1);
            if (e[v] > 1) os << '^' << e[v];
            wrote = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace acs
