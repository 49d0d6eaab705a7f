#include "canring/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace canring {

bool GrLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    long da = expvec_degree(a), db = expvec_degree(b);
    if (da != db) return da < db;
    // Same degree: a < b when at the first difference a has the smaller
    // exponent (so x0^2 > x0*x1 > x1^2 for x0 > x1).
    for (size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() < b.size();
}

long expvec_degree(const std::vector<int>& e) {
    long d = 0;
    for (int x : e) d += x;
    return d;
}

Polynomial::Polynomial(VarList vars, const Rational& constant) : vars_(std::move(vars)) {
    if (!constant.is_zero()) terms_.emplace(std::vector<int>(vars_->size(), 0), constant);
}

Polynomial Polynomial::monomial(VarList vars, std::vector<int> exps, const Rational& coeff) {
    if (exps.size() != vars->size())
        throw std::invalid_argument("Polynomial: exponent arity mismatch");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("Polynomial: negative exponent");
    Polynomial p(std::move(vars));
    if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), coeff);
    return p;
}

Polynomial Polynomial::variable(const VarList& vars, int index) {
    std::vector<int> e(vars->size(), 0);
    e.at(index) = 1;
    return monomial(vars, std::move(e));
}

long Polynomial::total_degree() const {
    if (terms_.empty()) return -1;
    return expvec_degree(terms_.rbegin()->first);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    long d = expvec_degree(terms_.begin()->first);
    return d == expvec_degree(terms_.rbegin()->first);
}

const std::pair<const std::vector<int>, Rational>& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("Polynomial: leading term of zero");
    return *terms_.rbegin();
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (vars_ == o.vars_) return;
    if (vars_ && o.vars_ && *vars_ == *o.vars_) return;
    throw std::invalid_argument("Polynomial: variable list mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r(vars_);
    std::vector<int> e(vars_ ? vars_->size() : 0);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : terms_) r.terms_.emplace(e, x * c);
    return r;
}

Polynomial Polynomial::pow(long e) const {
    if (e < 0) throw std::invalid_argument("Polynomial: negative power");
    Polynomial r(vars_, Rational(1));
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        if (e >>= 1) base *= base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

void Polynomial::add_term(const std::vector<int>& exps, const Rational& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& g) const {
    check_compatible(g);
    if (g.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
    const auto& [lexp, lcoeff] = g.leading_term();
    Polynomial q(vars_), r(vars_), work = *this;
    while (!work.terms_.empty()) {
        auto it = std::prev(work.terms_.end());
        const std::vector<int>& e = it->first;
        bool divisible = true;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] < lexp[i]) {
                divisible = false;
                break;
            }
        if (divisible) {
            std::vector<int> diff(e.size());
            for (size_t i = 0; i < e.size(); ++i) diff[i] = e[i] - lexp[i];
            Rational c = it->second / lcoeff;
            Polynomial t = monomial(vars_, diff, c);
            q += t;
            work -= t * g;
        } else {
            r.add_term(e, it->second);
            work.terms_.erase(it);
        }
    }
    return {q, r};
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != vars_->size())
        throw std::invalid_argument("Polynomial: substitution arity mismatch");
    VarList target = images.empty() ? vars_ : images[0].vars();
    Polynomial r(target);
    for (const auto& [e, c] : terms_) {
        Polynomial t(target, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t *= images[i].pow(e[i]);
        r += t;
    }
    return r;
}

namespace {

struct Lexer {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) +
                                    ": " + msg + " in '" + s + "'");
    }
    std::string integer() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected integer");
        return s.substr(start, i - start);
    }
    std::string identifier() {
        skip_ws();
        size_t start = i;
        while (i < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            ++i;
        if (i == start) fail("expected variable name");
        return s.substr(start, i - start);
    }
};

}  // namespace

Polynomial Polynomial::parse(const VarList& vars, const std::string& text) {
    Lexer lx{text};
    Polynomial result(vars);
    bool first_term = true;
    while (!lx.done()) {
        int sign = 1;
        // Sign run before a term; the first term may omit it.
        bool saw_sign = false;
        while (lx.peek() == '+' || lx.peek() == '-') {
            if (lx.peek() == '-') sign = -sign;
            ++lx.i;
            saw_sign = true;
        }
        if (!first_term && !saw_sign) lx.fail("expected '+' or '-' between terms");
        if (lx.done()) lx.fail("dangling sign");
        first_term = false;

        Rational coeff(sign);
        bool have_factor = false;
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            std::string n = lx.integer();
            if (lx.peek() == '/') {
                ++lx.i;
                std::string d = lx.integer();
                if (mpz_class(d) == 0) lx.fail("zero denominator in coefficient");
                coeff = coeff * Rational(mpz_class(n), mpz_class(d));
            } else {
                coeff = coeff * Rational(mpz_class(n));
            }
            have_factor = true;
            if (lx.peek() == '*') ++lx.i;
        }

        std::vector<int> exps(vars->size(), 0);
        while (!lx.done() && std::isalpha(static_cast<unsigned char>(lx.peek()))) {
            std::string name = lx.identifier();
            auto it = std::find(vars->begin(), vars->end(), name);
            if (it == vars->end()) lx.fail("unknown variable '" + name + "'");
            int idx = static_cast<int>(it - vars->begin());
            long exp = 1;
            if (lx.peek() == '^') {
                ++lx.i;
                exp = std::stol(lx.integer());
                if (exp < 0) lx.fail("negative exponent");
            }
            exps[idx] += static_cast<int>(exp);
            have_factor = true;
            if (lx.peek() == '*') {
                ++lx.i;
                if (lx.done()) lx.fail("dangling '*'");
            }
        }
        if (!have_factor) lx.fail("expected term");
        result.add_term(exps, coeff);
    }
    if (first_term) throw std::invalid_argument("polynomial parse error: empty input");
    return result;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool constant = expvec_degree(e) == 0;
        bool unit = (a == Rational(1));
        if (!unit || constant) out << a.str();
        bool need_star = !unit || constant;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << (*vars_)[i];
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

}  // namespace canring
