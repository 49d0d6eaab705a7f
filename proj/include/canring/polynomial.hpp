#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canring/rational.hpp"

namespace canring {

using VarList = std::shared_ptr<const std::vector<std::string>>;

inline VarList make_vars(std::vector<std::string> names) {
    return std::make_shared<const std::vector<std::string>>(std::move(names));
}

// Graded lexicographic order on exponent vectors: higher total degree wins,
// ties broken left to right with the larger exponent winning. This is the one
// monomial order used everywhere (leading terms, divmod, complement bases).
struct GrLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Total degree of an exponent vector.
long expvec_degree(const std::vector<int>& e);

// Sparse multivariate polynomial over Rational with a fixed variable list.
// All arguments of a binary operation must share the same variable list
// (checked by value); exponents are non-negative.
class Polynomial {
public:
    using TermMap = std::map<std::vector<int>, Rational, GrLexLess>;

    Polynomial() = default;
    explicit Polynomial(VarList vars) : vars_(std::move(vars)) {}
    Polynomial(VarList vars, const Rational& constant);

    static Polynomial monomial(VarList vars, std::vector<int> exps, const Rational& coeff = Rational(1));
    static Polynomial variable(const VarList& vars, int index);
    // Parses the shared term grammar: terms joined by '+'/'-', each term an
    // optional integer or p/q coefficient and '*'-separated var^exp factors.
    static Polynomial parse(const VarList& vars, const std::string& text);

    const VarList& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    // Max total degree over terms; -1 for the zero polynomial.
    long total_degree() const;
    bool is_homogeneous() const;
    bool is_monomial() const { return terms_.size() == 1; }

    // Largest term under the global order. Throws on zero.
    const std::pair<const std::vector<int>, Rational>& leading_term() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(long e) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Division with remainder against a single divisor under the global
    // order: *this = q*g + r where no term of r is divisible by LT(g).
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& g) const;

    // Substitutes images[i] for variable i; images share one variable list.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    void add_term(const std::vector<int>& exps, const Rational& coeff);

    // Deterministic rendering, leading term first, e.g. "2*x0^2 - 1/3*x1*x2".
    std::string str() const;

private:
    void check_compatible(const Polynomial& o) const;

    VarList vars_;
    TermMap terms_;
};

}  // namespace canring
