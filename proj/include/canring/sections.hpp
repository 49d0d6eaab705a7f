#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "canring/linalg.hpp"
#include "canring/variety.hpp"

namespace canring {

// An element of the degree-d piece R_d = H^0(X, floor(d*D)): the rational
// function  num / prod_i f_i^{E_i(d)}  with E_i(d) = max(0, floor(d*alpha_i)),
// where num is a polynomial of class sum_i E_i(d)*class(f_i) divisible by
// f_i^{F_i(d)}, F_i(d) = max(0, -floor(d*alpha_i)).
struct Section {
    long d = 0;
    Polynomial num;
};

// Exact arithmetic in R(X, D). Internally each R_d is identified with the Cox
// graded piece of class floor(d*D) (the "h-space"): the section for h is
// h * prod f_i^{F_i(d)} / prod f_i^{E_i(d)}, and this correspondence is a
// linear isomorphism. Multiplication in h-coordinates picks up the factor
// prod_i f_i^{floor((d+e)*a_i) - floor(d*a_i) - floor(e*a_i)}, whose exponents
// are nonnegative by superadditivity of the floor.
class SectionRing {
public:
    explicit SectionRing(QDivisor D);

    const QDivisor& divisor() const { return D_; }
    const Variety& variety() const { return D_.X; }

    long dim(long d) const { return D_.dim_degree(d); }

    // Monomial basis of the h-space in degree d (cached).
    const std::vector<std::vector<int>>& h_basis(long d) const;

    Polynomial multiply_h(long da, const Polynomial& ha, long db, const Polynomial& hb) const;
    QVec coordinates_h(long d, const Polynomial& h) const;
    // Same coordinates as (index, value) pairs with ascending index; the
    // large elimination passes want rows proportional to the term count.
    std::vector<std::pair<size_t, Rational>> coordinates_h_sparse(long d, const Polynomial& h) const;

    Section from_h(long d, const Polynomial& h) const;
    Polynomial to_h(const Section& s) const;

    Section multiply(const Section& a, const Section& b) const;
    Section power(const Section& a, long k) const;
    QVec coordinates(const Section& s) const { return coordinates_h(s.d, to_h(s)); }

    Polynomial one() const { return Polynomial::monomial(D_.X.vars, std::vector<int>(D_.X.vars->size(), 0), Rational(1)); }
    Section unit() const { return Section{0, one()}; }

    // f_i^k, cached.
    const Polynomial& f_power(size_t i, long k) const;
    // prod_i f_i^{exps[i]}.
    Polynomial f_product(const std::vector<long>& exps) const;

private:
    QDivisor D_;
    mutable std::map<std::pair<size_t, long>, Polynomial> pow_cache_;
    mutable std::map<long, std::vector<std::vector<int>>> hbasis_cache_;
    mutable std::map<long, std::map<std::vector<int>, size_t, GrLexLess>> hindex_cache_;
};

// "x0^3", "(x0^2 + x1*x2)^2 * x1" style rendering of a product of powers.
// Factors with exponent 0 are dropped; an empty product renders as "1".
std::string format_power_product(const std::vector<std::pair<Polynomial, long>>& factors);

}  // namespace canring
