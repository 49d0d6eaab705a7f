#pragma once

#include <optional>
#include <string>
#include <vector>

#include "canring/polynomial.hpp"
#include "canring/rational.hpp"

namespace canring {

enum class VarietyType { Projective, Hirzebruch };

// The two ambient families: P^m with coordinates x0..xm (Pic = Z, all
// coordinates in degree 1), and the Hirzebruch surface F_m with Cox
// coordinates u, v, z, w of bidegrees (1,0), (1,0), (m,1), (0,1).
struct Variety {
    VarietyType type = VarietyType::Projective;
    int m = 1;
    VarList vars;

    static Variety projective(int m);
    static Variety hirzebruch(int m);

    int num_vars() const { return static_cast<int>(vars->size()); }
    int class_rank() const { return type == VarietyType::Projective ? 1 : 2; }

    // Degree (resp. bidegree) of a monomial exponent vector.
    std::vector<long> monomial_class(const std::vector<int>& exp) const;

    // Degree of a homogeneous polynomial; throws if terms disagree.
    std::vector<long> poly_class(const Polynomial& f) const;

    // dim H^0(X, O(cls)); 0 for classes with no sections.
    long h0(const std::vector<long>& cls) const;

    // All monomial exponent vectors of the given class, in grlex-descending
    // order for projective space and (z-exponent, then grlex) order for
    // Hirzebruch surfaces. Size equals h0(cls).
    std::vector<std::vector<int>> monomials_of_class(const std::vector<long>& cls) const;

    bool operator==(const Variety& o) const { return type == o.type && m == o.m; }
};

// dim H^0(P^m, O(e)) = C(m+e, m) for e >= 0, else 0.
long h0_proj(int m, long e);

// dim H^0(F_m, O(A,B)) = sum_{c=0}^{B} max(0, A - m*c + 1) for B >= 0, else 0.
long h0_hirz(int m, long A, long B);

long binomial(long n, long k);

// One component alpha * V(f) of a Q-divisor. f is homogeneous (bihomogeneous
// on F_m); alpha = coeff is in lowest terms by construction of Rational.
struct Component {
    Polynomial poly;
    Rational coeff;
};

struct QDivisor {
    Variety X;
    std::vector<Component> comps;

    size_t size() const { return comps.size(); }

    std::vector<long> comp_class(size_t i) const { return X.poly_class(comps[i].poly); }

    // Q-degree of D: sum alpha_i * class(f_i), one entry per Pic generator.
    std::vector<Rational> degree() const;

    long floor_coeff(size_t i, long d) const;          // floor(d * alpha_i)
    std::vector<long> floor_class(long d) const;       // class of floor(d*D)
    long dim_degree(long d) const;                     // dim R_d

    // Numerator scaling exponents: an element of R_d is a polynomial
    // numerator of class sum_i E_i(d) * class(f_i) divisible by each
    // f_i^{F_i(d)}, over the denominator prod_i f_i^{E_i(d)}.
    long E(size_t i, long d) const;                    // max(0, floor(d*alpha_i))
    long F(size_t i, long d) const;                    // max(0, -floor(d*alpha_i))

    bool all_coeffs_positive() const;
    bool all_coeffs_nonnegative() const;
};

// Whether the leading components already form a frame: on P^m, components
// 0..m are linear with linearly independent forms; on F_m, components 0..3
// have bidegrees (1,0),(1,0),(m,1),(0,1), the two (1,0) forms independent,
// and the (m,1) form has nonzero z coefficient (for m = 0, slots 2 and 3
// instead carry two independent (0,1)-forms).
bool has_frame(const QDivisor& D);

// Append zero-coefficient components (ghosts) so a frame exists, then reorder
// components so the frame occupies the leading indices (stable on the rest).
// Idempotent on framed divisors. Names of appended polynomials are reported
// through `added` when non-null.
QDivisor ghost_complete(const QDivisor& D, std::vector<std::string>* added = nullptr);

}  // namespace canring
