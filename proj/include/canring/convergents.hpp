#pragma once

#include <utility>
#include <vector>

#include "canring/rational.hpp"

namespace canring {

// One point (c, d) of the lower boundary chain of alpha = p/q: the fraction
// c/d is a best lower approximation to alpha among denominators <= d.
struct Convergent {
    long c = 0;
    long d = 1;

    Rational value() const { return Rational(c, d); }
    bool operator==(const Convergent& o) const { return c == o.c && d == o.d; }
};

// Lower convergents of a nonnegative rational alpha = p/q in lowest terms:
// the lattice points on the boundary of the convex hull of
//   {(c, d) : d >= 1, c <= d * alpha}  together with (0, 0),
// listed by increasing denominator, starting at (0, 1) and ending at (p, q).
// Consecutive entries satisfy c_{i+1} d_i - c_i d_{i+1} = 1.
//
// For alpha <= 1 this is exactly the strict records of floor(d*alpha)/d for
// d = 1..q; for alpha > 1 the integer steps (j, 1), 1 <= j <= floor(alpha),
// are part of the chain.
std::vector<Convergent> lower_convergents(const Rational& alpha);

// Decomposition of a pair (c, d) with 0 <= c <= d*alpha against the lower
// convergents of alpha: writes
//   (c, d) = kappa1 * (c_h, d_h) + kappa2 * (c_{h+1}, d_{h+1})
// where h = max{ h : c_h / d_h <= c/d } (h = r-1, last index, exactly when
// c/d = alpha, in which case the second summand is unused and kappa2 = 0).
// Both coefficients are nonnegative integers by unimodularity.
struct TwoConvergentSplit {
    size_t h = 0;       // index into lower_convergents(alpha)
    long kappa1 = 0;    // multiplicity of convergent h
    long kappa2 = 0;    // multiplicity of convergent h+1 (0 when h is last)
};

TwoConvergentSplit two_convergent_decompose(long c, long d, const Rational& alpha);

}  // namespace canring
