#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "canring/cones.hpp"
#include "canring/polynomial.hpp"
#include "canring/rational.hpp"
#include "canring/variety.hpp"

namespace canring {

// Everything the degree-bound formulas produce for one divisor, including
// the intermediate quantities the formulas are built from.
struct BoundReport {
    std::string kind;  // effective | projective | hirzebruch | trivial | univariate | degenerate
    bool degenerate = false;

    Rational generator_bound{0};
    Rational relation_bound{0};
    long generator_floor = 0;
    long relation_floor = 0;

    std::vector<Rational> deg;                            // deg D, one entry per Pic slot
    std::vector<long> ell;                                // l_i per component
    std::vector<std::tuple<size_t, size_t, long>> ell_pair;  // (i, j, l_{i,j})
    long rho = 0, tau = 0;                                // Hirzebruch
    Rational chi{0};
    Rational psi{0};
    std::vector<long> ray_degrees;
    std::vector<std::string> warnings;
    std::vector<std::string> notes;
};

// Effective projective divisors: the classical bound (max k_i, 2 max k_i).
// Sharp for a single component; with several components whose denominators
// do not divide one another the true generation degree can exceed it
// (already (1/2)V(x0) + (1/3)V(x1) on P^2 needs a generator at degree 6),
// so effective_presentation searches up to lcm(k_i) instead.
std::pair<long, long> effective_bounds(const QDivisor& D);

// Ghost-completed projective divisors of positive degree: generator bound
// sum l_i a_i, relation bound max(2 sum l_i a_i, max(a_i)/deg D + sum l_i a_i)
// as an exact rational.
std::pair<long, Rational> proj_bounds(const QDivisor& D);

// 2 (sum of ray degrees - 1).
long chi_bound(const std::vector<Ray>& rays);

// max(a_i)/deg D + sum l_i a_i.
Rational psi_bound_proj(const QDivisor& D);

Rational combine_bounds(const Rational& chi, const Rational& psi);

// The unique beta with beta(f_0, ..., f_m) = f, written in slot variables
// z_0..z_m; requires the linear forms to be independent.
Polynomial rewrite_in_basis(const Polynomial& f, const std::vector<Polynomial>& basis);

long hirz_rho(const QDivisor& D);
long hirz_tau(const QDivisor& D);
std::pair<long, long> hirz_bounds(const QDivisor& D);

// Full dispatch: classifies the divisor (including the degenerate degree
// cases), ghost-completes when the general-position machinery needs it, and
// fills in every applicable field.
BoundReport bound_report(const QDivisor& D);

}  // namespace canring
