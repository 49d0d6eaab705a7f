#pragma once

#include <string>
#include <utility>
#include <vector>

#include "canring/convergents.hpp"
#include "canring/oracle.hpp"
#include "canring/variety.hpp"

namespace canring {

// One generator of the section ring. As a section it is exactly
// Section{degree, numerator}: the rational function u^degree * numerator /
// prod_i f_i^{E_i(degree)}. For a single-component divisor that denominator
// collapses to f^pole_order and the numerator is the theorem's monomial (or
// reduced form); assembled multi-component generators carry the full
// numerator instead.
struct Generator {
    long component = -1;    // index into the divisor's components; -1 when no
                            // single component owns it (the unit u)
    size_t convergent = 0;  // index into the component's convergent chain
    long degree = 1;
    long pole_order = 0;    // c of the convergent: pole order against the
                            // owning component's hypersurface
    Polynomial numerator;
};

// G collapses a convergent-index gap >= 2, L sorts numerators at equal or
// adjacent indices; Cross marks relations found by kernel search (across
// components, or within a hypersurface component of degree >= 2).
enum class RelationKind { G, L, Cross };

const char* relation_kind_name(RelationKind k);

// lhs - sum(rhs) evaluates to zero in the ring. G and L always have a single
// rhs term with coefficient 1; kernel-found relations may not. Words index
// into Presentation::generators.
struct Relation {
    RelationKind kind = RelationKind::Cross;
    long degree = 0;
    Word lhs;
    std::vector<std::pair<Rational, Word>> rhs;
};

struct Presentation {
    QDivisor divisor;
    long generator_bound = 0;  // claimed bound on generator degrees
    long relation_bound = 0;   // claimed bound on relation degrees
    std::vector<Generator> generators;
    std::vector<Relation> relations;
    bool relations_capped = false;  // kernel search hit a cap; relations incomplete
    std::vector<std::string> notes;
};

// All v in Z_{>=0}^{m+1} with sum c and v_k = 0, graded-lex descending;
// count = binomial(m + c - 1, c).
std::vector<std::vector<int>> class_S(long c, long m, size_t k);

// True iff every nonzero index of v is <= every nonzero index of w (the
// zero vector precedes and is preceded by everything).
bool precede(const std::vector<int>& v, const std::vector<int>& w);

// The unique (y, z) with y + z = v + w, deg y = ci, deg z = cj, y preceding
// z: sort the multiset of coordinate indices, first ci entries form y.
std::pair<std::vector<int>, std::vector<int>> sorted_split(const std::vector<int>& v,
                                                           const std::vector<int>& w, long ci,
                                                           long cj);

// Minimal presentation of R(P^m, alpha*V(x_k)): generators F_i^v with
// numerators from class_S at each convergent, G relations for index gaps
// >= 2, L relations for equal/adjacent indices whose numerators are not
// sorted. Generator degrees <= q, relation degrees <= 2q.
Presentation one_hyperplane_presentation(const Rational& alpha, size_t k, long m);

// Same for alpha*V(f) with f of degree p >= 1. For p = 1 this is the
// hyperplane presentation with distinguished coordinate = leading variable
// of f. For p >= 2 the generators at convergent i are u^{d_i} g / f^{c_i}
// with g over the monomials of degree c_i*p not divisible by the leading
// monomial of f (a complement basis mod f); relations come from the capped
// kernel search up to degree 2q.
Presentation veronese_presentation(const Rational& alpha, const Polynomial& f, long m,
                                   const OracleCaps& caps = {});

// Presentation for an arbitrary effective projective divisor. Components are
// folded in order: at each convergent degree of the current component, a
// basis of the running divisor's graded piece is completed over the
// subalgebra generated so far, so later families only contribute what the
// earlier ones miss, then degrees off the convergent grids are completed up
// to lcm(k_i) (sufficient: floors split exactly across multiples of the lcm).
// A final sweep against full-ring products keeps the generator multiset
// minimal. Relations by kernel search up to 2*lcm(k_i).
Presentation effective_presentation(const QDivisor& D, const OracleCaps& caps = {});

// Reduces a word with G until no index gap remains, then L, repeating until
// stable: at most two adjacent convergent indices, numerators sorted.
// Requires a single-component presentation with closed-form rules. The
// seeded overload shuffles rule scan order (confluence checks); both throw
// on a rewriting cycle, which the theory excludes.
Word normal_form(const Word& word, const Presentation& pres);
Word normal_form(const Word& word, const Presentation& pres, unsigned long rule_seed);

// The generators as oracle elements (degree + h-space numerator).
std::vector<OracleGenerator> presentation_oracle_generators(const Presentation& pres);

// Exact check that lhs - sum(rhs) vanishes in R.
bool relation_holds(const SectionRing& R, const Presentation& pres, const Relation& rel);

// Display forms: "u^3 * x1 / x0^1"-style for a generator, product of named
// generators for a word.
std::string format_generator(const Presentation& pres, size_t index);
std::string format_word(const Presentation& pres, const Word& w);

}  // namespace canring
