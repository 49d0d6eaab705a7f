#pragma once

#include <map>
#include <string>
#include <vector>

#include "canring/sections.hpp"

namespace canring {

// Work limits for the brute-force passes. words caps the number of rows (or
// candidate words) examined per degree in the relation searches; dmax caps
// the sweep horizon; the exact_* pair bounds the block size that a short
// mod-p rank is re-run under exact integer elimination (larger blocks keep
// the mod-p count, flagged in relation_degrees_modp_only). Overridable via
// CANRING_CAPS="words=<n>,dmax=<n>,exactrows=<n>,exactcols=<n>".
struct OracleCaps {
    long max_words = 200000;
    long max_dmax = 64;
    long exact_max_cols = 2000;
    long exact_max_rows = 30000;

    static OracleCaps from_env();
};

struct OracleGenerator {
    long degree = 0;
    Polynomial h;  // numerator monomial in the h-space of that degree
};

struct OracleReport {
    long d_max = 0;
    bool capped = false;
    std::map<long, long> generators;  // degree -> count of new minimal generators
    std::map<long, long> relations;   // degree -> count of new minimal relations
    std::vector<OracleGenerator> generator_elements;
    std::vector<std::string> notes;
    // Degrees whose relation count is a mod-p upper bound rather than an
    // exactly confirmed value; bound verdicts treat these as uncertified.
    std::vector<long> relation_degrees_modp_only;

    long max_generator_degree() const;
    long max_relation_degree() const;
    long total_generators() const;
    long total_relations() const;
};

// Graded dimension dim R_d.
long graded_dimension(const SectionRing& R, long d);

// Minimal generator degrees up to d_max: at each degree the span of products
// of lower graded pieces is completed to the full piece by h-basis monomials;
// each monomial that grows the span is a new minimal generator.
OracleReport oracle_generators(const SectionRing& R, long d_max, const OracleCaps& caps = {});

// Minimal relation counts per degree for the generator set already stored in
// rep, written into rep.relations. The count at degree d is
//   K_d - rank(delta2_d),   K_d = sum_t dim R_{d-e_t} - dim R_d,
// the first syzygy count of the surjection from the free module on the
// generators. rank(delta2) is first certified by a sparse elimination mod a
// word-sized prime (reduction can only lower rank, so hitting K_d proves
// Tor_1 = 0 exactly); degrees where the mod-p rank falls short rerun with
// exact integer elimination when the block sizes allow, and otherwise keep
// the mod-p count with a note.
void oracle_relations(const SectionRing& R, OracleReport& rep, const OracleCaps& caps = {});

enum class Verdict { Pass, Fail, Inconclusive };

const char* verdict_name(Verdict v);

struct VerifyOutcome {
    Verdict verdict = Verdict::Pass;
    long witness_degree = -1;     // violating degree when verdict == Fail
    std::string witness_kind;     // "generator" or "relation"
    OracleReport report;
};

// Runs the oracle to d_max and compares against the claimed bounds. A capped
// sweep that found no violation is Inconclusive, never Pass.
VerifyOutcome verify_bounds(const SectionRing& R, long generator_bound, long relation_bound,
                            long d_max, bool check_relations, const OracleCaps& caps = {});

// Monomial word in a generator list: exponents keyed by generator index.
struct Word {
    std::map<size_t, long> powers;

    long degree(const std::vector<OracleGenerator>& gens) const;
    bool operator==(const Word& o) const { return powers == o.powers; }
    bool operator<(const Word& o) const { return powers < o.powers; }
};

// Evaluates the word as an h-space element of its degree.
Polynomial evaluate_word(const SectionRing& R, const std::vector<OracleGenerator>& gens,
                         const Word& w);

// All words of degree exactly d, deterministic order.
std::vector<Word> words_of_degree(const std::vector<OracleGenerator>& gens, long d);

struct WordCombo {
    long degree = 0;
    std::vector<std::pair<Rational, Word>> terms;  // evaluates to zero
};

// Explicit minimal relations by degree, found as kernel vectors of the word
// evaluation map that are independent of lower relations shifted by words.
// Slower than oracle_relations but produces elements; used by the
// presentation assembler and as an independent cross-check of the counts.
std::vector<WordCombo> word_relations(const SectionRing& R,
                                      const std::vector<OracleGenerator>& gens, long d_max,
                                      const OracleCaps& caps, bool* capped_out = nullptr,
                                      std::map<long, long>* counts_out = nullptr);

}  // namespace canring
