#include "canring/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>
#include <tuple>

#include "canring/linalg.hpp"

namespace canring {

namespace {

// Exact elimination is only attempted when the Koszul block fits these
// limits; beyond them the mod-p count is reported with a note.

using SparseQ = std::vector<std::pair<size_t, Rational>>;

bool enumerate_words(const std::vector<OracleGenerator>& gens, long d, long max_count,
                     std::vector<Word>& out) {
    out.clear();
    Word cur;
    // Exponent of each generator chosen high-to-low, generators in index
    // order; abandons the enumeration when max_count is exceeded.
    std::function<bool(size_t, long)> rec = [&](size_t i, long rem) -> bool {
        if (rem == 0) {
            if (static_cast<long>(out.size()) >= max_count) return false;
            out.push_back(cur);
            return true;
        }
        if (i >= gens.size()) return true;
        long e = gens[i].degree;
        for (long p = rem / e; p >= 0; --p) {
            if (p > 0) cur.powers[i] = p;
            bool ok = rec(i + 1, rem - p * e);
            if (p > 0) cur.powers.erase(i);
            if (!ok) return false;
        }
        return true;
    };
    return rec(0, d);
}

Word word_mul(const Word& a, const Word& b) {
    Word r = a;
    for (const auto& [i, p] : b.powers) r.powers[i] += p;
    return r;
}

}  // namespace

OracleCaps OracleCaps::from_env() {
    OracleCaps caps;
    const char* env = std::getenv("CANRING_CAPS");
    if (!env) return caps;
    std::stringstream ss{std::string(env)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        long val = 0;
        try {
            val = std::stol(item.substr(eq + 1));
        } catch (...) {
            continue;
        }
        if (val <= 0) continue;
        if (key == "words") caps.max_words = val;
        if (key == "dmax") caps.max_dmax = val;
        if (key == "exactrows") caps.exact_max_rows = val;
        if (key == "exactcols") caps.exact_max_cols = val;
    }
    return caps;
}

long OracleReport::max_generator_degree() const {
    return generators.empty() ? 0 : generators.rbegin()->first;
}

long OracleReport::max_relation_degree() const {
    return relations.empty() ? 0 : relations.rbegin()->first;
}

long OracleReport::total_generators() const {
    long n = 0;
    for (const auto& [d, c] : generators) n += c;
    return n;
}

long OracleReport::total_relations() const {
    long n = 0;
    for (const auto& [d, c] : relations) n += c;
    return n;
}

long graded_dimension(const SectionRing& R, long d) { return R.dim(d); }

OracleReport oracle_generators(const SectionRing& R, long d_max, const OracleCaps& caps) {
    OracleReport rep;
    rep.d_max = std::max(0L, d_max);
    if (rep.d_max > caps.max_dmax) {
        rep.d_max = caps.max_dmax;
        rep.capped = true;
        rep.notes.push_back("sweep horizon clamped to the dmax cap (" +
                            std::to_string(caps.max_dmax) + ")");
    }
    const auto vars = R.variety().vars;
    for (long d = 1; d <= rep.d_max; ++d) {
        long dim_d = R.dim(d);
        if (dim_d == 0) continue;
        IntEchelon ech(static_cast<size_t>(dim_d));
        long rows_fed = 0;
        bool full = false;
        bool capped_here = false;
        // Span of products of lower pieces; richest pairs first so the early
        // exit at full rank triggers quickly.
        for (long e = d / 2; e >= 1 && !full && !capped_here; --e) {
            const auto& A = R.h_basis(e);
            const auto& B = R.h_basis(d - e);
            if (A.empty() || B.empty()) continue;
            for (size_t i = 0; i < A.size() && !full && !capped_here; ++i) {
                Polynomial ha = Polynomial::monomial(vars, A[i], Rational(1));
                size_t j0 = (2 * e == d) ? i : 0;  // commutative: skip mirrored pairs
                for (size_t j = j0; j < B.size(); ++j) {
                    if (rows_fed >= caps.max_words) {
                        capped_here = true;
                        break;
                    }
                    Polynomial hb = Polynomial::monomial(vars, B[j], Rational(1));
                    ++rows_fed;
                    if (ech.add_row(R.coordinates_h(d, R.multiply_h(e, ha, d - e, hb))) &&
                        static_cast<long>(ech.rank()) == dim_d) {
                        full = true;
                        break;
                    }
                }
            }
        }
        if (capped_here) {
            // A truncated product span would overstate the new generators, so
            // the sweep stops at the last complete degree.
            rep.capped = true;
            rep.d_max = d - 1;
            rep.notes.push_back("generator search capped at degree " + std::to_string(d) +
                                " after " + std::to_string(rows_fed) +
                                " product rows; report covers degrees below it");
            break;
        }
        if (full) continue;
        long fresh = 0;
        const auto& basis = R.h_basis(d);
        for (size_t j = 0; j < basis.size(); ++j) {
            ZVec unit(static_cast<size_t>(dim_d), 0);
            unit[j] = 1;
            if (ech.add_row(std::move(unit))) {
                rep.generator_elements.push_back(
                    {d, Polynomial::monomial(vars, basis[j], Rational(1))});
                ++fresh;
                if (static_cast<long>(ech.rank()) == dim_d) break;
            }
        }
        assert(static_cast<long>(ech.rank()) == dim_d);
        if (fresh > 0) rep.generators[d] = fresh;
    }
    return rep;
}

void oracle_relations(const SectionRing& R, OracleReport& rep, const OracleCaps& caps) {
    rep.relations.clear();
    rep.relation_degrees_modp_only.clear();
    const auto& gens = rep.generator_elements;
    if (gens.empty()) return;
    const size_t g = gens.size();
    std::vector<long> e(g);
    for (size_t t = 0; t < g; ++t) e[t] = gens[t].degree;
    const auto vars = R.variety().vars;

    for (long d = 2; d <= rep.d_max; ++d) {
        // Koszul block layout: one column block per generator, width
        // dim R_{d - e_t}.
        std::vector<size_t> off(g, 0);
        std::vector<long> bdim(g, 0);
        size_t cols = 0;
        for (size_t t = 0; t < g; ++t) {
            off[t] = cols;
            if (e[t] <= d) {
                bdim[t] = R.dim(d - e[t]);
                cols += static_cast<size_t>(bdim[t]);
            }
        }
        long K = static_cast<long>(cols) - R.dim(d);
        assert(K >= 0);  // generators span every piece through the horizon
        if (K == 0) continue;

        // Sparse product coordinates, cached by (generator, b-degree, b-index):
        // the same product w_g * b appears in every pair containing g.
        std::map<std::tuple<size_t, long, size_t>, SparseQ> cache;
        auto prod_coords = [&](size_t gi, long bd, size_t bidx) -> const SparseQ& {
            auto key = std::make_tuple(gi, bd, bidx);
            auto it = cache.find(key);
            if (it != cache.end()) return it->second;
            Polynomial b = Polynomial::monomial(vars, R.h_basis(bd)[bidx], Rational(1));
            Polynomial p = R.multiply_h(bd, b, e[gi], gens[gi].h);
            return cache.emplace(key, R.coordinates_h_sparse(bd + e[gi], p)).first->second;
        };

        // Rows of delta2: for the pair (s, t) and b in R_{d-e_s-e_t}, the row
        // carries -w_t*b in block s and +w_s*b in block t.
        long rows_fed = 0;
        enum class FeedStop { Done, Capped, Target };
        auto feed = [&](auto&& sink) -> FeedStop {
            for (size_t s = 0; s + 1 < g; ++s) {
                for (size_t t = s + 1; t < g; ++t) {
                    long bd = d - e[s] - e[t];
                    if (bd < 0 || R.dim(bd) == 0) continue;
                    for (size_t bi = 0; bi < static_cast<size_t>(R.dim(bd)); ++bi) {
                        if (rows_fed >= caps.max_words) return FeedStop::Capped;
                        ++rows_fed;
                        SparseQ row;
                        const SparseQ& wt = prod_coords(t, bd, bi);  // lands in block s
                        const SparseQ& ws = prod_coords(s, bd, bi);  // lands in block t
                        row.reserve(wt.size() + ws.size());
                        for (const auto& [c, v] : wt) row.emplace_back(off[s] + c, -v);
                        for (const auto& [c, v] : ws) row.emplace_back(off[t] + c, v);
                        if (!sink(row)) return FeedStop::Target;
                    }
                }
            }
            return FeedStop::Done;
        };

        ModEchelon mod(cols);
        bool mod_clean = true;  // no denominator hit the prime
        FeedStop stop = feed([&](const SparseQ& row) {
            bool grew = false;
            if (!mod.add_row_rational(row, grew)) mod_clean = false;
            return static_cast<long>(mod.rank()) < K;
        });
        if (stop == FeedStop::Capped) {
            rep.capped = true;
            rep.notes.push_back("relation search capped at degree " + std::to_string(d) +
                                " after " + std::to_string(rows_fed) +
                                " rows; relation counts cover degrees below it");
            break;
        }
        assert(static_cast<long>(mod.rank()) <= K);
        if (mod_clean && static_cast<long>(mod.rank()) == K) continue;  // Tor_1 = 0 certified

        // Mod-p rank fell short: relations are likely present. Confirm with
        // exact elimination when the block is small enough.
        long total_rows = rows_fed;
        if (static_cast<long>(cols) <= caps.exact_max_cols && total_rows <= caps.exact_max_rows) {
            IntEchelon exact(cols);
            rows_fed = 0;
            FeedStop es = feed([&](const SparseQ& row) {
                ZVec dense(cols, 0);
                mpz_class lcm = 1;
                for (const auto& [c, v] : row)
                    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.den().get_mpz_t());
                for (const auto& [c, v] : row) dense[c] = v.num() * (lcm / v.den());
                exact.add_row(std::move(dense));
                return static_cast<long>(exact.rank()) < K;
            });
            (void)es;
            long rank_q = static_cast<long>(exact.rank());
            assert(rank_q <= K);
            assert(!mod_clean || rank_q >= static_cast<long>(mod.rank()));
            if (K - rank_q > 0) rep.relations[d] = K - rank_q;
        } else {
            long cand = K - static_cast<long>(mod.rank());
            rep.relations[d] = cand;
            rep.relation_degrees_modp_only.push_back(d);
            rep.notes.push_back("relation count at degree " + std::to_string(d) +
                                " is a mod-p upper bound (block " + std::to_string(total_rows) +
                                " rows x " + std::to_string(cols) +
                                " cols exceeds the exact elimination limits)");
        }
    }
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        default: return "INCONCLUSIVE";
    }
}

VerifyOutcome verify_bounds(const SectionRing& R, long generator_bound, long relation_bound,
                            long d_max, bool check_relations, const OracleCaps& caps) {
    VerifyOutcome out;
    out.report = oracle_generators(R, d_max, caps);
    if (check_relations) oracle_relations(R, out.report, caps);

    for (const auto& [d, c] : out.report.generators) {
        if (d > generator_bound) {
            out.verdict = Verdict::Fail;
            out.witness_degree = d;
            out.witness_kind = "generator";
            return out;
        }
    }
    bool uncertified_violation = false;
    if (check_relations) {
        const auto& modp = out.report.relation_degrees_modp_only;
        for (const auto& [d, c] : out.report.relations) {
            if (d <= relation_bound) continue;
            if (std::find(modp.begin(), modp.end(), d) != modp.end()) {
                // A mod-p candidate above the bound is not a certified witness.
                uncertified_violation = true;
                continue;
            }
            out.verdict = Verdict::Fail;
            out.witness_degree = d;
            out.witness_kind = "relation";
            return out;
        }
    }
    if (out.report.capped || uncertified_violation) {
        out.verdict = Verdict::Inconclusive;
        if (uncertified_violation)
            out.report.notes.push_back(
                "a mod-p relation candidate lies above the claimed bound; exact "
                "confirmation was out of reach");
        return out;
    }
    out.verdict = Verdict::Pass;
    return out;
}

long Word::degree(const std::vector<OracleGenerator>& gens) const {
    long d = 0;
    for (const auto& [i, p] : powers) d += gens.at(i).degree * p;
    return d;
}

Polynomial evaluate_word(const SectionRing& R, const std::vector<OracleGenerator>& gens,
                         const Word& w) {
    Polynomial acc = R.one();
    long deg = 0;
    for (const auto& [i, p] : w.powers) {
        for (long k = 0; k < p; ++k) {
            acc = R.multiply_h(deg, acc, gens[i].degree, gens[i].h);
            deg += gens[i].degree;
        }
    }
    return acc;
}

std::vector<Word> words_of_degree(const std::vector<OracleGenerator>& gens, long d) {
    std::vector<Word> out;
    enumerate_words(gens, d, std::numeric_limits<long>::max(), out);
    return out;
}

std::vector<WordCombo> word_relations(const SectionRing& R,
                                      const std::vector<OracleGenerator>& gens, long d_max,
                                      const OracleCaps& caps, bool* capped_out,
                                      std::map<long, long>* counts_out) {
    std::vector<WordCombo> minimal;
    bool capped = false;
    for (long d = 2; d <= d_max && !capped; ++d) {
        std::vector<Word> W;
        if (!enumerate_words(gens, d, caps.max_words, W)) {
            capped = true;
            break;
        }
        if (W.empty()) continue;
        std::map<Word, size_t> windex;
        for (size_t j = 0; j < W.size(); ++j) windex[W[j]] = j;

        // Kernel of the evaluation map out of the word space.
        long dim_d = R.dim(d);
        QMat M(static_cast<size_t>(dim_d), QVec(W.size(), Rational(0)));
        for (size_t j = 0; j < W.size(); ++j) {
            QVec c = R.coordinates_h(d, evaluate_word(R, gens, W[j]));
            for (long r = 0; r < dim_d; ++r) M[static_cast<size_t>(r)][j] = c[static_cast<size_t>(r)];
        }
        QMat ker = kernel_basis(M, W.size());
        if (ker.empty()) continue;

        // Lower minimal relations shifted by words of the complementary
        // degree span the non-minimal part of the kernel.
        IntEchelon shifts(W.size());
        long shift_rows = 0;
        for (const WordCombo& rel : minimal) {
            std::vector<Word> Phi;
            if (!enumerate_words(gens, d - rel.degree, caps.max_words, Phi)) {
                capped = true;
                break;
            }
            for (const Word& phi : Phi) {
                if (shift_rows >= caps.max_words) {
                    capped = true;
                    break;
                }
                ++shift_rows;
                QVec v(W.size(), Rational(0));
                for (const auto& [coef, w] : rel.terms) v[windex.at(word_mul(w, phi))] += coef;
                shifts.add_row(v);
            }
            if (capped) break;
        }
        if (capped) break;

        long cnt = 0;
        for (const QVec& k : ker) {
            if (!shifts.add_row(k)) continue;
            WordCombo combo;
            combo.degree = d;
            bool negate = false;
            for (size_t j = 0; j < W.size(); ++j) {
                if (k[j].is_zero()) continue;
                if (combo.terms.empty()) negate = k[j].num() < 0;
                combo.terms.emplace_back(negate ? -k[j] : k[j], W[j]);
            }
            minimal.push_back(std::move(combo));
            ++cnt;
        }
        if (counts_out && cnt > 0) (*counts_out)[d] = cnt;
    }
    if (capped_out) *capped_out = capped;
    return minimal;
}

}  // namespace canring
