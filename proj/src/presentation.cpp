#include "canring/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "canring/linalg.hpp"

namespace canring {

namespace {

Polynomial rebase(const Polynomial& f, const VarList& vars) {
    Polynomial out(vars);
    for (const auto& [e, c] : f.terms()) {
        if (e.size() != vars->size())
            throw std::invalid_argument("polynomial arity does not match the variety");
        out += Polynomial::monomial(vars, e, c);
    }
    return out;
}

size_t leading_variable(const Polynomial& f) {
    const auto& e = f.leading_term().first;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) return i;
    throw std::invalid_argument("constant form has no leading variable");
}

// Tracks per-degree bases of the subalgebra generated by an evolving element
// list inside the full ring. Every degree-d word with >= 2 factors is a
// generator times a lower word, so the piece at d is spanned by the
// degree-d elements plus g * piece(d - deg g) over all g.
class SubalgebraSpan {
public:
    explicit SubalgebraSpan(const SectionRing& R) : R_(R) {}

    void add(long d, const Polynomial& h) {
        gens_[d].push_back(h);
        cache_.clear();
    }

    const std::vector<Polynomial>& piece(long d) {
        auto it = cache_.find(d);
        if (it != cache_.end()) return it->second;
        std::vector<Polynomial> out;
        long dim = R_.dim(d);
        if (dim > 0) {
            IntEchelon ech(static_cast<size_t>(dim));
            auto consider = [&](const Polynomial& h) {
                if (ech.add_row(R_.coordinates_h(d, h))) out.push_back(h);
            };
            auto gi = gens_.find(d);
            if (gi != gens_.end())
                for (const Polynomial& h : gi->second) consider(h);
            for (const auto& [e, list] : gens_) {
                if (e >= d) break;
                for (const Polynomial& g : list) {
                    const std::vector<Polynomial> lower = piece(d - e);  // copy: recursion may grow cache_
                    for (const Polynomial& b : lower) consider(R_.multiply_h(d - e, b, e, g));
                }
            }
        }
        return cache_.emplace(d, std::move(out)).first->second;
    }

private:
    const SectionRing& R_;
    std::map<long, std::vector<Polynomial>> gens_;
    std::map<long, std::vector<Polynomial>> cache_;
};

// Generation cap for the multi-component search: L = lcm of the denominators.
// L*alpha_i is integral, so floor((L+e)*alpha_i) = L*alpha_i + floor(e*alpha_i)
// exactly and R_{L+e} = R_L * R_e (complete linear systems multiply onto
// complete linear systems on projective space). max k_i is NOT enough here:
// (1/2)V(x0) + (1/3)V(x1) on P^2 needs the generator u^6 x2^5 / (x0^3 x1^2)
// at degree lcm(2,3) = 6, since lower products only span the
// (x0,x1)-ideal part of each graded piece.
long component_lcm(const QDivisor& D, const std::vector<size_t>& active) {
    mpz_class l = 1;
    for (size_t ci : active) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), D.comps[ci].coeff.den().get_mpz_t());
    assert(l.fits_slong_p());
    return l.get_si();
}

// Closed-form presentation for a single linear component (index comp of D)
// with distinguished coordinate k: the x_k -> f substitution is a graded
// automorphism, so the coordinate-hyperplane combinatorics carry over
// verbatim with denominator f.
Presentation hyperplane_core(const QDivisor& D, size_t comp, size_t k) {
    const Rational& alpha = D.comps[comp].coeff;
    const long m = D.X.m;
    const auto chain = lower_convergents(alpha);
    const long q = chain.back().d;

    Presentation P;
    P.divisor = D;
    P.generator_bound = q;
    P.relation_bound = 2 * q;

    std::vector<std::vector<std::vector<int>>> S(chain.size());
    std::map<std::pair<size_t, std::vector<int>>, size_t> index;
    for (size_t i = 0; i < chain.size(); ++i) {
        S[i] = class_S(chain[i].c, m, k);
        assert(static_cast<long>(S[i].size()) == binomial(m + chain[i].c - 1, chain[i].c));
        // Numerators live over f^{E(d_i)}; for alpha > 1 the integer-part
        // convergents have pole order c_i < floor(d_i * alpha), so pad with f.
        Polynomial pad(D.X.vars, Rational(1));
        for (long t = chain[i].c; t < (alpha * Rational(chain[i].d)).floor().get_si(); ++t)
            pad *= D.comps[comp].poly;
        for (const auto& v : S[i]) {
            index[{i, v}] = P.generators.size();
            Polynomial num = Polynomial::monomial(D.X.vars, v, Rational(1));
            num *= pad;
            P.generators.push_back({static_cast<long>(comp), i, chain[i].d, chain[i].c,
                                    std::move(num)});
        }
    }

    // G relations: every index gap >= 2 collapses through the canonical
    // two-convergent decomposition of the summed degrees.
    for (size_t i = 0; i + 2 < chain.size(); ++i) {
        for (size_t j = i + 2; j < chain.size(); ++j) {
            TwoConvergentSplit ts = two_convergent_decompose(chain[i].c + chain[j].c,
                                                             chain[i].d + chain[j].d, alpha);
            // The mediant slope sits strictly between the endpoint slopes, so
            // the decomposition never references convergent i or j itself.
            assert(ts.h > i);
            assert(ts.h + 1 < j || ts.kappa2 == 0);
            for (const auto& v : S[i]) {
                for (const auto& w : S[j]) {
                    std::vector<size_t> idx;
                    for (size_t a = 0; a <= static_cast<size_t>(m); ++a)
                        idx.insert(idx.end(), static_cast<size_t>(v[a] + w[a]), a);
                    Word rhsw;
                    size_t pos = 0;
                    auto take = [&](size_t conv, long count) {
                        for (long t = 0; t < count; ++t) {
                            std::vector<int> y(static_cast<size_t>(m) + 1, 0);
                            for (long s = 0; s < chain[conv].c; ++s) ++y[idx[pos++]];
                            ++rhsw.powers[index.at({conv, y})];
                        }
                    };
                    take(ts.h, ts.kappa1);
                    take(ts.h + 1, ts.kappa2);
                    assert(pos == idx.size());
                    Relation rel;
                    rel.kind = RelationKind::G;
                    rel.degree = chain[i].d + chain[j].d;
                    ++rel.lhs.powers[index.at({i, v})];
                    ++rel.lhs.powers[index.at({j, w})];
                    rel.rhs = {{Rational(1), std::move(rhsw)}};
                    P.relations.push_back(std::move(rel));
                }
            }
        }
    }

    // L relations: unsorted numerator pairs at equal or adjacent indices.
    // The sorted split differing from the input pair is equivalent to the
    // "v not preceding w, not pure commutativity" condition.
    for (size_t i = 0; i < chain.size(); ++i) {
        for (size_t a = 0; a < S[i].size(); ++a) {
            for (size_t b = a; b < S[i].size(); ++b) {
                auto [y, z] = sorted_split(S[i][a], S[i][b], chain[i].c, chain[i].c);
                bool same = (S[i][a] == y && S[i][b] == z) || (S[i][a] == z && S[i][b] == y);
                if (same) continue;
                Relation rel;
                rel.kind = RelationKind::L;
                rel.degree = 2 * chain[i].d;
                ++rel.lhs.powers[index.at({i, S[i][a]})];
                ++rel.lhs.powers[index.at({i, S[i][b]})];
                Word rw;
                ++rw.powers[index.at({i, y})];
                ++rw.powers[index.at({i, z})];
                rel.rhs = {{Rational(1), std::move(rw)}};
                P.relations.push_back(std::move(rel));
            }
        }
        if (i + 1 >= chain.size()) continue;
        for (const auto& v : S[i]) {
            for (const auto& w : S[i + 1]) {
                auto [y, z] = sorted_split(v, w, chain[i].c, chain[i + 1].c);
                if (y == v) continue;
                Relation rel;
                rel.kind = RelationKind::L;
                rel.degree = chain[i].d + chain[i + 1].d;
                ++rel.lhs.powers[index.at({i, v})];
                ++rel.lhs.powers[index.at({i + 1, w})];
                Word rw;
                ++rw.powers[index.at({i, y})];
                ++rw.powers[index.at({i + 1, z})];
                rel.rhs = {{Rational(1), std::move(rw)}};
                P.relations.push_back(std::move(rel));
            }
        }
    }

    for (const Relation& r : P.relations) assert(r.degree <= P.relation_bound);
    return P;
}

RelationKind classify_combo(const Presentation& P, const Relation& rel) {
    if (rel.rhs.size() != 1 || !(rel.rhs[0].first == Rational(1))) return RelationKind::Cross;
    long lhs_len = 0;
    std::set<long> comps;
    std::vector<size_t> convs;
    auto scan = [&](const Word& w, bool lhs) {
        for (const auto& [gi, p] : w.powers) {
            const Generator& g = P.generators[gi];
            if (g.component >= 0) comps.insert(g.component);
            if (lhs) {
                lhs_len += p;
                for (long t = 0; t < p; ++t) convs.push_back(g.convergent);
            }
        }
    };
    scan(rel.lhs, true);
    scan(rel.rhs[0].second, false);
    if (comps.size() > 1 || lhs_len != 2) return RelationKind::Cross;
    assert(convs.size() == 2);
    size_t gap = convs[0] > convs[1] ? convs[0] - convs[1] : convs[1] - convs[0];
    return gap >= 2 ? RelationKind::G : RelationKind::L;
}

Relation combo_to_relation(const Presentation& P, const WordCombo& combo) {
    assert(!combo.terms.empty());
    Relation rel;
    rel.degree = combo.degree;
    rel.lhs = combo.terms[0].second;
    const Rational& c0 = combo.terms[0].first;
    for (size_t t = 1; t < combo.terms.size(); ++t)
        rel.rhs.emplace_back(-(combo.terms[t].first / c0), combo.terms[t].second);
    rel.kind = classify_combo(P, rel);
    return rel;
}

void kernel_relations(Presentation& P, const SectionRing& R, const OracleCaps& caps) {
    auto ogens = presentation_oracle_generators(P);
    bool capped = false;
    auto combos = word_relations(R, ogens, P.relation_bound, caps, &capped, nullptr);
    P.relations_capped = capped;
    if (capped)
        P.notes.push_back("relation kernel search hit the word cap; the relation list covers "
                          "lower degrees only");
    for (const WordCombo& c : combos) P.relations.push_back(combo_to_relation(P, c));
}

// Complement-basis presentation for a single component of degree p >= 2.
Presentation veronese_core(const QDivisor& D, size_t comp, const OracleCaps& caps) {
    const Rational& alpha = D.comps[comp].coeff;
    const Polynomial& f = D.comps[comp].poly;
    const long p = D.X.poly_class(f)[0];
    const long m = D.X.m;
    const auto chain = lower_convergents(alpha);
    const long q = chain.back().d;

    Presentation P;
    P.divisor = D;
    P.generator_bound = q;
    P.relation_bound = 2 * q;

    const auto& lm = f.leading_term().first;
    for (size_t i = 0; i < chain.size(); ++i) {
        long cp = chain[i].c * p;
        long count = 0;
        for (const auto& e : D.X.monomials_of_class({cp})) {
            bool divisible = true;
            for (size_t a = 0; a < e.size(); ++a)
                if (e[a] < lm[a]) {
                    divisible = false;
                    break;
                }
            if (divisible) continue;
            P.generators.push_back({static_cast<long>(comp), i, chain[i].d, chain[i].c,
                                    Polynomial::monomial(D.X.vars, e, Rational(1))});
            ++count;
        }
        // complement of f * Sym^{(c-1)p} inside Sym^{cp}
        assert(count == h0_proj(static_cast<int>(m), cp) -
                            (chain[i].c > 0 ? h0_proj(static_cast<int>(m), cp - p) : 0));
    }

    kernel_relations(P, SectionRing(D), caps);
    return P;
}

bool word_contains(const Word& w, const Word& sub) {
    for (const auto& [i, p] : sub.powers) {
        auto it = w.powers.find(i);
        if (it == w.powers.end() || it->second < p) return false;
    }
    return true;
}

Word word_apply(const Word& w, const Relation& rel) {
    Word r = w;
    for (const auto& [i, p] : rel.lhs.powers) {
        auto it = r.powers.find(i);
        it->second -= p;
        if (it->second == 0) r.powers.erase(it);
    }
    for (const auto& [i, p] : rel.rhs[0].second.powers) r.powers[i] += p;
    return r;
}

Word nf_impl(const Word& word, const Presentation& pres, std::mt19937_64* rng) {
    long comp = -2;
    for (const Generator& g : pres.generators) {
        if (g.component < 0) continue;
        if (comp == -2) comp = g.component;
        else if (comp != g.component)
            throw std::invalid_argument("normal_form: single-component presentation required");
    }
    std::vector<size_t> Gs, Ls;
    for (size_t i = 0; i < pres.relations.size(); ++i) {
        switch (pres.relations[i].kind) {
            case RelationKind::G: Gs.push_back(i); break;
            case RelationKind::L: Ls.push_back(i); break;
            default:
                throw std::invalid_argument("normal_form: closed-form G/L rules required");
        }
    }
    Word w = word;
    std::set<Word> seen{w};
    for (;;) {
        if (rng) {
            std::shuffle(Gs.begin(), Gs.end(), *rng);
            std::shuffle(Ls.begin(), Ls.end(), *rng);
        }
        const Relation* hit = nullptr;
        for (size_t ri : Gs) {
            if (word_contains(w, pres.relations[ri].lhs)) {
                hit = &pres.relations[ri];
                break;
            }
        }
        if (!hit) {
            for (size_t ri : Ls) {
                if (word_contains(w, pres.relations[ri].lhs)) {
                    hit = &pres.relations[ri];
                    break;
                }
            }
        }
        if (!hit) break;
        w = word_apply(w, *hit);
        if (!seen.insert(w).second) throw std::logic_error("normal_form: rewriting cycled");
    }
    // Canonical shape: all convergent indices within an adjacent pair.
    size_t lo = SIZE_MAX, hi = 0;
    for (const auto& [gi, p] : w.powers) {
        lo = std::min(lo, pres.generators[gi].convergent);
        hi = std::max(hi, pres.generators[gi].convergent);
    }
    assert(w.powers.empty() || hi - lo <= 1);
    return w;
}

}  // namespace

const char* relation_kind_name(RelationKind k) {
    switch (k) {
        case RelationKind::G: return "G";
        case RelationKind::L: return "L";
        default: return "cross";
    }
}

std::vector<std::vector<int>> class_S(long c, long m, size_t k) {
    if (c < 0) throw std::invalid_argument("class_S: negative degree");
    std::vector<size_t> slots;
    for (size_t i = 0; i <= static_cast<size_t>(m); ++i)
        if (i != k) slots.push_back(i);
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(m) + 1, 0);
    // first slot takes the largest share first: graded-lex descending
    std::function<void(size_t, long)> rec = [&](size_t s, long rem) {
        if (s + 1 == slots.size()) {
            cur[slots[s]] = static_cast<int>(rem);
            out.push_back(cur);
            cur[slots[s]] = 0;
            return;
        }
        for (long t = rem; t >= 0; --t) {
            cur[slots[s]] = static_cast<int>(t);
            rec(s + 1, rem - t);
        }
        cur[slots[s]] = 0;
    };
    if (slots.empty()) {
        if (c == 0) out.push_back(cur);
        return out;  // m = 0: only the empty numerator exists
    }
    rec(0, c);
    return out;
}

bool precede(const std::vector<int>& v, const std::vector<int>& w) {
    if (v.size() != w.size()) throw std::invalid_argument("precede: arity mismatch");
    long maxv = -1, minw = -1;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] > 0) maxv = static_cast<long>(i);
    for (size_t i = 0; i < w.size(); ++i)
        if (w[i] > 0) {
            minw = static_cast<long>(i);
            break;
        }
    if (maxv < 0 || minw < 0) return true;
    return maxv <= minw;
}

std::pair<std::vector<int>, std::vector<int>> sorted_split(const std::vector<int>& v,
                                                           const std::vector<int>& w, long ci,
                                                           long cj) {
    if (v.size() != w.size()) throw std::invalid_argument("sorted_split: arity mismatch");
    assert(expvec_degree(v) == ci && expvec_degree(w) == cj);
    std::vector<size_t> idx;
    for (size_t i = 0; i < v.size(); ++i) idx.insert(idx.end(), static_cast<size_t>(v[i] + w[i]), i);
    std::vector<int> y(v.size(), 0), z(v.size(), 0);
    for (size_t t = 0; t < idx.size(); ++t) ++(t < static_cast<size_t>(ci) ? y : z)[idx[t]];
    assert(precede(y, z));
    return {y, z};
}

Presentation one_hyperplane_presentation(const Rational& alpha, size_t k, long m) {
    if (!(Rational(0) < alpha)) throw std::invalid_argument("coefficient must be positive");
    Variety X = Variety::projective(static_cast<int>(m));
    if (k > static_cast<size_t>(m)) throw std::invalid_argument("coordinate index out of range");
    QDivisor D{X, {Component{Polynomial::variable(X.vars, static_cast<int>(k)), alpha}}};
    return hyperplane_core(D, 0, k);
}

Presentation veronese_presentation(const Rational& alpha, const Polynomial& f, long m,
                                   const OracleCaps& caps) {
    if (!(Rational(0) < alpha)) throw std::invalid_argument("coefficient must be positive");
    Variety X = Variety::projective(static_cast<int>(m));
    Polynomial g = rebase(f, X.vars);
    long p = X.poly_class(g)[0];  // throws when f is not homogeneous
    QDivisor D{X, {Component{g, alpha}}};
    if (p == 1) return hyperplane_core(D, 0, leading_variable(g));
    return veronese_core(D, 0, caps);
}

Presentation effective_presentation(const QDivisor& D, const OracleCaps& caps) {
    if (D.X.type != VarietyType::Projective)
        throw std::invalid_argument("effective presentations exist for projective divisors only");
    std::vector<size_t> active;
    for (size_t i = 0; i < D.size(); ++i) {
        if (D.comps[i].coeff < Rational(0))
            throw std::invalid_argument("effective presentation requires nonnegative coefficients");
        if (Rational(0) < D.comps[i].coeff) active.push_back(i);
    }

    if (active.empty()) {
        // R = k[u]
        Presentation P;
        P.divisor = D;
        P.generator_bound = 1;
        P.relation_bound = 2;
        SectionRing R(D);
        P.generators.push_back({-1, 0, 1, 0, R.one()});
        return P;
    }

    if (active.size() == 1) {
        size_t ci = active[0];
        long p = D.X.poly_class(D.comps[ci].poly)[0];
        if (p == 1) return hyperplane_core(D, ci, leading_variable(D.comps[ci].poly));
        return veronese_core(D, ci, caps);
    }

    SectionRing R(D);
    const long genk = component_lcm(D, active);
    Presentation P;
    P.divisor = D;
    P.generator_bound = genk;
    P.relation_bound = 2 * genk;

    SubalgebraSpan span(R);
    P.generators.push_back({-1, 0, 1, 0, R.one()});
    span.add(1, R.one());

    // Fold components in: at each convergent degree of the current
    // component, complete a basis of the running divisor's graded piece over
    // what the subalgebra already spans. Sections of the running divisor
    // embed in the full ring by multiplying on the poles of the components
    // not yet processed.
    std::vector<Component> prefix;
    for (size_t pos = 0; pos < active.size(); ++pos) {
        prefix.push_back(D.comps[active[pos]]);
        QDivisor Dp{D.X, prefix};
        SectionRing Rp(Dp);
        const auto chain = lower_convergents(D.comps[active[pos]].coeff);
        for (size_t i = 1; i < chain.size(); ++i) {
            long d = chain[i].d;
            Polynomial shift = R.one();
            for (size_t rest = pos + 1; rest < active.size(); ++rest) {
                long e = D.E(active[rest], d);
                if (e > 0) shift *= R.f_power(active[rest], e);
            }
            IntEchelon ech(static_cast<size_t>(R.dim(d)));
            for (const Polynomial& b : span.piece(d)) ech.add_row(R.coordinates_h(d, b));
            for (const auto& exp : Rp.h_basis(d)) {
                Polynomial cand = Polynomial::monomial(D.X.vars, exp, Rational(1)) * shift;
                if (!ech.add_row(R.coordinates_h(d, cand))) continue;
                P.generators.push_back(
                    {static_cast<long>(active[pos]), i, d, chain[i].c, cand});
                span.add(d, cand);
            }
        }
    }

    // Completion off the convergent grids: when the component denominators do
    // not divide one another, degrees where several floors jump at once carry
    // sections reachable from no single component's chain (see component_lcm).
    for (long d = 1; d <= genk; ++d) {
        long dim = R.dim(d);
        if (dim == 0) continue;
        IntEchelon ech(static_cast<size_t>(dim));
        for (const Polynomial& b : span.piece(d)) ech.add_row(R.coordinates_h(d, b));
        if (static_cast<long>(ech.rank()) == dim) continue;
        const auto& basis = R.h_basis(d);
        for (const auto& exp : basis) {
            Polynomial cand = Polynomial::monomial(D.X.vars, exp, Rational(1));
            if (!ech.add_row(R.coordinates_h(d, cand))) continue;
            P.generators.push_back({-1, 0, d, 0, cand});
            span.add(d, cand);
            P.notes.push_back("degree " + std::to_string(d) +
                              " needed a generator outside the convergent families");
        }
    }

    // Minimality sweep: a generator already covered by products of full
    // graded pieces (or by earlier generators of its degree) is dropped; the
    // survivors match the intrinsic minimal counts degree by degree.
    {
        std::map<long, std::vector<size_t>> by_deg;
        for (size_t gi = 0; gi < P.generators.size(); ++gi)
            by_deg[P.generators[gi].degree].push_back(gi);
        std::set<size_t> drop;
        for (const auto& [d, idxs] : by_deg) {
            long dim = R.dim(d);
            IntEchelon ech(static_cast<size_t>(dim));
            bool full = false;
            for (long e = d / 2; e >= 1 && !full; --e) {
                const auto& A = R.h_basis(e);
                const auto& B = R.h_basis(d - e);
                for (size_t i2 = 0; i2 < A.size() && !full; ++i2) {
                    Polynomial ha = Polynomial::monomial(D.X.vars, A[i2], Rational(1));
                    size_t j0 = (2 * e == d) ? i2 : 0;
                    for (size_t j2 = j0; j2 < B.size(); ++j2) {
                        Polynomial hb = Polynomial::monomial(D.X.vars, B[j2], Rational(1));
                        if (ech.add_row(R.coordinates_h(d, R.multiply_h(e, ha, d - e, hb))) &&
                            static_cast<long>(ech.rank()) == dim) {
                            full = true;
                            break;
                        }
                    }
                }
            }
            for (size_t gi : idxs) {
                if (!ech.add_row(R.coordinates_h(d, P.generators[gi].numerator)))
                    drop.insert(gi);
            }
            // products plus the degree's generators must span the piece
            assert(static_cast<long>(ech.rank()) == dim);
        }
        if (!drop.empty()) {
            std::vector<Generator> kept;
            for (size_t gi = 0; gi < P.generators.size(); ++gi)
                if (!drop.count(gi)) kept.push_back(std::move(P.generators[gi]));
            P.generators = std::move(kept);
        }
    }

    kernel_relations(P, R, caps);
    return P;
}

Word normal_form(const Word& word, const Presentation& pres) {
    return nf_impl(word, pres, nullptr);
}

Word normal_form(const Word& word, const Presentation& pres, unsigned long rule_seed) {
    std::mt19937_64 rng(rule_seed);
    return nf_impl(word, pres, &rng);
}

std::vector<OracleGenerator> presentation_oracle_generators(const Presentation& pres) {
    std::vector<OracleGenerator> v;
    v.reserve(pres.generators.size());
    for (const Generator& g : pres.generators) v.push_back({g.degree, g.numerator});
    return v;
}

bool relation_holds(const SectionRing& R, const Presentation& pres, const Relation& rel) {
    auto ogens = presentation_oracle_generators(pres);
    assert(rel.lhs.degree(ogens) == rel.degree);
    Polynomial diff = evaluate_word(R, ogens, rel.lhs);
    for (const auto& [c, w] : rel.rhs) {
        assert(w.degree(ogens) == rel.degree);
        diff -= evaluate_word(R, ogens, w).scaled(c);
    }
    return diff.is_zero();
}

std::string format_generator(const Presentation& pres, size_t index) {
    const Generator& g = pres.generators[index];
    const QDivisor& D = pres.divisor;
    std::ostringstream os;
    os << "u";
    if (g.degree != 1) os << "^" << g.degree;
    if (!(g.numerator == Polynomial(D.X.vars, Rational(1)))) {
        os << " * ";
        if (g.numerator.term_count() > 1)
            os << "(" << g.numerator.str() << ")";
        else
            os << g.numerator.str();
    }
    std::vector<std::pair<Polynomial, long>> den;
    for (size_t i = 0; i < D.size(); ++i) {
        long e = D.E(i, g.degree);
        if (e > 0) den.emplace_back(D.comps[i].poly, e);
    }
    if (den.size() == 1) {
        os << " / " << format_power_product(den);
    } else if (!den.empty()) {
        // Several pole factors: parenthesize so the / binds to all of them.
        os << " / (" << format_power_product(den) << ")";
    }
    return os.str();
}

std::string format_word(const Presentation& pres, const Word& w) {
    if (w.powers.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [gi, p] : w.powers) {
        if (!first) os << " * ";
        first = false;
        os << "F" << gi;
        if (p != 1) os << "^" << p;
    }
    (void)pres;
    return os.str();
}

}  // namespace canring
