#include "canring/variety.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "canring/linalg.hpp"

namespace canring {

Variety Variety::projective(int m) {
    if (m < 1) throw std::invalid_argument("projective: need m >= 1");
    std::vector<std::string> names;
    names.reserve(m + 1);
    for (int i = 0; i <= m; ++i) names.push_back("x" + std::to_string(i));
    Variety X;
    X.type = VarietyType::Projective;
    X.m = m;
    X.vars = make_vars(names);
    return X;
}

Variety Variety::hirzebruch(int m) {
    if (m < 0) throw std::invalid_argument("hirzebruch: need m >= 0");
    Variety X;
    X.type = VarietyType::Hirzebruch;
    X.m = m;
    X.vars = make_vars({"u", "v", "z", "w"});
    return X;
}

std::vector<long> Variety::monomial_class(const std::vector<int>& exp) const {
    if (static_cast<int>(exp.size()) != num_vars())
        throw std::invalid_argument("monomial_class: wrong exponent length");
    if (type == VarietyType::Projective) {
        long e = 0;
        for (int a : exp) e += a;
        return {e};
    }
    // u, v, z, w have bidegrees (1,0), (1,0), (m,1), (0,1).
    long A = exp[0] + exp[1] + static_cast<long>(m) * exp[2];
    long B = exp[2] + exp[3];
    return {A, B};
}

std::vector<long> Variety::poly_class(const Polynomial& f) const {
    if (f.is_zero()) throw std::invalid_argument("poly_class: zero polynomial has no class");
    std::vector<long> cls;
    bool first = true;
    for (const auto& [exp, coeff] : f.terms()) {
        std::vector<long> c = monomial_class(exp);
        if (first) {
            cls = c;
            first = false;
        } else if (c != cls) {
            throw std::invalid_argument("poly_class: polynomial is not homogeneous for the grading");
        }
    }
    return cls;
}

long binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    mpz_class r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    if (!r.fits_slong_p()) throw std::overflow_error("binomial: result out of range");
    return r.get_si();
}

long h0_proj(int m, long e) {
    if (e < 0) return 0;
    return binomial(m + e, m);
}

long h0_hirz(int m, long A, long B) {
    if (B < 0) return 0;
    long total = 0;
    for (long c = 0; c <= B; ++c) {
        long t = A - static_cast<long>(m) * c + 1;
        if (t > 0) total += t;
    }
    return total;
}

long Variety::h0(const std::vector<long>& cls) const {
    if (static_cast<int>(cls.size()) != class_rank())
        throw std::invalid_argument("h0: wrong class rank");
    if (type == VarietyType::Projective) return h0_proj(m, cls[0]);
    return h0_hirz(m, cls[0], cls[1]);
}

namespace {

void compositions_desc(long deg, int parts, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(static_cast<int>(deg));
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long a = deg; a >= 0; --a) {
        cur.push_back(static_cast<int>(a));
        compositions_desc(deg - a, parts - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> Variety::monomials_of_class(const std::vector<long>& cls) const {
    std::vector<std::vector<int>> out;
    if (type == VarietyType::Projective) {
        long e = cls[0];
        if (e < 0) return out;
        std::vector<int> cur;
        compositions_desc(e, m + 1, cur, out);
        return out;
    }
    long A = cls[0], B = cls[1];
    if (B < 0) return out;
    for (long c = 0; c <= B; ++c) {
        long rest = A - static_cast<long>(m) * c;
        if (rest < 0) continue;
        for (long a = rest; a >= 0; --a)
            out.push_back({static_cast<int>(a), static_cast<int>(rest - a),
                           static_cast<int>(c), static_cast<int>(B - c)});
    }
    return out;
}

std::vector<Rational> QDivisor::degree() const {
    std::vector<Rational> deg(X.class_rank(), Rational(0));
    for (const Component& c : comps) {
        std::vector<long> cls = X.poly_class(c.poly);
        for (int r = 0; r < X.class_rank(); ++r) deg[r] = deg[r] + c.coeff * Rational(cls[r]);
    }
    return deg;
}

long QDivisor::floor_coeff(size_t i, long d) const {
    mpz_class fl = (Rational(d) * comps[i].coeff).floor();
    if (!fl.fits_slong_p()) throw std::overflow_error("floor_coeff: out of range");
    return fl.get_si();
}

std::vector<long> QDivisor::floor_class(long d) const {
    std::vector<long> cls(X.class_rank(), 0);
    for (size_t i = 0; i < comps.size(); ++i) {
        long fc = floor_coeff(i, d);
        std::vector<long> c = X.poly_class(comps[i].poly);
        for (int r = 0; r < X.class_rank(); ++r) cls[r] += fc * c[r];
    }
    return cls;
}

long QDivisor::dim_degree(long d) const { return X.h0(floor_class(d)); }

long QDivisor::E(size_t i, long d) const { return std::max(0L, floor_coeff(i, d)); }

long QDivisor::F(size_t i, long d) const { return std::max(0L, -floor_coeff(i, d)); }

bool QDivisor::all_coeffs_positive() const {
    for (const Component& c : comps)
        if (c.coeff.sign() <= 0) return false;
    return true;
}

bool QDivisor::all_coeffs_nonnegative() const {
    for (const Component& c : comps)
        if (c.coeff.sign() < 0) return false;
    return true;
}

namespace {

// Coefficient vector of f in the variables at `idx`, provided every term of f
// is a pure power of one of them; nullopt otherwise.
std::optional<QVec> form_coords(const Polynomial& f, const std::vector<int>& idx) {
    QVec v(idx.size(), Rational(0));
    for (const auto& [exp, coeff] : f.terms()) {
        bool placed = false;
        for (size_t j = 0; j < idx.size(); ++j) {
            if (exp[static_cast<size_t>(idx[j])] == 1) {
                v[j] = coeff;
                placed = true;
                break;
            }
        }
        if (!placed) return std::nullopt;
    }
    return v;
}

bool is_class(const Variety& X, const Polynomial& f, const std::vector<long>& cls) {
    if (f.is_zero()) return false;
    return X.poly_class(f) == cls;
}

// z-coefficient of an (m,1)-form on F_m (m >= 1); forms are c*z + w*g(u,v).
Rational z_coefficient(const Polynomial& f) {
    std::vector<int> ez = {0, 0, 1, 0};
    auto it = f.terms().find(ez);
    return it == f.terms().end() ? Rational(0) : it->second;
}

}  // namespace

bool has_frame(const QDivisor& D) {
    const Variety& X = D.X;
    if (X.type == VarietyType::Projective) {
        size_t need = static_cast<size_t>(X.m) + 1;
        if (D.comps.size() < need) return false;
        QMat rows;
        std::vector<int> all_idx;
        for (int j = 0; j <= X.m; ++j) all_idx.push_back(j);
        for (size_t i = 0; i < need; ++i) {
            const Polynomial& f = D.comps[i].poly;
            if (!is_class(X, f, {1})) return false;
            auto v = form_coords(f, all_idx);
            if (!v) return false;
            rows.push_back(*v);
        }
        return rank(rows) == need;
    }

    if (D.comps.size() < 4) return false;
    if (!is_class(X, D.comps[0].poly, {1, 0})) return false;
    if (!is_class(X, D.comps[1].poly, {1, 0})) return false;
    QMat uv;
    auto c0 = form_coords(D.comps[0].poly, {0, 1});
    auto c1 = form_coords(D.comps[1].poly, {0, 1});
    if (!c0 || !c1) return false;
    uv.push_back(*c0);
    uv.push_back(*c1);
    if (rank(uv) != 2) return false;

    if (X.m == 0) {
        // Slots 2 and 3: two (0,1)-forms spanning <z, w>.
        if (!is_class(X, D.comps[2].poly, {0, 1})) return false;
        if (!is_class(X, D.comps[3].poly, {0, 1})) return false;
        auto c2 = form_coords(D.comps[2].poly, {2, 3});
        auto c3 = form_coords(D.comps[3].poly, {2, 3});
        if (!c2 || !c3) return false;
        QMat zw{*c2, *c3};
        return rank(zw) == 2;
    }
    if (!is_class(X, D.comps[2].poly, {static_cast<long>(X.m), 1})) return false;
    if (z_coefficient(D.comps[2].poly).is_zero()) return false;
    return is_class(X, D.comps[3].poly, {0, 1});
}

QDivisor ghost_complete(const QDivisor& D, std::vector<std::string>* added) {
    if (added) added->clear();
    if (has_frame(D)) return D;

    const Variety& X = D.X;
    QDivisor out = D;
    std::vector<size_t> frame;
    std::vector<bool> used(out.comps.size(), false);

    auto append_ghost = [&](const Polynomial& g) {
        out.comps.push_back({g, Rational(0)});
        used.push_back(true);
        frame.push_back(out.comps.size() - 1);
        if (added) added->push_back(g.str());
    };

    if (X.type == VarietyType::Projective) {
        std::vector<int> all_idx;
        for (int j = 0; j <= X.m; ++j) all_idx.push_back(j);
        IntEchelon ech(static_cast<size_t>(X.m) + 1);
        // Existing linear components first, in order.
        for (size_t i = 0; i < out.comps.size(); ++i) {
            if (frame.size() == static_cast<size_t>(X.m) + 1) break;
            if (!is_class(X, out.comps[i].poly, {1})) continue;
            auto v = form_coords(out.comps[i].poly, all_idx);
            if (v && ech.add_row(*v)) {
                frame.push_back(i);
                used[i] = true;
            }
        }
        // Then coordinates, in order, as ghosts.
        for (int j = 0; j <= X.m && frame.size() < static_cast<size_t>(X.m) + 1; ++j) {
            Polynomial xj = Polynomial::variable(X.vars, j);
            auto v = form_coords(xj, all_idx);
            if (ech.add_row(*v)) append_ghost(xj);
        }
    } else {
        // Slots 0 and 1: independent (1,0)-forms.
        IntEchelon uv(2);
        for (size_t i = 0; i < out.comps.size() && frame.size() < 2; ++i) {
            if (!is_class(X, out.comps[i].poly, {1, 0})) continue;
            auto v = form_coords(out.comps[i].poly, {0, 1});
            if (v && uv.add_row(*v)) {
                frame.push_back(i);
                used[i] = true;
            }
        }
        for (int j = 0; j < 2 && frame.size() < 2; ++j) {
            Polynomial g = Polynomial::variable(X.vars, j);
            auto v = form_coords(g, {0, 1});
            if (uv.add_row(*v)) append_ghost(g);
        }

        if (X.m == 0) {
            // Slots 2 and 3: independent (0,1)-forms.
            IntEchelon zw(2);
            for (size_t i = 0; i < out.comps.size() && frame.size() < 4; ++i) {
                if (used[i] || !is_class(X, out.comps[i].poly, {0, 1})) continue;
                auto v = form_coords(out.comps[i].poly, {2, 3});
                if (v && zw.add_row(*v)) {
                    frame.push_back(i);
                    used[i] = true;
                }
            }
            for (int j = 2; j < 4 && frame.size() < 4; ++j) {
                Polynomial g = Polynomial::variable(X.vars, j);
                auto v = form_coords(g, {2, 3});
                if (zw.add_row(*v)) append_ghost(g);
            }
        } else {
            // Slot 2: an (m,1)-form with nonzero z coefficient.
            bool have2 = false;
            for (size_t i = 0; i < out.comps.size() && !have2; ++i) {
                if (used[i] || !is_class(X, out.comps[i].poly, {static_cast<long>(X.m), 1}))
                    continue;
                if (z_coefficient(out.comps[i].poly).is_zero()) continue;
                frame.push_back(i);
                used[i] = true;
                have2 = true;
            }
            if (!have2) append_ghost(Polynomial::variable(X.vars, 2));
            // Slot 3: a (0,1)-form (necessarily proportional to w).
            bool have3 = false;
            for (size_t i = 0; i < out.comps.size() && !have3; ++i) {
                if (used[i] || !is_class(X, out.comps[i].poly, {0, 1})) continue;
                frame.push_back(i);
                used[i] = true;
                have3 = true;
            }
            if (!have3) append_ghost(Polynomial::variable(X.vars, 3));
        }
    }

    // Frame first, remaining components after in their original order.
    QDivisor reordered;
    reordered.X = X;
    for (size_t i : frame) reordered.comps.push_back(out.comps[i]);
    std::vector<bool> in_frame(out.comps.size(), false);
    for (size_t i : frame) in_frame[i] = true;
    for (size_t i = 0; i < out.comps.size(); ++i)
        if (!in_frame[i]) reordered.comps.push_back(out.comps[i]);

    assert(has_frame(reordered));
    return reordered;
}

}  // namespace canring
