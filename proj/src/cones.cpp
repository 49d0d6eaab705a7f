#include "canring/cones.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "canring/linalg.hpp"

namespace canring {

namespace {

std::optional<long> as_long(const Rational& r) {
    if (r.den() != 1) return std::nullopt;
    if (!r.num().fits_slong_p()) throw std::overflow_error("lattice coordinate overflow");
    return r.num().get_si();
}

long coeff_den(const QDivisor& D, size_t i) {
    const mpz_class& den = D.comps[i].coeff.den();
    if (!den.fits_slong_p()) throw std::overflow_error("coefficient denominator overflow");
    return den.get_si();
}

long lcm_excluding(const QDivisor& D, size_t skip1, size_t skip2 = SIZE_MAX) {
    long l = 1;
    for (size_t j = 0; j < D.size(); ++j) {
        if (j == skip1 || j == skip2) continue;
        l = std::lcm(l, coeff_den(D, j));
    }
    return l;
}

void require_positive_degree(const QDivisor& D) {
    for (const Rational& d : D.degree())
        if (!(Rational(0) < d))
            throw std::invalid_argument("divisor degree must be positive in every slot");
}

std::vector<long> to_lattice(const std::vector<Rational>& v) {
    std::vector<long> out;
    out.reserve(v.size());
    for (const Rational& r : v) {
        auto l = as_long(r);
        if (!l) throw std::logic_error("expected an integral lattice point");
        out.push_back(*l);
    }
    return out;
}

// Exact solution of sum t_m cols[m] = b for linearly independent columns.
std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                   const std::vector<Rational>& b) {
    const size_t rows = b.size(), C = cols.size();
    std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(C + 1));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < C; ++c) M[r][c] = cols[c][r];
        M[r][C] = b[r];
    }
    std::vector<size_t> pivot_of_col(C, SIZE_MAX);
    size_t prow = 0;
    for (size_t c = 0; c < C && prow < rows; ++c) {
        size_t sel = SIZE_MAX;
        for (size_t r = prow; r < rows; ++r)
            if (!M[r][c].is_zero()) {
                sel = r;
                break;
            }
        if (sel == SIZE_MAX) continue;
        std::swap(M[prow], M[sel]);
        Rational inv = Rational(1) / M[prow][c];
        for (auto& x : M[prow]) x *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == prow || M[r][c].is_zero()) continue;
            Rational f = M[r][c];
            for (size_t cc = c; cc <= C; ++cc) M[r][cc] -= f * M[prow][cc];
        }
        pivot_of_col[c] = prow++;
    }
    for (size_t r = prow; r < rows; ++r)
        if (!M[r][C].is_zero()) return std::nullopt;
    std::vector<Rational> t(C, Rational(0));
    for (size_t c = 0; c < C; ++c) {
        if (pivot_of_col[c] == SIZE_MAX) {
            // dependent columns: caller must pass an independent set
            assert(false && "solve_columns: dependent columns");
            return std::nullopt;
        }
        t[c] = M[pivot_of_col[c]][C];
    }
    return t;
}

// a . y + c >= 0, strict when the flag is set
struct Ineq {
    std::vector<Rational> a;
    Rational c;
    bool strict = false;
};

bool fm_feasible(std::vector<Ineq> sys, size_t nvars) {
    for (size_t v = 0; v < nvars; ++v) {
        std::vector<Ineq> pos, neg, next;
        for (auto& q : sys) {
            if (Rational(0) < q.a[v]) pos.push_back(std::move(q));
            else if (q.a[v] < Rational(0)) neg.push_back(std::move(q));
            else next.push_back(std::move(q));
        }
        for (const Ineq& p : pos) {
            for (const Ineq& n : neg) {
                Ineq comb;
                comb.a.resize(nvars, Rational(0));
                Rational fp = -n.a[v], fn = p.a[v];
                for (size_t t = 0; t < nvars; ++t) comb.a[t] = p.a[t] * fp + n.a[t] * fn;
                comb.c = p.c * fp + n.c * fn;
                comb.strict = p.strict || n.strict;
                next.push_back(std::move(comb));
            }
        }
        sys = std::move(next);
        if (sys.size() > 200000)
            throw std::runtime_error("cone feasibility elimination exceeded capacity");
    }
    for (const Ineq& q : sys) {
        if (q.strict ? !(Rational(0) < q.c) : q.c < Rational(0)) return false;
    }
    return true;
}

// Feasibility of { sum t_m cols[m] = b, t >= 0, (t < 1 when box) }.
bool nonneg_solution_exists(const std::vector<std::vector<Rational>>& cols,
                            const std::vector<Rational>& b, bool box) {
    const size_t rows = b.size(), C = cols.size();
    if (C == 0) {
        for (const Rational& x : b)
            if (!x.is_zero()) return false;
        return true;
    }
    std::vector<std::vector<Rational>> M(rows, std::vector<Rational>(C + 1));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < C; ++c) M[r][c] = cols[c][r];
        M[r][C] = b[r];
    }
    std::vector<long> pivot_of_col(C, -1);
    size_t prow = 0;
    for (size_t c = 0; c < C && prow < rows; ++c) {
        size_t sel = SIZE_MAX;
        for (size_t r = prow; r < rows; ++r)
            if (!M[r][c].is_zero()) {
                sel = r;
                break;
            }
        if (sel == SIZE_MAX) continue;
        std::swap(M[prow], M[sel]);
        Rational inv = Rational(1) / M[prow][c];
        for (auto& x : M[prow]) x *= inv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == prow || M[r][c].is_zero()) continue;
            Rational f = M[r][c];
            for (size_t cc = 0; cc <= C; ++cc) M[r][cc] -= f * M[prow][cc];
        }
        pivot_of_col[c] = static_cast<long>(prow++);
    }
    for (size_t r = prow; r < rows; ++r)
        if (!M[r][C].is_zero()) return false;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < C; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);
    const size_t f = free_cols.size();
    // t_m(y) = t0[m] + sum_j N[m][j] y_j
    std::vector<Rational> t0(C, Rational(0));
    std::vector<std::vector<Rational>> N(C, std::vector<Rational>(f, Rational(0)));
    for (size_t c = 0; c < C; ++c) {
        if (pivot_of_col[c] < 0) continue;
        t0[c] = M[static_cast<size_t>(pivot_of_col[c])][C];
    }
    for (size_t j = 0; j < f; ++j) {
        N[free_cols[j]][j] = Rational(1);
        for (size_t c = 0; c < C; ++c)
            if (pivot_of_col[c] >= 0)
                N[c][j] = -M[static_cast<size_t>(pivot_of_col[c])][free_cols[j]];
    }
    std::vector<Ineq> sys;
    for (size_t m = 0; m < C; ++m) {
        sys.push_back({N[m], t0[m], false});
        if (box) {
            Ineq up;
            up.a.resize(f);
            for (size_t j = 0; j < f; ++j) up.a[j] = -N[m][j];
            up.c = Rational(1) - t0[m];
            up.strict = true;
            sys.push_back(std::move(up));
        }
    }
    return fm_feasible(std::move(sys), f);
}

std::vector<std::vector<Rational>> ray_columns(const std::vector<Ray>& rays) {
    std::vector<std::vector<Rational>> cols;
    cols.reserve(rays.size());
    for (const Ray& r : rays) {
        std::vector<Rational> c;
        c.reserve(r.point.size());
        for (long x : r.point) c.emplace_back(x);
        cols.push_back(std::move(c));
    }
    return cols;
}

size_t ray_rank(const std::vector<Ray>& rays) {
    if (rays.empty()) return 0;
    IntEchelon ech(rays[0].point.size());
    for (const Ray& r : rays) {
        std::vector<Rational> row;
        row.reserve(r.point.size());
        for (long x : r.point) row.emplace_back(x);
        ech.add_row(row);
    }
    return ech.rank();
}

}  // namespace

bool ConeSpec::contains(const std::vector<long>& point) const {
    if (point.size() != arity()) return false;
    long d = point[0];
    if (d < 0) return false;
    for (size_t i = 0; i < alphas.size(); ++i) {
        if (Rational(point[i + 1]) + Rational(d) * alphas[i] < Rational(0)) return false;
    }
    for (const auto& row : balance) {
        long long s = 0;
        for (size_t i = 0; i < row.size(); ++i) s += static_cast<long long>(row[i]) * point[i + 1];
        if (s != 0) return false;
    }
    return true;
}

ConeSpec build_sigma(const QDivisor& D) {
    require_positive_degree(D);
    ConeSpec spec;
    const int rank = D.X.class_rank();
    spec.balance.assign(static_cast<size_t>(rank), std::vector<long>(D.size(), 0));
    for (size_t i = 0; i < D.size(); ++i) {
        spec.alphas.push_back(D.comps[i].coeff);
        auto cls = D.comp_class(i);
        for (int r = 0; r < rank; ++r) spec.balance[static_cast<size_t>(r)][i] = cls[static_cast<size_t>(r)];
    }
    return spec;
}

std::vector<Ray> extremal_rays_proj(const QDivisor& D) {
    if (D.X.type != VarietyType::Projective)
        throw std::invalid_argument("extremal_rays_proj: projective divisor required");
    if (!has_frame(D)) throw std::invalid_argument("extremal_rays_proj: ghost-completed divisor required");
    require_positive_degree(D);
    ConeSpec spec = build_sigma(D);
    const size_t n = D.size();
    std::vector<Ray> rays;
    for (size_t i = 0; i < n; ++i) {
        long li = lcm_excluding(D, i);
        long ai = D.comp_class(i)[0];
        long deg = li * ai;
        std::vector<Rational> pt(n + 1, Rational(0));
        pt[0] = Rational(deg);
        Rational diag(0);
        for (size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            pt[j + 1] = -D.comps[j].coeff * Rational(deg);
            diag += D.comps[j].coeff * Rational(D.comp_class(j)[0]);
        }
        pt[i + 1] = Rational(li) * diag;
        Ray r{to_lattice(pt), "e_" + std::to_string(i), deg};
        if (r.degree <= 0 || !spec.contains(r.point))
            throw std::logic_error("extremal ray left the lattice: " + r.label);
        rays.push_back(std::move(r));
    }
    return rays;
}

TPartition t_partition(const QDivisor& D) {
    if (D.X.type != VarietyType::Hirzebruch)
        throw std::invalid_argument("t_partition: Hirzebruch divisor required");
    Rational Sa(0), Sb(0);
    for (size_t k = 0; k < D.size(); ++k) {
        auto cls = D.comp_class(k);
        Sa += D.comps[k].coeff * Rational(cls[0]);
        Sb += D.comps[k].coeff * Rational(cls[1]);
    }
    TPartition T;
    for (size_t i = 0; i < D.size(); ++i) {
        auto cls = D.comp_class(i);
        Rational lhs = Rational(cls[0]) * Sb, rhs = Rational(cls[1]) * Sa;
        if (lhs == rhs) T.t_eq.push_back(i);
        else if (rhs < lhs) T.t_plus.push_back(i);
        else T.t_minus.push_back(i);
    }
    return T;
}

std::vector<Rational> epsilon_ray(const QDivisor& D, size_t i) {
    if (D.X.type != VarietyType::Hirzebruch)
        throw std::invalid_argument("epsilon_ray: Hirzebruch divisor required");
    const size_t n = D.size();
    auto cls_i = D.comp_class(i);
    long wi = cls_i[0] + cls_i[1];
    if (wi <= 0) throw std::invalid_argument("epsilon_ray: component with zero total degree");
    std::vector<Rational> eps(n + 1, Rational(0));
    eps[0] = Rational(1);
    Rational sum(0);
    for (size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        auto cls = D.comp_class(j);
        eps[j + 1] = -D.comps[j].coeff;
        sum += D.comps[j].coeff * Rational(cls[0] + cls[1]);
    }
    eps[i + 1] = sum / Rational(wi);
    return eps;
}

std::vector<Ray> extremal_rays_hirz(const QDivisor& D, std::vector<std::string>* warnings) {
    if (D.X.type != VarietyType::Hirzebruch)
        throw std::invalid_argument("extremal_rays_hirz: Hirzebruch divisor required");
    if (!has_frame(D)) throw std::invalid_argument("extremal_rays_hirz: ghost-completed divisor required");
    require_positive_degree(D);
    ConeSpec spec = build_sigma(D);
    TPartition T = t_partition(D);
    const size_t n = D.size();

    // A_i: value of the a-balance row on epsilon_i; its sign reproduces the
    // partition, and epsilon_i lies on H exactly when it vanishes.
    std::vector<std::vector<Rational>> eps(n);
    std::vector<Rational> A(n);
    for (size_t i = 0; i < n; ++i) {
        eps[i] = epsilon_ray(D, i);
        Rational dot(0);
        for (size_t t = 0; t < n; ++t) dot += Rational(D.comp_class(t)[0]) * eps[i][t + 1];
        A[i] = dot;
    }
    for (size_t i : T.t_eq) assert(A[i].is_zero());
    for (size_t i : T.t_plus) assert(Rational(0) < A[i]);
    for (size_t i : T.t_minus) assert(A[i] < Rational(0));

    std::vector<Ray> rays;
    for (size_t i : T.t_eq) {
        auto cls = D.comp_class(i);
        long di = lcm_excluding(D, i) * std::gcd(cls[0], cls[1]);
        std::vector<Rational> pt(n + 1);
        for (size_t t = 0; t <= n; ++t) pt[t] = Rational(di) * eps[i][t];
        Ray r{to_lattice(pt), "e_" + std::to_string(i), di};
        if (r.degree <= 0 || !spec.contains(r.point))
            throw std::logic_error("extremal ray left the lattice: " + r.label);
        rays.push_back(std::move(r));
    }
    for (size_t i : T.t_plus) {
        for (size_t j : T.t_minus) {
            auto ci = D.comp_class(i), cj = D.comp_class(j);
            long det = ci[0] * cj[1] - cj[0] * ci[1];
            long dij = lcm_excluding(D, i, j) * det;
            if (dij <= 0) throw std::logic_error("nonpositive pairwise ray degree");
            // direct: the point of degree d_{i,j} on the ray where the
            // segment from epsilon_i to epsilon_j crosses H
            std::vector<Rational> pt(n + 1, Rational(0));
            Rational scale = Rational(dij) / (A[i] - A[j]);
            for (size_t t = 0; t <= n; ++t) pt[t] = scale * (-A[j] * eps[i][t] + A[i] * eps[j][t]);
            // closed form as printed, with sums over the other components
            Rational Sa2(0), Sb2(0);
            for (size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                auto ck = D.comp_class(k);
                Sa2 += D.comps[k].coeff * Rational(ck[0]);
                Sb2 += D.comps[k].coeff * Rational(ck[1]);
            }
            Rational den1 = Rational(ci[0] * cj[1] - ci[1] * cj[0]);
            Rational den2 = Rational(cj[0] * ci[1] - cj[1] * ci[0]);
            bool closed_matches = false;
            if (!den1.is_zero() && !den2.is_zero()) {
                Rational co_i = Rational(dij) * (Rational(cj[0]) * Sb2 - Rational(cj[1]) * Sa2) / den1;
                Rational co_j = Rational(dij) * (Rational(ci[0]) * Sb2 - Rational(ci[1]) * Sa2) / den2;
                closed_matches = true;
                for (size_t t = 0; t <= n && closed_matches; ++t)
                    closed_matches = (co_i * eps[i][t] + co_j * eps[j][t] == pt[t]);
            }
            std::string label = "e_{" + std::to_string(i) + "," + std::to_string(j) + "}";
            if (!closed_matches && warnings)
                warnings->push_back("closed form for " + label +
                                    " disagrees with the direct edge intersection; "
                                    "using the direct value");
            Ray r{to_lattice(pt), label, dij};
            if (!spec.contains(r.point))
                throw std::logic_error("extremal ray left the lattice: " + r.label);
            rays.push_back(std::move(r));
        }
    }
    return rays;
}

Decomposition canonical_decompose(const std::vector<long>& sigma, const std::vector<Ray>& rays) {
    const size_t R = rays.size();
    bool zero = std::all_of(sigma.begin(), sigma.end(), [](long x) { return x == 0; });
    if (R == 0) {
        if (zero) return {sigma, {}};
        throw std::invalid_argument("canonical_decompose: point outside the cone");
    }
    const size_t ambient = rays[0].point.size();
    if (sigma.size() != ambient)
        throw std::invalid_argument("canonical_decompose: arity mismatch");
    const size_t rank = ray_rank(rays);
    auto cols = ray_columns(rays);
    std::vector<Rational> b;
    b.reserve(ambient);
    for (long x : sigma) b.emplace_back(x);

    std::vector<size_t> pick(rank);
    std::optional<Decomposition> found;
    std::function<bool(size_t, size_t)> search = [&](size_t pos, size_t from) -> bool {
        if (pos == rank) {
            std::vector<std::vector<Rational>> sub;
            IntEchelon ech(ambient);
            for (size_t m : pick) {
                if (!ech.add_row(cols[m])) return false;  // dependent subset: not simplicial
                sub.push_back(cols[m]);
            }
            auto t = solve_columns(sub, b);
            if (!t) return false;
            for (const Rational& x : *t)
                if (x < Rational(0)) return false;
            Decomposition dec;
            dec.zeta.assign(R, 0);
            std::vector<long> rest(sigma);
            for (size_t m = 0; m < rank; ++m) {
                long fl = (*t)[m].floor().get_si();
                dec.zeta[pick[m]] = fl;
                for (size_t tt = 0; tt < ambient; ++tt)
                    rest[tt] -= fl * rays[pick[m]].point[tt];
            }
            dec.lambda = std::move(rest);
            long degsum = 0;
            for (const Ray& r : rays) degsum += r.degree;
            assert(dec.lambda[0] < degsum);
            found = std::move(dec);
            return true;
        }
        for (size_t m = from; m + (rank - pos) <= R; ++m) {
            pick[pos] = m;
            if (search(pos + 1, m + 1)) return true;
        }
        return false;
    };
    search(0, 0);
    if (!found) throw std::invalid_argument("canonical_decompose: point outside the cone");
    return *found;
}

std::vector<std::vector<long>> box_points(const std::vector<Ray>& rays, unsigned long long cap) {
    if (rays.empty()) return {std::vector<long>()};
    const size_t ambient = rays[0].point.size();
    const size_t R = rays.size();
    auto cols = ray_columns(rays);
    const bool independent = (ray_rank(rays) == R);

    std::vector<long> lo(ambient, 0), hi(ambient, 0);
    long degsum = 0;
    for (const Ray& r : rays) degsum += r.degree;
    for (size_t t = 0; t < ambient; ++t) {
        for (const Ray& r : rays) {
            lo[t] += std::min(0L, r.point[t]);
            hi[t] += std::max(0L, r.point[t]);
        }
    }
    lo[0] = 0;
    hi[0] = degsum - 1;
    unsigned long long total = 1;
    for (size_t t = 0; t < ambient; ++t) {
        unsigned long long w = static_cast<unsigned long long>(hi[t] - lo[t] + 1);
        if (total > cap / w + 1) {
            std::ostringstream os;
            os << "box_points: search space exceeds cap " << cap;
            throw std::runtime_error(os.str());
        }
        total *= w;
    }
    if (total > cap) {
        std::ostringstream os;
        os << "box_points: search space " << total << " exceeds cap " << cap;
        throw std::runtime_error(os.str());
    }

    std::vector<std::vector<long>> out;
    std::vector<long> x(lo);
    for (;;) {
        bool inside = false;
        if (independent) {
            std::vector<Rational> b;
            b.reserve(ambient);
            for (long v : x) b.emplace_back(v);
            auto s = solve_columns(cols, b);
            if (s) {
                inside = true;
                for (const Rational& si : *s)
                    if (si < Rational(0) || !(si < Rational(1))) {
                        inside = false;
                        break;
                    }
            }
        } else {
            std::vector<Rational> b;
            b.reserve(ambient);
            for (long v : x) b.emplace_back(v);
            inside = nonneg_solution_exists(cols, b, true);
        }
        if (inside) out.push_back(x);
        size_t t = ambient;
        while (t > 0) {
            --t;
            if (x[t] < hi[t]) {
                ++x[t];
                break;
            }
            x[t] = lo[t];
            if (t == 0) return out;
        }
    }
}

bool in_ray_cone(const std::vector<long>& point, const std::vector<Ray>& rays) {
    std::vector<Rational> b;
    b.reserve(point.size());
    for (long v : point) b.emplace_back(v);
    return nonneg_solution_exists(ray_columns(rays), b, false);
}

bool rays_extremal(const std::vector<Ray>& rays) {
    for (size_t m = 0; m < rays.size(); ++m) {
        std::vector<Ray> others;
        for (size_t k = 0; k < rays.size(); ++k)
            if (k != m) others.push_back(rays[k]);
        if (in_ray_cone(rays[m].point, others)) return false;
    }
    return true;
}

}  // namespace canring
