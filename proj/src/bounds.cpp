#include "canring/bounds.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "canring/linalg.hpp"

namespace canring {

namespace {

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

bool is_effective(const QDivisor& D) {
    bool some = false;
    for (const auto& c : D.comps) {
        if (c.coeff < Rational(0)) return false;
        if (Rational(0) < c.coeff) some = true;
    }
    return some;
}

long nonzero_lcm(const QDivisor& D) {
    long l = 1;
    for (size_t i = 0; i < D.size(); ++i)
        if (!D.comps[i].coeff.is_zero()) l = std::lcm(l, coeff_den(D, i));
    return l;
}

}  // namespace

std::pair<long, long> effective_bounds(const QDivisor& D) {
    if (D.X.type != VarietyType::Projective)
        throw std::invalid_argument("effective_bounds: projective divisor required");
    if (!is_effective(D))
        throw std::invalid_argument("effective_bounds: effective divisor required");
    long maxk = 1;
    for (size_t i = 0; i < D.size(); ++i)
        if (Rational(0) < D.comps[i].coeff) maxk = std::max(maxk, coeff_den(D, i));
    return {maxk, 2 * maxk};
}

std::pair<long, Rational> proj_bounds(const QDivisor& D) {
    if (D.X.type != VarietyType::Projective)
        throw std::invalid_argument("proj_bounds: projective divisor required");
    if (!has_frame(D)) throw std::invalid_argument("proj_bounds: ghost-completed divisor required");
    Rational degD = D.degree()[0];
    if (!(Rational(0) < degD)) throw std::invalid_argument("proj_bounds: positive degree required");
    long gen = 0;
    for (size_t i = 0; i < D.size(); ++i) gen += lcm_excluding(D, i) * D.comp_class(i)[0];
    Rational rel = combine_bounds(Rational(2 * gen), psi_bound_proj(D));
    return {gen, rel};
}

long chi_bound(const std::vector<Ray>& rays) {
    if (rays.empty()) throw std::invalid_argument("chi_bound: nonempty ray list required");
    long s = 0;
    for (const Ray& r : rays) s += r.degree;
    return 2 * (s - 1);
}

Rational psi_bound_proj(const QDivisor& D) {
    Rational degD = D.degree()[0];
    if (!(Rational(0) < degD)) throw std::invalid_argument("psi_bound_proj: positive degree required");
    long gen = 0, amax = 0;
    for (size_t i = 0; i < D.size(); ++i) {
        long a = D.comp_class(i)[0];
        gen += lcm_excluding(D, i) * a;
        amax = std::max(amax, a);
    }
    return Rational(amax) / degD + Rational(gen);
}

Rational combine_bounds(const Rational& chi, const Rational& psi) {
    return chi < psi ? psi : chi;
}

Polynomial rewrite_in_basis(const Polynomial& f, const std::vector<Polynomial>& basis) {
    if (basis.empty()) throw std::invalid_argument("rewrite_in_basis: empty basis");
    const size_t n = basis[0].vars()->size();
    if (basis.size() != n)
        throw std::invalid_argument("rewrite_in_basis: need one form per coordinate");
    QMat M(n, QVec(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) {
        for (const auto& [e, c] : basis[i].terms()) {
            if (expvec_degree(e) != 1)
                throw std::invalid_argument("rewrite_in_basis: basis forms must be linear");
            for (size_t j = 0; j < n; ++j)
                if (e[j] == 1) M[i][j] = c;
        }
    }
    // x_j = sum_i inv[j][i] * f_i, column j of M^{-1} = solve(M, unit_j)
    QMat inv(n, QVec(n, Rational(0)));
    for (size_t j = 0; j < n; ++j) {
        QVec unit(n, Rational(0));
        unit[j] = Rational(1);
        auto col = solve_square(M, unit);
        if (!col) throw std::invalid_argument("rewrite_in_basis: dependent basis");
        for (size_t i = 0; i < n; ++i) inv[i][j] = (*col)[i];
    }
    std::vector<std::string> names;
    for (size_t i = 0; i < n; ++i) names.push_back("z" + std::to_string(i));
    VarList zvars = make_vars(names);
    std::vector<Polynomial> subst;  // x_j expressed in the slot variables
    for (size_t j = 0; j < n; ++j) {
        Polynomial s(zvars);
        for (size_t i = 0; i < n; ++i) {
            if (inv[j][i].is_zero()) continue;
            std::vector<int> e(n, 0);
            e[i] = 1;
            s += Polynomial::monomial(zvars, e, inv[j][i]);
        }
        subst.push_back(std::move(s));
    }
    Polynomial out(zvars);
    for (const auto& [e, c] : f.terms()) {
        Polynomial term(zvars, c);
        for (size_t j = 0; j < n; ++j)
            if (e[j] > 0) term *= subst[j].pow(e[j]);
        out += term;
    }
    assert(out.is_zero() ? f.is_zero() : out.total_degree() == f.total_degree());
    return out;
}

long hirz_rho(const QDivisor& D) {
    if (D.X.type != VarietyType::Hirzebruch)
        throw std::invalid_argument("hirz_rho: Hirzebruch divisor required");
    TPartition T = t_partition(D);
    long rho = 0;
    for (size_t i : T.t_eq) {
        auto cls = D.comp_class(i);
        rho += lcm_excluding(D, i) * std::gcd(cls[0], cls[1]);
    }
    for (size_t i : T.t_plus) {
        for (size_t j : T.t_minus) {
            auto ci = D.comp_class(i), cj = D.comp_class(j);
            rho += lcm_excluding(D, i, j) * (ci[0] * cj[1] - cj[0] * ci[1]);
        }
    }
    return rho;
}

long hirz_tau(const QDivisor& D) {
    TPartition T = t_partition(D);
    long rho = hirz_rho(D), dmax = 0;
    for (size_t i : T.t_eq) {
        auto cls = D.comp_class(i);
        dmax = std::max(dmax, lcm_excluding(D, i) * std::gcd(cls[0], cls[1]));
    }
    for (size_t i : T.t_plus)
        for (size_t j : T.t_minus) {
            auto ci = D.comp_class(i), cj = D.comp_class(j);
            dmax = std::max(dmax, lcm_excluding(D, i, j) * (ci[0] * cj[1] - cj[0] * ci[1]));
        }
    long tau = rho + dmax;
    assert(tau <= 2 * rho);
    return tau;
}

std::pair<long, long> hirz_bounds(const QDivisor& D) {
    long rho = hirz_rho(D);
    return {rho, 2 * rho};
}

BoundReport bound_report(const QDivisor& D) {
    BoundReport rep;
    rep.deg = D.degree();

    auto set_bounds = [&rep](const Rational& g, const Rational& r) {
        rep.generator_bound = g;
        rep.relation_bound = r;
        rep.generator_floor = g.floor().get_si();
        rep.relation_floor = r.floor().get_si();
    };

    if (D.X.type == VarietyType::Projective) {
        if (is_effective(D)) {
            auto [g, r] = effective_bounds(D);
            rep.kind = "effective";
            set_bounds(Rational(g), Rational(r));
            return rep;
        }
        Rational degD = rep.deg[0];
        if (degD < Rational(0)) {
            rep.kind = "trivial";
            rep.degenerate = true;
            rep.notes.push_back("negative degree: every positive-degree piece vanishes, R = k");
            return rep;
        }
        if (degD.is_zero()) {
            long L = nonzero_lcm(D);
            rep.kind = "univariate";
            rep.degenerate = true;
            set_bounds(Rational(L), Rational(2 * L));
            rep.notes.push_back("degree zero: R is a polynomial ring on one generator in degree " +
                                std::to_string(L));
            return rep;
        }
        std::vector<std::string> added;
        QDivisor Dc = ghost_complete(D, &added);
        for (const std::string& g : added)
            rep.notes.push_back("ghost component appended: " + g);
        rep.kind = "projective";
        for (size_t i = 0; i < Dc.size(); ++i) rep.ell.push_back(lcm_excluding(Dc, i));
        auto [gen, rel] = proj_bounds(Dc);
        set_bounds(Rational(gen), rel);
        rep.psi = psi_bound_proj(Dc);
        auto rays = extremal_rays_proj(Dc);
        for (const Ray& r : rays) rep.ray_degrees.push_back(r.degree);
        rep.chi = Rational(chi_bound(rays));
        return rep;
    }

    // Hirzebruch
    Rational Sa = rep.deg[0], Sb = rep.deg[1];
    if (Sa < Rational(0) || Sb < Rational(0)) {
        rep.kind = "trivial";
        rep.degenerate = true;
        rep.notes.push_back("a bidegree slot is negative: R = k");
        return rep;
    }
    if (Sa.is_zero() && Sb.is_zero()) {
        long L = nonzero_lcm(D);
        rep.kind = "univariate";
        rep.degenerate = true;
        set_bounds(Rational(L), Rational(2 * L));
        rep.notes.push_back("degree zero: R is a polynomial ring on one generator in degree " +
                            std::to_string(L));
        return rep;
    }
    if (Sa.is_zero() || Sb.is_zero()) {
        rep.kind = "degenerate";
        rep.degenerate = true;
        rep.notes.push_back("one bidegree slot vanishes: the ring reduces to a divisor ring "
                            "on P^1; the surface bounds do not apply");
        return rep;
    }
    std::vector<std::string> added;
    QDivisor Dc = ghost_complete(D, &added);
    for (const std::string& g : added) rep.notes.push_back("ghost component appended: " + g);
    rep.kind = "hirzebruch";
    for (size_t i = 0; i < Dc.size(); ++i) rep.ell.push_back(lcm_excluding(Dc, i));
    TPartition T = t_partition(Dc);
    for (size_t i : T.t_plus)
        for (size_t j : T.t_minus) rep.ell_pair.emplace_back(i, j, lcm_excluding(Dc, i, j));
    rep.rho = hirz_rho(Dc);
    rep.tau = hirz_tau(Dc);
    auto rays = extremal_rays_hirz(Dc, &rep.warnings);
    long degsum = 0;
    for (const Ray& r : rays) {
        rep.ray_degrees.push_back(r.degree);
        degsum += r.degree;
    }
    assert(degsum == rep.rho);
    rep.chi = Rational(chi_bound(rays));
    auto [g, r] = hirz_bounds(Dc);
    set_bounds(Rational(g), Rational(r));
    return rep;
}

}  // namespace canring
