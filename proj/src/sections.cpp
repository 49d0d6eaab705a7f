#include "canring/sections.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace canring {

SectionRing::SectionRing(QDivisor D) : D_(std::move(D)) {
    for (const Component& c : D_.comps) (void)D_.X.poly_class(c.poly);  // validate homogeneity
}

const std::vector<std::vector<int>>& SectionRing::h_basis(long d) const {
    auto it = hbasis_cache_.find(d);
    if (it != hbasis_cache_.end()) return it->second;
    auto mons = D_.X.monomials_of_class(D_.floor_class(d));
    auto& slot = hbasis_cache_[d] = std::move(mons);
    auto& index = hindex_cache_[d];
    for (size_t j = 0; j < slot.size(); ++j) index.emplace(slot[j], j);
    return slot;
}

const Polynomial& SectionRing::f_power(size_t i, long k) const {
    auto key = std::make_pair(i, k);
    auto it = pow_cache_.find(key);
    if (it != pow_cache_.end()) return it->second;
    Polynomial p = D_.comps[i].poly.pow(k);
    return pow_cache_.emplace(key, std::move(p)).first->second;
}

Polynomial SectionRing::f_product(const std::vector<long>& exps) const {
    Polynomial p = one();
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0) throw std::invalid_argument("f_product: negative exponent");
        if (exps[i] > 0) p = p * f_power(i, exps[i]);
    }
    return p;
}

Polynomial SectionRing::multiply_h(long da, const Polynomial& ha, long db,
                                   const Polynomial& hb) const {
    Polynomial p = ha * hb;
    for (size_t i = 0; i < D_.size(); ++i) {
        long s = D_.floor_coeff(i, da + db) - D_.floor_coeff(i, da) - D_.floor_coeff(i, db);
        assert(s >= 0);
        if (s > 0) p = p * f_power(i, s);
    }
    return p;
}

QVec SectionRing::coordinates_h(long d, const Polynomial& h) const {
    h_basis(d);  // populate index cache
    const auto& index = hindex_cache_.at(d);
    QVec v(index.size(), Rational(0));
    for (const auto& [exp, coeff] : h.terms()) {
        auto it = index.find(exp);
        if (it == index.end())
            throw std::invalid_argument("coordinates_h: monomial outside the graded piece");
        v[it->second] = coeff;
    }
    return v;
}

std::vector<std::pair<size_t, Rational>> SectionRing::coordinates_h_sparse(long d, const Polynomial& h) const {
    h_basis(d);
    const auto& index = hindex_cache_.at(d);
    std::vector<std::pair<size_t, Rational>> v;
    v.reserve(h.terms().size());
    for (const auto& [exp, coeff] : h.terms()) {
        auto it = index.find(exp);
        if (it == index.end())
            throw std::invalid_argument("coordinates_h: monomial outside the graded piece");
        v.emplace_back(it->second, coeff);
    }
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

Section SectionRing::from_h(long d, const Polynomial& h) const {
    Polynomial num = h;
    for (size_t i = 0; i < D_.size(); ++i) {
        long f = D_.F(i, d);
        if (f > 0) num = num * f_power(i, f);
    }
    return Section{d, std::move(num)};
}

Polynomial SectionRing::to_h(const Section& s) const {
    Polynomial h = s.num;
    for (size_t i = 0; i < D_.size(); ++i) {
        long f = D_.F(i, s.d);
        if (f == 0) continue;
        auto [q, r] = h.divmod(f_power(i, f));
        if (!r.is_zero())
            throw std::invalid_argument("to_h: numerator not divisible by required component power");
        h = std::move(q);
    }
    return h;
}

Section SectionRing::multiply(const Section& a, const Section& b) const {
    long d = a.d + b.d;
    Polynomial num = a.num * b.num;
    for (size_t i = 0; i < D_.size(); ++i) {
        long t = D_.E(i, d) - D_.E(i, a.d) - D_.E(i, b.d);
        assert(t >= 0);
        if (t > 0) num = num * f_power(i, t);
    }
    return Section{d, std::move(num)};
}

Section SectionRing::power(const Section& a, long k) const {
    if (k < 0) throw std::invalid_argument("power: negative exponent");
    Section r = unit();
    for (long j = 0; j < k; ++j) r = multiply(r, a);
    return r;
}

std::string format_power_product(const std::vector<std::pair<Polynomial, long>>& factors) {
    std::string out;
    for (const auto& [f, e] : factors) {
        if (e == 0) continue;
        bool bare = f.is_monomial();
        if (bare) {
            // A bare monomial like x0*x1 would misparse under ^, so only a
            // plain variable (or a power of one) skips the parentheses.
            const auto& [exp, coeff] = *f.terms().begin();
            int nonzero = 0;
            for (int a : exp) nonzero += (a != 0);
            bare = (coeff == Rational(1)) && nonzero == 1 && (e == 1 || expvec_degree(exp) == 1);
        }
        std::string piece = bare ? f.str() : "(" + f.str() + ")";
        if (e != 1) piece += "^" + std::to_string(e);
        if (!out.empty()) out += " * ";
        out += piece;
    }
    return out.empty() ? "1" : out;
}

}  // namespace canring
