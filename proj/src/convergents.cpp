#include "canring/convergents.hpp"

#include <cassert>
#include <stdexcept>

namespace canring {

std::vector<Convergent> lower_convergents(const Rational& alpha) {
    if (alpha.sign() < 0) throw std::invalid_argument("lower_convergents: alpha must be >= 0");
    if (!alpha.num().fits_slong_p() || !alpha.den().fits_slong_p())
        throw std::invalid_argument("lower_convergents: alpha out of range");
    long p = alpha.num().get_si();
    long q = alpha.den().get_si();

    std::vector<Convergent> out;
    out.push_back({0, 1});
    if (p == 0) return out;

    // Integer part of the chain: (1,1), ..., (floor(alpha),1).
    long fl = p / q;  // p, q >= 1 so this is floor
    for (long j = 1; j <= fl; ++j) out.push_back({j, 1});
    if (q == 1) return out;

    // Fractional part: strict records of floor(d*alpha)/d. Starting from the
    // last integer step (fl, 1), each new record (c, d) satisfies the
    // unimodular relation with its predecessor, ending at (p, q).
    Rational best = out.back().value();
    for (long d = 2; d <= q; ++d) {
        long c = (p * d) / q;
        Rational v(c, d);
        if (v > best) {
            out.push_back({c, d});
            best = v;
        }
    }
    assert(out.back().c == p && out.back().d == q);
    for (size_t i = 0; i + 1 < out.size(); ++i)
        assert(out[i + 1].c * out[i].d - out[i].c * out[i + 1].d == 1);
    return out;
}

TwoConvergentSplit two_convergent_decompose(long c, long d, const Rational& alpha) {
    if (d <= 0) throw std::invalid_argument("two_convergent_decompose: d must be positive");
    if (c < 0 || Rational(c, d) > alpha)
        throw std::invalid_argument("two_convergent_decompose: need 0 <= c/d <= alpha");
    if (alpha.is_zero()) {
        // Chain is the single point (0,1): c must be 0, and (0,d) = d*(0,1).
        return {0, d, 0};
    }
    std::vector<Convergent> conv = lower_convergents(alpha);
    size_t r = conv.size() - 1;
    Rational target(c, d);

    size_t h = 0;
    while (h + 1 <= r && conv[h + 1].value() <= target) ++h;
    TwoConvergentSplit s;
    s.h = h;
    if (h == r) {
        // c/d equals alpha exactly; d is a multiple of the reduced denominator.
        assert(target == alpha);
        assert(d % conv[r].d == 0);
        s.kappa1 = d / conv[r].d;
        s.kappa2 = 0;
        return s;
    }
    // Unimodular basis (c_h, d_h), (c_{h+1}, d_{h+1}) of Z^2.
    s.kappa1 = conv[h + 1].c * d - conv[h + 1].d * c;
    s.kappa2 = conv[h].d * c - conv[h].c * d;
    assert(s.kappa1 >= 0 && s.kappa2 >= 0);
    assert(s.kappa1 * conv[h].c + s.kappa2 * conv[h + 1].c == c);
    assert(s.kappa1 * conv[h].d + s.kappa2 * conv[h + 1].d == d);
    return s;
}

}  // namespace canring
