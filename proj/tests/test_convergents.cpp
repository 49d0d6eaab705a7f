#include <numeric>

#include "canring/convergents.hpp"
#include "doctest.h"

using namespace canring;

namespace {

std::vector<std::pair<long, long>> pairs(const Rational& a) {
    std::vector<std::pair<long, long>> out;
    for (const Convergent& c : lower_convergents(a)) out.emplace_back(c.c, c.d);
    return out;
}

}  // namespace

TEST_CASE("lower convergents of reference fractions") {
    CHECK(pairs(Rational(2, 5)) ==
          std::vector<std::pair<long, long>>{{0, 1}, {1, 3}, {2, 5}});
    CHECK(pairs(Rational(3, 7)) ==
          std::vector<std::pair<long, long>>{{0, 1}, {1, 3}, {2, 5}, {3, 7}});
    CHECK(pairs(Rational(5, 7)) ==
          std::vector<std::pair<long, long>>{{0, 1}, {1, 2}, {2, 3}, {5, 7}});
    CHECK(pairs(Rational(7, 2)) ==
          std::vector<std::pair<long, long>>{{0, 1}, {1, 1}, {2, 1}, {3, 1}, {7, 2}});
    CHECK(pairs(Rational(1, 1)) == std::vector<std::pair<long, long>>{{0, 1}, {1, 1}});
    CHECK(pairs(Rational(1, 4)) == std::vector<std::pair<long, long>>{{0, 1}, {1, 4}});
}

TEST_CASE("chain endpoints, monotonicity, unimodularity") {
    for (long q = 1; q <= 30; ++q) {
        for (long p = 1; p <= 2 * q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            auto ch = lower_convergents(Rational(p, q));
            REQUIRE(ch.size() >= 2);
            CHECK(ch.front() == Convergent{0, 1});
            CHECK(ch.back() == Convergent{p, q});
            for (size_t i = 0; i + 1 < ch.size(); ++i) {
                // strictly increasing values, consecutive determinant one
                CHECK(Rational(ch[i].c, ch[i].d) < Rational(ch[i + 1].c, ch[i + 1].d));
                CHECK(ch[i + 1].c * ch[i].d - ch[i].c * ch[i + 1].d == 1);
            }
            // every pair h < j spans the lattice points between them:
            // c_j d_h - c_h d_j >= 1 with equality exactly for adjacent pairs
            for (size_t h = 0; h < ch.size(); ++h)
                for (size_t j = h + 1; j < ch.size(); ++j) {
                    long det = ch[j].c * ch[h].d - ch[h].c * ch[j].d;
                    if (j == h + 1)
                        CHECK(det == 1);
                    else
                        CHECK(det >= 1);
                }
        }
    }
}

TEST_CASE("chain equals the floor-record scan") {
    // for alpha <= 1: records of floor(d*alpha)/d by increasing d, keeping
    // strict improvements, reproduce the chain exactly
    for (long q = 2; q <= 25; ++q) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Rational alpha(p, q);
            std::vector<Convergent> records{{0, 1}};
            for (long d = 2; d <= q; ++d) {
                long c = (p * d) / q;
                if (Rational(c, d) > records.back().value()) records.push_back({c, d});
            }
            CHECK(lower_convergents(alpha) == records);
        }
    }
}

TEST_CASE("two-convergent decomposition") {
    Rational a(2, 5);
    SUBCASE("exact hit on an inner convergent") {
        auto s = two_convergent_decompose(2, 6, a);
        CHECK(s.h == 1);
        CHECK(s.kappa1 == 2);
        CHECK(s.kappa2 == 0);
    }
    SUBCASE("between convergents") {
        auto s = two_convergent_decompose(2, 7, a);  // 2/7 sits between 0/1 and 1/3
        auto ch = lower_convergents(a);
        CHECK(s.h == 0);
        CHECK(s.kappa1 * ch[s.h].c + s.kappa2 * ch[s.h + 1].c == 2);
        CHECK(s.kappa1 * ch[s.h].d + s.kappa2 * ch[s.h + 1].d == 7);
    }
    SUBCASE("every admissible pair recomposes") {
        for (long p : {2L, 3L, 5L, 7L}) {
            for (long q : {5L, 7L, 2L}) {
                if (std::gcd(p, q) != 1) continue;
                Rational alpha(p, q);
                auto ch = lower_convergents(alpha);
                for (long d = 1; d <= 3 * q; ++d) {
                    for (long c = 0; Rational(c, d) <= alpha; ++c) {
                        auto s = two_convergent_decompose(c, d, alpha);
                        REQUIRE(s.h < ch.size());
                        CHECK(s.kappa1 >= 0);
                        CHECK(s.kappa2 >= 0);
                        long cc = s.kappa1 * ch[s.h].c;
                        long dd = s.kappa1 * ch[s.h].d;
                        if (s.kappa2 != 0) {
                            REQUIRE(s.h + 1 < ch.size());
                            cc += s.kappa2 * ch[s.h + 1].c;
                            dd += s.kappa2 * ch[s.h + 1].d;
                        }
                        CHECK(cc == c);
                        CHECK(dd == d);
                        // max-h rule: h is the last convergent value <= c/d
                        CHECK(Rational(ch[s.h].c, ch[s.h].d) <= Rational(c, d));
                        if (s.h + 1 < ch.size())
                            CHECK(Rational(c, d) < Rational(ch[s.h + 1].c, ch[s.h + 1].d));
                    }
                }
            }
        }
    }
}
