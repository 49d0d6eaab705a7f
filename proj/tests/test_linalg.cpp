#include "canring/linalg.hpp"
#include "doctest.h"

using namespace canring;

namespace {

QVec qv(std::initializer_list<long> xs) {
    QVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

}  // namespace

TEST_CASE("integer echelon rank and membership") {
    IntEchelon e(3);
    CHECK(e.add_row(qv({1, 2, 3})));
    CHECK(e.add_row(qv({0, 1, 1})));
    CHECK_FALSE(e.add_row(qv({1, 3, 4})));  // sum of the first two
    CHECK(e.rank() == 2);
    CHECK(e.contains(qv({2, 5, 7})));
    CHECK_FALSE(e.contains(qv({0, 0, 1})));
    CHECK(e.pivot_columns() == std::vector<size_t>{0, 1});
}

TEST_CASE("fraction-free reduction keeps exact answers on awkward scales") {
    IntEchelon e(2);
    QVec v1{Rational(1, 3), Rational(1, 7)};
    QVec v2{Rational(7, 3), Rational(1, 1)};  // 7 * v1
    CHECK(e.add_row(v1));
    CHECK_FALSE(e.add_row(v2));
    CHECK(e.rank() == 1);
}

TEST_CASE("kernel basis") {
    // x + y - 2z = 0 has kernel of dimension 2
    QMat m{qv({1, 1, -2})};
    QMat k = kernel_basis(m, 3);
    REQUIRE(k.size() == 2);
    for (const QVec& v : k) {
        Rational dot = v[0] + v[1] - Rational(2) * v[2];
        CHECK(dot == Rational(0));
    }
    CHECK(rank(k) == 2);
}

TEST_CASE("solve square") {
    QMat a{qv({2, 1}), qv({1, 3})};
    auto x = solve_square(a, qv({5, 10}));
    REQUIRE(x.has_value());
    CHECK((*x)[0] == Rational(1));
    CHECK((*x)[1] == Rational(3));

    QMat sing{qv({1, 2}), qv({2, 4})};
    CHECK_FALSE(solve_square(sing, qv({1, 0})).has_value());
}

TEST_CASE("span membership") {
    QMat rows{qv({1, 0, 1}), qv({0, 1, 1})};
    CHECK(span_contains(rows, qv({2, 3, 5})));
    CHECK_FALSE(span_contains(rows, qv({0, 0, 1})));
}

TEST_CASE("modular echelon certifies rank from sparse rational rows") {
    ModEchelon e(4);
    bool grew = false;
    CHECK(e.add_row_rational({{0, Rational(1, 2)}, {2, Rational(3)}}, grew));
    CHECK(grew);
    CHECK(e.add_row_rational({{1, Rational(5, 7)}}, grew));
    CHECK(grew);
    // dependent on the first row
    CHECK(e.add_row_rational({{0, Rational(1)}, {2, Rational(6)}}, grew));
    CHECK_FALSE(grew);
    CHECK(e.rank() == 2);
}
