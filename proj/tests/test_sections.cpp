#include <fstream>
#include <sstream>

#include "canring/divisor_io.hpp"
#include "canring/sections.hpp"
#include "doctest.h"

using namespace canring;

namespace {

QDivisor load(const char* name) {
    std::ifstream in(std::string(CANRING_TEST_DATA) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_divisor_spec(ss.str());
}

}  // namespace

TEST_CASE("hilbert function of (2/5)x0 on P^1") {
    SectionRing R(load("two_fifths_p1.json"));
    long expected[] = {1, 1, 1, 2, 2, 3, 3, 3, 4, 4, 5};
    for (long d = 0; d <= 10; ++d) CHECK(R.dim(d) == expected[d]);
    CHECK((long)R.h_basis(5).size() == 3);
}

TEST_CASE("h-basis of the mixed-sign plane divisor at degree 6") {
    QDivisor D = load("eg_hyperplane.json");
    SectionRing R(D);
    CHECK(R.dim(6) == 3);
    // floor(6D) has class 1: the h-space is spanned by x0, x1, x2, and
    // h = x2 is the section u^6 x1^2 x2 / x0^3
    const auto& basis = R.h_basis(6);
    REQUIRE(basis.size() == 3);
    bool found = false;
    for (const auto& e : basis) found = found || e == std::vector<int>{0, 0, 1};
    CHECK(found);
    for (const auto& e : basis) CHECK(e[0] + e[1] + e[2] == 1);
}

TEST_CASE("sections in the h-space match their rational functions") {
    QDivisor D = load("eg_hyperplane.json");
    SectionRing R(D);
    Polynomial h = Polynomial::parse(D.X.vars, "x2");
    Section s = R.from_h(6, h);
    CHECK(s.d == 6);
    // the section is u^6 * x1^2 x2 / x0^3: numerator h * x1^F(1,6) = x1^2 x2
    CHECK(s.num.str() == Polynomial::parse(D.X.vars, "x1^2*x2").str());
    CHECK(R.to_h(s).str() == h.str());
}

TEST_CASE("multiplication agrees with numerator arithmetic") {
    QDivisor D = load("eg_hyperplane.json");
    SectionRing R(D);
    // degrees 2 and 3 both have h-class 0 (elements u^2 x1/x0, u^3 x1/x0);
    // their product spans the one-dimensional degree-5 piece
    REQUIRE(R.dim(2) == 1);
    REQUIRE(R.dim(3) == 1);
    Polynomial prod = R.multiply_h(2, R.one(), 3, R.one());
    CHECK(prod.str() == R.one().str());
    QVec coords = R.coordinates_h(5, prod);
    REQUIRE(coords.size() == 1);
    CHECK(coords[0] == Rational(1));
}

TEST_CASE("multiplication picks up floor-defect correction factors") {
    SectionRing R(load("two_fifths_p1.json"));
    // degrees 3 and 5: floor(3a)=1, floor(5a)=2, floor(8a)=3 -> defect 0;
    // degrees 3 and 4: floor(3a)+floor(4a) = 1+1 = 2 = floor(7a) -> defect 0;
    // degrees 1 and 4: floor(1a)+floor(4a) = 0+1 = 1 = floor(5a)? 2 -> defect 1
    Polynomial one = R.one();
    Polynomial x1 = Polynomial::parse(R.variety().vars, "x1");
    Polynomial p = R.multiply_h(1, one, 4, x1);
    // h-numerators multiply then scale by x0^defect
    CHECK(p.str() == "x0*x1");
}

TEST_CASE("f0 graded pieces") {
    QDivisor D = load("f0_worked.json");
    SectionRing R(D);
    // floor(2D) = 1*(1,0): sections u, v over denominator u
    CHECK(R.dim(2) == 2);
    CHECK(R.dim(1) == 1);
    // floor(6D) = (3,2): h0 = 4*3
    CHECK(R.dim(6) == h0_hirz(0, 3, 2));

    const auto& b2 = R.h_basis(2);
    REQUIRE(b2.size() == 2);
    for (const auto& e : b2) CHECK(e[0] + e[1] == 1);  // bidegree (1,0) monomials
}

TEST_CASE("bidegree (1,1) pieces on f0") {
    QDivisor D = parse_divisor_spec(R"({
      "variety": {"type": "hirzebruch", "m": 0},
      "components": [
        {"coeff": "1/2", "poly": "u"},
        {"coeff": "0",   "poly": "v"},
        {"coeff": "1/2", "poly": "z"},
        {"coeff": "0",   "poly": "w"}
      ]})");
    SectionRing R(D);
    CHECK(R.dim(2) == 4);  // floor(2D) has bidegree (1,1)
}

TEST_CASE("sparse coordinates agree with dense ones") {
    QDivisor D = load("eg_hyperplane.json");
    SectionRing R(D);
    const auto& basis = R.h_basis(12);
    REQUIRE(!basis.empty());
    Polynomial h = Polynomial::monomial(D.X.vars, basis[0], Rational(1));
    Polynomial h2 = Polynomial::monomial(D.X.vars, basis.back(), Rational(-3));
    Polynomial sum = h;
    sum += h2;
    QVec dense = R.coordinates_h(12, sum);
    auto sparse = R.coordinates_h_sparse(12, sum);
    QVec rebuilt(dense.size(), Rational(0));
    for (const auto& [i, v] : sparse) rebuilt[i] = v;
    CHECK(dense == rebuilt);
}

TEST_CASE("power and unit") {
    SectionRing R(load("two_fifths_p1.json"));
    Section u = Section{1, R.one()};
    Section u4 = R.power(u, 4);
    CHECK(u4.d == 4);
    CHECK(R.to_h(u4).str() == R.f_power(0, 1).str());  // floor(4*2/5) = 1: h = x0
}
