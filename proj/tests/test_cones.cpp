#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "canring/cones.hpp"
#include "canring/divisor_io.hpp"
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

std::set<std::vector<long>> points_of(const std::vector<Ray>& rays) {
    std::set<std::vector<long>> out;
    for (const Ray& r : rays) out.insert(r.point);
    return out;
}

}  // namespace

TEST_CASE("sigma membership for the mixed-sign plane divisor") {
    QDivisor D = ghost_complete(load("eg_hyperplane.json"));
    ConeSpec sigma = build_sigma(D);
    CHECK(sigma.arity() == 4);
    CHECK(sigma.contains({2, -1, 1, 0}));
    CHECK(sigma.contains({5, -2, 2, 0}));
    CHECK(sigma.contains({0, 0, 0, 0}));
    CHECK_FALSE(sigma.contains({2, -2, 1, 0}));   // pole order too deep
    CHECK_FALSE(sigma.contains({1, 0, 0, 0}));    // x1-slot must be >= d/3
    CHECK_FALSE(sigma.contains({2, 0, 1, -1}));   // ghost slot below zero
    CHECK_FALSE(sigma.contains({2, -1, 2, 0}));   // balance violated
    CHECK_FALSE(sigma.contains({-1, 0, 0, 0}));   // negative degree
}

TEST_CASE("projective extremal rays of the mixed-sign plane divisor") {
    QDivisor D = ghost_complete(load("eg_hyperplane.json"));
    std::vector<Ray> rays = extremal_rays_proj(D);
    REQUIRE(rays.size() == 3);
    CHECK(rays[0].point == std::vector<long>{3, -1, 1, 0});
    CHECK(rays[1].point == std::vector<long>{2, -1, 1, 0});
    CHECK(rays[2].point == std::vector<long>{6, -3, 2, 1});
    CHECK(rays[0].degree == 3);
    CHECK(rays[1].degree == 2);
    CHECK(rays[2].degree == 6);
    CHECK(rays_extremal(rays));

    ConeSpec sigma = build_sigma(D);
    for (const Ray& r : rays) CHECK(sigma.contains(r.point));
}

TEST_CASE("ray lattice minimality: no smaller multiple lies in the lattice cone") {
    QDivisor D = ghost_complete(load("eg_hyperplane.json"));
    ConeSpec sigma = build_sigma(D);
    for (const Ray& r : extremal_rays_proj(D)) {
        // any lattice point on the same ray with smaller positive degree
        // would divide the coordinates
        for (long k = 2; k <= r.degree; ++k) {
            bool divides = true;
            for (long c : r.point) divides = divides && (c % k == 0);
            if (divides) {
                std::vector<long> smaller;
                for (long c : r.point) smaller.push_back(c / k);
                CHECK_FALSE(sigma.contains(smaller));
            }
        }
    }
}

TEST_CASE("t-partition of the worked f0 divisor") {
    QDivisor D = load("f0_worked.json");
    TPartition t = t_partition(D);
    CHECK(t.t_plus == std::vector<size_t>{0, 1});
    CHECK(t.t_minus == std::vector<size_t>{2, 3});
    CHECK(t.t_eq.empty());
}

TEST_CASE("epsilon rays of the worked f0 divisor") {
    QDivisor D = load("f0_worked.json");
    std::vector<Rational> e0 = epsilon_ray(D, 0);
    REQUIRE(e0.size() == 5);
    CHECK(e0[0] == Rational(1));
    CHECK(e0[1] == Rational(1, 3));
    CHECK(e0[2] == Rational(0));
    CHECK(e0[3] == Rational(-1, 3));
    CHECK(e0[4] == Rational(0));

    std::vector<Rational> e1 = epsilon_ray(D, 1);
    CHECK(e1[2] == Rational(5, 6));
}

TEST_CASE("hirzebruch extremal rays of the worked f0 divisor") {
    QDivisor D = load("f0_worked.json");
    std::vector<std::string> warnings;
    std::vector<Ray> rays = extremal_rays_hirz(D, &warnings);
    REQUIRE(rays.size() == 4);
    std::set<std::vector<long>> expect{{1, 0, 0, 0, 0},
                                       {3, 0, 0, -1, 1},
                                       {2, -1, 1, 0, 0},
                                       {6, -3, 3, -2, 2}};
    CHECK(points_of(rays) == expect);

    long degsum = 0;
    for (const Ray& r : rays) degsum += r.degree;
    CHECK(degsum == 12);

    ConeSpec sigma = build_sigma(D);
    for (const Ray& r : rays) CHECK(sigma.contains(r.point));
    CHECK(rays_extremal(rays));
}

TEST_CASE("all-equal partition from a bidegree (1,1) component") {
    QDivisor D = parse_divisor_spec(R"({
      "variety": {"type": "hirzebruch", "m": 0},
      "components": [{"coeff": "1/2", "poly": "u*z + v*w"}]})");
    QDivisor Dc = ghost_complete(D);
    TPartition t = t_partition(Dc);
    // the lone (1,1) component balances; the frame ghosts split by ruling
    REQUIRE(t.t_eq.size() == 1);
    CHECK(Dc.comps[t.t_eq[0]].coeff == Rational(1, 2));
    CHECK(t.t_plus.size() == 2);
    CHECK(t.t_minus.size() == 2);

    std::vector<Ray> rays = extremal_rays_hirz(Dc);
    ConeSpec sigma = build_sigma(Dc);
    for (const Ray& r : rays) CHECK(sigma.contains(r.point));
    long degsum = 0;
    for (const Ray& r : rays) degsum += r.degree;
    CHECK(degsum > 0);
}

TEST_CASE("canonical decomposition in the projective cone") {
    QDivisor D = ghost_complete(load("eg_hyperplane.json"));
    std::vector<Ray> rays = extremal_rays_proj(D);

    Decomposition dec = canonical_decompose({5, -2, 2, 0}, rays);
    CHECK(dec.zeta == std::vector<long>{1, 1, 0});
    CHECK(dec.lambda == std::vector<long>{0, 0, 0, 0});

    Decomposition origin = canonical_decompose({0, 0, 0, 0}, rays);
    CHECK(origin.zeta == std::vector<long>{0, 0, 0});
    CHECK(origin.lambda == std::vector<long>{0, 0, 0, 0});
}

TEST_CASE("canonical decomposition in the hirzebruch cone") {
    QDivisor D = load("f0_worked.json");
    std::vector<Ray> rays = extremal_rays_hirz(D);
    // e_{0} + e_{3} in list order: (7, -3, 3, -2, 2)
    std::vector<long> sigma{7, -3, 3, -2, 2};
    for (size_t i = 0; i < 5; ++i)
        REQUIRE(rays[0].point[i] + rays[3].point[i] == sigma[i]);

    Decomposition dec = canonical_decompose(sigma, rays);
    CHECK(dec.zeta == std::vector<long>{1, 0, 0, 1});
    CHECK(dec.lambda == std::vector<long>(5, 0));
    std::vector<long> recomposed(5, 0);
    for (size_t r = 0; r < rays.size(); ++r)
        for (size_t i = 0; i < 5; ++i) recomposed[i] += dec.zeta[r] * rays[r].point[i];
    for (size_t i = 0; i < 5; ++i) recomposed[i] += dec.lambda[i];
    CHECK(recomposed == sigma);
    CHECK(dec.lambda[0] < 12);
}

TEST_CASE("box points of the projective cone") {
    QDivisor D = ghost_complete(load("eg_hyperplane.json"));
    std::vector<Ray> rays = extremal_rays_proj(D);
    auto box = box_points(rays);
    // origin always present
    CHECK(std::count(box.begin(), box.end(), std::vector<long>{0, 0, 0, 0}) == 1);
    ConeSpec sigma = build_sigma(D);
    long degree_sum = 0;
    for (const Ray& r : rays) degree_sum += r.degree;
    for (const auto& pt : box) {
        CHECK(sigma.contains(pt));
        CHECK(in_ray_cone(pt, rays));
        CHECK(pt[0] < degree_sum);
        // recomposition round-trip
        Decomposition dec = canonical_decompose(pt, rays);
        std::vector<long> re(pt.size(), 0);
        for (size_t r = 0; r < rays.size(); ++r)
            for (size_t i = 0; i < pt.size(); ++i) re[i] += dec.zeta[r] * rays[r].point[i];
        for (size_t i = 0; i < pt.size(); ++i) re[i] += dec.lambda[i];
        CHECK(re == pt);
    }
}

TEST_CASE("box points handle dependent ray systems") {
    QDivisor D = load("f0_worked.json");
    std::vector<Ray> rays = extremal_rays_hirz(D);
    // these four rays span a rank-3 lattice, so the box scan runs through the
    // dependent-parametrization path
    auto box = box_points(rays);
    CHECK(!box.empty());
    ConeSpec sigma = build_sigma(D);
    for (const auto& pt : box) {
        CHECK(sigma.contains(pt));
        CHECK(in_ray_cone(pt, rays));
    }
}

TEST_CASE("extremality detects a redundant ray") {
    Ray a{{1, 0}, "a", 1};
    Ray b{{0, 1}, "b", 0};
    Ray c{{1, 1}, "c", 1};
    CHECK(rays_extremal({a, b}));
    CHECK_FALSE(rays_extremal({a, b, c}));
    CHECK(in_ray_cone({2, 3}, {a, b}));
    CHECK_FALSE(in_ray_cone({-1, 0}, {a, b}));
}
