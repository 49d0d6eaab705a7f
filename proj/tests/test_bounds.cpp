#include <fstream>
#include <sstream>

#include "canring/bounds.hpp"
#include "canring/divisor_io.hpp"
#include "canring/reports.hpp"
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

QDivisor parse_text(const std::string& s) { return parse_divisor_spec(s); }

}  // namespace

TEST_CASE("effective bounds are the denominator maxima") {
    CHECK(effective_bounds(load("two_fifths_p1.json")) == std::make_pair(5L, 10L));
    CHECK(effective_bounds(load("two_conics.json")) == std::make_pair(2L, 4L));
    CHECK(effective_bounds(parse_text(
              R"({"variety": {"type": "projective", "dim": 2},
                  "components": [{"coeff": "1/3", "poly": "x0"}]})")) ==
          std::make_pair(3L, 6L));
    CHECK(effective_bounds(parse_text(
              R"({"variety": {"type": "projective", "dim": 1},
                  "components": [{"coeff": "2", "poly": "x0"}]})")) ==
          std::make_pair(1L, 2L));
}

TEST_CASE("projective bounds for the mixed-sign plane divisor") {
    QDivisor D = ghost_complete(load("eg_hyperplane.json"));
    auto [gen, rel] = proj_bounds(D);
    CHECK(gen == 11);
    CHECK(rel == Rational(22));
    CHECK(psi_bound_proj(D) == Rational(17));
    CHECK(combine_bounds(Rational(22), Rational(17)) == Rational(22));

    std::vector<Ray> rays = extremal_rays_proj(D);
    CHECK(chi_bound(rays) == 20);
}

TEST_CASE("ghost-necessity family bounds") {
    // (1/k)x0 - (1/(k+1))x1 + ghost: l = (k+1, k, k(k+1)), so the generator
    // bound k+1 + k + k(k+1) always covers the degree-k(k+1) generator
    for (long k : {2L, 3L}) {
        std::ostringstream spec;
        spec << R"({"variety": {"type": "projective", "dim": 2}, "components": [)"
             << R"({"coeff": "1/)" << k << R"(", "poly": "x0"},)"
             << R"({"coeff": "-1/)" << k + 1 << R"(", "poly": "x1"}]})";
        QDivisor D = ghost_complete(parse_text(spec.str()));
        auto [gen, rel] = proj_bounds(D);
        CHECK(gen == (k + 1) + k + k * (k + 1));
        CHECK(gen >= k * (k + 1));
    }
}

TEST_CASE("rewriting a polynomial in a linear basis") {
    VarList vars = make_vars({"x0", "x1"});
    Polynomial f = Polynomial::parse(vars, "x0^2 + x0*x1");
    std::vector<Polynomial> basis{Polynomial::parse(vars, "x0"),
                                  Polynomial::parse(vars, "x0 + x1")};
    Polynomial g = rewrite_in_basis(f, basis);
    CHECK(g.str() == "z0*z1");

    // round-trip: substituting the basis back recovers f
    Polynomial h = Polynomial::parse(vars, "x0^2 - x1^2");
    Polynomial hg = rewrite_in_basis(h, basis);
    // x0 = z0, x1 = z1 - z0: x0^2 - x1^2 = z0^2 - (z1-z0)^2 = 2 z0 z1 - z1^2
    CHECK(hg.str() ==
          Polynomial::parse(make_vars({"z0", "z1"}), "2*z0*z1 - z1^2").str());
}

TEST_CASE("hirzebruch rho, tau, and bounds for the worked f0 divisor") {
    QDivisor D = load("f0_worked.json");
    CHECK(hirz_rho(D) == 12);
    CHECK(hirz_tau(D) == 18);
    CHECK(hirz_bounds(D) == std::make_pair(12L, 24L));
}

TEST_CASE("bound report kinds") {
    SUBCASE("effective") {
        BoundReport r = bound_report(load("two_fifths_p1.json"));
        CHECK(r.kind == "effective");
        CHECK(r.generator_floor == 5);
        CHECK(r.relation_floor == 10);
        CHECK_FALSE(r.degenerate);
    }
    SUBCASE("projective mixed-sign") {
        BoundReport r = bound_report(load("eg_hyperplane.json"));
        CHECK(r.kind == "projective");
        CHECK(r.generator_floor == 11);
        CHECK(r.relation_floor == 22);
        CHECK(r.ell == std::vector<long>{3, 2, 6});
        CHECK(r.psi == Rational(17));
        CHECK(r.chi == Rational(20));
        CHECK(r.ray_degrees == std::vector<long>{3, 2, 6});
    }
    SUBCASE("negative degree is the trivial ring") {
        BoundReport r = bound_report(parse_text(
            R"({"variety": {"type": "projective", "dim": 1},
                "components": [{"coeff": "-1/2", "poly": "x0"}]})"));
        CHECK(r.kind == "trivial");
        CHECK(r.generator_floor == 0);
        CHECK(r.relation_floor == 0);
    }
    SUBCASE("degree zero is univariate") {
        BoundReport r = bound_report(parse_text(
            R"({"variety": {"type": "projective", "dim": 1},
                "components": [{"coeff": "1/2", "poly": "x0"},
                               {"coeff": "-1/2", "poly": "x1"}]})"));
        CHECK(r.kind == "univariate");
        // k[u^2]: single generator at the lcm of the denominators
        CHECK(r.generator_floor == 2);
        CHECK(r.relation_floor == 4);
    }
    SUBCASE("hirzebruch with one vanishing slot degenerates") {
        BoundReport r = bound_report(parse_text(R"({
          "variety": {"type": "hirzebruch", "m": 0},
          "components": [{"coeff": "1/2", "poly": "u"}]})"));
        CHECK(r.kind == "degenerate");
        CHECK(r.degenerate);
    }
    SUBCASE("hirzebruch worked divisor") {
        BoundReport r = bound_report(load("f0_worked.json"));
        CHECK(r.kind == "hirzebruch");
        CHECK(r.rho == 12);
        CHECK(r.tau == 18);
        CHECK(r.generator_floor == 12);
        CHECK(r.relation_floor == 24);
    }
}

TEST_CASE("digest is the 64-bit fnv-1a of the canonical input") {
    CHECK(fnv1a_digest("") == "fnv1a:cbf29ce484222325");
    CHECK(fnv1a_digest("a") == "fnv1a:af63dc4c8601ec8c");
    CHECK(fnv1a_digest("canring") == fnv1a_digest("canring"));
    CHECK(fnv1a_digest("canring") != fnv1a_digest("canrinh"));
}

TEST_CASE("reports are deterministic for identical inputs") {
    QDivisor D = load("eg_hyperplane.json");
    ReportJson a = bounds_json(bound_report(D));
    ReportJson b = bounds_json(bound_report(D));
    CHECK(a.dump() == b.dump());

    std::string canon = serialize_divisor(D);
    ReportJson env1 = report_envelope("bounds", "eg_hyperplane.json", canon, {});
    ReportJson env2 = report_envelope("bounds", "eg_hyperplane.json", canon, {});
    CHECK(env1["digest"] == env2["digest"]);
}

TEST_CASE("report payload shapes") {
    QDivisor D = load("eg_hyperplane.json");
    SUBCASE("bounds") {
        ReportJson j = bounds_json(bound_report(D));
        CHECK(j["kind"] == "projective");
        CHECK(j["generator_floor"] == 11);
        CHECK(j["relation_bound"] == "22");
    }
    SUBCASE("basis") {
        SectionRing R(D);
        ReportJson j = basis_json(R, 6);
        CHECK(j["dim"] == 3);
        CHECK(j["numerators"].size() == 3);
        std::string den = j["denominator"].get<std::string>();
        CHECK(den.find("x0^3") != std::string::npos);
    }
    SUBCASE("cone") {
        std::vector<Ray> rays = extremal_rays_proj(ghost_complete(D));
        ReportJson j = cone_json(rays, nullptr);
        CHECK(j["degree_sum"] == 11);
        CHECK(j["extremal"] == true);
        CHECK(j["rays"].size() == 3);
    }
}
