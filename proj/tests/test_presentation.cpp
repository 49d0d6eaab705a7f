#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "canring/divisor_io.hpp"
#include "canring/presentation.hpp"
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

std::multiset<long> gen_degrees(const Presentation& p) {
    std::multiset<long> out;
    for (const Generator& g : p.generators) out.insert(g.degree);
    return out;
}

std::map<long, long> rel_degrees(const Presentation& p, RelationKind kind) {
    std::map<long, long> out;
    for (const Relation& r : p.relations)
        if (r.kind == kind) ++out[r.degree];
    return out;
}

void check_all_relations(const QDivisor& D, const Presentation& p) {
    SectionRing R(D);
    for (const Relation& r : p.relations) CHECK(relation_holds(R, p, r));
}

}  // namespace

TEST_CASE("class_S enumerations") {
    // vectors of total degree c avoiding slot k, count binomial(m+c-1, c)
    auto s = class_S(2, 2, 0);
    REQUIRE(s.size() == 3);
    for (const auto& v : s) {
        CHECK(v[0] == 0);
        CHECK(v[1] + v[2] == 2);
    }
    CHECK(class_S(0, 2, 0) == std::vector<std::vector<int>>{{0, 0, 0}});
    CHECK(class_S(3, 1, 1).size() == 1);  // only x0^3
    CHECK(class_S(4, 2, 1).size() == 5);
}

TEST_CASE("precede and sorted_split") {
    CHECK(precede({0, 1, 0}, {0, 0, 1}));
    CHECK_FALSE(precede({0, 0, 1}, {0, 1, 0}));
    CHECK(precede({0, 0, 0}, {0, 2, 0}));
    CHECK(precede({0, 2, 0}, {0, 0, 0}));

    auto [y, z] = sorted_split({0, 0, 1}, {0, 2, 0}, 1, 2);
    CHECK(y == std::vector<int>{0, 1, 0});
    CHECK(z == std::vector<int>{0, 1, 1});
}

TEST_CASE("one-hyperplane presentation, 2/5 on P^1") {
    Presentation p = one_hyperplane_presentation(Rational(2, 5), 0, 1);
    CHECK(gen_degrees(p) == std::multiset<long>{1, 3, 5});
    REQUIRE(p.relations.size() == 1);
    const Relation& r = p.relations[0];
    CHECK(r.kind == RelationKind::G);
    CHECK(r.degree == 6);
    // F0 * F2 = F1^2
    CHECK(r.lhs.powers == std::map<size_t, long>{{0, 1}, {2, 1}});
    REQUIRE(r.rhs.size() == 1);
    CHECK(r.rhs[0].first == Rational(1));
    CHECK(r.rhs[0].second.powers == std::map<size_t, long>{{1, 2}});

    QDivisor D = load("two_fifths_p1.json");
    check_all_relations(D, p);
}

TEST_CASE("one-hyperplane presentation, 2/5 on P^2") {
    Presentation p = one_hyperplane_presentation(Rational(2, 5), 0, 2);
    CHECK(gen_degrees(p) == std::multiset<long>{1, 3, 3, 5, 5, 5});
    CHECK(rel_degrees(p, RelationKind::G) == std::map<long, long>{{6, 3}});
    CHECK(rel_degrees(p, RelationKind::L) == std::map<long, long>{{8, 2}, {10, 1}});

    QDivisor D = parse_divisor_spec(
        R"({"variety": {"type": "projective", "dim": 2},
            "components": [{"coeff": "2/5", "poly": "x0"}]})");
    check_all_relations(D, p);

    // the generator multiset matches the oracle's
    SectionRing R(D);
    OracleReport rep = oracle_generators(R, 5);
    std::map<long, long> pres_counts;
    for (const Generator& g : p.generators) ++pres_counts[g.degree];
    CHECK(pres_counts == rep.generators);
}

TEST_CASE("presentation for alpha > 1") {
    Presentation p = one_hyperplane_presentation(Rational(7, 2), 0, 1);
    CHECK(gen_degrees(p) == std::multiset<long>{1, 1, 1, 1, 2});
    // all relation degrees <= 2 * denominator
    for (const Relation& r : p.relations) CHECK(r.degree <= 4);
    QDivisor D = parse_divisor_spec(
        R"({"variety": {"type": "projective", "dim": 1},
            "components": [{"coeff": "7/2", "poly": "x0"}]})");
    check_all_relations(D, p);
}

TEST_CASE("normal form rewrites to the sorted representative") {
    Presentation p = one_hyperplane_presentation(Rational(2, 5), 0, 2);
    // generator order: 0:u, 1:F1^(010), 2:F1^(001), 3:F2^(020), 4:F2^(011), 5:F2^(002)
    Word w;
    w.powers = {{2, 1}, {3, 1}};  // F1^(001) * F2^(020), the L-relation lhs
    Word nf = normal_form(w, p);
    CHECK(nf.powers == std::map<size_t, long>{{1, 1}, {4, 1}});

    // G-rule: F0 * F2^(020) -> F1^(010)^2
    Word g;
    g.powers = {{0, 1}, {3, 1}};
    Word gnf = normal_form(g, p);
    CHECK(gnf.powers == std::map<size_t, long>{{1, 2}});
}

TEST_CASE("normal form is confluent under shuffled rule orders") {
    for (long m : {1L, 2L}) {
        Presentation p = one_hyperplane_presentation(Rational(3, 7), 0, m);
        std::mt19937_64 rng(12345);
        std::uniform_int_distribution<size_t> pick(0, p.generators.size() - 1);
        for (int trial = 0; trial < 25; ++trial) {
            Word w;
            for (int j = 0; j < 4; ++j) ++w.powers[pick(rng)];
            Word base = normal_form(w, p);
            for (unsigned long seed = 1; seed <= 5; ++seed)
                CHECK(normal_form(w, p, seed).powers == base.powers);
        }
    }
}

TEST_CASE("veronese presentation of a conic at 1/2") {
    QDivisor D = parse_divisor_spec(
        R"({"variety": {"type": "projective", "dim": 2},
            "components": [{"coeff": "1/2", "poly": "x0^2 + x1*x2"}]})");
    Presentation p = effective_presentation(D);
    std::map<long, long> counts;
    for (const Generator& g : p.generators) ++counts[g.degree];
    CHECK(counts == std::map<long, long>{{1, 1}, {2, 5}});
    std::map<long, long> rels;
    for (const Relation& r : p.relations) ++rels[r.degree];
    CHECK(rels == std::map<long, long>{{4, 6}});
    check_all_relations(D, p);

    SectionRing R(D);
    OracleReport rep = oracle_generators(R, 4);
    oracle_relations(R, rep);
    CHECK(rep.generators == counts);
    CHECK(rep.relations == rels);
}

TEST_CASE("degree-one component with several variables rebases cleanly") {
    QDivisor D = parse_divisor_spec(
        R"({"variety": {"type": "projective", "dim": 1},
            "components": [{"coeff": "2/5", "poly": "x0 + x1"}]})");
    Presentation p = effective_presentation(D);
    CHECK(gen_degrees(p) == std::multiset<long>{1, 3, 5});
    REQUIRE(p.relations.size() == 1);
    CHECK(p.relations[0].degree == 6);
    check_all_relations(D, p);
}

TEST_CASE("two half-lines on P^1 assemble with a cross relation") {
    QDivisor D = parse_divisor_spec(
        R"({"variety": {"type": "projective", "dim": 1},
            "components": [{"coeff": "1/2", "poly": "x0"},
                           {"coeff": "1/2", "poly": "x1"}]})");
    Presentation p = effective_presentation(D);
    CHECK(gen_degrees(p) == std::multiset<long>{1, 2, 2});
    REQUIRE(p.relations.size() == 1);
    const Relation& r = p.relations[0];
    CHECK(r.degree == 4);
    CHECK(r.kind == RelationKind::Cross);
    check_all_relations(D, p);

    // A * B = u^4 up to the assembled indexing: the relation joins the two
    // degree-2 generators and rewrites into pure powers of u
    SectionRing R(D);
    auto gens = presentation_oracle_generators(p);
    OracleReport rep = oracle_generators(R, 4);
    std::map<long, long> pres_counts;
    for (const Generator& g : p.generators) ++pres_counts[g.degree];
    CHECK(pres_counts == rep.generators);
}

TEST_CASE("two conics at one half") {
    QDivisor D = load("two_conics.json");
    Presentation p = effective_presentation(D);
    std::map<long, long> counts;
    for (const Generator& g : p.generators) ++counts[g.degree];
    CHECK(counts == std::map<long, long>{{1, 1}, {2, 14}});
    std::map<long, long> rels;
    for (const Relation& r : p.relations) ++rels[r.degree];
    CHECK(rels == std::map<long, long>{{4, 75}});

    SectionRing R(D);
    OracleReport rep = oracle_generators(R, 4);
    CHECK(rep.generators == counts);
}

TEST_CASE("incompatible denominators force generators at the lcm") {
    // Products of lower degrees only span the (x0,x1)-ideal slice of each
    // graded piece, so pure x2 sections appear whenever both floors jump at
    // once: u^4 x2^3 / (x0^2 x1) and u^6 x2^5 / (x0^3 x1^2). Generation in
    // degrees <= max k_i fails here; lcm(k_i) is the sharp cap.
    QDivisor D = parse_divisor_spec(
        R"({"variety": {"type": "projective", "dim": 2},
            "components": [{"coeff": "1/2", "poly": "x0"},
                           {"coeff": "1/3", "poly": "x1"}]})");
    Presentation p = effective_presentation(D);
    CHECK(p.generator_bound == 6);
    CHECK(p.relation_bound == 12);
    std::map<long, long> counts;
    for (const Generator& g : p.generators) ++counts[g.degree];
    CHECK(counts == std::map<long, long>{{1, 1}, {2, 2}, {3, 3}, {4, 1}, {6, 1}});
    check_all_relations(D, p);

    SectionRing R(D);
    OracleReport rep = oracle_generators(R, 12);
    CHECK(rep.generators == counts);
}

TEST_CASE("non-effective divisors are rejected by the presentation engine") {
    QDivisor D = load("eg_hyperplane.json");
    CHECK_THROWS_AS(effective_presentation(D), std::invalid_argument);
}

TEST_CASE("generator and word formatting") {
    Presentation p = one_hyperplane_presentation(Rational(2, 5), 0, 1);
    CHECK(format_generator(p, 0) == "u");
    std::string g2 = format_generator(p, 2);
    CHECK(g2.find("u^5") != std::string::npos);
    CHECK(g2.find("x0^2") != std::string::npos);
    Word w;
    w.powers = {{0, 1}, {2, 1}};
    std::string s = format_word(p, w);
    CHECK(s.find("F0") != std::string::npos);
    CHECK(s.find("F2") != std::string::npos);
}
