#include "canring/reports.hpp"

#include <sstream>

namespace canring {

namespace {

ReportJson word_json(const Word& w) {
    ReportJson arr = ReportJson::array();
    for (const auto& [gi, p] : w.powers) arr.push_back({gi, p});
    return arr;
}

ReportJson degree_counts(const std::map<long, long>& counts) {
    ReportJson arr = ReportJson::array();
    for (const auto& [d, c] : counts) arr.push_back({d, c});
    return arr;
}

std::string rstr(const Rational& r) { return r.str(); }

}  // namespace

std::string fnv1a_digest(const std::string& data) {
    unsigned long long h = 14695981039346656037ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << "fnv1a:" << std::hex;
    for (int shift = 60; shift >= 0; shift -= 4) os << ((h >> shift) & 0xf);
    return os.str();
}

ReportJson report_envelope(const std::string& command, const std::string& input_name,
                           const std::string& canonical_input,
                           const std::vector<std::string>& warnings) {
    ReportJson doc;
    doc["command"] = command;
    doc["input"] = input_name;
    doc["digest"] = fnv1a_digest(canonical_input);
    doc["warnings"] = warnings;
    return doc;
}

ReportJson bounds_json(const BoundReport& rep) {
    ReportJson j;
    j["kind"] = rep.kind;
    j["degenerate"] = rep.degenerate;
    j["generator_bound"] = rstr(rep.generator_bound);
    j["generator_floor"] = rep.generator_floor;
    j["relation_bound"] = rstr(rep.relation_bound);
    j["relation_floor"] = rep.relation_floor;
    ReportJson deg = ReportJson::array();
    for (const Rational& d : rep.deg) deg.push_back(rstr(d));
    j["deg"] = deg;
    if (!rep.ell.empty()) j["ell"] = rep.ell;
    if (!rep.ell_pair.empty()) {
        ReportJson t = ReportJson::array();
        for (const auto& [i, jj, l] : rep.ell_pair) t.push_back({i, jj, l});
        j["ell_pair"] = t;
    }
    if (rep.kind == "hirzebruch") {
        j["rho"] = rep.rho;
        j["tau"] = rep.tau;
    }
    if (!rep.ray_degrees.empty()) {
        j["ray_degrees"] = rep.ray_degrees;
        j["chi_bound"] = rstr(rep.chi);
    }
    if (rep.kind == "projective") j["psi_bound"] = rstr(rep.psi);
    j["warnings"] = rep.warnings;
    j["notes"] = rep.notes;
    return j;
}

ReportJson presentation_json(const Presentation& pres) {
    ReportJson j;
    j["generator_bound"] = pres.generator_bound;
    j["relation_bound"] = pres.relation_bound;
    ReportJson gens = ReportJson::array();
    for (size_t i = 0; i < pres.generators.size(); ++i) {
        const Generator& g = pres.generators[i];
        ReportJson jg;
        jg["index"] = i;
        jg["component"] = g.component;
        jg["convergent"] = g.convergent;
        jg["degree"] = g.degree;
        jg["pole_order"] = g.pole_order;
        jg["numerator"] = g.numerator.str();
        jg["element"] = format_generator(pres, i);
        gens.push_back(jg);
    }
    j["generators"] = gens;
    ReportJson rels = ReportJson::array();
    for (const Relation& r : pres.relations) {
        ReportJson jr;
        jr["kind"] = relation_kind_name(r.kind);
        jr["degree"] = r.degree;
        jr["lhs"] = word_json(r.lhs);
        ReportJson rhs = ReportJson::array();
        std::ostringstream disp;
        disp << format_word(pres, r.lhs) << " =";
        bool first = true;
        for (const auto& [c, w] : r.rhs) {
            ReportJson jt;
            jt["coeff"] = rstr(c);
            jt["word"] = word_json(w);
            rhs.push_back(jt);
            if (first && c == Rational(1)) disp << " ";
            else if (c == Rational(1)) disp << " + ";
            else if (c == Rational(-1)) disp << " - ";
            else disp << (first ? " " : " + ") << rstr(c) << "*";
            disp << format_word(pres, w);
            first = false;
        }
        if (r.rhs.empty()) disp << " 0";
        jr["rhs"] = rhs;
        jr["display"] = disp.str();
        rels.push_back(jr);
    }
    j["relations"] = rels;
    j["relations_capped"] = pres.relations_capped;
    j["notes"] = pres.notes;
    return j;
}

ReportJson basis_json(const SectionRing& R, long degree) {
    ReportJson j;
    j["degree"] = degree;
    j["dim"] = R.dim(degree);
    const QDivisor& D = R.divisor();
    std::vector<std::pair<Polynomial, long>> den;
    for (size_t i = 0; i < D.size(); ++i) {
        long e = D.E(i, degree);
        if (e > 0) den.emplace_back(D.comps[i].poly, e);
    }
    j["denominator"] = den.empty() ? "1" : format_power_product(den);
    ReportJson nums = ReportJson::array();
    for (const auto& e : R.h_basis(degree))
        nums.push_back(Polynomial::monomial(D.X.vars, e, Rational(1)).str());
    j["numerators"] = nums;
    return j;
}

ReportJson cone_json(const std::vector<Ray>& rays, const std::vector<std::vector<long>>* box) {
    ReportJson j;
    ReportJson jr = ReportJson::array();
    long degsum = 0;
    for (const Ray& r : rays) {
        ReportJson one;
        one["label"] = r.label;
        one["degree"] = r.degree;
        one["point"] = r.point;
        jr.push_back(one);
        degsum += r.degree;
    }
    j["rays"] = jr;
    j["degree_sum"] = degsum;
    j["extremal"] = rays_extremal(rays);
    if (box) {
        ReportJson jb = ReportJson::array();
        for (const auto& p : *box) jb.push_back(p);
        j["box_points"] = jb;
    }
    return j;
}

ReportJson verify_json(const VerifyOutcome& out, long generator_bound, long relation_bound) {
    ReportJson j;
    j["verdict"] = verdict_name(out.verdict);
    j["generator_bound"] = generator_bound;
    if (relation_bound >= 0) j["relation_bound"] = relation_bound;
    j["d_max"] = out.report.d_max;
    j["capped"] = out.report.capped;
    j["generators_by_degree"] = degree_counts(out.report.generators);
    j["relations_by_degree"] = degree_counts(out.report.relations);
    if (!out.report.relation_degrees_modp_only.empty())
        j["relation_degrees_modp_only"] = out.report.relation_degrees_modp_only;
    if (out.verdict == Verdict::Fail) {
        j["witness_degree"] = out.witness_degree;
        j["witness_kind"] = out.witness_kind;
    }
    j["notes"] = out.report.notes;
    return j;
}

std::string bounds_text(const BoundReport& rep) {
    std::ostringstream os;
    os << "kind: " << rep.kind << "\n";
    os << "degree:";
    for (const Rational& d : rep.deg) os << " " << rstr(d);
    os << "\n";
    os << "generator bound: " << rstr(rep.generator_bound) << " (floor " << rep.generator_floor
       << ")\n";
    os << "relation bound:  " << rstr(rep.relation_bound) << " (floor " << rep.relation_floor
       << ")\n";
    if (!rep.ell.empty()) {
        os << "ell:";
        for (long l : rep.ell) os << " " << l;
        os << "\n";
    }
    if (rep.kind == "hirzebruch") os << "rho: " << rep.rho << "  tau: " << rep.tau << "\n";
    if (!rep.ray_degrees.empty()) {
        os << "ray degrees:";
        for (long d : rep.ray_degrees) os << " " << d;
        os << "  (chi bound " << rstr(rep.chi) << ")\n";
    }
    if (rep.kind == "projective") os << "psi bound: " << rstr(rep.psi) << "\n";
    for (const auto& w : rep.warnings) os << "warning: " << w << "\n";
    for (const auto& n : rep.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string presentation_text(const Presentation& pres) {
    std::ostringstream os;
    os << "bounds: generators <= " << pres.generator_bound << ", relations <= "
       << pres.relation_bound << "\n";
    os << "generators (" << pres.generators.size() << "):\n";
    for (size_t i = 0; i < pres.generators.size(); ++i) {
        const Generator& g = pres.generators[i];
        os << "  F" << i << " = " << format_generator(pres, i) << "  [degree " << g.degree;
        if (g.component >= 0)
            os << ", component " << g.component << ", convergent " << g.convergent;
        os << "]\n";
    }
    os << "relations (" << pres.relations.size() << (pres.relations_capped ? ", capped" : "")
       << "):\n";
    for (const Relation& r : pres.relations) {
        os << "  [" << relation_kind_name(r.kind) << ", degree " << r.degree << "] "
           << format_word(pres, r.lhs) << " = ";
        bool first = true;
        for (const auto& [c, w] : r.rhs) {
            if (c == Rational(1)) os << (first ? "" : " + ");
            else if (c == Rational(-1)) os << (first ? "-" : " - ");
            else os << (first ? "" : " + ") << rstr(c) << "*";
            os << format_word(pres, w);
            first = false;
        }
        if (r.rhs.empty()) os << "0";
        os << "\n";
    }
    for (const auto& n : pres.notes) os << "note: " << n << "\n";
    return os.str();
}

std::string basis_text(const SectionRing& R, long degree) {
    std::ostringstream os;
    const QDivisor& D = R.divisor();
    os << "degree " << degree << ": dim " << R.dim(degree) << "\n";
    std::vector<std::pair<Polynomial, long>> den;
    for (size_t i = 0; i < D.size(); ++i) {
        long e = D.E(i, degree);
        if (e > 0) den.emplace_back(D.comps[i].poly, e);
    }
    os << "common denominator: " << (den.empty() ? "1" : format_power_product(den)) << "\n";
    for (const auto& e : R.h_basis(degree))
        os << "  " << Polynomial::monomial(D.X.vars, e, Rational(1)).str() << "\n";
    return os.str();
}

std::string cone_text(const std::vector<Ray>& rays, const std::vector<std::vector<long>>* box) {
    std::ostringstream os;
    long degsum = 0;
    for (const Ray& r : rays) {
        os << r.label << " (degree " << r.degree << "):";
        for (long x : r.point) os << " " << x;
        os << "\n";
        degsum += r.degree;
    }
    os << "degree sum: " << degsum << "\n";
    os << "extremal: " << (rays_extremal(rays) ? "yes" : "no") << "\n";
    if (box) {
        os << "box points (" << box->size() << "):\n";
        for (const auto& p : *box) {
            os << " ";
            for (long x : p) os << " " << x;
            os << "\n";
        }
    }
    return os.str();
}

std::string verify_text(const VerifyOutcome& out, long generator_bound, long relation_bound) {
    std::ostringstream os;
    os << verdict_name(out.verdict) << " (generator bound " << generator_bound;
    if (relation_bound >= 0) os << ", relation bound " << relation_bound;
    os << ", swept to degree " << out.report.d_max << (out.report.capped ? ", capped" : "")
       << ")\n";
    os << "generators by degree:";
    for (const auto& [d, c] : out.report.generators) os << " " << d << ":" << c;
    os << "\n";
    if (!out.report.relations.empty()) {
        os << "relations by degree:";
        for (const auto& [d, c] : out.report.relations) os << " " << d << ":" << c;
        os << "\n";
    }
    if (out.verdict == Verdict::Fail)
        os << "violation: " << out.witness_kind << " at degree " << out.witness_degree << "\n";
    for (const auto& n : out.report.notes) os << "note: " << n << "\n";
    return os.str();
}

}  // namespace canring
