#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "canring/bounds.hpp"
#include "canring/convergents.hpp"
#include "canring/divisor_io.hpp"
#include "canring/oracle.hpp"
#include "canring/presentation.hpp"
#include "canring/reports.hpp"
#include "canring/sections.hpp"

namespace {

using namespace canring;

constexpr int kOk = 0, kFail = 1, kUsage = 2, kInconclusive = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DivisorParseError("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct LoadedDivisor {
    QDivisor D;
    std::string canonical;
};

LoadedDivisor load_divisor(const std::string& path) {
    QDivisor D = parse_divisor_spec(slurp(path));
    return {D, serialize_divisor(D)};
}

void emit(const ReportJson& envelope, const std::string& text, bool json) {
    if (json)
        std::cout << envelope.dump(2) << "\n";
    else
        std::cout << text;
}

int run_bounds(const std::string& path, bool json) {
    auto [D, canonical] = load_divisor(path);
    BoundReport rep = bound_report(D);
    ReportJson env = report_envelope("bounds", path, canonical, rep.warnings);
    env["result"] = bounds_json(rep);
    emit(env, bounds_text(rep), json);
    return kOk;
}

int run_present(const std::string& path, bool json) {
    auto [D, canonical] = load_divisor(path);
    Presentation pres = effective_presentation(D, OracleCaps::from_env());
    std::vector<std::string> warnings;
    if (pres.relations_capped) warnings.push_back("relation search capped");
    ReportJson env = report_envelope("present", path, canonical, warnings);
    env["result"] = presentation_json(pres);
    emit(env, presentation_text(pres), json);
    return kOk;
}

int run_basis(const std::string& path, long degree, bool json) {
    auto [D, canonical] = load_divisor(path);
    SectionRing R(D);
    ReportJson env = report_envelope("basis", path, canonical, {});
    env["result"] = basis_json(R, degree);
    emit(env, basis_text(R, degree), json);
    return kOk;
}

int run_cone(const std::string& path, bool with_box, bool json) {
    auto [D, canonical] = load_divisor(path);
    std::vector<std::string> warnings;
    QDivisor Dc = ghost_complete(D, &warnings);
    for (auto& w : warnings) w = "ghost component appended: " + w;
    std::vector<Ray> rays;
    if (D.X.type == VarietyType::Projective) {
        rays = extremal_rays_proj(Dc);
    } else {
        rays = extremal_rays_hirz(Dc, &warnings);
    }
    std::vector<std::vector<long>> box;
    if (with_box) box = box_points(rays);
    ReportJson env = report_envelope("cone", path, canonical, warnings);
    env["result"] = cone_json(rays, with_box ? &box : nullptr);
    emit(env, cone_text(rays, with_box ? &box : nullptr), json);
    return kOk;
}

int run_verify(const std::string& path, long max_degree, bool relations, bool json) {
    auto [D, canonical] = load_divisor(path);
    BoundReport brep = bound_report(D);
    if (brep.kind == "degenerate") {
        ReportJson env = report_envelope("verify", path, canonical, brep.warnings);
        ReportJson res;
        res["verdict"] = "INCONCLUSIVE";
        res["notes"] = brep.notes;
        env["result"] = res;
        emit(env, std::string("INCONCLUSIVE: no finite bounds for this input\n"), json);
        return kInconclusive;
    }
    SectionRing R(D);
    VerifyOutcome out = verify_bounds(R, brep.generator_floor, relations ? brep.relation_floor : -1,
                                      max_degree, relations, OracleCaps::from_env());
    ReportJson env = report_envelope("verify", path, canonical, brep.warnings);
    env["result"] = verify_json(out, brep.generator_floor, relations ? brep.relation_floor : -1);
    emit(env, verify_text(out, brep.generator_floor, relations ? brep.relation_floor : -1), json);
    switch (out.verdict) {
        case Verdict::Pass: return kOk;
        case Verdict::Fail: return kFail;
        default: return kInconclusive;
    }
}

int run_convergents(const std::string& pq, bool json) {
    Rational alpha;
    try {
        alpha = Rational::parse(pq);
    } catch (const std::exception&) {
        throw DivisorParseError("malformed rational '" + pq + "'");
    }
    if (!(Rational(0) < alpha)) throw DivisorParseError("convergents need a positive rational");
    auto chain = lower_convergents(alpha);
    if (json) {
        ReportJson env = report_envelope("convergents", pq, pq, {});
        ReportJson arr = ReportJson::array();
        for (const Convergent& c : chain) arr.push_back({c.c, c.d});
        ReportJson res;
        res["alpha"] = alpha.str();
        res["convergents"] = arr;
        env["result"] = res;
        std::cout << env.dump(2) << "\n";
    } else {
        bool first = true;
        for (const Convergent& c : chain) {
            if (!first) std::cout << " ";
            std::cout << c.c << "/" << c.d;
            first = false;
        }
        std::cout << "\n";
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized canonical rings of Q-divisors on P^m and Hirzebruch surfaces"};
    app.require_subcommand(1);

    std::string file, pq;
    long degree = 0, max_degree = 0;
    bool json_bounds = false, json_present = false, json_basis = false, json_cone = false,
         json_verify = false, json_conv = false;
    bool with_box = false, relations = false;

    auto* cb = app.add_subcommand("bounds", "degree bounds for a divisor spec");
    cb->add_option("file", file, "divisor spec JSON file")->required();
    cb->add_flag("--json", json_bounds, "machine-readable output");

    auto* cp = app.add_subcommand("present", "explicit presentation of an effective divisor ring");
    cp->add_option("file", file, "divisor spec JSON file")->required();
    cp->add_flag("--json", json_present, "machine-readable output");

    auto* cba = app.add_subcommand("basis", "basis of one graded piece");
    cba->add_option("file", file, "divisor spec JSON file")->required();
    cba->add_option("--degree", degree, "graded degree d")->required();
    cba->add_flag("--json", json_basis, "machine-readable output");

    auto* cc = app.add_subcommand("cone", "extremal rays of the exponent cone");
    cc->add_option("file", file, "divisor spec JSON file")->required();
    cc->add_flag("--box", with_box, "also enumerate fundamental-box lattice points");
    cc->add_flag("--json", json_cone, "machine-readable output");

    auto* cv = app.add_subcommand("verify", "oracle check of the bounds up to a degree horizon");
    cv->add_option("file", file, "divisor spec JSON file")->required();
    cv->add_option("--max-degree", max_degree, "sweep horizon")->required();
    cv->add_flag("--relations", relations, "also verify the relation bound");
    cv->add_flag("--json", json_verify, "machine-readable output");

    auto* cg = app.add_subcommand("convergents", "lower convergents of a positive rational");
    cg->add_option("value", pq, "rational p/q")->required();
    cg->add_flag("--json", json_conv, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*cb) return run_bounds(file, json_bounds);
        if (*cp) return run_present(file, json_present);
        if (*cba) return run_basis(file, degree, json_basis);
        if (*cc) return run_cone(file, with_box, json_cone);
        if (*cv) return run_verify(file, max_degree, relations, json_verify);
        if (*cg) return run_convergents(pq, json_conv);
    } catch (const DivisorParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInconclusive;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFail;
    }
    return kUsage;
}
