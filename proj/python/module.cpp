#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "canring/bounds.hpp"
#include "canring/convergents.hpp"
#include "canring/divisor_io.hpp"
#include "canring/oracle.hpp"
#include "canring/presentation.hpp"
#include "canring/reports.hpp"
#include "canring/sections.hpp"

namespace py = pybind11;
using namespace canring;

namespace {

QDivisor load(const std::string& spec) { return parse_divisor_spec(spec); }

std::string bounds_str(const std::string& spec) {
    return bounds_json(bound_report(load(spec))).dump();
}

std::string present_str(const std::string& spec) {
    return presentation_json(effective_presentation(load(spec), OracleCaps::from_env())).dump();
}

std::string basis_str(const std::string& spec, long degree) {
    QDivisor D = load(spec);
    SectionRing R(D);
    return basis_json(R, degree).dump();
}

std::string cone_str(const std::string& spec, bool box) {
    QDivisor D = load(spec);
    std::vector<std::string> warnings;
    QDivisor Dc = ghost_complete(D, &warnings);
    std::vector<Ray> rays = D.X.type == VarietyType::Projective
                                ? extremal_rays_proj(Dc)
                                : extremal_rays_hirz(Dc, &warnings);
    std::vector<std::vector<long>> pts;
    if (box) pts = box_points(rays);
    ReportJson j = cone_json(rays, box ? &pts : nullptr);
    j["warnings"] = warnings;
    return j.dump();
}

std::string verify_str(const std::string& spec, long max_degree, bool relations) {
    QDivisor D = load(spec);
    BoundReport brep = bound_report(D);
    SectionRing R(D);
    VerifyOutcome out = verify_bounds(R, brep.generator_floor,
                                      relations ? brep.relation_floor : -1, max_degree,
                                      relations, OracleCaps::from_env());
    return verify_json(out, brep.generator_floor, relations ? brep.relation_floor : -1).dump();
}

std::vector<std::pair<long, long>> convergents_list(const std::string& pq) {
    Rational alpha = Rational::parse(pq);
    std::vector<std::pair<long, long>> out;
    for (const Convergent& c : lower_convergents(alpha)) out.emplace_back(c.c, c.d);
    return out;
}

long dim_fn(const std::string& spec, long d) {
    QDivisor D = load(spec);
    SectionRing R(D);
    return graded_dimension(R, d);
}

std::string canonical_fn(const std::string& spec) { return serialize_divisor(load(spec)); }

}  // namespace

PYBIND11_MODULE(_canring, m) {
    m.doc() = "section rings of Q-divisors on projective spaces and Hirzebruch surfaces";
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DivisorParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });
    m.def("bounds_json", &bounds_str, py::arg("spec"),
          "degree-bound report for a divisor spec, as a JSON string");
    m.def("present_json", &present_str, py::arg("spec"),
          "explicit presentation of an effective projective divisor ring, as JSON");
    m.def("basis_json", &basis_str, py::arg("spec"), py::arg("degree"),
          "basis of one graded piece, as JSON");
    m.def("cone_json", &cone_str, py::arg("spec"), py::arg("box") = false,
          "extremal rays (and optionally box points) of the exponent cone, as JSON");
    m.def("verify_json", &verify_str, py::arg("spec"), py::arg("max_degree"),
          py::arg("relations") = false, "oracle bound verification report, as JSON");
    m.def("convergents", &convergents_list, py::arg("alpha"),
          "lower convergents of a positive rational 'p/q' as (c, d) pairs");
    m.def("graded_dimension", &dim_fn, py::arg("spec"), py::arg("degree"),
          "dim of the degree-d piece of the section ring");
    m.def("canonical_spec", &canonical_fn, py::arg("spec"),
          "canonical serialized form of a divisor spec");
}
