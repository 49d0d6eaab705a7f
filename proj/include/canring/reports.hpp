#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "canring/bounds.hpp"
#include "canring/cones.hpp"
#include "canring/oracle.hpp"
#include "canring/presentation.hpp"
#include "canring/sections.hpp"

namespace canring {

using ReportJson = nlohmann::ordered_json;

// 64-bit FNV-1a of the canonicalized input, rendered "fnv1a:<16 hex digits>".
std::string fnv1a_digest(const std::string& data);

// {"command":..., "input":..., "digest":..., "warnings": [...]} with the
// command's payload to be attached under "result" by the caller.
ReportJson report_envelope(const std::string& command, const std::string& input_name,
                           const std::string& canonical_input,
                           const std::vector<std::string>& warnings);

ReportJson bounds_json(const BoundReport& rep);
ReportJson presentation_json(const Presentation& pres);
ReportJson basis_json(const SectionRing& R, long degree);
ReportJson cone_json(const std::vector<Ray>& rays, const std::vector<std::vector<long>>* box);
ReportJson verify_json(const VerifyOutcome& out, long generator_bound, long relation_bound);

std::string bounds_text(const BoundReport& rep);
std::string presentation_text(const Presentation& pres);
std::string basis_text(const SectionRing& R, long degree);
std::string cone_text(const std::vector<Ray>& rays, const std::vector<std::vector<long>>* box);
std::string verify_text(const VerifyOutcome& out, long generator_bound, long relation_bound);

}  // namespace canring
