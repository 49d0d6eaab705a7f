#pragma once

#include <stdexcept>
#include <string>

#include "canring/variety.hpp"

namespace canring {

struct DivisorParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parse a divisor-spec JSON document:
//   {"variety": {"type": "projective", "dim": m} | {"type": "hirzebruch", "m": m},
//    "components": [{"coeff": "p/q", "poly": "..."}, ...]}
// Ghost completion is NOT applied; engines add frames themselves and report
// them as warnings. Throws DivisorParseError on malformed rationals, unknown
// variables, non-homogeneous polynomials (naming the offending term),
// proportional duplicate components, and variable sets belonging to the
// other variety kind.
QDivisor parse_divisor_spec(const std::string& text);

// Canonical JSON for a divisor; parse(serialize(D)) reproduces D.
std::string serialize_divisor(const QDivisor& D);

// "p/q" in lowest terms ("p" when the denominator is 1).
Rational parse_rational_text(const std::string& text);

}  // namespace canring
