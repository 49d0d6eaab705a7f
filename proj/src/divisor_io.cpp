#include "canring/divisor_io.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace canring {

namespace {

using ordered_json = nlohmann::ordered_json;

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// The offending term of an inhomogeneous polynomial, for the error message.
std::string term_string(const VarList& vars, const std::vector<int>& e, const Rational& c) {
    Polynomial t = Polynomial::monomial(vars, e, c);
    return t.str();
}

void check_homogeneous(const Variety& X, const Polynomial& f, size_t comp_index) {
    if (f.is_zero())
        throw DivisorParseError("component " + std::to_string(comp_index) +
                                ": zero polynomial is not a divisor");
    auto it = f.terms().begin();
    std::vector<long> cls = X.monomial_class(it->first);
    for (const auto& [e, c] : f.terms()) {
        if (X.monomial_class(e) != cls)
            throw DivisorParseError("component " + std::to_string(comp_index) +
                                    ": non-homogeneous polynomial, offending term " +
                                    term_string(X.vars, e, c));
    }
    bool positive = false;
    for (long v : cls) positive = positive || v > 0;
    if (!positive)
        throw DivisorParseError("component " + std::to_string(comp_index) +
                                ": constant polynomial is not a divisor");
}

bool proportional(const Polynomial& f, const Polynomial& g) {
    if (f.term_count() != g.term_count()) return false;
    const Rational cf = f.leading_term().second, cg = g.leading_term().second;
    return f.scaled(cg) == g.scaled(cf);
}

// Distinguish a variable from the other variety's conventional alphabet so
// the error can say "wrong variable set" rather than just "unknown".
bool looks_like_other_variety(const Variety& X, const std::string& name) {
    if (X.type == VarietyType::Projective)
        return name == "u" || name == "v" || name == "z" || name == "w";
    return name.size() >= 2 && name[0] == 'x' && all_digits(name.substr(1));
}

std::string quoted_name(const std::string& message) {
    auto a = message.find('\'');
    if (a == std::string::npos) return "";
    auto b = message.find('\'', a + 1);
    if (b == std::string::npos) return "";
    return message.substr(a + 1, b - a - 1);
}

}  // namespace

Rational parse_rational_text(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception&) {
        throw DivisorParseError("malformed rational '" + text + "'");
    }
}

QDivisor parse_divisor_spec(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw DivisorParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("variety"))
        throw DivisorParseError("divisor spec must be an object with a \"variety\" field");
    const auto& v = doc["variety"];
    if (!v.is_object() || !v.contains("type") || !v["type"].is_string())
        throw DivisorParseError("\"variety\" needs a string \"type\"");
    std::string type = v["type"].get<std::string>();
    Variety X;
    if (type == "projective") {
        if (!v.contains("dim") || !v["dim"].is_number_integer())
            throw DivisorParseError("projective variety needs an integer \"dim\"");
        int m = v["dim"].get<int>();
        if (m < 1 || m > 10) throw DivisorParseError("projective dimension out of range [1, 10]");
        X = Variety::projective(m);
    } else if (type == "hirzebruch") {
        if (!v.contains("m") || !v["m"].is_number_integer())
            throw DivisorParseError("hirzebruch variety needs an integer \"m\"");
        int m = v["m"].get<int>();
        if (m < 0 || m > 10) throw DivisorParseError("hirzebruch parameter out of range [0, 10]");
        X = Variety::hirzebruch(m);
    } else {
        throw DivisorParseError("unknown variety type '" + type + "'");
    }

    QDivisor D{X, {}};
    if (doc.contains("components")) {
        const auto& comps = doc["components"];
        if (!comps.is_array()) throw DivisorParseError("\"components\" must be an array");
        for (size_t i = 0; i < comps.size(); ++i) {
            const auto& c = comps[i];
            if (!c.is_object() || !c.contains("coeff") || !c.contains("poly") ||
                !c["coeff"].is_string() || !c["poly"].is_string())
                throw DivisorParseError("component " + std::to_string(i) +
                                        ": need string fields \"coeff\" and \"poly\"");
            Rational coeff = parse_rational_text(c["coeff"].get<std::string>());
            Polynomial f;
            try {
                f = Polynomial::parse(X.vars, c["poly"].get<std::string>());
            } catch (const std::exception& e) {
                std::string msg = e.what();
                std::string name = quoted_name(msg);
                if (!name.empty() && looks_like_other_variety(X, name))
                    throw DivisorParseError("component " + std::to_string(i) +
                                            ": wrong variable set for the variety ('" + name +
                                            "' belongs to the other surface kind)");
                throw DivisorParseError("component " + std::to_string(i) + ": " + msg);
            }
            check_homogeneous(X, f, i);
            for (size_t j = 0; j < D.comps.size(); ++j) {
                if (proportional(D.comps[j].poly, f))
                    throw DivisorParseError("proportional duplicate components " +
                                            std::to_string(j) + " and " + std::to_string(i));
            }
            D.comps.push_back({f, coeff});
        }
    }
    return D;
}

std::string serialize_divisor(const QDivisor& D) {
    ordered_json doc;
    ordered_json v;
    if (D.X.type == VarietyType::Projective) {
        v["type"] = "projective";
        v["dim"] = D.X.m;
    } else {
        v["type"] = "hirzebruch";
        v["m"] = D.X.m;
    }
    doc["variety"] = v;
    doc["components"] = ordered_json::array();
    for (const auto& c : D.comps) {
        ordered_json jc;
        jc["coeff"] = c.coeff.str();
        jc["poly"] = c.poly.str();
        doc["components"].push_back(jc);
    }
    return doc.dump(2);
}

}  // namespace canring
