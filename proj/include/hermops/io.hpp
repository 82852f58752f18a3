#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hermops/poly.hpp"
#include "hermops/verify.hpp"

namespace hermops {

using Json = nlohmann::ordered_json;

/// Polynomial terms in descending graded-lexicographic order (leading term
/// first), the declared rendering order for all outputs.
inline std::vector<std::pair<Poly::Key, Scalar>> ordered_terms(const Poly& p) {
    std::vector<std::pair<Poly::Key, Scalar>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    return terms;
}

inline Json poly_to_json(const std::string& kind,
                         const std::map<std::string, std::string>& params, const Poly& p) {
    Json j;
    j["kind"] = kind;
    j["params"] = Json::object();
    for (const auto& [k, v] : params) j["params"][k] = v;
    j["terms"] = Json::array();
    for (const auto& [key, coeff] : ordered_terms(p)) {
        Json t;
        t["xdeg"] = key.first;
        t["ydeg"] = key.second;
        t["coeff"] = coeff.str();
        j["terms"].push_back(std::move(t));
    }
    return j;
}

inline std::string monomial_pretty(int xdeg, int ydeg) { return monomial_name(xdeg, ydeg); }

inline std::string poly_to_pretty(const Poly& p) {
    if (p.is_zero()) return "0\n";
    std::string out;
    for (const auto& [key, coeff] : ordered_terms(p))
        out += monomial_pretty(key.first, key.second) + ": " + coeff.str() + "\n";
    return out;
}

inline std::string poly_to_csv(const Poly& p) {
    std::string out = "xdeg,ydeg,coeff\n";
    for (const auto& [key, coeff] : ordered_terms(p))
        out += std::to_string(key.first) + "," + std::to_string(key.second) + "," + coeff.str() +
               "\n";
    return out;
}

inline Json report_to_json(const VerificationReport& r) {
    Json j;
    j["check_id"] = r.check_id;
    j["params"] = Json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["mode"] = r.mode == CheckMode::exact ? "exact" : "float";
    j["residual"] = r.residual.str();
    j["tolerance"] = r.tolerance.str();
    j["verdict"] = verdict_name(r.verdict);
    j["notes"] = r.notes;
    return j;
}

inline Json reports_to_json(const std::vector<VerificationReport>& reports) {
    Json j;
    j["reports"] = Json::array();
    int passed = 0, failed = 0;
    for (const auto& r : reports) {
        j["reports"].push_back(report_to_json(r));
        (r.passed() ? passed : failed)++;
    }
    j["summary"] = Json{{"total", reports.size()}, {"passed", passed}, {"failed", failed}};
    return j;
}

inline std::string params_compact(const std::map<std::string, std::string>& params) {
    std::string out;
    for (const auto& [k, v] : params) {
        if (!out.empty()) out += ";";
        out += k + "=" + v;
    }
    return out;
}

inline std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
    std::string out = "check_id,params,residual,verdict\n";
    for (const auto& r : reports)
        out +=
            r.check_id + ",\"" + params_compact(r.params) + "\"," + r.residual.str() + "," +
            verdict_name(r.verdict) + "\n";
    return out;
}

inline std::string report_to_pretty(const VerificationReport& r) {
    std::string out = "[";
    out += verdict_name(r.verdict);
    out += "] ";
    out += r.check_id;
    std::string params = params_compact(r.params);
    if (!params.empty()) out += " {" + params + "}";
    out += " residual=" + r.residual.str();
    out += r.mode == CheckMode::exact ? " (exact)" : " tol=" + r.tolerance.str();
    if (!r.notes.empty()) out += "\n    " + r.notes;
    out += "\n";
    return out;
}

inline std::string reports_to_pretty(const std::vector<VerificationReport>& reports) {
    std::string out;
    int passed = 0;
    for (const auto& r : reports) {
        out += report_to_pretty(r);
        if (r.passed()) ++passed;
    }
    out += std::to_string(passed) + "/" + std::to_string(reports.size()) + " checks passed\n";
    return out;
}

}  // namespace hermops
