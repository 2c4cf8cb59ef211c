// JSON ingestion and report emission: the spec-file schema
// {"schema":1, "group":{"orders":[...]}, "R":[[...],...], "L":[...], "T":[...]},
// the extension schema for Cayley conversion, and the analysis/verdict
// report layout. Field order is deterministic (ordered maps) so reports
// can be compared byte-for-byte in regression tests.

#pragma once

#include "pstkit/bridge.hpp"
#include "pstkit/oracle.hpp"
#include "pstkit/pst.hpp"
#include "pstkit/spectrum.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace pstkit {

using Json = nlohmann::ordered_json;

inline Json element_to_json(const GroupElement& g) {
    return Json(g);
}

inline GroupElement element_from_json(const Json& j) {
    if (!j.is_array())
        throw invalid_spec("element must be an array of residues");
    return j.get<GroupElement>();
}

inline Json elements_to_json(const std::vector<GroupElement>& v) {
    Json arr = Json::array();
    for (const auto& g : v) arr.push_back(element_to_json(g));
    return arr;
}

inline std::vector<GroupElement> elements_from_json(const Json& j) {
    if (!j.is_array()) throw invalid_spec("expected an array of elements");
    std::vector<GroupElement> out;
    for (const auto& e : j) out.push_back(element_from_json(e));
    return out;
}

inline Json spec_to_json(const BiCayleySpec& spec) {
    Json j;
    j["schema"] = 1;
    j["group"]["orders"] = spec.group().orders();
    j["R"] = elements_to_json(spec.right());
    j["L"] = elements_to_json(spec.left());
    j["T"] = elements_to_json(spec.spokes());
    return j;
}

inline BiCayleySpec spec_from_json(const Json& j) {
    if (!j.contains("group") || !j["group"].contains("orders"))
        throw invalid_spec("spec file: missing group.orders");
    GroupSpec g = make_group(j["group"]["orders"].get<std::vector<long>>());
    auto get = [&](const char* key) {
        return j.contains(key) ? elements_from_json(j[key])
                               : std::vector<GroupElement>{};
    };
    return BiCayleySpec(std::move(g), get("R"), get("L"), get("T"));
}

/// {"orders":[...], "phi":[[...],...], "b_squared":[...],
///  "S_inG":[[...],...], "S_inBG":[...]}
inline std::pair<ExtensionSpec, CayleySet> extension_from_json(const Json& j) {
    GroupSpec g = make_group(j.at("orders").get<std::vector<long>>());
    std::vector<GroupElement> phi = elements_from_json(j.at("phi"));
    ExtensionSpec ext(std::move(g), std::move(phi),
                      element_from_json(j.at("b_squared")));
    CayleySet s{elements_from_json(j.at("S_inG")),
                elements_from_json(j.at("S_inBG"))};
    return {std::move(ext), std::move(s)};
}

inline Json extension_to_json(const ExtensionSpec& ext, const CayleySet& s) {
    Json j;
    j["schema"] = 1;
    j["orders"] = ext.base().orders();
    Json phi = Json::array();
    for (std::size_t i = 0; i < ext.base().arity(); ++i) {
        GroupElement e(ext.base().arity(), 0);
        e[i] = ext.base().orders()[i] == 1 ? 0 : 1;
        phi.push_back(element_to_json(ext.phi(e)));
    }
    j["phi"] = phi;
    j["b_squared"] = element_to_json(ext.b_squared());
    j["S_inG"] = elements_to_json(s.in_g);
    j["S_inBG"] = elements_to_json(s.in_bg);
    return j;
}

inline Json timeset_to_json(const TimeSet& ts) {
    Json j;
    j["divisor"] = ts.divisor.str();
    j["kind"] = ts.kind == TimeSet::Kind::ODD_MULTIPLES ? "odd" : "even";
    j["zero_allowed"] = ts.zero_allowed;
    return j;
}

inline Json rational_to_json(const BigRat& q) {
    Json j;
    j["num"] = boost::multiprecision::numerator(q).str();
    j["den"] = boost::multiprecision::denominator(q).str();
    return j;
}

inline Json vertex_to_json(const Vertex& v) {
    Json j;
    j["part"] = v.part;
    j["element"] = element_to_json(v.element);
    return j;
}

inline Json verdict_to_json(const PstVerdict& v) {
    Json j;
    j["exists"] = v.exists;
    if (v.times) j["times"] = timeset_to_json(*v.times);
    if (!v.exists) j["failure"] = to_string(v.failure);
    if (v.witness_k >= 0) j["witness_k"] = v.witness_k;
    if (v.mu) j["mu"] = *v.mu;
    if (v.undecided) j["undecided"] = true;
    if (!v.detail.empty()) j["detail"] = v.detail;
    return j;
}

inline Json spectrum_to_json(const SpectrumTable& table) {
    Json rows = Json::array();
    for (const auto& r : table.rows()) {
        Json row;
        row["k"] = r.index;
        row["label"] = element_to_json(r.label);
        if (r.lo) {
            row["lo"] = r.lo->str();
            row["hi"] = r.hi->str();
        } else {
            row["lo_approx"] = r.lo_num;
            row["hi_approx"] = r.hi_num;
        }
        row["chi_T_zero"] = r.chi_t_zero;
        rows.push_back(row);
    }
    return rows;
}

inline Json analysis_report(const BiCayleySpec& spec) {
    SpectrumTable table(spec);
    Json j;
    j["schema"] = 1;
    j["vertices"] = spec.vertex_count();
    j["degree_part0"] = spec.right().size() + spec.spokes().size();
    j["degree_part1"] = spec.left().size() + spec.spokes().size();
    j["connected"] = spec.is_connected();
    j["integral"] = table.is_integral();
    j["weakly_inner_cospectral"] = table.is_weakly_inner_cospectral();
    j["spectrum"] = spectrum_to_json(table);
    return j;
}

inline Json survey_to_json(const DecisionEngine::Survey& survey,
                           const BiCayleySpec& spec) {
    Json pairs = Json::array();
    for (const auto& p : survey.pairs) {
        Json e;
        e["u"] = vertex_to_json(p.u);
        e["v"] = vertex_to_json(p.v);
        e["times"] = timeset_to_json(p.times);
        pairs.push_back(e);
    }
    Json undecided = Json::array();
    for (const auto& [u, v] : survey.undecided) {
        Json e;
        e["u"] = vertex_to_json(u);
        e["v"] = vertex_to_json(v);
        undecided.push_back(e);
    }
    Json j;
    j["schema"] = 1;
    j["vertices"] = spec.vertex_count();
    j["pairs"] = pairs;
    j["undecided"] = undecided;
    return j;
}

inline Json verify_report_to_json(const VerifyReport& rep) {
    Json j;
    j["schema"] = 1;
    j["ok"] = rep.ok;
    j["affirmed_checked"] = rep.affirmed_checked;
    j["rejected_checked"] = rep.rejected_checked;
    j["mismatches"] = rep.mismatches;
    return j;
}

}  // namespace pstkit
