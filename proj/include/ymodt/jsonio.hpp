#pragma once

// JSON shapes used by the CLI and the golden-file tests.

#include <string>

#include <json.hpp>

#include "ymodt/config.hpp"
#include "ymodt/engine.hpp"
#include "ymodt/matroid.hpp"
#include "ymodt/oracle.hpp"

namespace ymodt {

using json = nlohmann::json;

/// Sorted basis lists as arrays of label arrays.
inline json bases_to_json(const Matroid& m) {
    json out = json::array();
    for (uint32_t b : m.bases) {
        json basis = json::array();
        for (int e = 0; e < m.n; ++e)
            if ((b >> e) & 1u) basis.push_back(m.labels[e]);
        out.push_back(basis);
    }
    return out;
}

inline json matroid_to_json(const Matroid& m) {
    json out;
    out["ground"] = m.labels;
    out["rank"] = m.rank;
    out["basis_count"] = m.basis_count();
    out["bases"] = bases_to_json(m);
    return out;
}

/// Polynomial export: list of {basis: [labels], coeff}.
inline json polynomial_to_json(const ConfigPolynomial& poly, const std::vector<std::string>& labels) {
    json out = json::array();
    for (auto& [mask, coeff] : poly.terms) {
        json term;
        json basis = json::array();
        for (int e = 0; e < poly.n; ++e)
            if ((mask >> e) & 1u) basis.push_back(labels[e]);
        term["basis"] = basis;
        term["coeff"] = coeff;
        out.push_back(term);
    }
    return out;
}

inline json class_to_json(const ClassModT& c) {
    if (c.known()) return json(c.v());
    return json("unknown");
}

inline json trace_to_json(const TraceNode& t) {
    json out;
    out["target"] = t.target;
    out["rule"] = t.rule;
    if (!t.note.empty()) out["note"] = t.note;
    if (t.weight != 1) out["weight"] = t.weight;
    if (t.constant != 0) out["constant"] = t.constant;
    out["result"] = class_to_json(t.result);
    if (!t.children.empty()) {
        json kids = json::array();
        for (const auto& c : t.children) kids.push_back(trace_to_json(c));
        out["children"] = kids;
    }
    return out;
}

inline json counts_to_json(const PointCounts& c) {
    json out;
    out["p"] = c.p;
    out["projective"] = c.n_projective;
    out["X"] = c.n_x;
    out["Y"] = c.n_y;
    out["Ytorus"] = c.n_ytorus;
    return out;
}

/// Matrix input: {"rows": [[...], ...], "labels": [...]} (labels optional).
inline Configuration configuration_from_json(const json& j) {
    Configuration w;
    if (!j.contains("rows") || !j["rows"].is_array())
        throw std::invalid_argument("matrix JSON: expected a \"rows\" array");
    for (const auto& row : j["rows"]) {
        std::vector<i64> r;
        for (const auto& x : row) r.push_back(x.get<i64>());
        w.mat.push_back(std::move(r));
    }
    if (j.contains("labels"))
        for (const auto& l : j["labels"]) w.labels.push_back(l.get<std::string>());
    if (w.labels.empty() && !w.mat.empty()) w.labels = detail::default_labels(static_cast<int>(w.mat[0].size()));
    return w;
}

}  // namespace ymodt
