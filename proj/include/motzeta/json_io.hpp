#pragma once

// Interchange formats.
//
// model:  {"components": [{"name", "N", "nu"}],
//          "strata": [{"J": [...], "class": "expr", "torsor_order"?: n}],
//          "chi"?: {"name": n}, "rewrites"?: [{"lhs", "rhs"}]}
// zeta:   {"format": 1, "terms": [{"numerator": [{"T": k, "coeff": "expr"}],
//                                  "denominator": [[a, b], ...]}]}
// EP:     {"symbol": "laurent polynomial in w"}

#include "motzeta/groth_ring.hpp"
#include "motzeta/realization.hpp"
#include "motzeta/snc_model.hpp"
#include "motzeta/zeta_series.hpp"

#include <json.hpp>

#include <vector>

namespace motzeta::io {

using nlohmann::json;

struct ModelDocument {
    SncModel model;
    std::vector<RewriteRule> rewrites;
};

ModelDocument model_from_json(const json& j);
json model_to_json(const SncModel& model, const std::vector<RewriteRule>& rewrites = {});

bool is_zeta_document(const json& j);
ZetaFunction zeta_from_json(const json& j);
json zeta_to_json(const ZetaFunction& z);

EpAssignment ep_from_json(const json& j);
json ep_to_json(const EpAssignment& ep);

json fractions_to_json(const std::set<Fraction>& s);
json report_to_json(const PoleReport& r);
json series_to_json(const std::vector<CoeffFraction>& coeffs);

/// Parses text as JSON, reporting failures as Error with a short context.
json parse_json(const std::string& text, const std::string& origin);

}  // namespace motzeta::io
