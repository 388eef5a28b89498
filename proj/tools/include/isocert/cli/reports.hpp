#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "isocert/certify/certify.hpp"
#include "isocert/configsolve/configsolve.hpp"
#include "isocert/frameforms/identities.hpp"
#include "isocert/geomex/geomex.hpp"
#include "isocert/mollify/mollify.hpp"

namespace isocert::cli {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Common header: schema_version, kind, name, anchor.
json record(const std::string& kind, const std::string& name, const std::string& anchor);

json to_json(const certify::Interval& x);

json identity_json(const frameforms::IdentityReport& r);
json config_json(const configsolve::CurvatureConfig& c, const configsolve::ScalarParams& p);
json branch_json(const configsolve::BranchIdentityReport& r, const configsolve::ScalarParams& p);
json certificate_json(const certify::Certificate& c, const std::string& name, const std::string& anchor,
                      const json& parameters);
json properties_json(const std::string& name, const std::string& anchor, const std::vector<mollify::PropertyCheck>& checks,
                     const json& parameters);
json model_json(const geomex::ModelHypersurface& m);
json model_report_json(const geomex::ModelReport& r);

/// true when the record carries pass = true (or status = proved).
bool record_passes(const json& r);

/// One human-readable line per record.
std::string text_summary(const json& records);

}  // namespace isocert::cli
