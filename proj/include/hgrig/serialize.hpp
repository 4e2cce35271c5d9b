#pragma once

// JSON and DOT exports. Big integers are decimal strings; every top-level
// document carries "schema": 1.

#include <string>

#include "json.hpp"

#include "hgrig/bs_algebra.hpp"
#include "hgrig/bs_lemmas.hpp"
#include "hgrig/cayley_lines.hpp"
#include "hgrig/higman.hpp"
#include "hgrig/intersection_graph.hpp"
#include "hgrig/report.hpp"

namespace hgrig {

using nlohmann::json;

json to_json(const BsParams& params);
BsParams params_from_json(const json& j);

json to_json(const BsElement& x);
BsElement element_from_json(const BsParams& params, const json& j);

json to_json(const StandardLine& line);
StandardLine line_from_json(const BsParams& params, const json& j);

json to_json(const TreeVertex& vertex);
TreeVertex tree_vertex_from_json(const json& j);

json to_json(const CayleyBall& ball);
CayleyBall cayley_ball_from_json(const json& j);

json to_json(const LambdaGraph& graph);
LambdaGraph lambda_graph_from_json(const json& j);

json to_json(const GapReport& report);
GapReport gap_report_from_json(const json& j);

json to_json(const Sigma& sigma);
Sigma sigma_from_json(const json& j);

json to_json(const FSigma& f);
FSigma f_sigma_from_json(const json& j);

/// Chart positions are stored as normal-form words.
json to_json(const DevelopedBall& ball);
DevelopedBall developed_ball_from_json(const json& j);

json to_json(const LinkGraph& link);
LinkGraph link_graph_from_json(const json& j);

json to_json(const CommonPowerWitness& w);
CommonPowerWitness common_power_witness_from_json(const Sigma& sigma, const json& j);

json to_json(const ThetaBall& theta);
ThetaBall theta_from_json(const json& j);

json cycles_to_json(const std::vector<Cycle>& cycles);
std::vector<Cycle> cycles_from_json(const json& j);

/// A report wrapped as a schema-1 document.
json report_document(const Report& report);
Report report_from_document(const json& j);

std::string to_dot(const CayleyBall& ball);
std::string to_dot(const LambdaGraph& graph);
/// 1-skeleton with orientation arrows, coloured by type.
std::string to_dot(const DevelopedBall& ball);
/// Theta-edges dashed over the 1-skeleton.
std::string to_dot(const DevelopedBall& ball, const ThetaBall& theta);

/// Reads "schema" and rejects unknown versions.
void check_schema(const json& j);

}  // namespace hgrig
