#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "loewner/constants.hpp"
#include "loewner/explorer.hpp"
#include "loewner/reports.hpp"
#include "loewner/scalar_function.hpp"

namespace loewner {

using nlohmann::json;

json to_json(const SymMatrix& m);
SymMatrix matrix_from_json(const json& j, const std::string& field);

json to_json(const Interval& iv);
Interval interval_from_json(const json& j, const std::string& field);

json to_json(const ScalarFunction& f);
ScalarFunction function_from_json(const json& j);

/// "power:2", "inverse_shift:1", "log", "exp", "affine:1,0".
ScalarFunction parse_function_spec(const std::string& spec);

json to_json(const LoewnerVerdict& v);
LoewnerVerdict verdict_from_json(const json& j);

json to_json(const HypothesisReport& h);
HypothesisReport hypothesis_from_json(const json& j);

json to_json(const InequalityReport& r);
InequalityReport inequality_report_from_json(const json& j);

json to_json(const HuntResult& h);
HuntResult hunt_result_from_json(const json& j);

json to_json(const RatioConstant& k);
json to_json(const AuditReport& a);
json to_json(const InnerJensenReport& r);

/// Parsed contents of the CLI input file; fields are optional and commands
/// validate what they need, naming the missing field.
struct CheckInput {
  std::optional<SymMatrix> A, B;
  std::optional<ScalarFunction> f;
  std::optional<double> v, m, M, r;
  std::optional<int> ell, nodes;
  std::optional<std::vector<double>> x, weights;
  std::optional<std::vector<SymMatrix>> operators;
};

CheckInput parse_check_input(const json& j);
CheckInput load_check_input(const std::string& path);

} // namespace loewner
