#include "loewner/json_io.hpp"

#include <cmath>
#include <fstream>

namespace loewner {

namespace {

[[noreturn]] void parse_fail(const std::string& field, const std::string& why) {
  fail(ErrorCode::ParseError, "field \"" + field + "\": " + why);
}

double number_at(const json& j, const std::string& field) {
  if (!j.is_number())
    parse_fail(field, "expected a number");
  return j.get<double>();
}

} // namespace

json to_json(const SymMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.dim(); ++j)
      row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

SymMatrix matrix_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty())
    parse_fail(field, "expected a non-empty array of rows");
  const int dim = static_cast<int>(j.size());
  std::vector<double> entries;
  entries.reserve(static_cast<size_t>(dim) * dim);
  for (const json& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      parse_fail(field, "rows must all have length " + std::to_string(dim));
    for (const json& cell : row)
      entries.push_back(number_at(cell, field));
  }
  try {
    return SymMatrix(dim, entries);
  } catch (const Error& e) {
    parse_fail(field, e.what());
  }
}

json to_json(const Interval& iv) { return json{{"lo", iv.lo}, {"hi", iv.hi}}; }

Interval interval_from_json(const json& j, const std::string& field) {
  if (!j.is_object() || !j.contains("lo") || !j.contains("hi"))
    parse_fail(field, "expected {\"lo\":..., \"hi\":...}");
  return Interval(number_at(j["lo"], field + ".lo"), number_at(j["hi"], field + ".hi"));
}

json to_json(const ScalarFunction& f) {
  switch (f.family()) {
  case FunctionFamily::Power: return json{{"family", "power"}, {"r", f.param_a()}};
  case FunctionFamily::Log: return json{{"family", "log"}};
  case FunctionFamily::Exp: return json{{"family", "exp"}};
  case FunctionFamily::InverseShift: return json{{"family", "inverse_shift"}, {"s", f.param_a()}};
  case FunctionFamily::Affine:
    return json{{"family", "affine"}, {"p", f.param_a()}, {"q", f.param_b()}};
  }
  parse_fail("f", "unknown family");
}

ScalarFunction function_from_json(const json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    parse_fail("f.family", "expected a family name string");
  const std::string family = j["family"].get<std::string>();
  if (family == "power") {
    if (!j.contains("r"))
      parse_fail("f.r", "power needs an exponent");
    return ScalarFunction::power(number_at(j["r"], "f.r"));
  }
  if (family == "log")
    return ScalarFunction::log();
  if (family == "exp")
    return ScalarFunction::exp();
  if (family == "inverse_shift") {
    if (!j.contains("s"))
      parse_fail("f.s", "inverse_shift needs a shift");
    return ScalarFunction::inverse_shift(number_at(j["s"], "f.s"));
  }
  if (family == "affine") {
    if (!j.contains("p") || !j.contains("q"))
      parse_fail("f.p/f.q", "affine needs p and q");
    return ScalarFunction::affine(number_at(j["p"], "f.p"), number_at(j["q"], "f.q"));
  }
  parse_fail("f.family", "unknown family '" + family + "'");
}

ScalarFunction parse_function_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  auto one_number = [&](const char* what) {
    try {
      size_t used = 0;
      const double v = std::stod(args, &used);
      if (used != args.size())
        throw std::invalid_argument("trailing characters");
      return v;
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, std::string("function spec '") + spec + "': bad " + what);
    }
  };
  if (family == "power")
    return ScalarFunction::power(one_number("exponent"));
  if (family == "log")
    return ScalarFunction::log();
  if (family == "exp")
    return ScalarFunction::exp();
  if (family == "inverse_shift")
    return ScalarFunction::inverse_shift(one_number("shift"));
  if (family == "affine") {
    const auto comma = args.find(',');
    if (comma == std::string::npos)
      fail(ErrorCode::ParseError, "affine spec needs 'affine:p,q'");
    try {
      return ScalarFunction::affine(std::stod(args.substr(0, comma)),
                                    std::stod(args.substr(comma + 1)));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "affine spec needs numeric p,q");
    }
  }
  fail(ErrorCode::ParseError, "unknown function family in spec '" + spec + "'");
}

json to_json(const LoewnerVerdict& v) {
  return json{{"relation", relation_name(v.relation)},
              {"min_eig_of_difference", v.min_eig_of_difference},
              {"max_eig_of_difference", v.max_eig_of_difference},
              {"tolerance_used", v.tolerance_used}};
}

LoewnerVerdict verdict_from_json(const json& j) {
  LoewnerVerdict v;
  const std::string rel = j.at("relation").get<std::string>();
  if (rel == "LessOrEqual")
    v.relation = Relation::LessOrEqual;
  else if (rel == "GreaterOrEqual")
    v.relation = Relation::GreaterOrEqual;
  else if (rel == "Equal")
    v.relation = Relation::Equal;
  else if (rel == "Incomparable")
    v.relation = Relation::Incomparable;
  else
    parse_fail("relation", "unknown relation '" + rel + "'");
  v.min_eig_of_difference = j.at("min_eig_of_difference").get<double>();
  v.max_eig_of_difference = j.at("max_eig_of_difference").get<double>();
  v.tolerance_used = j.at("tolerance_used").get<double>();
  return v;
}

json to_json(const HypothesisReport& h) {
  json intervals = json::array();
  for (const auto& [name, iv] : h.intervals)
    intervals.push_back(json{{"name", name}, {"lo", iv.lo}, {"hi", iv.hi}});
  json subs = json::array();
  for (const auto& [name, margin] : h.sub_margins)
    subs.push_back(json{{"name", name}, {"margin", margin}});
  return json{{"condition_name", h.condition_name},
              {"holds", h.holds},
              {"intervals", intervals},
              {"margin", h.margin},
              {"sub_margins", subs}};
}

HypothesisReport hypothesis_from_json(const json& j) {
  HypothesisReport h;
  h.condition_name = j.at("condition_name").get<std::string>();
  h.holds = j.at("holds").get<bool>();
  for (const json& item : j.at("intervals"))
    h.intervals.emplace_back(item.at("name").get<std::string>(),
                             Interval(item.at("lo").get<double>(), item.at("hi").get<double>()));
  h.margin = j.at("margin").get<double>();
  for (const json& item : j.at("sub_margins"))
    h.sub_margins.emplace_back(item.at("name").get<std::string>(),
                               item.at("margin").get<double>());
  return h;
}

json to_json(const InequalityReport& r) {
  json out{{"theorem_id", r.theorem_id},
           {"lhs", to_json(r.lhs)},
           {"rhs", to_json(r.rhs)},
           {"verdict", to_json(r.verdict)},
           {"notes", r.notes},
           {"input_digest", r.input_digest}};
  out["hypothesis"] = r.hypothesis ? to_json(*r.hypothesis) : json(nullptr);
  json links = json::array();
  for (const ChainLink& link : r.chain_links)
    links.push_back(json{{"label", link.label},
                         {"lhs", to_json(link.lhs)},
                         {"rhs", to_json(link.rhs)},
                         {"verdict", to_json(link.verdict)}});
  out["chain_links"] = links;
  return out;
}

InequalityReport inequality_report_from_json(const json& j) {
  InequalityReport r;
  r.theorem_id = j.at("theorem_id").get<std::string>();
  if (!j.at("hypothesis").is_null())
    r.hypothesis = hypothesis_from_json(j.at("hypothesis"));
  r.lhs = matrix_from_json(j.at("lhs"), "lhs");
  r.rhs = matrix_from_json(j.at("rhs"), "rhs");
  r.verdict = verdict_from_json(j.at("verdict"));
  for (const json& link : j.at("chain_links"))
    r.chain_links.push_back({link.at("label").get<std::string>(),
                             matrix_from_json(link.at("lhs"), "chain.lhs"),
                             matrix_from_json(link.at("rhs"), "chain.rhs"),
                             verdict_from_json(link.at("verdict"))});
  r.notes = j.at("notes").get<std::string>();
  r.input_digest = j.at("input_digest").get<std::string>();
  return r;
}

json to_json(const HuntResult& h) {
  json violations = json::array();
  for (const Violation& v : h.violations)
    violations.push_back(json{{"digest", v.digest}, {"margin", v.margin}});
  return json{{"trials", h.trials},
              {"violations", violations},
              {"worst_margin", h.worst_margin ? json(*h.worst_margin) : json(nullptr)},
              {"satisfying_hypothesis_count", h.satisfying_hypothesis_count},
              {"notes", h.notes}};
}

HuntResult hunt_result_from_json(const json& j) {
  HuntResult h;
  h.trials = j.at("trials").get<long>();
  for (const json& v : j.at("violations"))
    h.violations.push_back({v.at("digest").get<std::string>(), v.at("margin").get<double>()});
  if (!j.at("worst_margin").is_null())
    h.worst_margin = j.at("worst_margin").get<double>();
  h.satisfying_hypothesis_count = j.at("satisfying_hypothesis_count").get<long>();
  h.notes = j.at("notes").get<std::string>();
  return h;
}

json to_json(const RatioConstant& k) {
  return json{{"value", k.value},
              {"argmax_or_argmin", k.argmax_or_argmin},
              {"method", k.method},
              {"grid_points", k.grid_points}};
}

json to_json(const AuditReport& a) {
  return json{{"samples", a.samples},
              {"convexity_contradictions", a.convexity_contradictions},
              {"concavity_contradictions", a.concavity_contradictions},
              {"monotonicity_contradictions", a.monotonicity_contradictions},
              {"worst_violation", a.worst_violation},
              {"consistent", a.consistent}};
}

json to_json(const InnerJensenReport& r) {
  json checks = json::array();
  for (const ScalarCheck& c : r.checks)
    checks.push_back(json{{"label", c.label},
                          {"lhs", c.lhs},
                          {"rhs", c.rhs},
                          {"margin", c.margin},
                          {"holds", c.holds}});
  return json{{"bra_A_ket", r.bra_A_ket},
              {"bra_fA_ket", r.bra_fA_ket},
              {"checks", checks},
              {"notes", r.notes}};
}

CheckInput parse_check_input(const json& j) {
  if (!j.is_object())
    parse_fail("<root>", "input must be a JSON object");
  CheckInput in;
  if (j.contains("A"))
    in.A = matrix_from_json(j["A"], "A");
  if (j.contains("B"))
    in.B = matrix_from_json(j["B"], "B");
  if (j.contains("f"))
    in.f = function_from_json(j["f"]);
  if (j.contains("v"))
    in.v = number_at(j["v"], "v");
  if (j.contains("m"))
    in.m = number_at(j["m"], "m");
  if (j.contains("M"))
    in.M = number_at(j["M"], "M");
  if (j.contains("r"))
    in.r = number_at(j["r"], "r");
  if (j.contains("ell")) {
    if (!j["ell"].is_number_integer())
      parse_fail("ell", "expected an integer");
    in.ell = j["ell"].get<int>();
  }
  if (j.contains("nodes")) {
    if (!j["nodes"].is_number_integer())
      parse_fail("nodes", "expected an integer");
    in.nodes = j["nodes"].get<int>();
  }
  if (j.contains("x")) {
    if (!j["x"].is_array())
      parse_fail("x", "expected an array of numbers");
    std::vector<double> x;
    for (const json& cell : j["x"])
      x.push_back(number_at(cell, "x"));
    in.x = std::move(x);
  }
  if (j.contains("weights")) {
    if (!j["weights"].is_array())
      parse_fail("weights", "expected an array of numbers");
    std::vector<double> w;
    for (const json& cell : j["weights"])
      w.push_back(number_at(cell, "weights"));
    in.weights = std::move(w);
  }
  if (j.contains("operators")) {
    if (!j["operators"].is_array())
      parse_fail("operators", "expected an array of matrices");
    std::vector<SymMatrix> ops;
    for (size_t i = 0; i < j["operators"].size(); ++i)
      ops.push_back(matrix_from_json(j["operators"][i], "operators[" + std::to_string(i) + "]"));
    in.operators = std::move(ops);
  }
  return in;
}

CheckInput load_check_input(const std::string& path) {
  std::ifstream stream(path);
  if (!stream)
    fail(ErrorCode::ParseError, "cannot open input file '" + path + "'");
  json j;
  try {
    stream >> j;
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, "invalid JSON in '" + path + "': " + e.what());
  }
  return parse_check_input(j);
}

} // namespace loewner
