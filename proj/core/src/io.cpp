// Copyright 2026 The alphageo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "alphageo/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace alphageo::io {

namespace {

[[noreturn]] void parse_error(const std::string& field,
                              const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

const json& require(const json& j, const std::string& field) {
  if (!j.is_object()) parse_error(field, "enclosing value is not an object");
  auto it = j.find(field);
  if (it == j.end()) parse_error(field, "missing");
  return *it;
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) parse_error(field, "expected a number");
  return j.get<double>();
}

std::vector<double> number_array(const json& j, const std::string& field) {
  if (!j.is_array()) parse_error(field, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::string> string_array(const json& j, const std::string& field) {
  if (!j.is_array()) parse_error(field, "expected an array of strings");
  std::vector<std::string> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      parse_error(field + "[" + std::to_string(i) + "]", "expected a string");
    }
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

Eigen::MatrixXd matrix(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) {
    parse_error(field, "expected a non-empty array of rows");
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(number_array(j[i], field + "[" + std::to_string(i) + "]"));
    if (rows.back().size() != rows.front().size()) {
      parse_error(field, "rows have different lengths");
    }
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          rows[r][c];
    }
  }
  return m;
}

std::string string_field(const json& j, const std::string& field) {
  const auto& v = require(j, field);
  if (!v.is_string()) parse_error(field, "expected a string");
  return v.get<std::string>();
}

void dump_impl(const json& j, int indent, int depth, std::string& out) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(d * indent), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += pretty ? ": " : ":";
        dump_impl(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += pretty ? ", " : ",";
        first = false;
        dump_impl(v, indent, depth + 1, out);
      }
      out += ']';
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (std::isfinite(v)) {
        out += format_double(v);
      } else {
        out += '"' + format_double(v) + '"';
      }
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string dump(const json& j, int indent) {
  std::string out;
  dump_impl(j, indent, 0, out);
  return out;
}

FiniteDistribution distribution_from_json(const json& j) {
  auto labels = string_array(require(j, "labels"), "labels");
  auto mass = number_array(require(j, "mass"), "mass");
  return make_distribution(std::move(labels), std::move(mass));
}

json to_json(const FiniteDistribution& p) {
  json mass = json::array();
  for (double m : p.mass()) mass.push_back(m);
  return {{"labels", p.labels()}, {"mass", mass}};
}

ConstraintFamily family_from_json(const json& j) {
  auto labels = string_array(require(j, "labels"), "labels");
  auto rows = matrix(require(j, "rows"), "rows");
  std::optional<Alpha> order;
  if (auto it = j.find("order"); it != j.end()) {
    if (it->is_string()) {
      if (it->get<std::string>() != "linear") {
        parse_error("order", "expected \"linear\" or a number");
      }
    } else {
      order = Alpha(number(*it, "order"));
    }
  }
  return ConstraintFamily(std::move(labels), std::move(rows), order);
}

json to_json(const ConstraintFamily& family) {
  json order = family.is_linear() ? json("linear")
                                  : json(family.order()->value());
  return {{"labels", family.labels()},
          {"rows", matrix_to_json(family.rows())},
          {"order", order}};
}

FamilySpec family_spec_from_json(const json& j) {
  auto generator = distribution_from_json(require(j, "generator"));
  auto functions = matrix(require(j, "functions"), "functions");
  auto theta_values = number_array(require(j, "theta"), "theta");
  Eigen::VectorXd theta = Eigen::Map<Eigen::VectorXd>(
      theta_values.data(), static_cast<Eigen::Index>(theta_values.size()));
  const Alpha alpha(number(require(j, "alpha"), "alpha"));
  const auto kind = parse_family_kind(string_field(j, "kind"));
  return FamilySpec{std::move(generator), std::move(functions),
                    std::move(theta), alpha, kind};
}

json to_json(const FamilySpec& spec) {
  return {{"generator", to_json(spec.generator)},
          {"functions", matrix_to_json(spec.functions)},
          {"theta", vector_to_json(spec.theta)},
          {"alpha", spec.alpha.value()},
          {"kind", std::string(to_string(spec.kind))}};
}

ProjectionProblem problem_from_json(const json& j) {
  auto target = distribution_from_json(require(j, "target"));
  auto family = family_from_json(require(j, "family"));
  const auto kind = parse_divergence_kind(string_field(j, "divergence"));
  const Alpha alpha(number(require(j, "alpha"), "alpha"));
  ProjectionProblem problem{std::move(target), std::move(family), kind, alpha};
  if (auto it = j.find("tolerance"); it != j.end()) {
    problem.tolerance = number(*it, "tolerance");
  }
  if (auto it = j.find("max_iterations"); it != j.end()) {
    if (!it->is_number_integer()) {
      parse_error("max_iterations", "expected an integer");
    }
    problem.max_iterations = it->get<int>();
  }
  validate(problem);
  return problem;
}

json to_json(const ProjectionProblem& problem) {
  return {{"target", to_json(problem.target)},
          {"family", to_json(problem.family)},
          {"divergence", std::string(to_string(problem.divergence))},
          {"alpha", problem.alpha.value()},
          {"tolerance", problem.tolerance},
          {"max_iterations", problem.max_iterations}};
}

json to_json(const DivergenceValue& value) {
  if (value.is_infinite()) return "inf";
  return value.value();
}

json to_json(const ProjectionResult& result) {
  return {{"minimizer", to_json(result.minimizer)},
          {"objective", to_json(result.objective)},
          {"residual_norm", result.residual_norm},
          {"stationarity", result.stationarity},
          {"iterations", result.iterations},
          {"converged", result.converged}};
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json to_json(const MetricMatrix& metric) {
  return {{"phi", vector_to_json(metric.phi)},
          {"matrix", matrix_to_json(metric.entries)},
          {"asymmetry", metric.asymmetry}};
}

std::string to_csv(const Eigen::MatrixXd& m) {
  std::string out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ',';
      out += format_double(m(r, c));
    }
    out += '\n';
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
  }
}

}  // namespace alphageo::io
