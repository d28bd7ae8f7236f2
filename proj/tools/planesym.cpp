/*
 * Copyright 2026 The planesym Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "planesym/formulas.hpp"
#include "planesym/graph.hpp"
#include "planesym/hexgrid.hpp"
#include "planesym/kasteleyn.hpp"
#include "planesym/oracle.hpp"
#include "planesym/pipeline.hpp"
#include "planesym/symmetry.hpp"

namespace {

using namespace planesym;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

BoxDims parse_dims(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--dims expects a,b,c with integer sides, got '" + text + "'");
    }
  }
  if (parts.size() != 3) throw UsageError("--dims expects exactly three sides, got '" + text + "'");
  if (parts[0] < 0 || parts[1] < 0 || parts[2] < 0) throw UsageError("--dims sides must be nonnegative");
  return {parts[0], parts[1], parts[2]};
}

std::set<int> parse_classes(const std::string& text) {
  std::set<int> out;
  if (text.empty() || text == "all") {
    for (int i = 1; i <= 10; ++i) out.insert(i);
    return out;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    int id = 0;
    try {
      id = std::stoi(item);
    } catch (const std::exception&) {
      throw UsageError("--classes expects a comma-separated list of 1..10");
    }
    if (id < 1 || id > 10) throw UsageError("class ids run from 1 to 10");
    out.insert(id);
  }
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

struct CountOptions {
  int class_id = 1;
  std::string dims;
  std::string method = "formula";
  bool q = false;
  bool json = false;
};

int run_count(const CountOptions& opt) {
  const BoxDims dims = parse_dims(opt.dims);
  const Method method = parse_method(opt.method);
  std::string value;
  if (opt.q) {
    if (opt.class_id != 1) throw UsageError("--q is only available for class 1");
    if (method == Method::kMatrix) {
      value = q_count(dims).to_string();
    } else if (method == Method::kOracle) {
      value = q_sum(dims).to_string();
    } else {
      throw UsageError("--q needs --method matrix or oracle");
    }
  } else {
    if (method == Method::kRatios && opt.class_id != 1 && opt.class_id != 3 && opt.class_id != 5 && opt.class_id != 9) {
      throw UsageError("--method ratios supports classes 1, 3, 5 and 9");
    }
    value = count(opt.class_id, dims, method).get_str();
  }
  if (opt.json) {
    nlohmann::ordered_json j;
    j["class"] = opt.class_id;
    j["dims"] = {dims.a, dims.b, dims.c};
    j["method"] = opt.method;
    j["q"] = opt.q;
    j["value"] = value;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << value << '\n';
  }
  return 0;
}

struct VerifyOptions {
  int max_side = 2;
  std::string classes = "all";
  std::string csv;
  bool no_timing = false;
};

int run_verify(const VerifyOptions& opt) {
  if (opt.max_side < 0) throw UsageError("--max-side must be nonnegative");
  const RunReport report = verify(opt.max_side, parse_classes(opt.classes), !opt.no_timing);
  write_output(to_csv(report), opt.csv);
  for (const auto& m : report.mismatches) std::cerr << "MISMATCH " << m << '\n';
  std::cerr << (report.pass ? "PASS" : "FAIL") << ": " << report.records.size() << " records\n";
  return report.pass ? 0 : kExitMismatch;
}

struct TableOptions {
  int max_a = 3;
  std::string format = "markdown";
};

// One row per box of side at most max_a that is fixed by the class and has a
// formula; boxes equal up to reordering sides are listed once for classes 1, 5.
int run_table(const TableOptions& opt) {
  if (opt.max_a < 1) throw UsageError("--max-a must be at least 1");
  std::ostringstream out;
  const bool csv = opt.format == "csv";
  if (csv) {
    out << "class,a,b,c,value\n";
  } else {
    out << "| class | a | b | c | value |\n|---|---|---|---|---|\n";
  }
  for (int id = 1; id <= 10; ++id) {
    for (const auto& d : class_boxes(id, opt.max_a)) {
      if ((id == 1 || id == 5) && !(d.a <= d.b && d.b <= d.c)) continue;
      const std::string value = n_class(id, d).value.get_str();
      if (csv) {
        out << id << ',' << d.a << ',' << d.b << ',' << d.c << ',' << value << '\n';
      } else {
        out << "| " << id << " | " << d.a << " | " << d.b << " | " << d.c << " | " << value << " |\n";
      }
    }
  }
  std::cout << out.str();
  return 0;
}

struct ExportOptions {
  std::string kind = "z";
  int class_id = 1;
  std::string dims;
  std::string format = "json";
  std::string with = "none";
  std::string output;
};

int run_export(const ExportOptions& opt) {
  const BoxDims dims = parse_dims(opt.dims);
  const auto region = build_hexagon(dims.a, dims.b, dims.c);
  PlanarMultigraph g;
  bool bipartite = true;
  if (opt.kind == "z") {
    g = build_graph(region);
  } else {
    const auto cls = SymmetryClass::get(opt.class_id);
    if (!cls.fixes(dims)) throw UsageError("class " + std::to_string(opt.class_id) + " does not fix the box");
    g = quotient_graph(region, cls).graph;
    bipartite = cls.bipartite();
  }
  EdgeAnnotation ann;
  if (opt.with == "signs") {
    if (!bipartite) throw UsageError("--with signs needs a bipartite graph");
    ann.kind = EdgeAnnotation::Kind::kSigns;
    ann.signs = flat_signing(g).signs;
  } else if (opt.with == "orientation") {
    ann.kind = EdgeAnnotation::Kind::kOrientation;
    ann.tails = flat_orientation(g).tails;
  }
  write_output(opt.format == "dot" ? to_dot(g, ann) : to_json(g, ann) + "\n", opt.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts symmetric plane partitions by product formulas, Kasteleyn matrices and brute force."};
  app.require_subcommand(1);

  CountOptions count_opt;
  auto* count_cmd = app.add_subcommand("count", "Count the partitions of one class in one box");
  count_cmd->add_option("--class", count_opt.class_id, "Symmetry class")->check(CLI::Range(1, 10))->required();
  count_cmd->add_option("--dims", count_opt.dims, "Box sides a,b,c")->required();
  count_cmd->add_option("--method", count_opt.method, "formula, matrix, oracle or ratios")
      ->check(CLI::IsMember({"formula", "matrix", "oracle", "ratios"}));
  count_cmd->add_flag("--q", count_opt.q, "q-enumeration by volume (class 1)");
  count_cmd->add_flag("--json", count_opt.json, "Print a JSON object");

  VerifyOptions verify_opt;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check every counting route");
  verify_cmd->add_option("--max-side", verify_opt.max_side, "Largest box side");
  verify_cmd->add_option("--classes", verify_opt.classes, "Comma-separated class ids, or all");
  verify_cmd->add_option("--csv", verify_opt.csv, "CSV report path (default stdout)");
  verify_cmd->add_flag("--no-timing", verify_opt.no_timing, "Report 0 microseconds for byte-stable output");

  TableOptions table_opt;
  auto* table_cmd = app.add_subcommand("table", "Print formula values for small boxes");
  table_cmd->add_option("--max-a", table_opt.max_a, "Largest box side");
  table_cmd->add_option("--format", table_opt.format, "markdown or csv")->check(CLI::IsMember({"markdown", "csv"}));

  ExportOptions export_opt;
  auto* export_cmd = app.add_subcommand("export", "Write Z(a,b,c) or a quotient graph as DOT or JSON");
  export_cmd->add_option("kind", export_opt.kind, "z or quotient")->check(CLI::IsMember({"z", "quotient"}))->required();
  export_cmd->add_option("--class", export_opt.class_id, "Symmetry class (quotient only)")->check(CLI::Range(1, 10));
  export_cmd->add_option("--dims", export_opt.dims, "Box sides a,b,c")->required();
  export_cmd->add_option("--format", export_opt.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("--with", export_opt.with, "none, signs or orientation")
      ->check(CLI::IsMember({"none", "signs", "orientation"}));
  export_cmd->add_option("-o,--output", export_opt.output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*count_cmd) return run_count(count_opt);
    if (*verify_cmd) return run_verify(verify_opt);
    if (*table_cmd) return run_table(table_opt);
    if (*export_cmd) return run_export(export_opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  return kExitUsage;
}
