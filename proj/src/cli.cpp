// Copyright 2026 The Pentalogic Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exit code contract: 0 success, 1 domain/runtime failure, 2 usage error,
// 3 verification or --check failure. Name lookups (modes, couples,
// connectives) are usage errors; value errors (mu outside [0,1], broken
// input files) are domain errors.

#include "penta/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "penta/algebra.hpp"
#include "penta/bifuzzy.hpp"
#include "penta/bifuzzy_set.hpp"
#include "penta/format.hpp"
#include "penta/kernels.hpp"
#include "penta/measures.hpp"
#include "penta/penta_value.hpp"
#include "penta/truth_table.hpp"
#include "penta/verify.hpp"

namespace penta {

namespace {

// Every number leaves the tool at nine significant digits, in JSON too:
// values are rounded through the text form so both surfaces agree.
nlohmann::json sig9_json(double value) {
  double rounded = 0.0;
  if (!parse_double(format_sig9(value), rounded)) return nullptr;
  return rounded;
}

void emit_json(std::ostream& out, const nlohmann::json& doc) {
  out << doc.dump(2) << '\n';
}

struct TransformArgs {
  double mu = 0.0;
  double nu = 0.0;
  std::string mode = "standard";
  bool json = false;
};

int run_transform(const TransformArgs& a, std::ostream& out) {
  const TransformMode mode = transform_mode_from_string(a.mode);
  const BifuzzyValue v(a.mu, a.nu);
  const TauDelta td = tau_delta(v, mode);
  const PentaValue p = to_penta(td);
  const Classification cls = classify(v);
  const Entropy e = entropy(p);
  const Syntropy g = syntropy(p);
  if (a.json) {
    nlohmann::json doc = {
        {"command", "transform"},
        {"mode", to_string(mode)},
        {"mu", sig9_json(v.mu())},
        {"nu", sig9_json(v.nu())},
        {"tau", sig9_json(td.tau)},
        {"delta", sig9_json(td.delta)},
        {"t", sig9_json(p.t())},
        {"f", sig9_json(p.f())},
        {"c", sig9_json(p.c())},
        {"u", sig9_json(p.u())},
        {"i", sig9_json(p.i())},
        {"classification",
         {{"kind", to_string(cls.kind)}, {"index", sig9_json(cls.index)}}},
        {"entropy",
         {{"scalar", sig9_json(e.scalar)},
          {"c", sig9_json(e.c)},
          {"u", sig9_json(e.u)},
          {"i", sig9_json(e.i)}}},
        {"syntropy",
         {{"scalar", sig9_json(g.scalar)},
          {"t", sig9_json(g.t)},
          {"f", sig9_json(g.f)}}},
    };
    emit_json(out, doc);
    return 0;
  }
  out << "mode=" << to_string(mode) << '\n';
  out << "mu=" << format_sig9(v.mu()) << '\n';
  out << "nu=" << format_sig9(v.nu()) << '\n';
  out << "tau=" << format_sig9(td.tau) << '\n';
  out << "delta=" << format_sig9(td.delta) << '\n';
  out << "t=" << format_sig9(p.t()) << '\n';
  out << "f=" << format_sig9(p.f()) << '\n';
  out << "c=" << format_sig9(p.c()) << '\n';
  out << "u=" << format_sig9(p.u()) << '\n';
  out << "i=" << format_sig9(p.i()) << '\n';
  out << "class=" << to_string(cls.kind) << '\n';
  out << "index=" << format_sig9(cls.index) << '\n';
  out << "entropy=" << format_sig9(e.scalar) << " vector=(c="
      << format_sig9(e.c) << " u=" << format_sig9(e.u) << " i="
      << format_sig9(e.i) << ")\n";
  out << "syntropy=" << format_sig9(g.scalar) << " vector=(t="
      << format_sig9(g.t) << " f=" << format_sig9(g.f) << ")\n";
  return 0;
}

struct TableArgs {
  std::string op;
  std::string couple = "min_max";
  bool check = false;
  bool json = false;
};

int run_table(const TableArgs& a, std::ostream& out) {
  const Connective op = connective_from_string(a.op);
  const NormCouple couple = NormCouple::parse(a.couple);
  const TruthTable table = generate_truth_table(op, couple);
  std::vector<CellMismatch> mismatches;
  if (a.check) {
    mismatches = diff(table, reference_table(op));
  }
  if (a.json) {
    nlohmann::json rows = nlohmann::json::array();
    const int cols = is_binary(op) ? 5 : 1;
    for (int row = 0; row < 5; ++row) {
      nlohmann::json line = nlohmann::json::array();
      for (int col = 0; col < cols; ++col) {
        line.push_back(std::string(1, to_char(table.at(row, col))));
      }
      rows.push_back(line);
    }
    nlohmann::json doc = {{"command", "table"},
                          {"connective", to_string(op)},
                          {"couple", couple.name()},
                          {"labels", {"t", "i", "u", "c", "f"}},
                          {"cells", rows}};
    if (a.check) {
      nlohmann::json bad = nlohmann::json::array();
      for (const CellMismatch& m : mismatches) {
        bad.push_back({{"row", std::string(1, to_char(m.row))},
                       {"col", std::string(1, to_char(m.col))},
                       {"got", std::string(1, to_char(m.got))},
                       {"want", std::string(1, to_char(m.want))}});
      }
      doc["check"] = {{"match", mismatches.empty()}, {"mismatches", bad}};
    }
    emit_json(out, doc);
    return a.check && !mismatches.empty() ? 3 : 0;
  }
  out << "connective=" << to_string(op) << " couple=" << couple.name()
      << '\n';
  out << table.render();
  if (a.check) {
    if (mismatches.empty()) {
      out << "OK: " << table.cells.size() << '/' << table.cells.size()
          << " cells match the " << to_string(op) << " reference\n";
    } else {
      out << "check: " << mismatches.size() << " mismatches\n";
      for (const CellMismatch& m : mismatches) {
        out << "mismatch [" << to_char(m.row) << ',' << to_char(m.col)
            << "]: got " << to_char(m.got) << ", want " << to_char(m.want)
            << '\n';
      }
      return 3;
    }
  }
  return 0;
}

struct MeasureArgs {
  std::string mode = "standard";
  bool json = false;
  double mu1 = 0.0, nu1 = 0.0, mu2 = 0.0, nu2 = 0.0;
};

int run_measure_point(const std::string& which, const MeasureArgs& a,
                      std::ostream& out) {
  const TransformMode mode = transform_mode_from_string(a.mode);
  const PentaValue p = to_penta(BifuzzyValue(a.mu1, a.nu1), mode);
  if (which == "entropy") {
    const Entropy e = entropy(p);
    if (a.json) {
      emit_json(out, {{"command", "measure"},
                      {"measure", "entropy"},
                      {"mode", to_string(mode)},
                      {"mu", sig9_json(a.mu1)},
                      {"nu", sig9_json(a.nu1)},
                      {"scalar", sig9_json(e.scalar)},
                      {"c", sig9_json(e.c)},
                      {"u", sig9_json(e.u)},
                      {"i", sig9_json(e.i)}});
      return 0;
    }
    out << "entropy=" << format_sig9(e.scalar) << '\n';
    out << "c=" << format_sig9(e.c) << '\n';
    out << "u=" << format_sig9(e.u) << '\n';
    out << "i=" << format_sig9(e.i) << '\n';
    return 0;
  }
  const Syntropy g = syntropy(p);
  if (a.json) {
    emit_json(out, {{"command", "measure"},
                    {"measure", "syntropy"},
                    {"mode", to_string(mode)},
                    {"mu", sig9_json(a.mu1)},
                    {"nu", sig9_json(a.nu1)},
                    {"scalar", sig9_json(g.scalar)},
                    {"t", sig9_json(g.t)},
                    {"f", sig9_json(g.f)}});
    return 0;
  }
  out << "syntropy=" << format_sig9(g.scalar) << '\n';
  out << "t=" << format_sig9(g.t) << '\n';
  out << "f=" << format_sig9(g.f) << '\n';
  return 0;
}

int run_measure_similarity(const MeasureArgs& a, std::ostream& out) {
  const TransformMode mode = transform_mode_from_string(a.mode);
  const PentaValue x = to_penta(BifuzzyValue(a.mu1, a.nu1), mode);
  const PentaValue y = to_penta(BifuzzyValue(a.mu2, a.nu2), mode);
  const double s = similarity(x, y);
  if (a.json) {
    emit_json(out, {{"command", "measure"},
                    {"measure", "similarity"},
                    {"mode", to_string(mode)},
                    {"first", {{"mu", sig9_json(a.mu1)}, {"nu", sig9_json(a.nu1)}}},
                    {"second", {{"mu", sig9_json(a.mu2)}, {"nu", sig9_json(a.nu2)}}},
                    {"similarity", sig9_json(s)}});
    return 0;
  }
  out << "similarity=" << format_sig9(s) << '\n';
  return 0;
}

struct MapArgs {
  std::string measure = "entropy";
  std::string mode = "standard";
  std::string exec = "serial";
  int resolution = 0;
  bool json = false;
};

int run_map(const MapArgs& a, std::ostream& out) {
  const GridMeasure measure = grid_measure_from_string(a.measure);
  const TransformMode mode = transform_mode_from_string(a.mode);
  const Execution exec = execution_from_string(a.exec);
  const std::vector<double> values =
      measure_grid(measure, a.resolution, mode, exec);
  const std::size_t n = static_cast<std::size_t>(a.resolution) + 1;
  if (a.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < n; ++r) {
      nlohmann::json line = nlohmann::json::array();
      for (std::size_t ccol = 0; ccol < n; ++ccol) {
        line.push_back(sig9_json(values[r * n + ccol]));
      }
      rows.push_back(line);
    }
    emit_json(out, {{"command", "map"},
                    {"measure", to_string(measure)},
                    {"mode", to_string(mode)},
                    {"resolution", a.resolution},
                    {"order", "mu-major"},
                    {"values", rows}});
    return 0;
  }
  out << "mu,nu,value\n";
  for (std::size_t r = 0; r < n; ++r) {
    const double mu = static_cast<double>(r) / a.resolution;
    for (std::size_t ccol = 0; ccol < n; ++ccol) {
      const double nu = static_cast<double>(ccol) / a.resolution;
      out << format_sig9(mu) << ',' << format_sig9(nu) << ','
          << format_sig9(values[r * n + ccol]) << '\n';
    }
  }
  return 0;
}

struct VerifyArgs {
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  int grid = 200;
  std::string exec = "serial";
  std::vector<std::string> couples = {"min_max"};
  bool json = false;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  VerifyOptions options;
  options.seed = a.seed;
  options.samples = a.samples;
  options.grid = a.grid;
  options.exec = execution_from_string(a.exec);
  options.couples.clear();
  for (const std::string& name : a.couples) {
    options.couples.push_back(NormCouple::parse(name));
  }
  const VerifyReport report = run_verification(options);
  if (a.json) {
    nlohmann::json laws = nlohmann::json::array();
    std::size_t pass = 0, fail = 0, info = 0;
    for (const LawResult& law : report.laws) {
      (law.status == LawStatus::pass
           ? pass
           : law.status == LawStatus::fail ? fail : info)++;
      laws.push_back({{"id", law.id},
                      {"scope", law.scope},
                      {"status", to_string(law.status)},
                      {"tolerance", sig9_json(law.tolerance)},
                      {"checked", law.checked},
                      {"violations", law.violations},
                      {"worst", sig9_json(law.worst)},
                      {"detail", law.detail}});
    }
    nlohmann::json couples = nlohmann::json::array();
    for (const NormCouple& couple : options.couples) {
      couples.push_back(couple.name());
    }
    emit_json(out, {{"command", "verify"},
                    {"seed", options.seed},
                    {"samples", options.samples},
                    {"grid", options.grid},
                    {"exec", to_string(options.exec)},
                    {"couples", couples},
                    {"laws", laws},
                    {"summary",
                     {{"laws", report.laws.size()},
                      {"pass", pass},
                      {"fail", fail},
                      {"info", info}}},
                    {"passed", report.passed()}});
  } else {
    out << render_text(report);
  }
  return report.passed() ? 0 : 3;
}

struct SetArgs {
  std::string op;
  std::string file1;
  std::string file2;
  std::string mode = "standard";
  bool json = false;
};

BifuzzySet load_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open file: " + path);
  }
  const bool is_json =
      path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
  return is_json ? parse_json(in) : parse_csv(in);
}

int run_set(const SetArgs& a, std::ostream& out) {
  const TransformMode mode = transform_mode_from_string(a.mode);
  if (a.op == "similarity") {
    const BifuzzySet s1 = load_set(a.file1);
    const BifuzzySet s2 = load_set(a.file2);
    const double s = set_similarity(s1, s2, mode);
    if (a.json) {
      emit_json(out, {{"command", "set"},
                      {"op", "similarity"},
                      {"mode", to_string(mode)},
                      {"elements", s1.size()},
                      {"similarity", sig9_json(s)}});
    } else {
      out << "elements=" << s1.size() << '\n';
      out << "similarity=" << format_sig9(s) << '\n';
    }
    return 0;
  }
  const BifuzzySet set = load_set(a.file1);
  const double count = static_cast<double>(set.size());
  if (a.op == "entropy") {
    const SetEntropy e = set_entropy(set, mode);
    const double mean = set.empty() ? 0.0 : e.scalar / count;
    if (a.json) {
      emit_json(out, {{"command", "set"},
                      {"op", "entropy"},
                      {"mode", to_string(mode)},
                      {"name", set.name()},
                      {"elements", set.size()},
                      {"sum", sig9_json(e.scalar)},
                      {"mean", sig9_json(mean)},
                      {"c", sig9_json(e.c)},
                      {"u", sig9_json(e.u)},
                      {"i", sig9_json(e.i)}});
      return 0;
    }
    out << "elements=" << set.size() << '\n';
    out << "sum=" << format_sig9(e.scalar) << '\n';
    out << "mean=" << format_sig9(mean) << '\n';
    out << "c=" << format_sig9(e.c) << '\n';
    out << "u=" << format_sig9(e.u) << '\n';
    out << "i=" << format_sig9(e.i) << '\n';
    return 0;
  }
  const SetSyntropy g = set_syntropy(set, mode);
  const double mean = set.empty() ? 0.0 : g.scalar / count;
  if (a.json) {
    emit_json(out, {{"command", "set"},
                    {"op", "syntropy"},
                    {"mode", to_string(mode)},
                    {"name", set.name()},
                    {"elements", set.size()},
                    {"sum", sig9_json(g.scalar)},
                    {"mean", sig9_json(mean)},
                    {"t", sig9_json(g.t)},
                    {"f", sig9_json(g.f)}});
    return 0;
  }
  out << "elements=" << set.size() << '\n';
  out << "sum=" << format_sig9(g.scalar) << '\n';
  out << "mean=" << format_sig9(mean) << '\n';
  out << "t=" << format_sig9(g.t) << '\n';
  out << "f=" << format_sig9(g.f) << '\n';
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"five-valued bifuzzy calculator"};
  app.require_subcommand(1);

  const auto mode_check = CLI::IsMember({"standard", "balanced"});
  const auto exec_check = CLI::IsMember({"serial", "parallel"});

  TransformArgs transform_args;
  CLI::App* transform_cmd = app.add_subcommand(
      "transform", "Split (mu, nu) into tau/delta and the five indices");
  transform_cmd->add_option("mu", transform_args.mu, "membership degree")
      ->required();
  transform_cmd->add_option("nu", transform_args.nu, "non-membership degree")
      ->required();
  transform_cmd->add_option("--mode", transform_args.mode, "coordinate mode")
      ->check(mode_check);
  transform_cmd->add_flag("--json", transform_args.json, "emit JSON");

  TableArgs table_args;
  CLI::App* table_cmd =
      app.add_subcommand("table", "Render a crisp truth table");
  table_cmd
      ->add_option("operator", table_args.op,
                   "disjunction|conjunction|complement|negation|dual|"
                   "implication|equivalence")
      ->required();
  table_cmd->add_option("--couple", table_args.couple, "norm couple");
  table_cmd->add_flag("--check", table_args.check,
                      "diff against the reference table, exit 3 on mismatch");
  table_cmd->add_flag("--json", table_args.json, "emit JSON");

  MeasureArgs measure_args;
  CLI::App* measure_cmd =
      app.add_subcommand("measure", "Point measures over (mu, nu) inputs");
  measure_cmd->require_subcommand(1);
  CLI::App* m_entropy = measure_cmd->add_subcommand(
      "entropy", "entropy of one (mu, nu) value");
  m_entropy->add_option("mu", measure_args.mu1)->required();
  m_entropy->add_option("nu", measure_args.nu1)->required();
  m_entropy->add_option("--mode", measure_args.mode)->check(mode_check);
  m_entropy->add_flag("--json", measure_args.json);
  CLI::App* m_syntropy = measure_cmd->add_subcommand(
      "syntropy", "syntropy of one (mu, nu) value");
  m_syntropy->add_option("mu", measure_args.mu1)->required();
  m_syntropy->add_option("nu", measure_args.nu1)->required();
  m_syntropy->add_option("--mode", measure_args.mode)->check(mode_check);
  m_syntropy->add_flag("--json", measure_args.json);
  CLI::App* m_similarity = measure_cmd->add_subcommand(
      "similarity", "similarity of two (mu, nu) values");
  m_similarity->add_option("mu1", measure_args.mu1)->required();
  m_similarity->add_option("nu1", measure_args.nu1)->required();
  m_similarity->add_option("mu2", measure_args.mu2)->required();
  m_similarity->add_option("nu2", measure_args.nu2)->required();
  m_similarity->add_option("--mode", measure_args.mode)->check(mode_check);
  m_similarity->add_flag("--json", measure_args.json);

  MapArgs map_args;
  CLI::App* map_cmd = app.add_subcommand(
      "map", "Emit a measure over the (mu, nu) grid as CSV");
  map_cmd->add_option("--measure", map_args.measure, "entropy|syntropy|ambiguity")
      ->check(CLI::IsMember({"entropy", "syntropy", "ambiguity"}));
  map_cmd->add_option("--mode", map_args.mode)->check(mode_check);
  map_cmd->add_option("--resolution", map_args.resolution,
                      "grid steps per axis (N+1 points)")
      ->required()
      ->check(CLI::Range(2, 100000));
  map_cmd->add_option("--exec", map_args.exec, "serial|parallel")
      ->check(exec_check);
  map_cmd->add_flag("--json", map_args.json);

  VerifyArgs verify_args;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run the algebra law suite");
  verify_cmd->add_option("--seed", verify_args.seed, "generator seed");
  verify_cmd->add_option("--samples", verify_args.samples,
                         "random samples per law")
      ->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
  verify_cmd->add_option("--grid", verify_args.grid, "grid steps per axis")
      ->check(CLI::Range(1, 100000));
  verify_cmd->add_option("--exec", verify_args.exec, "serial|parallel")
      ->check(exec_check);
  verify_cmd
      ->add_option("--couples", verify_args.couples,
                   "comma-separated couples, e.g. min_max,product,frank(2)")
      ->delimiter(',');
  verify_cmd->add_flag("--json", verify_args.json);

  SetArgs set_args;
  CLI::App* set_cmd = app.add_subcommand(
      "set", "Set-level measures over CSV or JSON files");
  set_cmd->add_option("op", set_args.op, "entropy|syntropy|similarity")
      ->required()
      ->check(CLI::IsMember({"entropy", "syntropy", "similarity"}));
  set_cmd->add_option("file1", set_args.file1, "input set file")->required();
  set_cmd->add_option("file2", set_args.file2,
                      "second set file (similarity only)");
  set_cmd->add_option("--mode", set_args.mode)->check(mode_check);
  set_cmd->add_flag("--json", set_args.json);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("pentalogic");
  for (const std::string& arg : args) argv.push_back(arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // CLI11's own exit codes are remapped onto the documented contract:
    // help is success, every other parse problem is a usage error.
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  // Usage-level semantic checks that CLI11 cannot express.
  if (set_cmd->parsed()) {
    if (set_args.op == "similarity" && set_args.file2.empty()) {
      err << "set similarity requires two files\n";
      return 2;
    }
    if (set_args.op != "similarity" && !set_args.file2.empty()) {
      err << "set " << set_args.op << " takes exactly one file\n";
      return 2;
    }
  }

  try {
    if (transform_cmd->parsed()) return run_transform(transform_args, out);
    if (table_cmd->parsed()) {
      try {
        return run_table(table_args, out);
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
      }
    }
    if (measure_cmd->parsed()) {
      if (m_similarity->parsed()) {
        return run_measure_similarity(measure_args, out);
      }
      return run_measure_point(m_entropy->parsed() ? "entropy" : "syntropy",
                               measure_args, out);
    }
    if (map_cmd->parsed()) return run_map(map_args, out);
    if (verify_cmd->parsed()) {
      try {
        return run_verify(verify_args, out);
      } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
      }
    }
    if (set_cmd->parsed()) return run_set(set_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "no subcommand\n";
  return 2;
}

}  // namespace penta
