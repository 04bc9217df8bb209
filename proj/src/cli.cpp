/* Copyright (C) 2026 The gmaderiv authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "gmaderiv/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gmaderiv/document.hpp"
#include "gmaderiv/gallery.hpp"
#include "gmaderiv/report.hpp"

namespace gmaderiv::cli {

namespace {

using nlohmann::ordered_json;

ContextDocument load_document(const std::string& file) {
  if (file == "-") return parse_document(std::cin);
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open '" + file + "'");
  return parse_document(in);
}

void write_output(const std::string& file, const std::string& payload, std::ostream& out) {
  if (file.empty() || file == "-") {
    out << payload;
    return;
  }
  std::ofstream f(file);
  if (!f) throw std::invalid_argument("cannot write '" + file + "'");
  f << payload;
}

ordered_json dims_json(const MoritaContext& ctx) {
  return ordered_json{{"A", ctx.dim_a()}, {"M", ctx.dim_m()}, {"N", ctx.dim_n()},
                      {"B", ctx.dim_b()}};
}

std::string dims_text(const MoritaContext& ctx) {
  return "dims: A=" + std::to_string(ctx.dim_a()) + " M=" + std::to_string(ctx.dim_m()) +
         " N=" + std::to_string(ctx.dim_n()) + " B=" + std::to_string(ctx.dim_b()) +
         " (total " + std::to_string(ctx.dim_a() + ctx.dim_m() + ctx.dim_n() + ctx.dim_b()) + ")";
}

// Commands that compute on a context require a valid one; the detailed
// checker is the check-context command.
MoritaContext context_for_computation(const ContextDocument& doc) {
  MoritaContext ctx = build_context(doc);
  const ValidationReport report = validate_context(ctx);
  if (!report.ok())
    throw std::invalid_argument("context fails validation (" +
                                std::to_string(report.issues.size()) + " identities), e.g. " +
                                report.issues.front().describe() +
                                "; run check-context for the full report");
  return ctx;
}

GalleryParams parse_params(const std::vector<std::string>& kvs) {
  GalleryParams params;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("--param expects k=v, got '" + kv + "'");
    params[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return params;
}

std::map<std::string, Matrix> gallery_maps(const MoritaContext& ctx) {
  std::map<std::string, Matrix> maps;
  if (ctx.dim_m() == ctx.dim_n()) {
    const GeneralizedMatrixAlgebra g = build_gma(ctx);
    maps.emplace("gamma-jord", gamma_jord(g));
    maps.emplace("theta1", theta1(g));
    maps.emplace("theta2", theta2(g));
  }
  return maps;
}

const Matrix& find_map(const ContextDocument& doc, const std::string& name) {
  const auto it = doc.maps.find(name);
  if (it == doc.maps.end()) {
    std::string known;
    for (const auto& [n, m] : doc.maps) known += (known.empty() ? "" : ", ") + n;
    throw std::invalid_argument("document has no map '" + name + "'" +
                                (known.empty() ? "" : " (known maps: " + known + ")"));
  }
  return it->second;
}

struct Command {
  std::string format = "text";
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
  ReportFormat report_format() const {
    return format == "machine" ? ReportFormat::Machine : ReportFormat::Text;
  }
  void emit(Report& report, std::ostream& out) const {
    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    out << render_report(report, report_format());
  }
};

int cmd_check_context(const std::string& file, const Command& opts, std::ostream& out) {
  Report report;
  report.command = "check-context";
  report.machine["command"] = report.command;
  report.machine["input"] = file;

  bool valid = true;
  std::string construction_error;
  ordered_json issues = ordered_json::array();
  try {
    const ContextDocument doc = load_document(file);
    const MoritaContext ctx = build_context(doc);
    report.machine["field"] = ctx.field().name();
    report.machine["dims"] = dims_json(ctx);
    report.text.push_back("check-context: " + file);
    report.text.push_back("field: " + ctx.field().name());
    report.text.push_back(dims_text(ctx));
    const ValidationReport vr = validate_context(ctx);
    valid = vr.ok();
    for (const auto& issue : vr.issues) {
      ordered_json j;
      j["identity"] = issue.identity;
      j["indices"] = issue.indices;
      issues.push_back(std::move(j));
      report.text.push_back("violated: " + issue.describe());
    }
    if (valid) {
      const bool nd_phi = is_nondegenerate(ctx, PairingSide::Phi);
      const bool nd_psi = is_nondegenerate(ctx, PairingSide::Psi);
      const bool f_ml = is_faithful(ctx, WhichModule::M, ActionSide::Left);
      const bool f_mr = is_faithful(ctx, WhichModule::M, ActionSide::Right);
      report.machine["phi_nondegenerate"] = nd_phi;
      report.machine["psi_nondegenerate"] = nd_psi;
      report.machine["m_faithful_left"] = f_ml;
      report.machine["m_faithful_right"] = f_mr;
      report.text.push_back(std::string("phi nondegenerate: ") + (nd_phi ? "yes" : "no"));
      report.text.push_back(std::string("psi nondegenerate: ") + (nd_psi ? "yes" : "no"));
      report.text.push_back(std::string("M faithful (left, right): ") + (f_ml ? "yes" : "no") +
                            ", " + (f_mr ? "yes" : "no"));
    }
  } catch (const AlgebraError& e) {
    // A corner algebra violating its own laws is reported as an invalid
    // context, not a usage error: checking is this command's job.
    valid = false;
    construction_error = e.what();
    report.text.push_back(std::string("invalid: ") + e.what());
  } catch (const DimensionError& e) {
    valid = false;
    construction_error = e.what();
    report.text.push_back(std::string("invalid: ") + e.what());
  }
  report.machine["valid"] = valid;
  report.machine["issues"] = issues;
  if (!construction_error.empty()) report.machine["construction_error"] = construction_error;
  report.text.push_back(std::string("verdict: ") + (valid ? "valid" : "INVALID"));
  opts.emit(report, out);
  return valid ? kExitOk : kExitFalsified;
}

int cmd_build_gma(const std::string& file, const std::string& out_file, const Command& opts,
                  std::ostream& out) {
  const ContextDocument doc = load_document(file);
  const MoritaContext ctx = context_for_computation(doc);
  const GeneralizedMatrixAlgebra g = build_gma(ctx);
  const std::string payload = serialize_document(document_from_algebra(g.algebra(), "G"));
  if (out_file.empty()) {
    // Without --out the document itself is the output, ready for piping.
    out << payload;
    return kExitOk;
  }
  write_output(out_file, payload, out);
  Report report;
  report.command = "build-gma";
  report.machine["command"] = report.command;
  report.machine["input"] = file;
  report.machine["output"] = out_file;
  report.machine["field"] = ctx.field().name();
  report.machine["dims"] = dims_json(ctx);
  report.machine["gma_dim"] = g.dim();
  report.text.push_back("build-gma: " + file + " -> " + out_file);
  report.text.push_back(dims_text(ctx));
  report.text.push_back("gma dimension: " + std::to_string(g.dim()));
  opts.emit(report, out);
  return kExitOk;
}

MapSubspace solve_kind(const StructureAlgebra& alg, const std::string& kind) {
  if (kind == "der") return derivation_space(alg);
  if (kind == "jder") return jordan_derivation_space(alg);
  if (kind == "ader") return antiderivation_space(alg);
  throw std::invalid_argument("unknown kind '" + kind + "' (use der, jder or ader)");
}

int cmd_solve(const std::string& file, const std::string& kind, bool with_basis,
              const Command& opts, std::ostream& out) {
  const ContextDocument doc = load_document(file);
  const MoritaContext ctx = context_for_computation(doc);
  const GeneralizedMatrixAlgebra g = build_gma(ctx);
  const MapSubspace space = solve_kind(g.algebra(), kind);

  Report report;
  report.command = "solve";
  report.machine["command"] = report.command;
  report.machine["input"] = file;
  report.machine["kind"] = kind;
  report.machine["field"] = ctx.field().name();
  report.machine["dims"] = dims_json(ctx);
  report.machine["gma_dim"] = g.dim();
  report.machine["space_dim"] = space.dimension();
  report.text.push_back("solve: kind=" + kind + " on " + file);
  report.text.push_back(dims_text(ctx));
  report.text.push_back("space dimension: " + std::to_string(space.dimension()));
  if (with_basis) {
    ordered_json basis = ordered_json::array();
    for (const auto& m : space.basis) basis.push_back(map_to_json(m));
    report.machine["basis"] = std::move(basis);
    for (std::size_t i = 0; i < space.basis.size(); ++i) {
      report.text.push_back("basis map " + std::to_string(i) + " (columns):");
      for (std::size_t j = 0; j < space.basis[i].cols(); ++j) {
        std::string line = "  col " + std::to_string(j) + ":";
        for (std::size_t r = 0; r < space.basis[i].rows(); ++r)
          line += " " + space.basis[i].at(r, j).str();
        report.text.push_back(line);
      }
    }
  }
  opts.emit(report, out);
  return kExitOk;
}

int cmd_canonical(const std::string& file, const std::string& map_name, const std::string& prop,
                  const Command& opts, std::ostream& out) {
  const auto rule = form_rule_from_id(prop);
  if (!rule)
    throw std::invalid_argument("unknown statement '" + prop + "' (use 3.1, 3.2, 3.3 or 3.6)");
  const ContextDocument doc = load_document(file);
  const MoritaContext ctx = context_for_computation(doc);
  const GeneralizedMatrixAlgebra g = build_gma(ctx);
  const Matrix& f = find_map(doc, map_name);

  const JordanCanonicalForm form = extract_jordan_components(g, f);
  const ConditionReport cr = verify_conditions(g, form, *rule);

  Report report;
  report.command = "canonical";
  report.machine["command"] = report.command;
  report.machine["input"] = file;
  report.machine["map"] = map_name;
  report.machine["statement"] = prop;
  report.machine["field"] = ctx.field().name();
  report.machine["dims"] = dims_json(ctx);
  ordered_json components;
  ordered_json m0 = ordered_json::array(), n0 = ordered_json::array();
  for (const auto& s : form.m0) m0.push_back(s.str());
  for (const auto& s : form.n0) n0.push_back(s.str());
  components["m0"] = std::move(m0);
  components["n0"] = std::move(n0);
  components["delta1"] = map_to_json(form.delta1);
  components["delta4"] = map_to_json(form.delta4);
  components["tau2"] = map_to_json(form.tau2);
  components["tau3"] = map_to_json(form.tau3);
  components["nu2"] = map_to_json(form.nu2);
  components["nu3"] = map_to_json(form.nu3);
  components["mu1"] = map_to_json(form.mu1);
  components["mu4"] = map_to_json(form.mu4);
  report.machine["components"] = std::move(components);
  ordered_json checks = ordered_json::array();
  for (const auto& check : cr.checks) {
    ordered_json j;
    j["id"] = check.id;
    j["statement"] = check.statement;
    j["holds"] = check.holds;
    j["witness"] = check.witness;
    checks.push_back(std::move(j));
  }
  report.machine["conditions"] = std::move(checks);
  report.machine["all_hold"] = cr.ok();

  report.text.push_back("canonical: map '" + map_name + "' against statement " + prop);
  report.text.push_back(dims_text(ctx));
  for (const auto& check : cr.checks) {
    std::string line = std::string(check.holds ? "  [ok]   " : "  [FAIL] ") + check.id + "  " +
                       check.statement;
    if (!check.holds && !check.witness.empty()) {
      line += "  at (";
      for (std::size_t i = 0; i < check.witness.size(); ++i)
        line += (i ? ", " : "") + std::to_string(check.witness[i]);
      line += ")";
    }
    report.text.push_back(line);
  }
  report.text.push_back(std::string("all conditions hold: ") + (cr.ok() ? "yes" : "NO"));
  opts.emit(report, out);
  return cr.ok() ? kExitOk : kExitFalsified;
}

int cmd_decompose(const std::string& file, const std::string& map_name, const Command& opts,
                  std::ostream& out) {
  const ContextDocument doc = load_document(file);
  const MoritaContext ctx = context_for_computation(doc);
  const GeneralizedMatrixAlgebra g = build_gma(ctx);
  const Matrix& f = find_map(doc, map_name);

  Report report;
  report.command = "decompose";
  report.machine["command"] = report.command;
  report.machine["input"] = file;
  report.machine["map"] = map_name;
  report.machine["field"] = ctx.field().name();
  report.machine["dims"] = dims_json(ctx);
  report.text.push_back("decompose: map '" + map_name + "' on " + file);

  try {
    const JordanDecomposition parts = decompose_jordan(g, f);
    report.machine["verdict"] = "decomposed";
    report.machine["derivation_part"] = map_to_json(parts.derivation_part);
    report.machine["antiderivation_part"] = map_to_json(parts.antiderivation_part);
    report.text.push_back("verdict: decomposed into derivation + antiderivation");
    const auto describe = [&report](const char* name, const Matrix& part) {
      report.text.push_back(std::string(name) + " (columns):");
      for (std::size_t j = 0; j < part.cols(); ++j) {
        std::string line = "  col " + std::to_string(j) + ":";
        for (std::size_t r = 0; r < part.rows(); ++r) line += " " + part.at(r, j).str();
        report.text.push_back(line);
      }
    };
    describe("derivation part", parts.derivation_part);
    describe("antiderivation part", parts.antiderivation_part);
    opts.emit(report, out);
    return kExitOk;
  } catch (const HypothesisError& e) {
    report.machine["verdict"] = "not-applicable";
    report.machine["reason"] = e.what();
    report.text.push_back(std::string("verdict: not-applicable (") + e.what() + ")");
    opts.emit(report, out);
    return kExitOk;
  }
}

int cmd_certify(const std::string& file, const std::string& prop, const Command& opts,
                std::ostream& out) {
  if (prop != "3.10" && prop != "3.11")
    throw std::invalid_argument("unknown statement '" + prop + "' (use 3.10 or 3.11)");
  const ContextDocument doc = load_document(file);
  const MoritaContext ctx = context_for_computation(doc);
  const GeneralizedMatrixAlgebra g = build_gma(ctx);
  const CertifyResult result =
      prop == "3.10" ? certify_no_antiderivations(g) : certify_jordan_splitting(g);

  Report report;
  report.command = "certify";
  report.machine["command"] = report.command;
  report.machine["input"] = file;
  report.machine["statement"] = prop;
  report.machine["field"] = ctx.field().name();
  report.machine["dims"] = dims_json(ctx);
  report.machine["verdict"] = verdict_name(result.verdict);
  if (!result.reason.empty()) report.machine["reason"] = result.reason;
  ordered_json facts;
  for (const auto& [k, v] : result.facts) facts[k] = v;
  report.machine["facts"] = std::move(facts);

  report.text.push_back("certify: statement " + prop + " on " + file);
  report.text.push_back(dims_text(ctx));
  for (const auto& [k, v] : result.facts) report.text.push_back("  " + k + ": " + v);
  report.text.push_back(std::string("verdict: ") + verdict_name(result.verdict) +
                        (result.reason.empty() ? "" : " (" + result.reason + ")"));
  opts.emit(report, out);
  return result.verdict == Verdict::Falsified ? kExitFalsified : kExitOk;
}

int cmd_gallery(const std::string& name, const std::vector<std::string>& params,
                const std::string& out_file, bool list, const Command& opts, std::ostream& out) {
  if (list) {
    Report report;
    report.command = "gallery";
    report.machine["command"] = report.command;
    ordered_json presets = ordered_json::array();
    for (const auto& preset : gallery_presets()) {
      ordered_json j;
      j["name"] = preset.name;
      j["params"] = preset.params;
      presets.push_back(std::move(j));
      report.text.push_back(preset.label());
    }
    report.machine["presets"] = std::move(presets);
    opts.emit(report, out);
    return kExitOk;
  }
  if (name.empty()) throw std::invalid_argument("gallery needs a fixture name (or --list)");
  const MoritaContext ctx = make_gallery(name, parse_params(params));
  const std::string payload = serialize_document(document_from_context(ctx, gallery_maps(ctx)));
  write_output(out_file, payload, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact derivation structure of generalized matrix algebras"};
  app.require_subcommand(1);
  Command opts;

  std::string file = "-", out_file, kind = "jder", map_name, prop, gallery_name;
  std::vector<std::string> params;
  bool with_basis = false, list_gallery = false;

  const auto add_format = [&opts](CLI::App* cmd) {
    cmd->add_option("--format", opts.format, "report format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();
  };

  CLI::App* check = app.add_subcommand("check-context", "validate a context definition file");
  check->add_option("file", file, "context file ('-' for stdin)");
  add_format(check);

  CLI::App* build = app.add_subcommand("build-gma", "emit the generalized matrix algebra");
  build->add_option("file", file, "context file ('-' for stdin)");
  build->add_option("--out", out_file, "write the algebra document here");
  add_format(build);

  CLI::App* solve = app.add_subcommand("solve", "compute a space of maps");
  solve->add_option("file", file, "context file ('-' for stdin)");
  solve->add_option("--kind", kind, "der | jder | ader")
      ->required()
      ->check(CLI::IsMember({"der", "jder", "ader"}));
  solve->add_flag("--basis", with_basis, "include the canonical basis");
  add_format(solve);

  CLI::App* canonical = app.add_subcommand("canonical", "extract components and verify a form");
  canonical->add_option("file", file, "context file ('-' for stdin)");
  canonical->add_option("--map", map_name, "named map from the document")->required();
  canonical->add_option("--prop", prop, "3.1 | 3.2 | 3.3 | 3.6")->required();
  add_format(canonical);

  CLI::App* decompose = app.add_subcommand("decompose", "split a Jordan derivation");
  decompose->add_option("file", file, "context file ('-' for stdin)");
  decompose->add_option("--map", map_name, "named map from the document")->required();
  add_format(decompose);

  CLI::App* certify = app.add_subcommand("certify", "run a structure-statement certificate");
  certify->add_option("file", file, "context file ('-' for stdin)");
  certify->add_option("--prop", prop, "3.10 | 3.11")->required();
  add_format(certify);

  CLI::App* gallery = app.add_subcommand("gallery", "emit a built-in fixture as a document");
  gallery->add_option("name", gallery_name, "fixture name");
  gallery->add_option("--param", params, "fixture parameter k=v (repeatable)");
  gallery->add_option("--out", out_file, "write the document here");
  gallery->add_flag("--list", list_gallery, "list the preset instances");
  add_format(gallery);

  try {
    // CLI11 consumes the argument vector in reverse order.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  opts.started = std::chrono::steady_clock::now();
  try {
    int code = kExitUsage;
    if (check->parsed()) code = cmd_check_context(file, opts, out);
    else if (build->parsed()) code = cmd_build_gma(file, out_file, opts, out);
    else if (solve->parsed()) code = cmd_solve(file, kind, with_basis, opts, out);
    else if (canonical->parsed()) code = cmd_canonical(file, map_name, prop, opts, out);
    else if (decompose->parsed()) code = cmd_decompose(file, map_name, opts, out);
    else if (certify->parsed()) code = cmd_certify(file, prop, opts, out);
    else if (gallery->parsed()) code = cmd_gallery(gallery_name, params, out_file, list_gallery, opts, out);
    return code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InternalInconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kExitFalsified;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace gmaderiv::cli
