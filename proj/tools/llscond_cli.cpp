// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0
//
// llscond: condition numbers of full-column-rank least-squares problems.
//
//   llscond analyze A.mtx b.txt [--exact] [--scales A,B,X] [--format json]
//   llscond analyze --example alpha=0.1,beta=1,phi=pi/10 --exact
//   llscond perturb A.mtx b.txt --trials 1000 --eps 1e-8 --seed 42
//   llscond catalog A.csv b.csv --gratton-weights 1,2
//   llscond paper-example --example alpha=0.01,phi=pi/2

#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "llscond/llscond.h"

namespace {

using llscond::cli::check;
using llscond::cli::CliError;
using llscond::cli::Format;
using llscond::cli::Json;

struct ProblemDeleter {
  void operator()(llscond_problem* p) const { llscond_problem_destroy(p); }
};
struct ReportDeleter {
  void operator()(llscond_report* r) const { llscond_report_destroy(r); }
};
using ProblemPtr = std::unique_ptr<llscond_problem, ProblemDeleter>;
using ReportPtr = std::unique_ptr<llscond_report, ReportDeleter>;

struct Options {
  std::vector<std::string> files;
  std::string example;
  std::string scales = "default";
  std::string format = "text";
  std::string gratton = "default";
  std::uint64_t seed = 0;
  bool exact = false;
  std::size_t restarts = 0;
  std::size_t max_iterations = 0;
  std::size_t trials = 0;
  double eps = 0.0;
  double slack = 0.0;
};

struct Loaded {
  ProblemPtr problem;
  std::string source;
  std::optional<llscond_example_spec> spec;
};

Loaded load(const Options& o, bool example_only = false) {
  Loaded l;
  if (!o.example.empty() || example_only) {
    if (!o.files.empty()) {
      throw CliError{LLSCOND_E_INVALID_ARGUMENT, "give either input files or --example, not both"};
    }
    llscond_example_spec spec;
    llscond_example_spec_init(&spec);
    if (!o.example.empty()) check(llscond_example_spec_parse(o.example.c_str(), &spec));
    llscond_problem* p = nullptr;
    check(llscond_example_problem(&spec, &p));
    l.problem.reset(p);
    l.source = "example";
    l.spec = spec;
    return l;
  }
  if (o.files.size() != 2) {
    throw CliError{LLSCOND_E_INVALID_ARGUMENT,
                   "expected MATRIX and RHS files, or --example k=v,..."};
  }
  llscond_problem* p = nullptr;
  check(llscond_problem_load(o.files[0].c_str(), o.files[1].c_str(), &p));
  l.problem.reset(p);
  l.source = o.files[0] + " " + o.files[1];
  return l;
}

llscond_analysis_options analysis_options(const Options& o) {
  llscond_analysis_options a;
  llscond_analysis_options_init(&a);
  const auto sc = llscond::cli::parse_scales(o.scales);
  a.default_scales = sc.use_default ? 1 : 0;
  a.phi_A = sc.phi_A;
  a.phi_B = sc.phi_B;
  a.phi_X = sc.phi_X;
  a.compute_exact = o.exact ? 1 : 0;
  if (o.restarts) a.restarts = o.restarts;
  if (o.max_iterations) a.max_iterations = o.max_iterations;
  a.seed = o.seed;
  std::tie(a.gratton_alpha, a.gratton_beta) =
      llscond::cli::parse_pair(o.gratton, "--gratton-weights");
  if (o.eps > 0.0) a.eps = o.eps;
  return a;
}

Json provenance(const llscond_analysis_options& a) {
  return Json{{"version", llscond_version()},
              {"seed", a.seed},
              {"restarts", a.restarts},
              {"max_iterations", a.max_iterations},
              {"step_tolerance", a.step_tolerance},
              {"value_tolerance", a.value_tolerance},
              {"gratton_weights", {a.gratton_alpha, a.gratton_beta}},
              {"eps", a.eps}};
}

ReportPtr analyze(const Loaded& l, const llscond_analysis_options& a) {
  llscond_report* r = nullptr;
  check(llscond_analyze(l.problem.get(), &a, &r));
  return ReportPtr(r);
}

Json example_block(const Loaded& l) {
  llscond_example_info info{};
  check(llscond_example_info_get(&*l.spec, &info));
  return llscond::cli::example_json(*l.spec, info);
}

Json run_analyze(const Options& o, bool full) {
  const Loaded l = load(o);
  const auto a = analysis_options(o);
  const ReportPtr r = analyze(l, a);
  Json doc;
  doc["problem"] = llscond::cli::problem_json(l.problem.get(), l.source);
  if (l.spec) {
    doc["problem"]["example"] = {{"alpha", l.spec->alpha},
                                 {"beta", l.spec->beta},
                                 {"phi", l.spec->phi},
                                 {"epsilon", l.spec->epsilon}};
  }
  if (full) {
    Json body = llscond::cli::analysis_json(l.problem.get(), r.get(), true);
    for (auto& [k, v] : body.items()) doc[k] = std::move(v);
  } else {
    doc["catalog"] = llscond::cli::catalog_json(r.get());
  }
  doc["provenance"] = provenance(a);
  return doc;
}

Json run_perturb(const Options& o) {
  if (o.trials == 0) throw CliError{LLSCOND_E_INVALID_ARGUMENT, "--trials must be at least 1"};
  const Loaded l = load(o);
  llscond_perturb_options po;
  llscond_perturb_options_init(&po);
  const auto sc = llscond::cli::parse_scales(o.scales);
  po.default_scales = sc.use_default ? 1 : 0;
  po.phi_A = sc.phi_A;
  po.phi_B = sc.phi_B;
  po.phi_X = sc.phi_X;
  po.trials = o.trials;
  if (o.eps > 0.0) po.eps = o.eps;
  if (o.slack > 0.0) po.slack = o.slack;
  po.seed = o.seed;

  llscond_trial_summary t{};
  check(llscond_perturb(l.problem.get(), &po, &t));

  // Worst case along the maximizing direction when it was computed.
  std::vector<double> dir;
  if (o.exact) {
    auto a = analysis_options(o);
    a.compute_exact = 1;
    const ReportPtr r = analyze(l, a);
    dir.resize(llscond_problem_cols(l.problem.get()));
    check(llscond_report_maximizer(r.get(), dir.data()));
  }
  double achieved = 0.0;
  check(llscond_worst_case(l.problem.get(), po.eps, dir.empty() ? nullptr : dir.data(), nullptr,
                           &achieved));

  Json doc;
  doc["problem"] = llscond::cli::problem_json(l.problem.get(), l.source);
  doc["trials"] = llscond::cli::trial_json(t);
  doc["worst_case"] = {{"direction", dir.empty() ? "sigma_min" : "maximizer"},
                       {"eps", po.eps},
                       {"achieved_ratio", achieved}};
  doc["provenance"] = {{"version", llscond_version()},
                       {"seed", po.seed},
                       {"trials", po.trials},
                       {"eps", po.eps},
                       {"slack", po.slack}};
  return doc;
}

Json run_paper_example(const Options& o) {
  const Loaded l = load(o, true);
  const auto a = analysis_options(o);
  const ReportPtr r = analyze(l, a);
  Json doc;
  doc["example"] = example_block(l);
  doc["computed"] = llscond::cli::analysis_json(l.problem.get(), r.get(), true);
  doc["provenance"] = provenance(a);
  return doc;
}

void add_input(CLI::App* sub, Options& o) {
  sub->add_option("files", o.files, "MATRIX RHS (MatrixMarket or CSV)")->expected(0, 2);
  sub->add_option("--example", o.example,
                  "built-in example: alpha=A,beta=B,phi=P[,eps=E]; phi may be k*pi/d");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--seed", o.seed, "random seed (env LLSCOND_SEED)")->envname("LLSCOND_SEED");
  sub->add_option("--scales", o.scales, "phi_A,phi_B,phi_X or 'default'");
}

void add_analysis(CLI::App* sub, Options& o) {
  sub->add_flag("--exact", o.exact, "compute the exact chi_x(A) by optimization");
  sub->add_option("--restarts", o.restarts, "optimizer restarts")->check(CLI::PositiveNumber);
  sub->add_option("--max-iterations", o.max_iterations, "optimizer iterations per restart")
      ->check(CLI::PositiveNumber);
  sub->add_option("--gratton-weights", o.gratton, "a,b or 'default'");
  sub->add_option("--eps", o.eps, "perturbation level recorded with the catalog");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Condition numbers for full-column-rank linear least squares"};
  app.set_version_flag("--version", std::string(llscond_version()));
  app.require_subcommand(1);
  Options o;

  auto* analyze_cmd = app.add_subcommand("analyze", "geometry, condition numbers, bounds, catalog");
  add_input(analyze_cmd, o);
  add_common(analyze_cmd, o);
  add_analysis(analyze_cmd, o);

  auto* perturb_cmd = app.add_subcommand("perturb", "random perturbation trials and worst case");
  add_input(perturb_cmd, o);
  add_common(perturb_cmd, o);
  o.trials = 1000;
  perturb_cmd->add_option("--trials", o.trials, "number of trials");
  perturb_cmd->add_option("--eps", o.eps, "relative perturbation size (default 1e-8)");
  perturb_cmd->add_option("--slack", o.slack, "violation slack (default 1e-3)");
  perturb_cmd->add_flag("--exact", o.exact, "use the maximizing direction for the worst case");
  perturb_cmd->add_option("--restarts", o.restarts, "optimizer restarts")
      ->check(CLI::PositiveNumber);

  auto* catalog_cmd = app.add_subcommand("catalog", "literature bounds only");
  add_input(catalog_cmd, o);
  add_common(catalog_cmd, o);
  catalog_cmd->add_option("--gratton-weights", o.gratton, "a,b or 'default'");
  catalog_cmd->add_option("--eps", o.eps, "perturbation level recorded with the catalog");

  auto* example_cmd = app.add_subcommand("paper-example", "built-in example vs closed forms");
  example_cmd->add_option("--example", o.example, "alpha=A,beta=B,phi=P[,eps=E]");
  add_common(example_cmd, o);
  add_analysis(example_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    if (o.format == "json") {
      std::cout << llscond::cli::dump_json(
          llscond::cli::error_json(LLSCOND_E_INVALID_ARGUMENT, e.what()));
    } else {
      std::cerr << "llscond: " << e.what() << '\n';
    }
    return llscond::cli::kExitValidation;
  }

  Format fmt = Format::Text;
  try {
    fmt = llscond::cli::parse_format(o.format);
    Json doc;
    if (analyze_cmd->parsed()) {
      doc = run_analyze(o, true);
    } else if (catalog_cmd->parsed()) {
      doc = run_analyze(o, false);
    } else if (perturb_cmd->parsed()) {
      doc = run_perturb(o);
    } else {
      doc = run_paper_example(o);
      if (fmt == Format::Text) {
        for (const auto& w : doc["example"]["warnings"]) {
          std::cerr << "llscond: warning: " << w.get<std::string>() << '\n';
        }
      }
    }
    std::cout << llscond::cli::render(doc, fmt);
    return llscond::cli::kExitOk;
  } catch (const CliError& e) {
    if (fmt == Format::Json) {
      std::cout << llscond::cli::dump_json(llscond::cli::error_json(e.status, e.message));
    } else {
      std::cerr << "llscond: error (" << llscond_status_name(e.status) << "): " << e.message
                << '\n';
    }
    return llscond::cli::exit_code_for(e.status);
  }
}
