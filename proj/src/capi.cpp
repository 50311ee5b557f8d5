// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#include "llscond/llscond.h"

#include <algorithm>
#include <exception>
#include <memory>
#include <new>
#include <optional>
#include <string>

#include "catalog.hpp"
#include "conditioning.hpp"
#include "error.hpp"
#include "example.hpp"
#include "io.hpp"
#include "lls.hpp"
#include "perturb.hpp"

#ifndef LLSCOND_VERSION_STRING
#define LLSCOND_VERSION_STRING "0.0.0"
#endif

using namespace llscond;

struct llscond_problem {
  lls::LlsProblem problem;
};

struct llscond_report {
  lls::LlsSolution solution;
  lls::Geometry geometry;
  conditioning::ConditionReport condition;
  catalog::Catalog catalog;
  double overestimate_ratio = 0.0;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

namespace {

thread_local std::string g_last_error;

llscond_status to_status(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return LLSCOND_E_INVALID_ARGUMENT;
    case ErrorCode::Io: return LLSCOND_E_IO;
    case ErrorCode::Parse: return LLSCOND_E_PARSE;
    case ErrorCode::DimensionMismatch: return LLSCOND_E_DIMENSION_MISMATCH;
    case ErrorCode::NonFinite: return LLSCOND_E_NON_FINITE;
    case ErrorCode::RankDeficient: return LLSCOND_E_RANK_DEFICIENT;
    case ErrorCode::ZeroRhs: return LLSCOND_E_ZERO_RHS;
    case ErrorCode::ZeroSolution: return LLSCOND_E_ZERO_SOLUTION;
    case ErrorCode::FactorizationFailure: return LLSCOND_E_FACTORIZATION_FAILURE;
    case ErrorCode::Internal: return LLSCOND_E_INTERNAL;
  }
  return LLSCOND_E_INTERNAL;
}

llscond_status fail(llscond_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

// Runs f, translating exceptions into status codes.
template <typename F>
llscond_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return LLSCOND_OK;
  } catch (const Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LLSCOND_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LLSCOND_E_INTERNAL, e.what());
  } catch (...) {
    return fail(LLSCOND_E_INTERNAL, "unknown error");
  }
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

conditioning::ScaleFactors scales_for(int use_default, double a, double b, double x,
                                      const lls::Geometry& g) {
  if (use_default) return conditioning::default_scales(g);
  conditioning::ScaleFactors sc{a, b, x};
  sc.validate();
  return sc;
}

example::ExampleSpec to_spec(const llscond_example_spec* s) {
  require(s, "example spec");
  return example::ExampleSpec{s->alpha, s->beta, s->phi, s->epsilon};
}

}  // namespace

extern "C" {

const char* llscond_version(void) { return LLSCOND_VERSION_STRING; }

const char* llscond_last_error(void) { return g_last_error.c_str(); }

const char* llscond_status_name(llscond_status s) {
  switch (s) {
    case LLSCOND_OK: return "ok";
    case LLSCOND_E_INVALID_ARGUMENT: return error_code_name(ErrorCode::InvalidArgument);
    case LLSCOND_E_IO: return error_code_name(ErrorCode::Io);
    case LLSCOND_E_PARSE: return error_code_name(ErrorCode::Parse);
    case LLSCOND_E_DIMENSION_MISMATCH: return error_code_name(ErrorCode::DimensionMismatch);
    case LLSCOND_E_NON_FINITE: return error_code_name(ErrorCode::NonFinite);
    case LLSCOND_E_RANK_DEFICIENT: return error_code_name(ErrorCode::RankDeficient);
    case LLSCOND_E_ZERO_RHS: return error_code_name(ErrorCode::ZeroRhs);
    case LLSCOND_E_ZERO_SOLUTION: return error_code_name(ErrorCode::ZeroSolution);
    case LLSCOND_E_FACTORIZATION_FAILURE:
      return error_code_name(ErrorCode::FactorizationFailure);
    case LLSCOND_E_INTERNAL: return error_code_name(ErrorCode::Internal);
  }
  return "unknown";
}

llscond_status llscond_problem_create(size_t rows, size_t cols, const double* a, const double* b,
                                      llscond_problem** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(a, "matrix");
    require(b, "rhs");
    linalg::DenseMatrix m(rows, cols, std::vector<double>(a, a + rows * cols));
    linalg::DenseVector v(std::vector<double>(b, b + rows));
    *out = new llscond_problem{lls::build_problem(std::move(m), std::move(v))};
  });
}

llscond_status llscond_problem_load(const char* matrix_path, const char* rhs_path,
                                    llscond_problem** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(matrix_path, "matrix path");
    require(rhs_path, "rhs path");
    *out = new llscond_problem{io::ingest(matrix_path, rhs_path)};
  });
}

void llscond_problem_destroy(llscond_problem* p) { delete p; }

size_t llscond_problem_rows(const llscond_problem* p) { return p ? p->problem.rows() : 0; }
size_t llscond_problem_cols(const llscond_problem* p) { return p ? p->problem.cols() : 0; }

llscond_status llscond_problem_data(const llscond_problem* p, double* a, double* b) {
  return guarded([&] {
    require(p, "problem");
    if (a) std::ranges::copy(p->problem.matrix().vec(), a);
    if (b) std::ranges::copy(p->problem.rhs().values(), b);
  });
}

void llscond_analysis_options_init(llscond_analysis_options* o) {
  if (!o) return;
  const conditioning::OptimizerConfig cfg;
  const catalog::GrattonWeights w;
  *o = llscond_analysis_options{};
  o->default_scales = 1;
  o->phi_A = o->phi_B = o->phi_X = 1.0;
  o->compute_exact = 0;
  o->restarts = cfg.restarts;
  o->max_iterations = cfg.max_iterations;
  o->step_tolerance = cfg.step_tolerance;
  o->value_tolerance = cfg.value_tolerance;
  o->seed = cfg.seed;
  o->gratton_alpha = w.alpha_w;
  o->gratton_beta = w.beta_w;
  o->eps = perturb::TrialConfig{}.eps;
}

llscond_status llscond_analyze(const llscond_problem* p, const llscond_analysis_options* o,
                               llscond_report** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(p, "problem");
    require(o, "options");
    const lls::LlsProblem& prob = p->problem;

    conditioning::OptimizerConfig cfg;
    cfg.restarts = o->restarts;
    cfg.max_iterations = o->max_iterations;
    cfg.step_tolerance = o->step_tolerance;
    cfg.value_tolerance = o->value_tolerance;
    cfg.seed = o->seed;
    cfg.validate();
    const catalog::GrattonWeights w{o->gratton_alpha, o->gratton_beta};
    w.validate();

    auto rep = std::make_unique<llscond_report>();
    rep->rows = prob.rows();
    rep->cols = prob.cols();
    rep->solution = lls::solve(prob);
    rep->geometry = lls::geometry(prob, rep->solution);
    const auto sc = scales_for(o->default_scales, o->phi_A, o->phi_B, o->phi_X, rep->geometry);
    rep->condition = conditioning::condition_report(prob, rep->solution, rep->geometry, sc, cfg,
                                                    o->compute_exact != 0);
    rep->catalog = catalog::evaluate_catalog(prob, rep->solution, rep->geometry, sc, w, o->eps);
    rep->overestimate_ratio = catalog::overestimate_ratio(prob, rep->solution, rep->geometry);
    *out = rep.release();
  });
}

void llscond_report_destroy(llscond_report* r) { delete r; }

llscond_status llscond_report_summary(const llscond_report* r, llscond_summary* out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    const lls::Geometry& g = r->geometry;
    const conditioning::ConditionReport& c = r->condition;
    llscond_summary s{};
    s.rows = r->rows;
    s.cols = r->cols;
    s.kappa = g.kappa;
    s.nu = g.nu;
    s.tan_theta = g.tan_theta;
    s.sec_theta = g.sec_theta;
    s.sigma_min = g.sigma_min;
    s.sigma_max = g.sigma_max;
    s.norm_x = g.norm_x;
    s.norm_r = g.norm_r;
    s.norm_b = g.norm_b;
    s.phi_A = c.scales.phi_A;
    s.phi_B = c.scales.phi_B;
    s.phi_X = c.scales.phi_X;
    s.chi_b = c.chi_b;
    s.chi_A_lower = c.chi_A_lower;
    s.chi_A_upper = c.chi_A_upper;
    if (c.chi_A_exact) {
      s.has_exact = 1;
      s.chi_A_exact = c.chi_A_exact->value;
      s.exact_certified = c.chi_A_exact->certified ? 1 : 0;
      s.exact_restart = c.chi_A_exact->restart;
      s.exact_iterations = c.chi_A_exact->iterations;
    }
    s.overestimate_ratio = r->overestimate_ratio;
    s.catalog_eps = r->catalog.eps;
    *out = s;
  });
}

llscond_status llscond_report_solution(const llscond_report* r, double* x, double* residual) {
  return guarded([&] {
    require(r, "report");
    if (x) std::ranges::copy(r->solution.x.values(), x);
    if (residual) std::ranges::copy(r->solution.r.values(), residual);
  });
}

llscond_status llscond_report_maximizer(const llscond_report* r, double* dx) {
  return guarded([&] {
    require(r, "report");
    require(dx, "output");
    if (!r->condition.chi_A_exact) {
      throw Error(ErrorCode::InvalidArgument, "report was computed without the exact value");
    }
    std::ranges::copy(r->condition.chi_A_exact->maximizer.values(), dx);
  });
}

size_t llscond_report_catalog_size(const llscond_report* r) {
  return r ? r->catalog.entries.size() : 0;
}

llscond_status llscond_report_catalog_entry(const llscond_report* r, size_t i,
                                            llscond_catalog_entry* out) {
  return guarded([&] {
    require(r, "report");
    require(out, "out");
    if (i >= r->catalog.entries.size()) {
      throw Error(ErrorCode::InvalidArgument, "catalog index out of range");
    }
    const auto& e = r->catalog.entries[i];
    // name_of returns views of string literals, so data() is NUL-terminated.
    out->name = catalog::name_of(e.name).data();
    out->value = e.value;
    out->norm_regime = catalog::name_of(e.norm_regime).data();
    out->status = catalog::name_of(e.status).data();
  });
}

void llscond_perturb_options_init(llscond_perturb_options* o) {
  if (!o) return;
  const perturb::TrialConfig cfg;
  *o = llscond_perturb_options{};
  o->default_scales = 1;
  o->phi_A = o->phi_B = o->phi_X = 1.0;
  o->trials = cfg.trials;
  o->eps = cfg.eps;
  o->seed = cfg.seed;
  o->slack = cfg.slack;
}

llscond_status llscond_perturb(const llscond_problem* p, const llscond_perturb_options* o,
                               llscond_trial_summary* out) {
  return guarded([&] {
    require(p, "problem");
    require(o, "options");
    require(out, "out");
    if (o->trials == 0) throw Error(ErrorCode::InvalidArgument, "trials must be at least 1");
    const lls::LlsSolution s = lls::solve(p->problem);
    const lls::Geometry g = lls::geometry(p->problem, s);
    const auto sc = scales_for(o->default_scales, o->phi_A, o->phi_B, o->phi_X, g);
    const perturb::TrialSummary t =
        perturb::run_trials(p->problem, s, sc, perturb::TrialConfig{o->trials, o->eps, o->seed, o->slack});
    *out = llscond_trial_summary{t.trials,   t.max_ratio,  t.mean_ratio,
                                 t.eps_used, t.slack,      t.violations,
                                 t.failures, t.first_order_regime ? 1 : 0};
  });
}

llscond_status llscond_worst_case(const llscond_problem* p, double eps, const double* direction,
                                  double* dA, double* achieved_ratio) {
  return guarded([&] {
    require(p, "problem");
    require(achieved_ratio, "output");
    const lls::LlsSolution s = lls::solve(p->problem);
    std::optional<linalg::DenseVector> dir;
    if (direction) {
      dir = linalg::DenseVector(std::vector<double>(direction, direction + p->problem.cols()));
    }
    const perturb::WorstCase w = perturb::worst_case_perturbation(p->problem, s, eps, dir);
    if (dA) std::ranges::copy(w.dA.vec(), dA);
    *achieved_ratio = w.achieved_ratio;
  });
}

llscond_status llscond_finite_difference_chi_b(const llscond_problem* p,
                                               const llscond_perturb_options* o,
                                               size_t random_probes, double* out) {
  return guarded([&] {
    require(p, "problem");
    require(o, "options");
    require(out, "out");
    const lls::LlsSolution s = lls::solve(p->problem);
    const lls::Geometry g = lls::geometry(p->problem, s);
    const auto sc = scales_for(o->default_scales, o->phi_A, o->phi_B, o->phi_X, g);
    *out = perturb::finite_difference_chi_b(p->problem, sc, o->eps, random_probes, o->seed);
  });
}

void llscond_example_spec_init(llscond_example_spec* s) {
  if (!s) return;
  const example::ExampleSpec d;
  *s = llscond_example_spec{d.alpha, d.beta, d.phi, d.epsilon};
}

llscond_status llscond_example_spec_parse(const char* text, llscond_example_spec* s) {
  return guarded([&] {
    require(text, "text");
    require(s, "spec");
    const example::ExampleSpec base = example::parse_example_spec(text, to_spec(s));
    *s = llscond_example_spec{base.alpha, base.beta, base.phi, base.epsilon};
  });
}

llscond_status llscond_example_problem(const llscond_example_spec* s, llscond_problem** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    const example::ExampleSpec spec = to_spec(s);
    *out = new llscond_problem{
        lls::build_problem(example::example_matrix(spec), example::example_rhs(spec))};
  });
}

llscond_status llscond_example_info_get(const llscond_example_spec* s, llscond_example_info* out) {
  return guarded([&] {
    require(out, "out");
    const example::ExampleSpec spec = to_spec(s);
    const example::Example ex = example::paper_example(spec);
    const example::ClosedForms& f = ex.expected;
    llscond_example_info info{};
    info.kappa = f.kappa;
    info.nu = f.nu;
    info.tan_theta = f.tan_theta;
    info.sec_theta = f.sec_theta;
    info.x[0] = f.x[0];
    info.x[1] = f.x[1];
    info.bjorck_upper = f.bjorck_upper;
    info.malyshev_lower = f.malyshev_lower;
    info.chi_b = f.chi_b;
    info.predicted_relative_change = f.predicted_relative_change;
    info.perturbed_x2 = f.perturbed_x2;
    const lls::LlsSolution sol = lls::solve(ex.problem);
    const linalg::DenseVector dx = perturb::perturbed_solve(
        ex.problem, ex.perturbation, linalg::DenseVector(ex.problem.rows()));
    info.observed_relative_change = linalg::norm2(dx) / linalg::norm2(sol.x);
    info.warning_count = spec.warnings().size();
    *out = info;
  });
}

const char* llscond_example_warning(const llscond_example_spec* s, size_t i) {
  if (!s) return nullptr;
  const auto w = to_spec(s).warnings();
  return i < w.size() ? w[i].data() : nullptr;
}

}  // extern "C"
