// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#include "example.hpp"

#include <charconv>
#include <cmath>
#include <numbers>

#include "error.hpp"

namespace llscond::example {

std::vector<std::string_view> ExampleSpec::warnings() const {
  std::vector<std::string_view> w;
  if (!(alpha > 0.0 && alpha < 1.0)) w.emplace_back("alpha should lie in (0, 1)");
  if (!(beta > 0.0)) w.emplace_back("beta should be positive");
  if (!(epsilon > 0.0)) {
    w.emplace_back("epsilon should be positive");
  } else if (!(epsilon <= 1e-3 * alpha)) {
    w.emplace_back("epsilon should be much smaller than alpha (epsilon <= 1e-3 alpha)");
  }
  return w;
}

DenseMatrix example_matrix(const ExampleSpec& s) {
  return DenseMatrix::from_rows({{1.0, 0.0}, {0.0, s.alpha}, {0.0, 0.0}});
}

DenseVector example_rhs(const ExampleSpec& s) {
  return DenseVector{s.beta * std::cos(s.phi), s.beta * std::sin(s.phi), 1.0};
}

DenseMatrix example_perturbation(const ExampleSpec& s) {
  DenseMatrix d(3, 2);
  d(2, 1) = s.epsilon;
  return d;
}

ClosedForms closed_forms(const ExampleSpec& s) {
  const double c = std::cos(s.phi);
  const double sn = std::sin(s.phi);
  const double radical = std::hypot(s.alpha * c, sn);
  ClosedForms f;
  f.kappa = 1.0 / s.alpha;
  f.nu = 1.0 / radical;
  f.tan_theta = 1.0 / s.beta;
  f.sec_theta = std::sqrt(1.0 + 1.0 / (s.beta * s.beta));
  f.x = DenseVector{s.beta * c, s.beta * sn / s.alpha};
  f.r = DenseVector{0.0, 0.0, 1.0};
  f.bjorck_upper = f.kappa * (f.nu * f.tan_theta + 1.0);
  f.malyshev_lower = f.kappa * std::hypot(f.nu * f.tan_theta, 1.0);
  f.chi_b = f.nu * f.sec_theta;
  f.perturbed_x2 =
      (s.epsilon + s.alpha * s.beta * sn) / (s.alpha * s.alpha + s.epsilon * s.epsilon);
  f.predicted_relative_change = s.epsilon / (s.alpha * s.beta * radical);
  return f;
}

Example paper_example(const ExampleSpec& spec) {
  return Example{lls::build_problem(example_matrix(spec), example_rhs(spec)),
                 example_perturbation(spec), closed_forms(spec)};
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view s, std::string_view what) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::InvalidArgument,
                "cannot parse " + std::string(what) + " '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string_view t = trim(text);
  const std::size_t pi = t.find("pi");
  if (pi == std::string_view::npos) return parse_number(t, "angle");

  std::string_view coeff = trim(t.substr(0, pi));
  std::string_view rest = trim(t.substr(pi + 2));
  if (!coeff.empty() && coeff.back() == '*') coeff = trim(coeff.substr(0, coeff.size() - 1));
  double k = 1.0;
  if (coeff == "-") {
    k = -1.0;
  } else if (!coeff.empty() && coeff != "+") {
    k = parse_number(coeff, "pi multiplier");
  }
  double d = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') {
      throw Error(ErrorCode::InvalidArgument, "angle must look like [k*]pi[/d], got '" +
                                                  std::string(t) + "'");
    }
    d = parse_number(rest.substr(1), "pi divisor");
    if (d == 0.0) throw Error(ErrorCode::InvalidArgument, "pi divisor must be nonzero");
  }
  return k * std::numbers::pi / d;
}

ExampleSpec parse_example_spec(std::string_view text, ExampleSpec spec) {
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = trim(text.substr(start, end - start));
    if (!item.empty()) {
      const std::size_t eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw Error(ErrorCode::InvalidArgument, "expected key=value, got '" + std::string(item) + "'");
      }
      const std::string_view key = trim(item.substr(0, eq));
      const std::string_view val = item.substr(eq + 1);
      if (key == "alpha") {
        spec.alpha = parse_number(val, "alpha");
      } else if (key == "beta") {
        spec.beta = parse_number(val, "beta");
      } else if (key == "phi") {
        spec.phi = parse_angle(val);
      } else if (key == "eps" || key == "epsilon") {
        spec.epsilon = parse_number(val, "epsilon");
      } else {
        throw Error(ErrorCode::InvalidArgument, "unknown example key '" + std::string(key) + "'");
      }
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return spec;
}

}  // namespace llscond::example
