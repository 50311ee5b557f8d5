// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli_support.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace llscond::cli {

namespace {

[[noreturn]] void invalid(std::string msg) {
  throw CliError{LLSCOND_E_INVALID_ARGUMENT, std::move(msg)};
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

double positive_number(std::string_view s, std::string_view what) {
  s = trim(s);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v) ||
      !(v > 0.0)) {
    invalid(std::string(what) + ": expected a positive number, got '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    out.push_back(s.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string format_g(double v, int digits) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::vector<double> take(std::size_t n, auto&& fill) {
  std::vector<double> v(n);
  check(fill(v.data()));
  return v;
}

void dump_json_into(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        dump_json_into(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_json_into(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += format_g(j.get<double>(), 17);
      break;
    default:
      out += j.dump();
  }
}

std::string scalar_text(const Json& j, int digits) {
  if (j.is_number_float()) return format_g(j.get<double>(), digits);
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void dump_text_into(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    out << pad << it.key() << ':';
    if (v.is_object()) {
      out << '\n';
      dump_text_into(v, indent + 2, out);
    } else if (is_flat_array(v)) {
      out << " [";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i], 6);
      out << "]\n";
    } else if (v.is_array()) {
      out << '\n';
      for (const auto& e : v) {
        out << pad << "  -\n";
        dump_text_into(e, indent + 4, out);
      }
    } else {
      out << ' ' << scalar_text(v, 6) << '\n';
    }
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

void dump_csv_into(const Json& j, const std::string& prefix, std::ostringstream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      dump_csv_into(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      dump_csv_into(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
  } else {
    out << csv_field(prefix) << ',' << csv_field(scalar_text(j, 17)) << "\r\n";
  }
}

}  // namespace

Format parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  invalid("--format must be text, json or csv");
}

Scales parse_scales(std::string_view s) {
  s = trim(s);
  if (s == "default") return Scales{};
  const auto parts = split(s, ',');
  if (parts.size() != 3) invalid("--scales expects 'default' or three values A,B,X");
  return Scales{false, positive_number(parts[0], "--scales"), positive_number(parts[1], "--scales"),
                positive_number(parts[2], "--scales")};
}

std::pair<double, double> parse_pair(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s == "default") return {1.0, 1.0};
  const auto parts = split(s, ',');
  if (parts.size() != 2) invalid(std::string(what) + " expects 'default' or two values a,b");
  return {positive_number(parts[0], what), positive_number(parts[1], what)};
}

int exit_code_for(llscond_status s) {
  switch (s) {
    case LLSCOND_OK:
      return kExitOk;
    case LLSCOND_E_RANK_DEFICIENT:
    case LLSCOND_E_FACTORIZATION_FAILURE:
    case LLSCOND_E_INTERNAL:
      return kExitNumerical;
    default:
      return kExitValidation;
  }
}

void check(llscond_status s) {
  if (s != LLSCOND_OK) throw CliError{s, llscond_last_error()};
}

Json problem_json(const llscond_problem* p, std::string_view source) {
  Json j;
  j["source"] = source;
  j["rows"] = llscond_problem_rows(p);
  j["cols"] = llscond_problem_cols(p);
  return j;
}

Json catalog_json(const llscond_report* r) {
  llscond_summary s{};
  check(llscond_report_summary(r, &s));
  Json entries = Json::array();
  for (std::size_t i = 0; i < llscond_report_catalog_size(r); ++i) {
    llscond_catalog_entry e{};
    check(llscond_report_catalog_entry(r, i, &e));
    entries.push_back(
        Json{{"name", e.name}, {"value", e.value}, {"norm_regime", e.norm_regime}, {"status", e.status}});
  }
  Json j;
  j["eps"] = s.catalog_eps;
  j["overestimate_ratio"] = s.overestimate_ratio;
  j["entries"] = std::move(entries);
  return j;
}

Json analysis_json(const llscond_problem* p, const llscond_report* r, bool include_catalog) {
  llscond_summary s{};
  check(llscond_report_summary(r, &s));
  const std::size_t m = llscond_problem_rows(p);
  const std::size_t n = llscond_problem_cols(p);

  Json j;
  j["geometry"] = Json{{"kappa", s.kappa},         {"nu", s.nu},
                       {"tan_theta", s.tan_theta}, {"sec_theta", s.sec_theta},
                       {"sigma_min", s.sigma_min}, {"sigma_max", s.sigma_max},
                       {"norm_x", s.norm_x},       {"norm_r", s.norm_r},
                       {"norm_b", s.norm_b}};
  j["solution"] = Json{
      {"x", take(n, [&](double* d) { return llscond_report_solution(r, d, nullptr); })},
      {"r", take(m, [&](double* d) { return llscond_report_solution(r, nullptr, d); })}};
  j["scales"] = Json{{"phi_A", s.phi_A}, {"phi_B", s.phi_B}, {"phi_X", s.phi_X}};

  Json c;
  c["chi_b"] = s.chi_b;
  c["chi_A_lower"] = s.chi_A_lower;
  c["chi_A_upper"] = s.chi_A_upper;
  if (s.has_exact) {
    c["chi_A_exact"] = Json{
        {"value", s.chi_A_exact},
        {"certified", s.exact_certified != 0},
        {"restart", s.exact_restart},
        {"iterations", s.exact_iterations},
        {"maximizer", take(n, [&](double* d) { return llscond_report_maximizer(r, d); })}};
  }
  j["conditioning"] = std::move(c);
  if (include_catalog) j["catalog"] = catalog_json(r);
  return j;
}

Json trial_json(const llscond_trial_summary& t) {
  return Json{{"trials", t.trials},
              {"max_ratio", t.max_ratio},
              {"mean_ratio", t.mean_ratio},
              {"eps_used", t.eps_used},
              {"slack", t.slack},
              {"violations", t.violations},
              {"failures", t.failures},
              {"first_order_regime", t.first_order_regime != 0}};
}

Json example_json(const llscond_example_spec& spec, const llscond_example_info& info) {
  Json w = Json::array();
  for (std::size_t i = 0; i < info.warning_count; ++i) {
    if (const char* msg = llscond_example_warning(&spec, i)) w.push_back(msg);
  }
  Json j;
  j["parameters"] = Json{
      {"alpha", spec.alpha}, {"beta", spec.beta}, {"phi", spec.phi}, {"epsilon", spec.epsilon}};
  j["warnings"] = std::move(w);
  j["closed_form"] = Json{{"kappa", info.kappa},
                         {"nu", info.nu},
                         {"tan_theta", info.tan_theta},
                         {"sec_theta", info.sec_theta},
                         {"x", {info.x[0], info.x[1]}},
                         {"chi_A_upper", info.bjorck_upper},
                         {"chi_A_lower", info.malyshev_lower},
                         {"chi_b", info.chi_b},
                         {"perturbed_x2", info.perturbed_x2},
                         {"predicted_relative_change", info.predicted_relative_change}};
  j["observed_relative_change"] = info.observed_relative_change;
  return j;
}

Json error_json(llscond_status s, std::string_view message) {
  return Json{{"error", Json{{"code", llscond_status_name(s)},
                             {"message", message},
                             {"exit_code", exit_code_for(s)}}}};
}

std::string dump_json(const Json& doc) {
  std::string out;
  dump_json_into(doc, out);
  out += '\n';
  return out;
}

std::string dump_text(const Json& doc) {
  std::ostringstream out;
  dump_text_into(doc, 0, out);
  return out.str();
}

std::string dump_csv(const Json& doc) {
  std::ostringstream out;
  out << "key,value\r\n";
  dump_csv_into(doc, "", out);
  return out.str();
}

std::string render(const Json& doc, Format f) {
  switch (f) {
    case Format::Json: return dump_json(doc);
    case Format::Csv: return dump_csv(doc);
    case Format::Text: break;
  }
  return dump_text(doc);
}

}  // namespace llscond::cli
