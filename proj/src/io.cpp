// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#include "io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "error.hpp"

namespace llscond::io {

namespace {

[[noreturn]] void parse_error(std::string_view source, std::size_t line, std::size_t col,
                              const std::string& msg) {
  throw Error(ErrorCode::Parse, std::string(source) + ":" + std::to_string(line) + ":" +
                                    std::to_string(col) + ": " + msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_matrix_market(std::string_view text) {
  return lower(text.substr(0, 14)) == "%%matrixmarket";
}

// Whitespace tokens with 1-based positions.
struct Token {
  std::string_view text;
  std::size_t line;
  std::size_t col;
};

struct Line {
  std::string_view text;
  std::size_t number;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  std::size_t n = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view l = text.substr(start, end - start);
    if (!l.empty() && l.back() == '\r') l.remove_suffix(1);
    lines.push_back({l, n++});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::vector<Token> tokenize(const Line& l) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < l.text.size()) {
    while (i < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[i]))) ++i;
    const std::size_t b = i;
    while (i < l.text.size() && !std::isspace(static_cast<unsigned char>(l.text[i]))) ++i;
    if (i > b) out.push_back({l.text.substr(b, i - b), l.number, b + 1});
  }
  return out;
}

double number_token(const Token& t, std::string_view source) {
  const auto v = to_double(t.text);
  if (!v) parse_error(source, t.line, t.col, "expected a number, found '" + std::string(t.text) + "'");
  if (!std::isfinite(*v)) parse_error(source, t.line, t.col, "non-finite value");
  return *v;
}

std::size_t count_token(const Token& t, std::string_view source, bool allow_zero = false) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size() || (!allow_zero && v == 0)) {
    parse_error(source, t.line, t.col, "expected a positive integer, found '" + std::string(t.text) + "'");
  }
  return v;
}

DenseMatrix parse_matrix_market(std::string_view text, std::string_view source) {
  const auto lines = split_lines(text);
  const auto header = tokenize(lines[0]);
  if (header.size() < 5 || lower(header[1].text) != "matrix") {
    parse_error(source, 1, 1, "malformed MatrixMarket banner");
  }
  const std::string layout = lower(header[2].text);
  const std::string field = lower(header[3].text);
  const std::string symmetry = lower(header[4].text);
  if (layout != "array" && layout != "coordinate") {
    parse_error(source, 1, header[2].col, "unsupported MatrixMarket format '" + layout + "'");
  }
  if (field != "real" && field != "integer" && field != "double") {
    parse_error(source, 1, header[3].col, "unsupported MatrixMarket field '" + field + "'");
  }
  if (symmetry != "general") {
    parse_error(source, 1, header[4].col, "unsupported MatrixMarket symmetry '" + symmetry + "'");
  }

  std::vector<Token> tokens;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const std::string_view t = trim(lines[k].text);
    if (t.empty() || t.front() == '%') continue;
    for (auto& tok : tokenize(lines[k])) tokens.push_back(tok);
  }
  const std::size_t size_fields = layout == "array" ? 2 : 3;
  if (tokens.size() < size_fields) {
    parse_error(source, lines.back().number, 1, "missing size line");
  }
  const std::size_t rows = count_token(tokens[0], source);
  const std::size_t cols = count_token(tokens[1], source);
  std::vector<double> data(rows * cols, 0.0);

  if (layout == "array") {
    const std::size_t want = rows * cols;
    if (tokens.size() - 2 != want) {
      const Token& at = tokens.back();
      parse_error(source, at.line, at.col,
                  "expected " + std::to_string(want) + " entries, found " +
                      std::to_string(tokens.size() - 2));
    }
    for (std::size_t k = 0; k < want; ++k) data[k] = number_token(tokens[2 + k], source);
  } else {
    const std::size_t nnz = count_token(tokens[2], source, true);
    if (tokens.size() - 3 != 3 * nnz) {
      const Token& at = tokens.back();
      parse_error(source, at.line, at.col,
                  "expected " + std::to_string(nnz) + " coordinate triples");
    }
    for (std::size_t k = 0; k < nnz; ++k) {
      const Token& ti = tokens[3 + 3 * k];
      const Token& tj = tokens[4 + 3 * k];
      const std::size_t i = count_token(ti, source);
      const std::size_t j = count_token(tj, source);
      if (i > rows) parse_error(source, ti.line, ti.col, "row index out of range");
      if (j > cols) parse_error(source, tj.line, tj.col, "column index out of range");
      data[(j - 1) * rows + (i - 1)] += number_token(tokens[5 + 3 * k], source);
    }
  }
  return DenseMatrix(rows, cols, std::move(data));
}

struct Field {
  std::string text;
  std::size_t line;
  std::size_t col;
};

// RFC-4180 records. Quoted fields may contain commas, doubled quotes and
// line breaks. Blank lines are skipped.
std::vector<std::vector<Field>> parse_csv(std::string_view text, std::string_view source) {
  std::vector<std::vector<Field>> records;
  std::vector<Field> record;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  bool record_has_content = false;

  auto end_record = [&] {
    if (record_has_content) records.push_back(std::move(record));
    record.clear();
    record_has_content = false;
  };

  while (i <= text.size()) {
    Field f{{}, line, col};
    if (i < text.size() && text[i] == '"') {
      ++i;
      ++col;
      bool closed = false;
      while (i < text.size()) {
        const char c = text[i];
        if (c == '"') {
          if (i + 1 < text.size() && text[i + 1] == '"') {
            f.text.push_back('"');
            i += 2;
            col += 2;
            continue;
          }
          ++i;
          ++col;
          closed = true;
          break;
        }
        if (c == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
        f.text.push_back(c);
        ++i;
      }
      if (!closed) parse_error(source, f.line, f.col, "unterminated quoted field");
      if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
        parse_error(source, line, col, "unexpected character after closing quote");
      }
    } else {
      while (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
        f.text.push_back(text[i]);
        ++i;
        ++col;
      }
    }
    if (!trim(f.text).empty() || (i < text.size() && text[i] == ',')) record_has_content = true;
    record.push_back(std::move(f));

    if (i >= text.size()) {
      end_record();
      break;
    }
    if (text[i] == ',') {
      ++i;
      ++col;
      record_has_content = true;
      continue;
    }
    if (text[i] == '\r') ++i;
    if (i < text.size() && text[i] == '\n') ++i;
    ++line;
    col = 1;
    end_record();
  }
  return records;
}

bool all_numeric(const std::vector<Field>& rec) {
  return std::all_of(rec.begin(), rec.end(), [](const Field& f) { return to_double(f.text).has_value(); });
}

struct NumericTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> col_major;
};

NumericTable csv_table(std::string_view text, std::string_view source) {
  auto records = parse_csv(text, source);
  if (records.empty()) parse_error(source, 1, 1, "empty input");
  std::size_t first = 0;
  if (!all_numeric(records[0])) first = 1;  // header
  if (first >= records.size()) parse_error(source, 1, 1, "no data rows after the header");

  NumericTable t;
  t.rows = records.size() - first;
  t.cols = records[first].size();
  if (first == 1 && records[0].size() != t.cols) {
    parse_error(source, records[0][0].line, 1,
                "header has " + std::to_string(records[0].size()) + " fields, data rows have " +
                    std::to_string(t.cols));
  }
  t.col_major.assign(t.rows * t.cols, 0.0);
  for (std::size_t i = 0; i < t.rows; ++i) {
    const auto& rec = records[first + i];
    if (rec.size() != t.cols) {
      parse_error(source, rec[0].line, 1,
                  "expected " + std::to_string(t.cols) + " fields, found " +
                      std::to_string(rec.size()));
    }
    for (std::size_t j = 0; j < t.cols; ++j) {
      const auto v = to_double(rec[j].text);
      if (!v) {
        parse_error(source, rec[j].line, rec[j].col,
                    "expected a number, found '" + rec[j].text + "'");
      }
      if (!std::isfinite(*v)) parse_error(source, rec[j].line, rec[j].col, "non-finite value");
      t.col_major[j * t.rows + i] = *v;
    }
  }
  return t;
}

}  // namespace

DenseMatrix parse_matrix(std::string_view text, std::string_view source) {
  if (is_matrix_market(text)) return parse_matrix_market(text, source);
  NumericTable t = csv_table(text, source);
  return DenseMatrix(t.rows, t.cols, std::move(t.col_major));
}

DenseVector parse_vector(std::string_view text, std::string_view source) {
  if (is_matrix_market(text)) {
    DenseMatrix m = parse_matrix_market(text, source);
    if (m.cols() != 1) {
      parse_error(source, 1, 1, "right-hand side must have exactly one column");
    }
    return m.column_vector(0);
  }
  NumericTable t = csv_table(text, source);
  if (t.cols != 1) parse_error(source, 1, 1, "right-hand side must have exactly one column");
  return DenseVector(std::move(t.col_major));
}

DenseMatrix read_matrix(const std::string& path) { return parse_matrix(read_file(path), path); }

DenseVector read_vector(const std::string& path) { return parse_vector(read_file(path), path); }

lls::LlsProblem ingest(const std::string& matrix_path, const std::string& rhs_path) {
  DenseMatrix a = read_matrix(matrix_path);
  DenseVector b = read_vector(rhs_path);
  return lls::build_problem(std::move(a), std::move(b));
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_matrix_market(std::ostream& out, const DenseMatrix& m) {
  out << "%%MatrixMarket matrix array real general\n";
  out << m.rows() << ' ' << m.cols() << '\n';
  for (double v : m.vec()) out << format_double(v) << '\n';
}

void write_vector(std::ostream& out, const DenseVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) out << format_double(v[i]) << '\n';
}

}  // namespace llscond::io
