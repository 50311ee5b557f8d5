// Copyright 2026 The llscond Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "error.hpp"
#include "io.hpp"
#include "support.hpp"

namespace llscond {
namespace {

using linalg::DenseMatrix;
using linalg::DenseVector;

std::string message_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("llscond_io_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path;
}

TEST(MatrixMarket, Array) {
  const auto m = io::parse_matrix(
      "%%MatrixMarket matrix array real general\n% comment\n3 2\n1\n0\n0\n0\n0.1\n0\n");
  EXPECT_EQ(m.rows(), 3u);
  EXPECT_EQ(m.cols(), 2u);
  EXPECT_EQ(m(1, 1), 0.1);
  EXPECT_EQ(m(0, 0), 1.0);
}

TEST(MatrixMarket, CoordinateAccumulates) {
  const auto m = io::parse_matrix(
      "%%MatrixMarket matrix coordinate real general\n2 2 3\n1 1 2.5\n2 2 -1\n1 1 0.5\n");
  EXPECT_EQ(m(0, 0), 3.0);
  EXPECT_EQ(m(1, 1), -1.0);
  EXPECT_EQ(m(0, 1), 0.0);
}

TEST(MatrixMarket, BannerIsCaseInsensitiveAndIntegerFieldAllowed) {
  const auto m = io::parse_matrix("%%matrixmarket MATRIX Array Integer General\n1 1\n7\n");
  EXPECT_EQ(m(0, 0), 7.0);
}

TEST(MatrixMarket, Errors) {
  EXPECT_EQ(code_of([] { io::parse_matrix("%%MatrixMarket matrix array complex general\n1 1\n1\n"); }),
            ErrorCode::Parse);
  EXPECT_EQ(code_of([] { io::parse_matrix("%%MatrixMarket matrix array real symmetric\n1 1\n1\n"); }),
            ErrorCode::Parse);
  const std::string msg = message_of(
      [] { io::parse_matrix("%%MatrixMarket matrix array real general\n2 1\n1\nabc\n", "m.mtx"); });
  EXPECT_EQ(msg.rfind("m.mtx:4:1:", 0), 0u) << msg;
  EXPECT_NE(message_of([] {
              io::parse_matrix("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n");
            }).find("expected 4 entries"),
            std::string::npos);
  EXPECT_NE(message_of([] {
              io::parse_matrix("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n");
            }).find("row index out of range"),
            std::string::npos);
  EXPECT_EQ(code_of([] { io::parse_matrix("%%MatrixMarket matrix array real general\n1 1\nnan\n"); }),
            ErrorCode::Parse);
}

TEST(Csv, HeaderedMatrix) {
  const auto m = io::parse_matrix("c1,c2\n1,2\n3,4\n5,6\n");
  EXPECT_EQ(m.rows(), 3u);
  EXPECT_EQ(m(2, 1), 6.0);
}

TEST(Csv, HeaderlessAndCrlf) {
  const auto m = io::parse_matrix("1,2\r\n3,4\r\n");
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m(1, 0), 3.0);
}

TEST(Csv, QuotedFields) {
  const auto m = io::parse_matrix("\"col, one\",\"say \"\"hi\"\"\"\n\"1.5\",2\n");
  EXPECT_EQ(m.rows(), 1u);
  EXPECT_EQ(m(0, 0), 1.5);
}

TEST(Csv, RaggedRowReportsLine) {
  const std::string msg = message_of([] { io::parse_matrix("a,b\n1,2\n3\n", "x.csv"); });
  EXPECT_EQ(msg.rfind("x.csv:3:", 0), 0u) << msg;
}

TEST(Csv, BadNumberReportsColumn) {
  const std::string msg = message_of([] { io::parse_matrix("1,2\n3,zz\n", "x.csv"); });
  EXPECT_EQ(msg.rfind("x.csv:2:3:", 0), 0u) << msg;
}

TEST(Vector, PlainTextCsvAndMatrixMarket) {
  EXPECT_EQ(io::parse_vector("1\n2\n3\n").size(), 3u);
  EXPECT_EQ(io::parse_vector("b\n1\n2\n").size(), 2u);
  const auto v = io::parse_vector("%%MatrixMarket matrix array real general\n2 1\n4\n5\n");
  EXPECT_EQ(v[1], 5.0);
  EXPECT_EQ(code_of([] { io::parse_vector("1,2\n3,4\n"); }), ErrorCode::Parse);
}

TEST(Ingest, ExampleFiles) {
  const auto a = temp_file("a.mtx",
                           "%%MatrixMarket matrix array real general\n3 2\n1\n0\n0\n0\n0.1\n0\n");
  const auto b = temp_file("b.txt", "0.9510565162951535\n0.3090169943749474\n1\n");
  const auto p = io::ingest(a.string(), b.string());
  EXPECT_EQ(p.rows(), 3u);
  EXPECT_NEAR(p.sigma_min(), 0.1, 1e-16);
}

TEST(Ingest, DimensionMismatch) {
  const auto a = temp_file("m.csv", "x,y\n1,0\n0,1\n1,1\n");
  const auto b = temp_file("short.csv", "1\n2\n");
  EXPECT_EQ(code_of([&] { io::ingest(a.string(), b.string()); }), ErrorCode::DimensionMismatch);
}

TEST(Ingest, MissingFile) {
  EXPECT_EQ(code_of([] { io::read_matrix("/nonexistent/llscond.mtx"); }), ErrorCode::Io);
}

TEST(Ingest, RankDeficient) {
  const auto a = temp_file("rd.csv", "1,2\n2,4\n3,6\n");
  const auto b = temp_file("rd_b.txt", "1\n2\n3\n");
  EXPECT_EQ(code_of([&] { io::ingest(a.string(), b.string()); }), ErrorCode::RankDeficient);
}

TEST(RoundTrip, BitIdentical) {
  std::mt19937_64 gen(51);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rp = testing::random_problem(gen, 9, 4, 1e8);
    std::ostringstream ma, vb;
    io::write_matrix_market(ma, rp.a);
    io::write_vector(vb, rp.b);
    const auto a2 = io::parse_matrix(ma.str());
    const auto b2 = io::parse_vector(vb.str());
    ASSERT_EQ(a2.rows(), rp.a.rows());
    EXPECT_TRUE(std::equal(a2.vec().begin(), a2.vec().end(), rp.a.vec().begin()));
    EXPECT_EQ(b2.values(), rp.b.values());
  }
  EXPECT_EQ(io::format_double(0.1), "0.10000000000000001");
}

}  // namespace
}  // namespace llscond
