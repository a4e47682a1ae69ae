// Copyright 2026 The linopt Authors
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

#include "linopt/io.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace linopt;
using namespace linopt::testing;

TEST(io, format_double_uses_17_significant_digits) {
  EXPECT_EQ(io::format_double(0.5), "0.5");
  EXPECT_EQ(io::format_double(1.0), "1.0");
  EXPECT_EQ(io::format_double(0.0), "0.0");
  EXPECT_EQ(io::format_double(1.0 / 3.0), "0.33333333333333331");
  EXPECT_EQ(io::format_double(1e-20), "9.9999999999999995e-21");
  EXPECT_THROW(io::format_double(std::numeric_limits<double>::quiet_NaN()), Error);
}

TEST(io, matrix_round_trip_is_bit_exact) {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = random_complex(1 + trial % 4, 1 + trial % 3, rng) * std::pow(10.0, trial - 10);
    const io::MatrixFile back = io::parse_matrix(io::dump(io::matrix_to_json(a, 2, 3)));
    EXPECT_EQ(back.data, a);
    EXPECT_EQ(back.m, 2);
    EXPECT_EQ(back.n, 3);
    EXPECT_EQ(back.basis_order, std::string(io::kBasisOrder));
  }
}

TEST(io, metadata_is_optional) {
  const auto f = io::parse_matrix(R"({"rows": 1, "cols": 2, "data": [[1, 0], [0.5, -2]]})");
  EXPECT_EQ(f.data(0, 1), Complex(0.5, -2.0));
  EXPECT_FALSE(f.m.has_value());
  EXPECT_FALSE(f.basis_order.has_value());
}

TEST(io, rejects_malformed_files) {
  EXPECT_THROW(io::parse_matrix("not json"), io::ParseError);
  EXPECT_THROW(io::parse_matrix(R"([1, 2])"), io::ParseError);
  EXPECT_THROW(io::parse_matrix(R"({"rows": 1, "cols": 1})"), io::ParseError);
  EXPECT_THROW(io::parse_matrix(R"({"rows": 1, "cols": 2, "data": [[1, 0]]})"), io::ParseError);
  EXPECT_THROW(io::parse_matrix(R"({"rows": 1, "cols": 1, "data": [[1, 0, 0]]})"), io::ParseError);
  EXPECT_THROW(io::parse_matrix(R"({"rows": 1, "cols": 1, "data": [["1", 0]]})"), io::ParseError);
  EXPECT_THROW(io::parse_matrix(R"({"rows": 0, "cols": 1, "data": []})"), io::ParseError);
  EXPECT_THROW(io::parse_matrix(R"({"rows": 1.5, "cols": 1, "data": [[1, 0]]})"), io::ParseError);
  EXPECT_THROW(io::parse_matrix(R"({"rows": 1, "cols": 1, "data": [[1, 0]],
                                    "metadata": {"basis_order": "ascending"}})"),
               io::ParseError);
  EXPECT_THROW(io::read_matrix("/nonexistent/path.json"), io::ParseError);
}

TEST(io, dump_is_deterministic_and_ordered) {
  io::Json j;
  j["zeta"] = 1;
  j["alpha"] = 0.1;
  j["nested"] = io::Json::array({io::Json::array({1.0, 2.0}), io::Json::object()});
  const std::string text = io::dump(j);
  EXPECT_EQ(text, io::dump(j));
  EXPECT_LT(text.find("zeta"), text.find("alpha"));
  EXPECT_NE(text.find("0.10000000000000001"), std::string::npos);
  EXPECT_EQ(io::Json::parse(text)["nested"][0][1].get<double>(), 2.0);
}

TEST(io, elements_round_trip) {
  const std::vector<OpticalElement> els = {BeamSplitter{0, 1, 0.25, -1.5}, PhaseShifter{1, 3.0},
                                           BeamSplitter{1, 2, 1.5, 0.0}};
  const auto back = io::elements_from_json(io::Json::parse(io::dump(io::elements_to_json(els, 3))));
  ASSERT_EQ(back.size(), els.size());
  for (std::size_t i = 0; i < els.size(); ++i) EXPECT_EQ(back[i], els[i]);
  EXPECT_THROW(io::elements_from_json(io::Json::parse(R"({"elements": [{"type": "mirror"}]})")), io::ParseError);
}
