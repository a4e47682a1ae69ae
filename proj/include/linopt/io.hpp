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

// JSON interchange: matrix files, optical element lists and a deterministic
// writer that prints every float with 17 significant digits.
//
// Matrix file schema:
//   {"rows": R, "cols": C, "data": [[re, im], ...],            // row-major
//    "metadata": {"m": m, "n": n, "basis_order": "descending-lex"}}   // optional

#ifndef LINOPT_IO_HPP
#define LINOPT_IO_HPP

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "linopt/decompose.hpp"
#include "linopt/errors.hpp"
#include "linopt/matrix.hpp"

namespace linopt::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kBasisOrder = "descending-lex";

/// Malformed or unreadable input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

struct MatrixFile {
  ComplexMatrix data;
  std::optional<int> m;
  std::optional<int> n;
  std::optional<std::string> basis_order;
};

inline std::string format_double(double v) {
  if (!std::isfinite(v)) throw Error("cannot serialize non-finite value");
  if (v == 0.0) return std::signbit(v) ? "-0.0" : "0.0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  std::string s(buf);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

namespace detail {

inline void write_string(std::ostringstream& os, const std::string& s) {
  os << Json(s).dump();
}

inline void write(std::ostringstream& os, const Json& j, int indent, int depth) {
  const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{" << nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) os << "," << nl;
        first = false;
        os << pad;
        write_string(os, it.key());
        os << (indent > 0 ? ": " : ":");
        write(os, it.value(), indent, depth + 1);
      }
      os << nl << close_pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line so [re, im] pairs read naturally.
      bool flat = true;
      for (const auto& e : j) flat = flat && !e.is_structured();
      if (flat || indent == 0) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << (indent > 0 ? ", " : ",");
          write(os, j[i], indent, depth + 1);
        }
        os << "]";
        return;
      }
      os << "[" << nl;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << "," << nl;
        os << pad;
        write(os, j[i], indent, depth + 1);
      }
      os << nl << close_pad << "]";
      return;
    }
    case Json::value_t::number_float:
      os << format_double(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

}  // namespace detail

/// Serializes with stable key order (insertion order) and 17-digit floats.
inline std::string dump(const Json& j, int indent = 2) {
  std::ostringstream os;
  detail::write(os, j, indent, 0);
  if (indent > 0) os << "\n";
  return os.str();
}

// Adding 0.0 folds -0.0 into 0.0.
inline Json complex_to_json(Complex z) { return Json::array({z.real() + 0.0, z.imag() + 0.0}); }

inline Json matrix_to_json(const ComplexMatrix& a, std::optional<int> m = std::nullopt,
                           std::optional<int> n = std::nullopt) {
  Json j;
  j["rows"] = a.rows();
  j["cols"] = a.cols();
  Json data = Json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c) data.push_back(complex_to_json(a(r, c)));
  j["data"] = std::move(data);
  if (m || n) {
    Json meta;
    if (m) meta["m"] = *m;
    if (n) meta["n"] = *n;
    meta["basis_order"] = kBasisOrder;
    j["metadata"] = std::move(meta);
  }
  return j;
}

inline Json real_matrix_to_json(const RealMatrix& a) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline double number_at(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string(what) + " must be finite");
  return v;
}

inline MatrixFile matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix file must be a JSON object");
  for (const char* key : {"rows", "cols", "data"})
    if (!j.contains(key)) throw ParseError(std::string("matrix file is missing \"") + key + "\"");
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer())
    throw ParseError("\"rows\" and \"cols\" must be integers");
  const auto rows = j["rows"].get<long long>();
  const auto cols = j["cols"].get<long long>();
  if (rows < 1 || cols < 1) throw ParseError("\"rows\" and \"cols\" must be positive");
  const Json& data = j["data"];
  if (!data.is_array() || static_cast<long long>(data.size()) != rows * cols) {
    throw ParseError("\"data\" must be an array of rows*cols = " + std::to_string(rows * cols) +
                     " entries");
  }
  MatrixFile out;
  out.data.resize(rows, cols);
  for (long long i = 0; i < rows * cols; ++i) {
    const Json& e = data[static_cast<std::size_t>(i)];
    if (!e.is_array() || e.size() != 2) {
      throw ParseError("entry " + std::to_string(i) + " must be a [re, im] pair");
    }
    out.data(i / cols, i % cols) = Complex{number_at(e[0], "real part"), number_at(e[1], "imaginary part")};
  }
  if (j.contains("metadata")) {
    const Json& meta = j["metadata"];
    if (!meta.is_object()) throw ParseError("\"metadata\" must be an object");
    if (meta.contains("m")) {
      if (!meta["m"].is_number_integer()) throw ParseError("metadata \"m\" must be an integer");
      out.m = meta["m"].get<int>();
    }
    if (meta.contains("n")) {
      if (!meta["n"].is_number_integer()) throw ParseError("metadata \"n\" must be an integer");
      out.n = meta["n"].get<int>();
    }
    if (meta.contains("basis_order")) {
      if (!meta["basis_order"].is_string()) throw ParseError("metadata \"basis_order\" must be a string");
      out.basis_order = meta["basis_order"].get<std::string>();
      if (*out.basis_order != kBasisOrder) {
        throw ParseError("unsupported basis_order \"" + *out.basis_order + "\"");
      }
    }
  }
  return out;
}

inline MatrixFile parse_matrix(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline MatrixFile read_matrix(const std::string& path) { return parse_matrix(read_text(path)); }

inline Json elements_to_json(const std::vector<OpticalElement>& elements, int m) {
  Json list = Json::array();
  for (const auto& e : elements) {
    Json item;
    if (const auto* bs = std::get_if<BeamSplitter>(&e)) {
      item["type"] = "beam_splitter";
      item["modes"] = Json::array({bs->mode_p, bs->mode_q});
      item["theta"] = bs->theta;
      item["phi"] = bs->phi;
    } else {
      const auto& ps = std::get<PhaseShifter>(e);
      item["type"] = "phase_shifter";
      item["mode"] = ps.mode;
      item["phi"] = ps.phi;
    }
    list.push_back(std::move(item));
  }
  Json j;
  j["modes"] = m;
  j["index_base"] = 0;
  j["order"] = "applied first to last";
  j["beam_splitter_block"] = "[[exp(i phi) cos(theta), -sin(theta)], [exp(i phi) sin(theta), cos(theta)]]";
  j["elements"] = std::move(list);
  return j;
}

inline std::vector<OpticalElement> elements_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw ParseError("element file must be an object with an \"elements\" array");
  std::vector<OpticalElement> out;
  for (const auto& item : j["elements"]) {
    if (!item.is_object() || !item.contains("type")) throw ParseError("element without \"type\"");
    const auto type = item["type"].get<std::string>();
    if (type == "beam_splitter") {
      const Json& modes = item.at("modes");
      if (!modes.is_array() || modes.size() != 2) throw ParseError("beam_splitter needs two modes");
      out.emplace_back(BeamSplitter{modes[0].get<int>(), modes[1].get<int>(),
                                    number_at(item.at("theta"), "theta"), number_at(item.at("phi"), "phi")});
    } else if (type == "phase_shifter") {
      out.emplace_back(PhaseShifter{item.at("mode").get<int>(), number_at(item.at("phi"), "phi")});
    } else {
      throw ParseError("unknown element type \"" + type + "\"");
    }
  }
  return out;
}

}  // namespace linopt::io

#endif  // LINOPT_IO_HPP
