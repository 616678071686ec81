// Copyright 2026 The qig Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qig/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qig/errors.hpp"

namespace qig {

namespace {

using Json = nlohmann::ordered_json;

Json parse_text(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error("failed writing '" + path + "'");
}

// Validates an array-of-arrays block of the given shape.
void read_part(const Json& node, const char* key, Index rows, Index cols,
               bool required, RealMatrix& out) {
  out = RealMatrix::Zero(rows, cols);
  if (!node.contains(key)) {
    if (required) throw ParseError(std::string("matrix is missing \"") + key + "\"");
    return;
  }
  const Json& block = node.at(key);
  if (!block.is_array() || static_cast<Index>(block.size()) != rows) {
    throw ParseError(std::string("\"") + key + "\" must be an array of " +
                     std::to_string(rows) + " rows");
  }
  for (Index r = 0; r < rows; ++r) {
    const Json& row = block.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw ParseError(std::string("\"") + key + "\" row " + std::to_string(r) +
                       " must hold " + std::to_string(cols) + " numbers");
    }
    for (Index c = 0; c < cols; ++c) {
      const Json& cell = row.at(static_cast<std::size_t>(c));
      if (!cell.is_number()) {
        throw ParseError(std::string("\"") + key + "\" entry (" + std::to_string(r) +
                         "," + std::to_string(c) + ") is not a number");
      }
      out(r, c) = cell.get<double>();
    }
  }
}

Matrix matrix_from_node(const Json& node, Index rows, Index cols) {
  RealMatrix re;
  RealMatrix im;
  read_part(node, "re", rows, cols, true, re);
  read_part(node, "im", rows, cols, true, im);
  Matrix m(rows, cols);
  m.real() = re;
  m.imag() = im;
  return m;
}

Json matrix_part(const Matrix& m, bool imaginary) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      row.push_back(imaginary ? m(r, c).imag() : m(r, c).real());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::string matrix_to_json(const Matrix& m) {
  if (m.rows() != m.cols()) throw BadDims("matrix wire format requires a square matrix");
  Json node;
  node["dim"] = m.rows();
  node["re"] = matrix_part(m, false);
  node["im"] = matrix_part(m, true);
  return node.dump();
}

Matrix matrix_from_json(const std::string& text) {
  Json node = parse_text(text, "matrix JSON");
  if (!node.is_object() || !node.contains("dim") ||
      !node.at("dim").is_number_integer()) {
    throw ParseError("matrix JSON needs an integer \"dim\"");
  }
  Index dim = node.at("dim").get<Index>();
  if (dim < 1) throw ParseError("matrix \"dim\" must be positive");
  return matrix_from_node(node, dim, dim);
}

Matrix read_matrix_file(const std::string& path) {
  try {
    return matrix_from_json(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_matrix_file(const std::string& path, const Matrix& m) {
  write_text_file(path, matrix_to_json(m) + "\n");
}

std::string channel_to_json(const KrausChannel& ch) {
  Json node;
  node["in_dim"] = ch.in_dim();
  node["out_dim"] = ch.out_dim();
  Json kraus = Json::array();
  for (const Matrix& k : ch.kraus()) {
    Json block;
    if (k.rows() == k.cols()) block["dim"] = k.rows();
    block["re"] = matrix_part(k, false);
    block["im"] = matrix_part(k, true);
    kraus.push_back(std::move(block));
  }
  node["kraus"] = std::move(kraus);
  return node.dump();
}

KrausChannel channel_from_json(const std::string& text) {
  Json node = parse_text(text, "channel JSON");
  if (!node.is_object() || !node.contains("in_dim") || !node.contains("out_dim") ||
      !node.at("in_dim").is_number_integer() || !node.at("out_dim").is_number_integer()) {
    throw ParseError("channel JSON needs integer \"in_dim\" and \"out_dim\"");
  }
  Index in_dim = node.at("in_dim").get<Index>();
  Index out_dim = node.at("out_dim").get<Index>();
  if (!node.contains("kraus") || !node.at("kraus").is_array() ||
      node.at("kraus").empty()) {
    throw ParseError("channel JSON needs a non-empty \"kraus\" array");
  }
  std::vector<Matrix> kraus;
  kraus.reserve(node.at("kraus").size());
  for (const Json& block : node.at("kraus")) {
    if (block.contains("dim")) {
      if (in_dim != out_dim || !block.at("dim").is_number_integer() ||
          block.at("dim").get<Index>() != in_dim) {
        throw ParseError("kraus \"dim\" is only valid for square channels and must match");
      }
    }
    kraus.push_back(matrix_from_node(block, out_dim, in_dim));
  }
  return KrausChannel(in_dim, out_dim, std::move(kraus));
}

KrausChannel read_channel_file(const std::string& path) {
  try {
    return channel_from_json(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace {

Json optional_string(const std::optional<std::string>& v) {
  return v.has_value() ? Json(*v) : Json(nullptr);
}

Json optional_number(const std::optional<double>& v) {
  return v.has_value() ? Json(*v) : Json(nullptr);
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += "\"\"";
    else quoted += c;
  }
  quoted += "\"";
  return quoted;
}

}  // namespace

std::string verdict_json_line(const VerdictRecord& record) {
  Json line;
  line["theorem"] = record.theorem;
  line["f"] = optional_string(record.f);
  line["g"] = optional_string(record.g);
  line["c"] = optional_number(record.c);
  line["d"] = optional_number(record.d);
  line["dim"] = record.dim;
  line["m"] = record.m;
  line["seed"] = record.seed.has_value() ? Json(*record.seed) : Json(nullptr);
  line["lhs"] = record.verdict.lhs;
  line["rhs"] = record.verdict.rhs;
  line["margin"] = record.verdict.margin;
  line["holds"] = record.verdict.holds;
  line["equality_case"] = record.verdict.equality_case;
  if (record.condition_violated) line["condition_violated"] = true;
  if (!record.verdict.notes.empty()) line["notes"] = record.verdict.notes;
  return line.dump();
}

std::string verdict_csv_header() {
  return "theorem,f,g,c,d,dim,m,seed,lhs,rhs,margin,holds,equality_case,"
         "condition_violated,notes";
}

std::string verdict_csv_line(const VerdictRecord& record) {
  std::ostringstream out;
  out << record.theorem << ',';
  out << (record.f ? *record.f : "") << ',';
  out << (record.g ? *record.g : "") << ',';
  out << (record.c ? csv_number(*record.c) : "") << ',';
  out << (record.d ? csv_number(*record.d) : "") << ',';
  out << record.dim << ',' << record.m << ',';
  if (record.seed) out << *record.seed;
  out << ',';
  out << csv_number(record.verdict.lhs) << ',' << csv_number(record.verdict.rhs) << ','
      << csv_number(record.verdict.margin) << ',';
  out << (record.verdict.holds ? "true" : "false") << ',';
  out << (record.verdict.equality_case ? "true" : "false") << ',';
  out << (record.condition_violated ? "true" : "false") << ',';
  out << csv_quote(record.verdict.notes);
  return out.str();
}

}  // namespace qig
