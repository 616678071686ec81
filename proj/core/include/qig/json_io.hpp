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

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qig/channel.hpp"

namespace qig {

// Matrix wire format, row-major:
//   { "dim": n, "re": [[...], ...], "im": [[...], ...] }
std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);
Matrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Matrix& m);

// Channel wire format:
//   { "in_dim": n, "out_dim": k, "kraus": [ { "re": ..., "im": ... }, ... ] }
// Kraus blocks are k x n; a "dim" key inside a block is accepted only when
// the block is square and consistent with it.
std::string channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const std::string& text);
KrausChannel read_channel_file(const std::string& path);

// One campaign trial's outcome, flattened for report emission. Optional
// fields serialize as JSON null / empty CSV cells.
struct VerdictRecord {
  std::string theorem;  // which check produced this line
  std::optional<std::string> f;
  std::optional<std::string> g;
  std::optional<double> c;
  std::optional<double> d;
  Index dim = 0;
  int m = 1;
  std::optional<std::uint64_t> seed;
  InequalityVerdict verdict;
  bool condition_violated = false;  // hypothesis failed; no claim was checked
};

// One JSON object per line, fixed key order: theorem, f, g, c, d, dim, m,
// seed, lhs, rhs, margin, holds, equality_case; condition_violated and notes
// appear only when set. No trailing newline.
std::string verdict_json_line(const VerdictRecord& record);

// CSV with the same column order; condition_violated and notes are always
// present as the last two columns.
std::string verdict_csv_header();
std::string verdict_csv_line(const VerdictRecord& record);

}  // namespace qig
