// Copyright 2026 The eccb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ECCB_CLI_HPP_
#define ECCB_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "eccb/bounds.hpp"
#include "eccb/rational.hpp"

namespace eccb::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInputError = 2,
  kInapplicable = 3,
  kViolation = 4,
};

// Bound columns of the batch report, in order.
const std::vector<BoundId>& batch_bound_columns();

struct BatchReportRow {
  std::string graph_id;
  // "ok", or why the row carries no measurements.
  std::string status = "ok";
  std::uint64_t n = 0;
  std::uint32_t min_degree = 0;
  std::uint32_t max_degree = 0;
  std::optional<std::uint32_t> girth;
  Rational avec;
  // One entry per batch_bound_columns(); nullopt when not applicable.
  std::vector<std::optional<Rational>> values;
  std::vector<std::optional<bool>> satisfied;
  // nullopt when no certificate applies (min degree < 3, acyclic, ...).
  std::optional<bool> certificate_ok;
  std::optional<bool> maxdeg_certificate_ok;

  bool violation() const;
};

BatchReportRow evaluate_batch_row(std::string graph_id, const Graph& g);

void write_batch_csv(std::ostream& out, const std::vector<BatchReportRow>& rows);

// Entry point behind the eccb executable.  args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace eccb::cli

#endif  // ECCB_CLI_HPP_
