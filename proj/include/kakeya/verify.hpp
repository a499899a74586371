// Copyright 2026 The Kakeya Lab Authors
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

#ifndef KAKEYA_VERIFY_HPP
#define KAKEYA_VERIFY_HPP

/// @file verify.hpp
/// @brief Verification suites behind `kakeya_lab verify`.
///
/// Check ids start with the number of the acceptance criterion they serve
/// ("c03.law.seed.k2"). A check that a budget cap prevents from running is
/// reported as skipped only where the criterion allows it; otherwise the
/// CapExceeded message is recorded and the check fails.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kakeya/caps.hpp"
#include "kakeya/json_io.hpp"

namespace kakeya::verify {

enum class Status { kPass, kFail, kSkipped };

std::string_view to_string(Status s);
Status parse_status(std::string_view s);

/// Expected/actual payload: nothing, a boolean, or an exact rational.
using Value = std::variant<std::monostate, bool, Rational>;

struct CheckResult {
  std::string id;
  Status status = Status::kPass;
  Value expected;
  Value actual;
  std::string note;
  double elapsed_s = 0;  ///< wall time; only serialized on request
};

struct VerificationReport {
  std::string suite;
  std::vector<CheckResult> checks;

  bool ok() const;
  std::size_t count(Status s) const;
};

struct Options {
  int k_max = 4;  ///< Perron levels for the area law
  int j_max = 1;  ///< Kakeya nesting up to G_{j_max + 1} ⊆ G_{j_max}
  Caps caps = Caps::from_env();
};

/// Suite names accepted by run_suite.
std::vector<std::string> suite_names();

/// Runs "all" or one named suite; throws DomainError for unknown names.
VerificationReport run_suite(std::string_view suite, const Options& opts);

/// Timings are left out unless asked for, keeping reports byte-stable.
io::Json to_json(const VerificationReport& r, bool with_timings = false);
VerificationReport report_from(const io::Json& j);

/// Deterministic sample regions inside the unit square: unions of one to
/// three convex polygons with dyadic vertices.
std::vector<Region> sample_regions(std::size_t count, unsigned seed);

}  // namespace kakeya::verify

#endif  // KAKEYA_VERIFY_HPP
