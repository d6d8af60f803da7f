// Copyright 2026 The gcl Authors
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

// Brute-force ground truth and the executable law suite.

#ifndef GCL_ORACLE_HPP_
#define GCL_ORACLE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gcl/canonical_form.hpp"
#include "gcl/caps.hpp"
#include "gcl/context.hpp"
#include "gcl/gcl_lattice.hpp"

namespace gcl {

enum class LawStatus { kPass, kFail, kSkipped };

const char* to_string(LawStatus s);

struct LawResult {
  std::string id;
  std::string description;
  LawStatus status = LawStatus::kPass;
  std::uint64_t instances = 0;
  /// First failing instance, or the reason the law was skipped.
  std::string detail;
};

/// One row of the exhaustive sweep: every generalised attribute with extent
/// X, summarised by its count and Boolean-order bounds.
struct ExtentClassRow {
  ObjectSet extent;
  std::uint64_t size = 0;
  CanonicalForm min;
  CanonicalForm max;
};

struct OracleReport {
  std::string context_digest;
  std::uint64_t total_functions = 0;  // 0 when no sweep was run
  std::vector<ExtentClassRow> classes;
  std::vector<LawResult> laws;

  bool passed() const;
  const LawResult* find(std::string_view id) const;
  /// Appends `other`'s classes and laws. Digests must match.
  OracleReport& merge(const OracleReport& other);
};

/// 64-bit FNV-1a of the context's cxt serialisation, as 16 hex digits.
std::string context_digest(const FormalContext& ctx);

/// Evaluates all 2^(2^|M|) truth tables on the context, groups them by
/// extent and checks the grouping against the lattice builder.
/// Throws CapExceeded beyond caps.max_oracle_attributes/objects.
OracleReport enumerate_mstar(const FormalContext& ctx, const Caps& caps = {});

/// Runs every registered law. Throws CapExceeded if the lattice itself is
/// over the caps; laws needing stricter caps report kSkipped.
OracleReport verify_laws(const FormalContext& ctx, const Caps& caps = {});
/// Same, against a supplied (possibly corrupted) lattice.
OracleReport verify_laws(const GclLattice& lattice, const Caps& caps = {});

/// verify_laws plus enumerate_mstar when the context is within the oracle
/// caps.
OracleReport verify_all(const FormalContext& ctx, const Caps& caps = {});

struct LawInfo {
  std::string_view id;
  std::string_view description;
};
/// Every law verify_laws and enumerate_mstar can report, in run order.
std::vector<LawInfo> law_catalog();

/// Reproducible random context. Generator: 64-bit LCG
///   state = state * 6364136223846793005 + 1442695040888963407 (mod 2^64)
/// seeded with `seed`, advanced once per cell in row-major order; the cell
/// is set iff (state >> 11) * 2^-53 < density. Objects are named g1.., and
/// attributes m1... Throws InvalidArgument unless 0 <= density <= 1.
FormalContext random_context(std::uint64_t seed, std::size_t n_objects,
                             std::size_t n_attributes, double density);

}  // namespace gcl

#endif  // GCL_ORACLE_HPP_
