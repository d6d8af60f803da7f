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

// Byte-stable JSON, DOT and text renderings of lattices and reports.

#ifndef GCL_EXPORT_HPP_
#define GCL_EXPORT_HPP_

#include <string>
#include <string_view>

#include "gcl/caps.hpp"
#include "gcl/classical.hpp"
#include "gcl/gcl_lattice.hpp"
#include "gcl/irreducibles.hpp"
#include "gcl/oracle.hpp"

namespace gcl {

enum class ExportFormat { kJson, kDot, kText };

/// "json", "dot" or "text". Throws InvalidArgument otherwise.
ExportFormat parse_export_format(std::string_view name);

/// Smallest of the DNF/CNF readings of `cf` and, when `index` is given and X
/// is a general extent, simplified_intent(X, mode). Ties go to the earlier
/// candidate in that order.
std::string pretty_form(const CanonicalForm& cf, const FormalContext& ctx,
                        const IrreducibleIndex* index = nullptr,
                        const ObjectSet* x = nullptr,
                        IntentMode mode = IntentMode::kGrspDnf);

/// Pretty forms use the irreducible index when |M| is within
/// caps.max_irreducible_attributes.
std::string export_lattice(const GclLattice& lat, ExportFormat format,
                           const Caps& caps = {});
std::string export_lattice(const ClassicalLattice& lat, const FormalContext& ctx,
                           ExportFormat format);

/// JSON or text; DOT is rejected with InvalidArgument.
std::string export_report(const OracleReport& report, const FormalContext& ctx,
                          ExportFormat format);

/// One row per GCL node: its extent and whether it is an FCL, RSL and
/// general extent.
std::string compare_table(const GclLattice& gcl, const ClassicalLattice& fcl,
                          const ClassicalLattice& rsl);

}  // namespace gcl

#endif  // GCL_EXPORT_HPP_
