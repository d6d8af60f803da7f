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

#ifndef GCL_CAPS_HPP_
#define GCL_CAPS_HPP_

#include <cstddef>

namespace gcl {

// Size limits. Every engine entry point refuses (CapExceeded) instead of
// truncating when an input is larger than these.
struct Caps {
  // Largest n_F for which the 2^n_F general concepts are materialised.
  std::size_t max_blocks = 20;
  // Largest |M| for canonical forms (truth tables over 2^|M| minterms).
  std::size_t max_attributes = 20;
  // Largest |M| for irreducible class enumeration (3^|M| literal sets).
  std::size_t max_irreducible_attributes = 10;
  // Exhaustive M* sweep limits.
  std::size_t max_oracle_attributes = 4;
  std::size_t max_oracle_objects = 16;
};

// Hard ceilings imposed by the representations (63-bit block masks, 32-bit
// minterm ids). User overrides are clamped against these.
inline constexpr std::size_t kMaxBlocksLimit = 62;
inline constexpr std::size_t kMaxAttributesLimit = 30;

}  // namespace gcl

#endif  // GCL_CAPS_HPP_
