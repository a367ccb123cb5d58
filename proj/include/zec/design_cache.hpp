// Copyright 2026 The zecap Authors
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


#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "zec/two_design.hpp"

namespace zec {

/// Raised when a cache file is truncated, has a bad header, or fails its
/// checksum or the 2-design re-verification.
class CacheError : public Error {
 public:
  using Error::Error;
};

// Binary layout, all integers and floats little-endian:
//   header:  "ZECDSGN\0" | u32 version | u32 d | u64 member count | u64 checksum
//   records: u32 d | u64 index | 2 d^2 f64 (re, im interleaved, row-major)
// The checksum is FNV-1a 64 over every record byte.
inline constexpr std::uint32_t kDesignCacheVersion = 1;

void write_design_cache(const UnitaryFamily& f, std::ostream& out);
/// Parses and re-verifies a cached family.
UnitaryFamily read_design_cache(std::istream& in);

std::filesystem::path design_cache_path(const std::filesystem::path& dir, std::size_t d);

/// Loads the d-qudit Clifford family from `cache_dir`, enumerating and writing
/// it on a miss. With no cache_dir the family is enumerated in memory.
UnitaryFamily load_or_enumerate_clifford(std::size_t d,
                                         const std::optional<std::filesystem::path>& cache_dir);

}  // namespace zec
