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

#include <iosfwd>

#include "zec/channel.hpp"

namespace zec {

// Text format, one record per A1^n basis tuple:
//   zec-block-state 1 <d> <n>
//   <i_1> ... <i_n> <re_0> <im_0> ... <re_{d^n-1}> <im_{d^n-1}>
// Floats are written with 17 significant digits so reading back is exact.
// Records may appear in any order; missing tuples are zero blocks.
void write_block_state(const BlockStateVector& psi, std::ostream& out);
BlockStateVector read_block_state(std::istream& in);

}  // namespace zec
