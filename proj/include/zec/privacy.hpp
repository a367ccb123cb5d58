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

#include <cstddef>
#include <span>

#include "zec/channel.hpp"

namespace zec {

/// ||(I (x) v)|Phi> - (v^T (x) I)|Phi>||; zero for every square v.
double transpose_trick_check(const ComplexMatrix& v);

/// One run of the private protocol: message on A1, A2 entangled with Alice's
/// reference A3.
struct ProtocolTranscript {
  std::size_t d = 0;
  std::size_t message = 0;
  /// sum_j w_j rho_B^(j): Bob's output once the flag is read and discarded.
  ComplexMatrix bob_output;
  /// Trace distance between bob_output and |message><message|.
  double bob_error = 0.0;
  /// Environment state on E per flag, A3 traced out.
  CQState eve_branches;
  std::size_t decoded = 0;
};

/// Honest run: A2 A3 prepared in |Phi>.
ProtocolTranscript run_protocol(const NdChannel& c, std::size_t message);
/// Run with an arbitrary A2 A3 input (dims (d, d)); used for control experiments.
ProtocolTranscript run_protocol(const NdChannel& c, std::size_t message,
                                const PureState& a2a3_input);

/// Max over message pairs and flags of the trace distance between the
/// environment branches. Requires exactly one transcript per message.
double verify_secrecy(std::span<const ProtocolTranscript> transcripts);

}  // namespace zec
