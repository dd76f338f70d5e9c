// Copyright 2026 The cqedchain Authors
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

#ifndef CQED_SEQUENCES_H
#define CQED_SEQUENCES_H

#include <string>
#include <string_view>

#include "cqed/program.h"

namespace cqed {

/// Source atom "As" plus chain atoms "A1".."An". Throws std::invalid_argument
/// for n < 3.
std::string chain_atom_name(int k);

/// GHZ chain: the source loads one photon into C1 + C2, atoms 1..n-2 each
/// run R1(pi/2, g-i), a 2pi C1 rotation and R2(pi/2, g-i), atom n-1 maps C1
/// and atom n maps C2. Every chain atom is measured at the end.
PulseProgram ghz_program(int n);

/// W chain with rotation angles 2 acos(1/sqrt(n)) on the source and
/// 2 acos(sqrt((n-k-1)/(n-k))) on chain atom k = 1..n-2.
PulseProgram w_program(int n);

/// Free parameters phi and T. Signal columns I+ (A1 in g) and I- (A1 in i):
/// expectation of (+1 for A2 in i, -1 for g) times (+1 for Ap in g, -1 for e).
PulseProgram ghz_detection_program();

/// The default rotation angle of A1 in the W detection program, which gives
/// equal-modulus branches before postselection.
inline constexpr std::string_view kDefaultWDetectionTb = "2*acos(sqrt(2/3))";

/// Free parameters T1 and T2; A1's rotation angle is the parameter tb with
/// default `tb`. Signal column: probability that Ap ends in e, postselected
/// on A1 = A2 = g.
PulseProgram w_detection_program(std::string_view tb = kDefaultWDetectionTb);

/// Three-atom GHZ preparation, A1 detected, the cavity mapped onto A2 (C1)
/// and A3 (C2), then transversal e-g analysis with phase 0 on A2 and $phi on
/// A3. Columns I+ (A1 in i) and I- (A1 in g) hold the Bell signal.
PulseProgram bell_pair_map_program();

/// Cavity Bell state from the A1 detection, delay $T, then the probe atom Ap
/// (C1 pi, C2 pi/2). Columns P+ (A1 in i) and P- (A1 in g) hold P(Ap in e).
PulseProgram bell_probe_program();

/// Builds a program by protocol name: ghz, w, detect-ghz, detect-w,
/// bell-pair, bell-probe. `n` is used by ghz and w only.
PulseProgram canned_program(std::string_view protocol, int n = 4);

}  // namespace cqed

#endif
