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

#include "cqed/sequences.h"

#include <sstream>
#include <stdexcept>

namespace cqed {

std::string chain_atom_name(int k) { return k == 0 ? "As" : "A" + std::to_string(k); }

namespace {

void check_n(int n) {
    if (n < 3) throw std::invalid_argument("chain length must be at least 3, got " + std::to_string(n));
}

void declare_atoms(std::ostringstream &out, int n, bool probe = false) {
    out << "atom As init=e\n";
    for (int k = 1; k <= n; ++k) out << "atom " << chain_atom_name(k) << " init=g\n";
    if (probe) out << "atom Ap init=g\n";
}

void ghz_source(std::ostringstream &out) {
    out << "rabi As C1 angle=pi/2\n"
        << "rabi As C2 angle=pi\n";
}

void ghz_block(std::ostringstream &out, const std::string &atom) {
    out << "ramsey " << atom << " R1 transition=g-i angle=pi/2 phase=0\n"
        << "rabi " << atom << " C1 angle=2*pi\n"
        << "ramsey " << atom << " R2 transition=g-i angle=pi/2 phase=0\n";
}

// R1 and the 2pi rotation without R2: detecting A1 in g or i then leaves the
// cavity in one of the two photonic Bell states.
void collapse_block(std::ostringstream &out) {
    out << "ramsey A1 R1 transition=g-i angle=pi/2 phase=0\n"
        << "rabi A1 C1 angle=2*pi\n";
}

void probe(std::ostringstream &out) {
    out << "rabi Ap C1 angle=pi\n"
        << "rabi Ap C2 angle=pi/2\n"
        << "measure Ap\n";
}

}  // namespace

PulseProgram ghz_program(int n) {
    check_n(n);
    std::ostringstream out;
    out << "# GHZ chain, " << n << " atoms\n";
    declare_atoms(out, n);
    ghz_source(out);
    for (int k = 1; k <= n - 2; ++k) ghz_block(out, chain_atom_name(k));
    out << "rabi " << chain_atom_name(n - 1) << " C1 angle=pi\n";
    out << "rabi " << chain_atom_name(n) << " C2 angle=pi\n";
    for (int k = 1; k <= n; ++k) out << "measure " << chain_atom_name(k) << '\n';
    return parse(out.str());
}

PulseProgram w_program(int n) {
    check_n(n);
    std::ostringstream out;
    out << "# W chain, " << n << " atoms\n";
    declare_atoms(out, n);
    out << "rabi As C1 angle=2*acos(1/sqrt(" << n << "))\n"
        << "rabi As C2 angle=pi\n";
    for (int k = 1; k <= n - 2; ++k) {
        out << "rabi " << chain_atom_name(k) << " C1 angle=2*acos(sqrt(" << n - k - 1 << '/' << n - k << "))\n";
    }
    out << "rabi " << chain_atom_name(n - 1) << " C1 angle=pi\n";
    out << "rabi " << chain_atom_name(n) << " C2 angle=pi\n";
    for (int k = 1; k <= n; ++k) out << "measure " << chain_atom_name(k) << '\n';
    return parse(out.str());
}

PulseProgram ghz_detection_program() {
    std::ostringstream out;
    out << "param phi\n"
        << "param T\n";
    declare_atoms(out, 2, true);
    ghz_source(out);
    collapse_block(out);
    out << "measure A1\n";
    ghz_block(out, "A2");
    out << "ramsey A2 R2 transition=g-i angle=pi/2 phase=$phi\n"
        << "measure A2\n"
        << "delay $T\n";
    probe(out);
    out << "label A1 g=I+ i=I-\n"
        << "observe A2 i=1 g=-1\n"
        << "observe Ap g=1 e=-1\n";
    return parse(out.str());
}

PulseProgram w_detection_program(std::string_view tb) {
    std::ostringstream out;
    out << "param tb=" << tb << '\n'
        << "param T1\n"
        << "param T2\n";
    declare_atoms(out, 2, true);
    out << "rabi As C2 angle=2*acos(sqrt(3/4))\n"
        << "rabi As C1 angle=pi\n"
        << "delay $T1\n"
        << "rabi A1 C1 angle=$tb\n"
        << "rabi A2 C1 angle=pi/2\n"
        << "postselect A1 g\n"
        << "postselect A2 g\n"
        << "delay $T2\n";
    probe(out);
    out << "observe Ap e=1\n";
    return parse(out.str());
}

PulseProgram bell_pair_map_program() {
    std::ostringstream out;
    out << "param phi\n";
    declare_atoms(out, 3);
    ghz_source(out);
    collapse_block(out);
    out << "measure A1\n"
        << "rabi A2 C1 angle=pi\n"
        << "rabi A3 C2 angle=pi\n"
        << "ramsey A2 R2 transition=e-g angle=pi/2 phase=0\n"
        << "ramsey A3 R2 transition=e-g angle=pi/2 phase=$phi\n"
        << "measure A2\n"
        << "measure A3\n"
        << "label A1 i=I+ g=I-\n"
        << "observe A2 e=1 g=-1\n"
        << "observe A3 e=1 g=-1\n";
    return parse(out.str());
}

PulseProgram bell_probe_program() {
    std::ostringstream out;
    out << "param T\n";
    declare_atoms(out, 1, true);
    ghz_source(out);
    collapse_block(out);
    out << "measure A1\n"
        << "delay $T\n";
    probe(out);
    out << "label A1 i=P+ g=P-\n"
        << "observe Ap e=1\n";
    return parse(out.str());
}

PulseProgram canned_program(std::string_view protocol, int n) {
    if (protocol == "ghz") return ghz_program(n);
    if (protocol == "w") return w_program(n);
    if (protocol == "detect-ghz") return ghz_detection_program();
    if (protocol == "detect-w") return w_detection_program();
    if (protocol == "bell-pair") return bell_pair_map_program();
    if (protocol == "bell-probe") return bell_probe_program();
    throw std::invalid_argument("unknown protocol '" + std::string(protocol) + "'");
}

}  // namespace cqed
