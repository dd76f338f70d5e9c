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


#ifndef CQED_TESTS_RANDOM_PROGRAMS_H
#define CQED_TESTS_RANDOM_PROGRAMS_H

#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace cqed::testing {

/// Random angle-like expression text; parameters are drawn from `params`.
inline std::string random_expression(std::mt19937_64 &rng, const std::vector<std::string> &params, int depth = 0) {
    std::uniform_int_distribution<int> pick(0, depth > 2 ? 2 : 7);
    switch (pick(rng)) {
        case 0:
            return std::to_string(std::uniform_int_distribution<int>(0, 9)(rng));
        case 1:
            return "pi";
        case 2:
            if (params.empty()) return "0.5";
            return "$" + params[std::uniform_int_distribution<std::size_t>(0, params.size() - 1)(rng)];
        case 3:
            return random_expression(rng, params, depth + 1) + "+" + random_expression(rng, params, depth + 1);
        case 4:
            return random_expression(rng, params, depth + 1) + "*" + random_expression(rng, params, depth + 1);
        case 5:
            return "(" + random_expression(rng, params, depth + 1) + ")/2";
        case 6:
            return "sqrt(" + random_expression(rng, params, depth + 1) + "*" + random_expression(rng, params, depth + 1) +
                   ")";
        default:
            return "acos(1/" + std::to_string(std::uniform_int_distribution<int>(1, 5)(rng)) + ")";
    }
}

/// Random well-formed program source. Every expression evaluates to a
/// nonnegative value when parameters are bound to nonnegative numbers.
inline std::string random_program(std::mt19937_64 &rng, bool with_measurements = true) {
    std::ostringstream out;
    std::uniform_int_distribution<int> n_atoms(1, 3), n_ops(0, 12), coin(0, 1), level(0, 2);
    const char *levels = "egi";
    std::vector<std::string> params;
    const int np = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int k = 0; k < np; ++k) {
        params.push_back("p" + std::to_string(k));
        out << "param p" << k;
        if (coin(rng)) out << '=' << random_expression(rng, {});
        out << '\n';
    }
    const int na = n_atoms(rng);
    std::vector<std::string> atoms;
    for (int k = 0; k < na; ++k) {
        atoms.push_back("X" + std::to_string(k));
        out << "atom X" << k << " init=" << levels[level(rng)] << '\n';
    }
    const int ops = n_ops(rng);
    for (int k = 0; k < ops; ++k) {
        const auto &atom = atoms[std::uniform_int_distribution<std::size_t>(0, atoms.size() - 1)(rng)];
        switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
            case 0:
                out << "rabi " << atom << (coin(rng) ? " C1" : " C2") << " angle=" << random_expression(rng, params)
                    << '\n';
                break;
            case 1:
                out << "ramsey " << atom << (coin(rng) ? " R1" : " R2") << " transition=" << (coin(rng) ? "e-g" : "g-i")
                    << " angle=" << random_expression(rng, params) << " phase=-" << random_expression(rng, params)
                    << '\n';
                break;
            default:
                out << "delay " << random_expression(rng, params) << "*1e-6\n";
        }
    }
    if (with_measurements) {
        for (const auto &a : atoms) {
            if (coin(rng)) {
                out << "postselect " << a << ' ' << levels[level(rng)] << '\n';
            } else {
                out << "measure " << a << '\n';
            }
        }
        out << "observe " << atoms[0] << " e=1 g=-0.5\n";
    }
    return out.str();
}

}  // namespace cqed::testing

#endif
