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

#ifndef CQED_TOOLS_CLI_H
#define CQED_TOOLS_CLI_H

#include <iosfwd>

namespace cqed::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

/// Entry point of the cqed tool with injectable streams.
///
///   build <protocol> [--n N] [-o FILE]
///   run <file> [--set k=v]... [--seed S] [--config k=v,...] [--target ghz|w] [--chain A1,...]
///   sweep <file> --sweep name=start:stop:steps [--sweep ...] [--set k=v]...
///         [--mode exact|sample:K] [--seed S] [--config k=v,...] [-o FILE]
int main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace cqed::cli

#endif
