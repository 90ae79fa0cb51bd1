// Copyright 2026 The tricount Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TRICOUNT_CLI_HPP_
#define TRICOUNT_CLI_HPP_

#include <ostream>
#include <span>
#include <string>

namespace tricount::cli {

// Runs one subcommand (exact, sample, sparsify, stream, rp, bench, convert).
// `args` excludes the program name. The JSON report goes to `out`;
// diagnostics and usage text go to `err`. Returns the process exit status.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

// Environment variable consulted when --seed is absent.
inline constexpr const char* kSeedEnv = "TRICOUNT_SEED";

}  // namespace tricount::cli

#endif  // TRICOUNT_CLI_HPP_
