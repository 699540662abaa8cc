// Copyright 2026 The detourkit Authors.
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

#ifndef DETOURKIT_CLI_H_
#define DETOURKIT_CLI_H_

#include <iosfwd>

namespace detourkit {

inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

// Entry point of the `detourkit` binary. Decision commands print a JSON
// report to `out` and return kExitYes or kExitNo; `gen` and `bench` return
// kExitYes on success. Every failure returns kExitError with a diagnostic on
// `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace detourkit

#endif  // DETOURKIT_CLI_H_
