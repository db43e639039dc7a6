// Copyright 2026 The OntoMerge Authors
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

// Command-line front end. The logic lives in the library so that tests can
// drive it without spawning processes.

#ifndef ONTOMERGE_CLI_H_
#define ONTOMERGE_CLI_H_

#include <iosfwd>

namespace ontomerge {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;      // bad flags, I/O or parse error
inline constexpr int kExitInvariant = 2;       // merge invariant violated
inline constexpr int kExitNonConvergence = 3;  // refinement did not settle

// Runs one command line (argv[0] is the program name).
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace ontomerge

#endif  // ONTOMERGE_CLI_H_
