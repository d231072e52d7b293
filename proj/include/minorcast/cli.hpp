// Copyright 2026 Minorcast Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MINORCAST_CLI_HPP_
#define MINORCAST_CLI_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "minorcast/graph.hpp"

namespace minorcast {

// Runs the command line tool in-process. `args` excludes the program name
// (e.g. {"gen", "chimera", "-L", "4", "-o", "x.graph"}). Exit code 0 on
// success, 1 on usage/file/internal errors, 2 when the instance is proven
// infeasible, 3 on hitting a time or node limit.
int run_cli(const std::vector<std::string>& args);

// Resolves a graph argument: a string containing ':' is a generator spec
// ("chimera:L=4,M=1,N=2", "pegasus:L=4,M=1,N=1,O=3",
// "er:nu=10,p=0.5,seed=7", "structured:zeta=1,p_inter=0.5,p_intra=0.5"),
// anything else a file path in edge-list format. Generator specs without
// an explicit seed use default_seed.
Graph resolve_graph(const std::string& arg, std::uint64_t default_seed);

}  // namespace minorcast

#endif  // MINORCAST_CLI_HPP_
