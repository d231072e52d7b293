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

#ifndef MINORCAST_LP_EXPORT_HPP_
#define MINORCAST_LP_EXPORT_HPP_

#include <string>

#include "minorcast/model.hpp"

namespace minorcast {

// Renders the model in LP text format. Output is deterministic: the same
// model always produces the same bytes. Constraints are named
// "{tag}_{index}" where the index counts rows sharing the tag, in model
// order. Ranged rows are split into a "_lo" and a "_hi" line; equalities
// use "=". All variables are listed in the Binary section.
std::string export_lp(const Model& model);

// Writes export_lp(model) to a file; throws ModelError on I/O failure.
void export_lp_file(const Model& model, const std::string& path);

}  // namespace minorcast

#endif  // MINORCAST_LP_EXPORT_HPP_
