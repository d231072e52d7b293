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

#include "minorcast/lp_export.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace minorcast {

namespace {

void append_terms(std::string& out, const Model& model,
                  const std::vector<std::pair<std::int64_t, VarId>>& terms) {
  bool first = true;
  for (const auto& [coeff, var] : terms) {
    std::int64_t mag = coeff;
    if (first) {
      if (coeff < 0) {
        out += "- ";
        mag = -coeff;
      }
      first = false;
    } else {
      out += coeff < 0 ? " - " : " + ";
      mag = coeff < 0 ? -coeff : coeff;
    }
    if (mag != 1) {
      out += std::to_string(mag);
      out += ' ';
    }
    out += model.name(var);
  }
}

}  // namespace

std::string export_lp(const Model& model) {
  std::string out;
  out += "Minimize\n obj:";
  if (model.has_objective() && !model.objective().empty()) {
    out += ' ';
    append_terms(out, model, model.objective());
  }
  out += "\nSubject To\n";

  std::map<std::string, int> tag_counts;
  for (const auto& c : model.constraints()) {
    const int index = tag_counts[c.tag]++;
    const std::string base = c.tag + "_" + std::to_string(index);
    const bool has_lo = c.lower != kNegInf;
    const bool has_hi = c.upper != kPosInf;
    if (has_lo && has_hi && c.lower == c.upper) {
      out += ' ' + base + ": ";
      append_terms(out, model, c.terms);
      out += " = " + std::to_string(c.lower) + '\n';
      continue;
    }
    if (has_lo && has_hi) {
      out += ' ' + base + "_lo: ";
      append_terms(out, model, c.terms);
      out += " >= " + std::to_string(c.lower) + '\n';
      out += ' ' + base + "_hi: ";
      append_terms(out, model, c.terms);
      out += " <= " + std::to_string(c.upper) + '\n';
      continue;
    }
    out += ' ' + base + ": ";
    append_terms(out, model, c.terms);
    if (has_lo)
      out += " >= " + std::to_string(c.lower);
    else
      out += " <= " + std::to_string(c.upper);
    out += '\n';
  }

  out += "Binary\n";
  for (VarId v = 0; v < model.num_variables(); ++v)
    out += ' ' + model.name(v) + '\n';
  out += "End\n";
  return out;
}

void export_lp_file(const Model& model, const std::string& path) {
  std::ofstream stream(path, std::ios::binary);
  if (!stream) throw ModelError("cannot open '" + path + "' for writing");
  const std::string text = export_lp(model);
  stream.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!stream) throw ModelError("failed writing '" + path + "'");
}

}  // namespace minorcast
