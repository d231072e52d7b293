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

#include "minorcast/model.hpp"

#include <algorithm>
#include <map>

namespace minorcast {

VarId Model::add_binary(const std::string& name) {
  if (name.empty()) throw ModelError("variable name must not be empty");
  if (by_name_.count(name))
    throw ModelError("duplicate variable name '" + name + "'");
  VarId id = static_cast<VarId>(names_.size());
  names_.push_back(name);
  by_name_.emplace(name, id);
  return id;
}

const std::string& Model::name(VarId v) const {
  if (v < 0 || v >= num_variables())
    throw ModelError("variable id " + std::to_string(v) + " out of range");
  return names_[static_cast<size_t>(v)];
}

std::optional<VarId> Model::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<std::int64_t, VarId>> Model::merge(
    std::vector<std::pair<std::int64_t, VarId>> terms) const {
  std::map<VarId, std::int64_t> by_var;
  for (const auto& [coeff, var] : terms) {
    if (var < 0 || var >= num_variables())
      throw ModelError("term references unknown variable id " +
                       std::to_string(var));
    by_var[var] += coeff;
  }
  std::vector<std::pair<std::int64_t, VarId>> merged;
  merged.reserve(by_var.size());
  for (const auto& [var, coeff] : by_var)
    if (coeff != 0) merged.push_back({coeff, var});
  return merged;
}

void Model::add_constraint(std::vector<std::pair<std::int64_t, VarId>> terms,
                           std::int64_t lower, std::int64_t upper,
                           std::string tag) {
  if (lower != kNegInf && upper != kPosInf && lower > upper)
    throw ModelError("constraint '" + tag + "' has lower > upper");
  if (lower == kNegInf && upper == kPosInf)
    throw ModelError("constraint '" + tag + "' has no finite bound");
  LinearConstraint c;
  c.terms = merge(std::move(terms));
  c.lower = lower;
  c.upper = upper;
  c.tag = std::move(tag);
  constraints_.push_back(std::move(c));
}

void Model::minimize(std::vector<std::pair<std::int64_t, VarId>> terms) {
  objective_ = merge(std::move(terms));
}

const std::vector<std::pair<std::int64_t, VarId>>& Model::objective() const {
  if (!objective_) throw ModelError("model has no objective");
  return *objective_;
}

void Model::set_warm_start(std::vector<std::uint8_t> assignment) {
  if (static_cast<int>(assignment.size()) != num_variables())
    throw ModelError("warm start size mismatch");
  warm_start_ = std::move(assignment);
}

std::int64_t Model::evaluate(
    const std::vector<std::pair<std::int64_t, VarId>>& terms,
    const std::vector<std::uint8_t>& assignment) const {
  std::int64_t total = 0;
  for (const auto& [coeff, var] : terms)
    if (assignment[static_cast<size_t>(var)]) total += coeff;
  return total;
}

bool Model::satisfies(const LinearConstraint& c,
                      const std::vector<std::uint8_t>& assignment) const {
  std::int64_t activity = evaluate(c.terms, assignment);
  if (c.lower != kNegInf && activity < c.lower) return false;
  if (c.upper != kPosInf && activity > c.upper) return false;
  return true;
}

std::int64_t Model::objective_value(
    const std::vector<std::uint8_t>& assignment) const {
  if (!objective_) return 0;
  return evaluate(*objective_, assignment);
}

}  // namespace minorcast
