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

#include "minorcast/decomposition.hpp"

#include <chrono>
#include <set>
#include <string>

#include "minorcast/verify.hpp"

namespace minorcast {

namespace {

std::string index_pair(int a, int b) {
  return std::to_string(a) + "_" + std::to_string(b);
}

}  // namespace

BuiltModel build_master(const Graph& target, const Graph& source, int k,
                        Objective objective) {
  (void)objective;  // the master always carries the size objective
  const int n = target.num_vertices();
  const int m = source.num_vertices();
  if (n == 0 || m == 0)
    throw ModelError("embedding model needs nonempty source and target");
  if (k < 1) throw ModelError("fiber size bound must be at least 1");

  BuiltModel built;
  Model& model = built.model;
  VarCatalog& cat = built.catalog;
  cat.n = n;
  cat.m = m;
  cat.num_target_edges = target.num_edges();
  cat.num_source_edges = source.num_edges();

  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i)
      cat.alpha.push_back(model.add_binary("a" + index_pair(i, j)));
  for (int ey = 0; ey < cat.num_source_edges; ++ey) {
    for (int ex = 0; ex < cat.num_target_edges; ++ex) {
      cat.z_par.push_back(model.add_binary("zp" + index_pair(ex, ey)));
      cat.z_perp.push_back(model.add_binary("zq" + index_pair(ex, ey)));
    }
  }
  for (int j = 0; j < m; ++j)
    cat.w.push_back(model.add_binary("w" + std::to_string(j)));

  std::vector<std::pair<std::int64_t, VarId>> terms;

  for (int i = 0; i < n; ++i) {
    terms.clear();
    for (int j = 0; j < m; ++j) terms.push_back({1, cat.alpha_id(i, j)});
    model.add_constraint(terms, kNegInf, 1, "disjoint");
  }

  for (int j = 0; j < m; ++j) {
    terms.clear();
    for (int i = 0; i < n; ++i) terms.push_back({1, cat.alpha_id(i, j)});
    model.add_constraint(terms, 1, k, "fiber_size");
  }

  for (int ey = 0; ey < cat.num_source_edges; ++ey) {
    const auto [y1, y2] = source.edges()[static_cast<size_t>(ey)];
    terms.clear();
    for (int ex = 0; ex < cat.num_target_edges; ++ex) {
      terms.push_back({1, cat.z_par_id(ex, ey)});
      terms.push_back({1, cat.z_perp_id(ex, ey)});
    }
    model.add_constraint(terms, 1, 1, "edge_assign");
    for (int ex = 0; ex < cat.num_target_edges; ++ex) {
      const auto [x1, x2] = target.edges()[static_cast<size_t>(ex)];
      const VarId zp = cat.z_par_id(ex, ey);
      const VarId zq = cat.z_perp_id(ex, ey);
      model.add_constraint({{1, zp}, {-1, cat.alpha_id(x1, y1)}}, kNegInf, 0,
                           "link_ub");
      model.add_constraint({{1, zp}, {-1, cat.alpha_id(x2, y2)}}, kNegInf, 0,
                           "link_ub");
      model.add_constraint({{1, zq}, {-1, cat.alpha_id(x1, y2)}}, kNegInf, 0,
                           "link_ub");
      model.add_constraint({{1, zq}, {-1, cat.alpha_id(x2, y1)}}, kNegInf, 0,
                           "link_ub");
      model.add_constraint(
          {{2, zp}, {-1, cat.alpha_id(x1, y1)}, {-1, cat.alpha_id(x2, y2)}},
          kNegInf, 0, "link_agg");
      model.add_constraint(
          {{2, zq}, {-1, cat.alpha_id(x1, y2)}, {-1, cat.alpha_id(x2, y1)}},
          kNegInf, 0, "link_agg");
    }
  }

  for (int j = 0; j < m; ++j) {
    terms.clear();
    for (int i = 0; i < n; ++i) terms.push_back({1, cat.alpha_id(i, j)});
    terms.push_back({-static_cast<std::int64_t>(n), cat.w_id(j)});
    model.add_constraint(terms, kNegInf, 1, "multi_flag");
  }

  // In a model flagged multi-vertex, every member needs a member neighbor;
  // this is the isolated-vertex relaxation of connectivity.
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      terms.clear();
      terms.push_back({static_cast<std::int64_t>(n), cat.alpha_id(i, j)});
      for (int ell : target.neighbors(i))
        terms.push_back({-1, cat.alpha_id(ell, j)});
      terms.push_back({1, cat.w_id(j)});
      model.add_constraint(terms, kNegInf, n, "neighbor_support");
    }
  }

  terms.clear();
  for (VarId a : cat.alpha) terms.push_back({1, a});
  model.minimize(terms);

  return built;
}

std::vector<int> disconnected_models(const Embedding& embedding,
                                     const Graph& target) {
  std::vector<int> bad;
  for (const auto& [y, model] : embedding.vertex_models) {
    if (model.size() < 2) continue;
    if (!is_connected_subset(target, model)) bad.push_back(y);
  }
  return bad;
}

CutRecord make_cut(const Graph& target, int source_vertex,
                   const std::vector<int>& fiber) {
  CutRecord cut;
  cut.source = source_vertex;
  cut.fiber = fiber;
  std::set<int> in_fiber(fiber.begin(), fiber.end());
  std::set<int> boundary;
  for (int x : fiber)
    for (int nb : target.neighbors(x))
      if (!in_fiber.count(nb)) boundary.insert(nb);
  cut.boundary.assign(boundary.begin(), boundary.end());
  return cut;
}

EmbedResult solve_decomposition(const EmbedProblem& problem) {
  EmbedResult result;
  const int n = problem.target.num_vertices();
  const int m = problem.source.num_vertices();
  result.k = problem.k > 0 ? problem.k : n;

  if (m > n) {
    result.trivially_infeasible = true;
    result.outcome.status = SolveStatus::infeasible;
    result.outcome.best_bound = kPosInf;
    return result;
  }
  if (m == 0) {
    result.outcome.status = SolveStatus::optimal;
    result.outcome.assignment = std::vector<std::uint8_t>{};
    result.outcome.objective_value = 0;
    result.outcome.best_bound = 0;
    result.embedding = Embedding{};
    return result;
  }

  BuiltModel built = build_master(problem.target, problem.source, result.k,
                                  problem.objective);
  SolveLimits base = problem.limits;
  if (problem.objective == Objective::feasibility)
    base.stop_at_first_solution = true;

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&start] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  };

  std::set<std::vector<std::uint8_t>> seen_alpha;
  std::int64_t last_bound = m;  // every embedding uses at least m vertices

  for (;;) {
    SolveLimits pass = base;
    if (base.time_limit_s > 0.0) {
      const double remaining = base.time_limit_s - elapsed();
      if (remaining <= 0.0) {
        result.outcome.status = SolveStatus::timeout;
        result.outcome.best_bound = last_bound;
        return result;
      }
      pass.time_limit_s = remaining;
    }

    SolveOutcome outcome = solve(built.model, pass);
    ++result.iterations;
    last_bound = outcome.best_bound == kPosInf ? last_bound
                                               : outcome.best_bound;
    if (outcome.status == SolveStatus::infeasible || !outcome.assignment) {
      result.outcome = outcome;
      return result;
    }

    Embedding candidate = decode(built.catalog, *outcome.assignment);

    std::vector<std::uint8_t> alpha_vec;
    alpha_vec.reserve(built.catalog.alpha.size());
    for (VarId a : built.catalog.alpha)
      alpha_vec.push_back((*outcome.assignment)[static_cast<size_t>(a)]);
    if (!seen_alpha.insert(std::move(alpha_vec)).second)
      throw InternalConsistencyError(
          "master returned an assignment its cuts already excluded");

    const std::vector<int> bad = disconnected_models(candidate, problem.target);
    if (bad.empty()) {
      result.outcome = outcome;
      result.embedding = std::move(candidate);
      const VerifyReport report = verify_embedding(
          *result.embedding, problem.target, problem.source);
      if (!report.ok())
        throw InternalConsistencyError(
            "decomposition solution failed verification: " +
            report.violations.front().message);
      return result;
    }

    if (outcome.status == SolveStatus::timeout) {
      // Budget ran out on a still-disconnected incumbent; only the bound
      // survives.
      result.outcome = outcome;
      result.outcome.assignment.reset();
      result.outcome.objective_value.reset();
      return result;
    }

    for (int y : bad) {
      const CutRecord cut =
          make_cut(problem.target, y, candidate.vertex_models.at(y));
      std::vector<std::pair<std::int64_t, VarId>> terms;
      for (int x : cut.fiber)
        terms.push_back({-1, built.catalog.alpha_id(x, y)});
      for (int b : cut.boundary)
        terms.push_back({1, built.catalog.alpha_id(b, y)});
      const std::int64_t lower =
          1 - static_cast<std::int64_t>(cut.fiber.size());
      if (built.model.evaluate(terms, *outcome.assignment) >= lower)
        throw InternalConsistencyError(
            "cut does not exclude the assignment that produced it");
      built.model.add_constraint(terms, lower, kPosInf, "nogood");
      result.cut_records.push_back(cut);
      ++result.cuts;
    }
  }
}

}  // namespace minorcast
