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

#include "minorcast/monolithic.hpp"

#include <string>

#include "minorcast/verify.hpp"

namespace minorcast {

const char* to_string(Objective o) {
  switch (o) {
    case Objective::min_size:
      return "min_size";
    case Objective::feasibility:
      return "feasibility";
  }
  return "unknown";
}

namespace {

std::string index_pair(int a, int b) {
  return std::to_string(a) + "_" + std::to_string(b);
}

}  // namespace

BuiltModel build_monolithic(const Graph& target, const Graph& source, int k,
                            Objective objective, const BuildOptions& options) {
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

  // Classify target vertex pairs once. A pair can share a model of <= k
  // vertices iff its distance is at most k-1 edges; non-adjacent pairs
  // within that reach get their connecting paths enumerated (any path that
  // fits in a model has at most k vertices).
  std::vector<std::pair<int, int>> far_pairs;
  for (int i1 = 0; i1 < n; ++i1) {
    for (int i2 = i1 + 1; i2 < n; ++i2) {
      if (target.has_edge(i1, i2)) continue;
      const std::optional<int> d = shortest_distance(target, i1, i2);
      if (!d || *d > k - 1) {
        far_pairs.push_back({i1, i2});
        continue;
      }
      VarCatalog::PairEntry entry;
      entry.i1 = i1;
      entry.i2 = i2;
      entry.first_path = static_cast<int>(cat.paths.size());
      for (Path& p : enumerate_paths(target, i1, i2, k))
        cat.paths.push_back(std::move(p));
      entry.path_count =
          static_cast<int>(cat.paths.size()) - entry.first_path;
      cat.reach_pairs.push_back(entry);
    }
  }

  const int num_paths = static_cast<int>(cat.paths.size());
  for (int j = 0; j < m; ++j)
    for (int p = 0; p < num_paths; ++p)
      cat.gamma.push_back(model.add_binary("g" + index_pair(p, j)));

  for (int ey = 0; ey < cat.num_source_edges; ++ey) {
    for (int ex = 0; ex < cat.num_target_edges; ++ex) {
      cat.delta_par.push_back(model.add_binary("dp" + index_pair(ex, ey)));
      cat.delta_perp.push_back(model.add_binary("dq" + index_pair(ex, ey)));
    }
  }

  std::vector<std::pair<std::int64_t, VarId>> terms;

  terms.clear();
  for (VarId a : cat.alpha) terms.push_back({1, a});
  model.add_constraint(terms, m, n, "total_size");

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

  for (const auto& [i1, i2] : far_pairs) {
    for (int j = 0; j < m; ++j) {
      model.add_constraint({{1, cat.alpha_id(i1, j)}, {1, cat.alpha_id(i2, j)}},
                           kNegInf, 1, "reach");
    }
  }

  for (const auto& pair : cat.reach_pairs) {
    for (int j = 0; j < m; ++j) {
      const VarId a1 = cat.alpha_id(pair.i1, j);
      const VarId a2 = cat.alpha_id(pair.i2, j);

      terms.assign({{1, a1}, {1, a2}});
      for (int p = pair.first_path; p < pair.first_path + pair.path_count; ++p)
        terms.push_back({1, cat.gamma_id(p, j)});
      model.add_constraint(terms, kNegInf, 3, "fiber_unique");

      for (int p = pair.first_path; p < pair.first_path + pair.path_count;
           ++p) {
        const VarId g = cat.gamma_id(p, j);
        const std::vector<int> interior =
            cat.paths[static_cast<size_t>(p)].interior();
        for (int ell : interior) {
          model.add_constraint({{1, g}, {-1, cat.alpha_id(ell, j)}}, kNegInf,
                               0, "path_ub");
        }
        terms.clear();
        for (int ell : interior) terms.push_back({1, cat.alpha_id(ell, j)});
        terms.push_back({-1, g});
        model.add_constraint(terms, kNegInf,
                             static_cast<std::int64_t>(interior.size()) - 1,
                             "path_lb");
      }

      terms.assign({{1, a1}, {1, a2}});
      for (int p = pair.first_path; p < pair.first_path + pair.path_count; ++p)
        terms.push_back({-1, cat.gamma_id(p, j)});
      model.add_constraint(terms, kNegInf, 1, "fiber_active");

      if (options.unique_path) {
        terms.clear();
        for (int p = pair.first_path; p < pair.first_path + pair.path_count;
             ++p)
          terms.push_back({1, cat.gamma_id(p, j)});
        model.add_constraint(terms, kNegInf, 1, "unique_path");
      }
    }
  }

  for (int ey = 0; ey < cat.num_source_edges; ++ey) {
    const auto [y1, y2] = source.edges()[static_cast<size_t>(ey)];
    for (int ex = 0; ex < cat.num_target_edges; ++ex) {
      const auto [x1, x2] = target.edges()[static_cast<size_t>(ex)];
      const VarId dp = cat.delta_par_id(ex, ey);
      const VarId dq = cat.delta_perp_id(ex, ey);
      model.add_constraint({{1, dp}, {-1, cat.alpha_id(x1, y1)}}, kNegInf, 0,
                           "epair_ub");
      model.add_constraint({{1, dp}, {-1, cat.alpha_id(x2, y2)}}, kNegInf, 0,
                           "epair_ub");
      model.add_constraint(
          {{1, cat.alpha_id(x1, y1)}, {1, cat.alpha_id(x2, y2)}, {-1, dp}},
          kNegInf, 1, "epair_lb");
      model.add_constraint({{1, dq}, {-1, cat.alpha_id(x1, y2)}}, kNegInf, 0,
                           "epair_ub");
      model.add_constraint({{1, dq}, {-1, cat.alpha_id(x2, y1)}}, kNegInf, 0,
                           "epair_ub");
      model.add_constraint(
          {{1, cat.alpha_id(x1, y2)}, {1, cat.alpha_id(x2, y1)}, {-1, dq}},
          kNegInf, 1, "epair_lb");
      model.add_constraint({{1, dp}, {1, dq}}, kNegInf, 1, "epair_excl");
    }
    terms.clear();
    for (int ex = 0; ex < cat.num_target_edges; ++ex) {
      terms.push_back({1, cat.delta_par_id(ex, ey)});
      terms.push_back({1, cat.delta_perp_id(ex, ey)});
    }
    model.add_constraint(terms, 1, kPosInf, "pullback");
  }

  if (objective == Objective::min_size) {
    terms.clear();
    for (VarId a : cat.alpha) terms.push_back({1, a});
    model.minimize(terms);
  }

  return built;
}

EmbedResult solve_monolithic(const EmbedProblem& problem,
                             const BuildOptions& options) {
  EmbedResult result;
  result.k = problem.k > 0 ? problem.k : 3;
  const int n = problem.target.num_vertices();
  const int m = problem.source.num_vertices();

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

  BuiltModel built = build_monolithic(problem.target, problem.source,
                                      result.k, problem.objective, options);
  SolveLimits limits = problem.limits;
  if (problem.objective == Objective::feasibility)
    limits.stop_at_first_solution = true;
  result.outcome = solve(built.model, limits);

  if (result.outcome.assignment) {
    result.embedding = decode(built.catalog, *result.outcome.assignment);
    const VerifyReport report =
        verify_embedding(*result.embedding, problem.target, problem.source);
    if (!report.ok())
      throw InternalConsistencyError(
          "monolithic solution failed verification: " +
          report.violations.front().message);
  }
  return result;
}

}  // namespace minorcast
