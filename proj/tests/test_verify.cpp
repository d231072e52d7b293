// Copyright 2026 Minorcast Contributors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "instances.hpp"
#include "minorcast/topology.hpp"
#include "minorcast/verify.hpp"

using namespace minorcast;
using namespace minorcast::testing;

namespace {

int count_kind(const VerifyReport& report, Violation::Kind kind) {
  int c = 0;
  for (const auto& v : report.violations)
    if (v.kind == kind) ++c;
  return c;
}

}  // namespace

TEST_CASE("valid embeddings produce a clean report") {
  Graph target = cycle_graph(5);
  Graph source = complete_graph(3);
  Embedding e;
  e.vertex_models[0] = {0, 1};
  e.vertex_models[1] = {2, 3};
  e.vertex_models[2] = {4};
  VerifyReport report = verify_embedding(e, target, source);
  CHECK(report.ok());
  CHECK(report.violations.empty());
}

TEST_CASE("every violation kind is detected") {
  Graph target = path_graph(3);
  Graph source = complete_graph(2);

  SUBCASE("out of range source key") {
    Embedding e;
    e.vertex_models[0] = {0};
    e.vertex_models[1] = {1};
    e.vertex_models[5] = {2};
    VerifyReport report = verify_embedding(e, target, source);
    CHECK(!report.ok());
    CHECK(count_kind(report, Violation::Kind::invalid_vertex) == 1);
    CHECK(report.violations[0].source == 5);
  }

  SUBCASE("out of range target member") {
    Embedding e;
    e.vertex_models[0] = {0};
    e.vertex_models[1] = {99};
    VerifyReport report = verify_embedding(e, target, source);
    CHECK(count_kind(report, Violation::Kind::invalid_vertex) == 1);
    const auto& v = report.violations[0];
    CHECK(v.source == 1);
    CHECK(v.target == 99);
  }

  SUBCASE("missing and empty models") {
    Embedding e;
    e.vertex_models[1] = {};
    VerifyReport report = verify_embedding(e, target, source);
    CHECK(count_kind(report, Violation::Kind::missing_vertex) == 2);
  }

  SUBCASE("overlap across models") {
    Embedding e;
    e.vertex_models[0] = {0, 1};
    e.vertex_models[1] = {1, 2};
    VerifyReport report = verify_embedding(e, target, source);
    CHECK(count_kind(report, Violation::Kind::overlap) == 1);
    const auto& v = report.violations[0];
    CHECK(v.target == 1);
    CHECK(v.source == 0);
    CHECK(v.source_other == 1);
  }

  SUBCASE("overlap inside one model") {
    Embedding e;
    e.vertex_models[0] = {0, 0};
    e.vertex_models[1] = {2};
    VerifyReport report = verify_embedding(e, target, source);
    CHECK(count_kind(report, Violation::Kind::overlap) == 1);
  }

  SUBCASE("disconnected model") {
    Embedding e;
    e.vertex_models[0] = {0, 2};
    e.vertex_models[1] = {1};
    VerifyReport report = verify_embedding(e, target, source);
    CHECK(count_kind(report, Violation::Kind::disconnected_model) == 1);
    CHECK(report.violations[0].source == 0);
  }

  SUBCASE("uncovered edge") {
    Embedding e;
    e.vertex_models[0] = {0};
    e.vertex_models[1] = {2};
    VerifyReport report = verify_embedding(e, target, source);
    CHECK(count_kind(report, Violation::Kind::uncovered_edge) == 1);
    const auto& v = report.violations[0];
    CHECK(v.source == 0);
    CHECK(v.source_other == 1);
  }
}

TEST_CASE("violation kinds have stable names") {
  CHECK(std::string(to_string(Violation::Kind::invalid_vertex)) ==
        "invalid_vertex");
  CHECK(std::string(to_string(Violation::Kind::missing_vertex)) ==
        "missing_vertex");
  CHECK(std::string(to_string(Violation::Kind::overlap)) == "overlap");
  CHECK(std::string(to_string(Violation::Kind::disconnected_model)) ==
        "disconnected_model");
  CHECK(std::string(to_string(Violation::Kind::uncovered_edge)) ==
        "uncovered_edge");
}

TEST_CASE("the curated witness is a size 13 embedding") {
  Graph target = illustrative_target();
  Graph source = illustrative_source();
  Embedding witness = illustrative_witness();
  VerifyReport report = verify_embedding(witness, target, source);
  for (const auto& v : report.violations) MESSAGE(v.message);
  CHECK(report.ok());
  CHECK(witness.total_size() == 13);
}

TEST_CASE("oracle minima on closed form instances") {
  REQUIRE(oracle_min_embedding(complete_graph(3), complete_graph(3)));
  CHECK(oracle_min_embedding(complete_graph(3), complete_graph(3))
            ->total_size() == 3);
  // C_4 is triangle free, so one model has to take two vertices.
  REQUIRE(oracle_min_embedding(cycle_graph(4), complete_graph(3)));
  CHECK(oracle_min_embedding(cycle_graph(4), complete_graph(3))
            ->total_size() == 4);
  CHECK(!oracle_min_embedding(path_graph(3), complete_graph(3)));
  CHECK(!oracle_min_embedding(complete_graph(3), complete_graph(4)));
  CHECK(oracle_min_embedding(path_graph(5), complete_graph(1))
            ->total_size() == 1);
  CHECK(oracle_min_embedding(path_graph(3), Graph(0))->total_size() == 0);
}

TEST_CASE("oracle result is itself a valid embedding") {
  Graph target = gen_erdos_renyi(ErdosRenyiSpec{6, 0.5, 11});
  Graph source = complete_graph(3);
  std::optional<Embedding> best = oracle_min_embedding(target, source);
  if (best) CHECK(verify_embedding(*best, target, source).ok());
}

TEST_CASE("reference search refuses oversized targets") {
  CHECK_THROWS_AS(static_cast<void>(oracle_min_embedding(path_graph(11),
                                                         complete_graph(2))),
                  GraphError);
  CHECK(oracle_min_embedding(path_graph(11), complete_graph(2), 12)
            ->total_size() == 2);
  CHECK_THROWS_AS(
      for_each_valid_embedding(path_graph(11), complete_graph(2),
                               [](const Embedding&) {}),
      GraphError);
}

TEST_CASE("enumeration visits exactly the valid embeddings") {
  // K_2 into the path 0-1-2: four ordered adjacent singleton pairs plus
  // four placements pairing a singleton with the complementary 2-model.
  Graph target = path_graph(3);
  Graph source = complete_graph(2);
  int count = 0;
  int best = 1 << 20;
  for_each_valid_embedding(target, source, [&](const Embedding& e) {
    ++count;
    CHECK(verify_embedding(e, target, source).ok());
    best = std::min(best, e.total_size());
  });
  CHECK(count == 8);
  CHECK(best == 2);
  CHECK(oracle_min_embedding(target, source)->total_size() == 2);
}

TEST_CASE("oracle equals the enumeration minimum on random pairs") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph target = gen_erdos_renyi(ErdosRenyiSpec{5, 0.5, seed});
    Graph source = gen_erdos_renyi(ErdosRenyiSpec{3, 0.7, seed + 50});
    int best = 1 << 20;
    int count = 0;
    for_each_valid_embedding(target, source, [&](const Embedding& e) {
      ++count;
      best = std::min(best, e.total_size());
    });
    std::optional<Embedding> reference = oracle_min_embedding(target, source);
    CAPTURE(seed);
    if (count == 0) {
      CHECK(!reference);
    } else {
      REQUIRE(reference);
      CHECK(reference->total_size() == best);
    }
  }
}
