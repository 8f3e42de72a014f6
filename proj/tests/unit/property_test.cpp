// Copyright 2026 The rdfstar2pg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Randomized invariant checks, 1000 generated datasets each (at most 10
// statements, quoting depth at most 2). Seeds are fixed.

#include <gtest/gtest.h>

#include "rdfstar2pg/exporters.hpp"
#include "support/invariants.hpp"

namespace rdfstar2pg::testing {
namespace {

constexpr std::size_t kRuns = 1000;

GenOptions plain() {
  GenOptions opt;
  opt.quoted = false;
  return opt;
}

void expect_holds(const SuiteResult& r) {
  EXPECT_EQ(r.datasets, kRuns);
  EXPECT_FALSE(r.failure.has_value()) << *r.failure;
}

TEST(PropertyTest, RptOneEdgePerStatement) {
  GenOptions opt = plain();
  opt.named_graphs = true;
  expect_holds(run_suite(kRuns, kDefaultSeed + 10, opt,
                         [](const Dataset& ds, std::mt19937_64&) { return rpt_edge_bijection(ds); }));
}

TEST(PropertyTest, PgtDecomposition) {
  expect_holds(run_suite(kRuns, kDefaultSeed + 11, plain(),
                         [](const Dataset& ds, std::mt19937_64&) { return pgt_decomposition(ds); }));
}

TEST(PropertyTest, PredicateSplit) {
  GenOptions opt = plain();
  opt.predicates_as_resources = true;
  opt.named_graphs = true;
  expect_holds(run_suite(kRuns, kDefaultSeed + 12, opt,
                         [](const Dataset& ds, std::mt19937_64&) { return predicate_split(ds); }));
}

TEST(PropertyTest, ApproachAgreementWithoutLiteralsOrQuotes) {
  GenOptions opt = plain();
  opt.literals = false;
  opt.named_graphs = true;
  expect_holds(run_suite(kRuns, kDefaultSeed + 13, opt,
                         [](const Dataset& ds, std::mt19937_64&) { return approach_agreement(ds); }));
}

TEST(PropertyTest, PgtLossCharacterization) {
  expect_holds(run_suite(kRuns, kDefaultSeed + 14, GenOptions{},
                         [](const Dataset& ds, std::mt19937_64&) { return pgt_loss_characterization(ds); }));
}

TEST(PropertyTest, ReportAlgebraUnderEveryPolicy) {
  const std::vector<TransformConfig> configs = all_configs();
  GenOptions opt;
  opt.named_graphs = true;
  opt.predicates_as_resources = true;
  expect_holds(run_suite(kRuns, kDefaultSeed + 15, opt, [&](const Dataset& ds, std::mt19937_64& rng) {
    return report_algebra(ds, configs[std::uniform_int_distribution<std::size_t>(0, configs.size() - 1)(rng)]);
  }));
}

TEST(PropertyTest, ParserRoundTrip) {
  GenOptions opt;
  opt.named_graphs = true;
  expect_holds(run_suite(kRuns, kDefaultSeed + 16, opt,
                         [](const Dataset& ds, std::mt19937_64&) { return parser_round_trip(ds); }));
}

TEST(PropertyTest, JsonRoundTrip) {
  const std::vector<TransformConfig> configs = all_configs();
  GenOptions opt;
  opt.named_graphs = true;
  expect_holds(run_suite(kRuns, kDefaultSeed + 17, opt, [&](const Dataset& ds, std::mt19937_64& rng) {
    return json_round_trip(ds, configs[std::uniform_int_distribution<std::size_t>(0, configs.size() - 1)(rng)]);
  }));
}

TEST(PropertyTest, OutputIndependentOfStatementOrder) {
  const std::vector<TransformConfig> configs = all_configs();
  GenOptions opt;
  opt.named_graphs = true;
  expect_holds(run_suite(kRuns, kDefaultSeed + 18, opt, [&](const Dataset& ds, std::mt19937_64& rng) {
    const TransformConfig& cfg = configs[std::uniform_int_distribution<std::size_t>(0, configs.size() - 1)(rng)];
    return permutation_invariance(ds, cfg, rng);
  }));
}

TEST(PropertyTest, TransformNeverThrows) {
  const std::vector<TransformConfig> configs = all_configs();
  GenOptions opt;
  opt.named_graphs = true;
  opt.predicates_as_resources = true;
  expect_holds(run_suite(kRuns, kDefaultSeed + 19, opt, [&](const Dataset& ds, std::mt19937_64&) -> Violation {
    for (std::size_t i = 0; i < configs.size(); i += 37) transform(ds, configs[i]);
    return std::nullopt;
  }));
}

}  // namespace
}  // namespace rdfstar2pg::testing
