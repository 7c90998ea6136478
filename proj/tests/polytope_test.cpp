// Copyright 2026 The PML Mechanisms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pml/polytope.hpp"

#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "pml/closed_form.hpp"
#include "pml/leakage.hpp"
#include "pml/lp.hpp"
#include "support/prop.hpp"

using namespace pml;

namespace {

const std::vector<std::vector<double>> kExampleMatrix = {
    {0.325, 0.225, 0.225, 0.225},
    {0.45, 0.1, 0.225, 0.225},
    {0.45, 0.225, 0.1, 0.225},
    {0.45, 0.225, 0.225, 0.1},
};

double evaluate_row(const std::vector<double>& row, const Mechanism& mech) {
  double value = 0.0;
  for (std::size_t t = 0; t < row.size(); ++t) value += row[t] * mech.data()[t];
  return value;
}

bool contains_first_column(const std::vector<Mechanism>& vertices, double p11,
                           double p21) {
  return std::any_of(vertices.begin(), vertices.end(), [&](const Mechanism& m) {
    return std::abs(m.at(0, 0) - p11) < 1e-9 && std::abs(m.at(1, 0) - p21) < 1e-9;
  });
}

}  // namespace

TEST_CASE("constraint assembly counts and membership") {
  const Prior prior = make_prior({0.4, 0.2, 0.2, 0.2});
  const double eps = std::log(9.0 / 8.0);
  const ConstraintSystem cs = build_constraints(prior, eps);
  CHECK(cs.pml_rows.size() == 16);
  CHECK(cs.stochastic_rows.size() == 4);
  CHECK(cs.nonneg_count == 16);

  const ConstraintSystem binary_cs = build_constraints(uniform_prior(2), 0.3);
  CHECK(binary_cs.pml_rows.size() == 4);
  CHECK(binary_cs.stochastic_rows.size() == 2);
  CHECK(binary_cs.nonneg_count == 4);

  // The example mechanism lies on the leakage boundary: every row <= 0.
  const Mechanism example = make_mechanism(kExampleMatrix);
  for (const auto& row : cs.pml_rows) CHECK(evaluate_row(row, example) <= 1e-12);

  // The identity violates the leakage rows whenever eps < eps_max.
  bool violated = false;
  for (const auto& row : cs.pml_rows)
    violated = violated || evaluate_row(row, identity_mechanism(4)) > 1e-9;
  CHECK(violated);
}

TEST_CASE("binary vertex set at log 1.5") {
  const ConstraintSystem cs = build_constraints(uniform_prior(2), std::log(1.5));
  const std::vector<Mechanism> vertices = enumerate_vertices(cs);
  REQUIRE(vertices.size() == 4);
  CHECK(contains_first_column(vertices, 0.0, 0.0));
  CHECK(contains_first_column(vertices, 1.0, 1.0));
  CHECK(contains_first_column(vertices, 0.75, 0.25));
  CHECK(contains_first_column(vertices, 0.25, 0.75));

  // Deterministic: a second run reproduces the same ordered set.
  const std::vector<Mechanism> again = enumerate_vertices(cs);
  REQUIRE(again.size() == vertices.size());
  for (std::size_t v = 0; v < vertices.size(); ++v)
    CHECK(vertices[v].data() == again[v].data());
}

TEST_CASE("at eps zero only independent releases remain") {
  for (std::size_t n : {2u, 3u}) {
    SplitMix64 rng(60 + n);
    const Prior prior = proptest::random_prior(rng, n);
    const std::vector<Mechanism> vertices =
        enumerate_vertices(build_constraints(prior, 0.0));
    CHECK(!vertices.empty());
    for (const Mechanism& mech : vertices) {
      for (std::size_t j = 0; j < mech.cols(); ++j) {
        const auto column = mech.column(j);
        const double head = column.front();
        for (double entry : column) CHECK(entry == doctest::Approx(head).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("vertices are feasible, stochastic and respect zero budgets") {
  proptest::forall(40, 61, [](SplitMix64& rng) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.next_unit() * 2);
    const Prior prior = proptest::random_prior(rng, n, 0.05);
    const double eps = proptest::random_eps(rng, prior, 0.02, 0.95);
    const int allowed_zeros = max_zeros_per_column(prior, eps);

    const std::vector<Mechanism> vertices =
        enumerate_vertices(build_constraints(prior, eps));
    CHECK(!vertices.empty());
    for (const Mechanism& mech : vertices) {
      CHECK(satisfies(mech, prior, eps));
      for (std::size_t i = 0; i < n; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += mech.at(i, j);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
      }
      const OutputDistribution out = output_distribution(mech, prior);
      for (std::size_t j = 0; j < n; ++j) {
        if (out.probs[j] <= 0.0) continue;
        int zeros = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (mech.at(i, j) <= 1e-12) ++zeros;
        CHECK(zeros <= allowed_zeros);
      }
    }
  });
}

TEST_CASE("oracle matches the closed forms") {
  SUBCASE("binary") {
    const Prior prior = make_prior({0.55, 0.45});
    const double eps = std::log(1.2);
    const DesignReport report = oracle_optimum(prior, eps, mi_utility(prior));
    CHECK(report.method == DesignMethod::oracle);
    CHECK(report.utility ==
          doctest::Approx(mechanism_utility(mi_utility(prior),
                                            binary_optimal(prior, eps)))
              .epsilon(1e-8));
  }
  SUBCASE("high privacy, three symbols") {
    const Prior prior = uniform_prior(3);
    const double eps = 0.25;  // below log(3/2)
    const DesignReport report = oracle_optimum(prior, eps, mi_utility(prior));
    CHECK(report.utility ==
          doctest::Approx(mechanism_utility(mi_utility(prior),
                                            high_privacy_optimal(prior, eps)))
              .epsilon(1e-8));
  }
  SUBCASE("uniform prior, second region") {
    const Prior prior = uniform_prior(3);
    const double eps = std::log(2.0);
    const DesignReport report = oracle_optimum(prior, eps, mi_utility(prior));
    CHECK(report.utility ==
          doctest::Approx(uniform_optimal_mi(3, eps)).epsilon(1e-8));
  }
}

TEST_CASE("oracle guards the alphabet size") {
  CHECK_THROWS_AS(oracle_optimum(uniform_prior(5), 0.3, mi_utility(uniform_prior(5))),
                  Error);
  CHECK_THROWS_AS(
      enumerate_vertices(build_constraints(uniform_prior(5), 0.3)), Error);
}

TEST_CASE("four-symbol enumeration stays correct at desk scale") {
  const Prior prior = make_prior({0.4, 0.3, 0.2, 0.1});
  const double inside = 0.5 * region_table(prior).boundaries.front();
  const std::vector<Mechanism> vertices =
      enumerate_vertices(build_constraints(prior, inside));
  CHECK(!vertices.empty());
  for (const Mechanism& mech : vertices) CHECK(satisfies(mech, prior, inside));

  const DesignReport report = oracle_optimum(prior, inside, mi_utility(prior));
  CHECK(report.utility ==
        doctest::Approx(mechanism_utility(mi_utility(prior),
                                          high_privacy_optimal(prior, inside)))
            .epsilon(1e-8));

  // A zero-admitting level: thousands of vertices, still matching the LP.
  const double deep = 0.7;
  const DesignReport exhaustive = oracle_optimum(prior, deep, mi_utility(prior));
  const DesignReport via_lp = lp_optimal(prior, deep, mi_utility(prior));
  CHECK(exhaustive.utility == doctest::Approx(via_lp.utility).epsilon(1e-8));
}
