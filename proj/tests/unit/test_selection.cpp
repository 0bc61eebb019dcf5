// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "ojs/channel.hpp"
#include "ojs/errors.hpp"
#include "ojs/rates.hpp"
#include "ojs/rng.hpp"
#include "ojs/selection.hpp"
#include "support/oracles.hpp"

using ojs::ChannelRealization;
using Eigen::MatrixXcd;
using ojs::Rng;
using ojs::SchemeTag;
using ojs::SelectionResult;
using ojs::SystemConfig;

namespace {

SystemConfig small_config(int s) {
  SystemConfig cfg;
  cfg.nt = 2;
  cfg.nj = 2;
  cfg.nr = 4;
  cfg.ne = 4;
  cfg.k = 2;
  cfg.s = s;
  return cfg;
}

}  // namespace

TEST_CASE("scheme names round-trip and parse case-insensitively") {
  for (SchemeTag tag : {SchemeTag::OJS1, SchemeTag::OJS2, SchemeTag::RANDOM,
                        SchemeTag::CAPMAX_BOB, SchemeTag::SECRECY_MAX}) {
    CHECK(ojs::scheme_from_name(ojs::scheme_name(tag)) == tag);
  }
  CHECK(ojs::scheme_from_name("ojs1") == SchemeTag::OJS1);
  CHECK(ojs::scheme_from_name("Random") == SchemeTag::RANDOM);
  CHECK_THROWS_AS(ojs::scheme_from_name("bogus"), ojs::ConfigParseError);
}

TEST_CASE("subset enumeration is lexicographic and complete") {
  const auto subsets = ojs::enumerate_subsets(4, 2);
  const std::vector<std::vector<int>> expected{{0, 1}, {0, 2}, {0, 3},
                                               {1, 2}, {1, 3}, {2, 3}};
  CHECK(subsets == expected);
  CHECK(ojs::enumerate_subsets(3, 3) ==
        std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK_THROWS_AS(ojs::enumerate_subsets(2, 3), ojs::KTooLarge);
}

TEST_CASE("enumeration matches a recursive oracle") {
  for (int s = 1; s <= 7; ++s) {
    for (int k = 0; k <= s; ++k) {
      CHECK(ojs::enumerate_subsets(s, k) == oracle::subsets_recursive(s, k));
    }
  }
}

TEST_CASE("subset_count matches known binomials and saturates") {
  CHECK(ojs::subset_count(10, 3) == 120u);
  CHECK(ojs::subset_count(5, 0) == 1u);
  CHECK(ojs::subset_count(3, 5) == 0u);
  CHECK(ojs::subset_count(64, 32) == 1832624140942590534ull);
  CHECK(ojs::subset_count(100, 50) == UINT64_MAX);
}

TEST_CASE("postprocessor picks the least-jammed directions") {
  MatrixXcd b = MatrixXcd::Zero(3, 3);
  b(0, 0) = 3.0;
  b(1, 1) = 2.0;
  b(2, 2) = 1.0;
  const MatrixXcd v = ojs::build_postprocessor(b, 1);
  REQUIRE(v.rows() == 3);
  REQUIRE(v.cols() == 1);
  // The quietest direction of diag(3, 2, 1) is e3.
  CHECK(std::abs(v(2, 0)) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(v(0, 0)) < 1e-10);
  CHECK(std::abs(v(1, 0)) < 1e-10);

  // Columns are orthonormal.
  const MatrixXcd v2 = ojs::build_postprocessor(b, 2);
  CHECK((v2.adjoint() * v2 - MatrixXcd::Identity(2, 2)).norm() < 1e-10);

  MatrixXcd not_herm = b;
  not_herm(0, 1) = 1.0;
  CHECK_THROWS_AS(ojs::build_postprocessor(not_herm, 1), ojs::NotHermitian);
}

TEST_CASE("postprocessor captures the smallest eigenvalue mass") {
  Rng rng(40, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const MatrixXcd m = ojs::draw_gaussian_matrix(4, 6, rng);
    const MatrixXcd b = m * m.adjoint();
    const MatrixXcd v = ojs::build_postprocessor(b, 2);
    const double captured = (v.adjoint() * b * v).trace().real();
    const Eigen::VectorXd evs = oracle::hermitian_eigenvalues(b);
    const double expected = evs(0) + evs(1);
    CHECK(captured == doctest::Approx(expected).epsilon(1e-8));
  }
}

TEST_CASE("alignment selection matches the exhaustive oracle") {
  const SystemConfig cfg = small_config(6);
  const double power = 25.0;
  for (int trial = 0; trial < 40; ++trial) {
    const ChannelRealization ch =
        ojs::sample_realization(cfg, {61, static_cast<std::uint64_t>(trial)});
    const SelectionResult r1 = ojs::select_ojs1(ch, cfg, power);
    const auto [oracle_set, oracle_val] = oracle::best_subset(
        cfg.s, cfg.k, /*minimize=*/true, [&](const std::vector<int>& t) {
          return oracle::ojs1_objective(ch, cfg, power, t);
        });
    CHECK(r1.indices == oracle_set);
    CHECK(r1.objective == doctest::Approx(oracle_val).epsilon(1e-9));

    const SelectionResult r2 = ojs::select_ojs2(ch, cfg, power);
    const auto [oracle_set2, oracle_val2] = oracle::best_subset(
        cfg.s, cfg.k, /*minimize=*/true, [&](const std::vector<int>& t) {
          return oracle::ojs2_objective(ch, cfg, power, t);
        });
    CHECK(r2.indices == oracle_set2);
    CHECK(r2.objective == doctest::Approx(oracle_val2).epsilon(1e-9));
  }
}

TEST_CASE("rate-driven selection matches the exhaustive oracle") {
  const SystemConfig cfg = small_config(5);
  const double power = 10.0;
  for (int trial = 0; trial < 15; ++trial) {
    const ChannelRealization ch =
        ojs::sample_realization(cfg, {62, static_cast<std::uint64_t>(trial)});
    const SelectionResult cap = ojs::select_capacity_max(ch, cfg, power);
    const auto [cap_set, cap_val] = oracle::best_subset(
        cfg.s, cfg.k, /*minimize=*/false, [&](const std::vector<int>& t) {
          return oracle::capacity_objective(ch, cfg, power, t);
        });
    CHECK(cap.indices == cap_set);
    CHECK(cap.objective == doctest::Approx(cap_val).epsilon(1e-9));

    const SelectionResult sec = ojs::select_secrecy_max(ch, cfg, power);
    const auto [sec_set, sec_val] = oracle::best_subset(
        cfg.s, cfg.k, /*minimize=*/false, [&](const std::vector<int>& t) {
          return oracle::secrecy_objective(ch, cfg, power, t);
        });
    CHECK(sec.indices == sec_set);
    CHECK(sec.objective == doctest::Approx(sec_val).epsilon(1e-9));
  }
}

TEST_CASE("secrecy-optimal selection dominates every other scheme") {
  const SystemConfig cfg = small_config(5);
  const double power = 31.6;
  Rng pick(63, 99);
  for (int trial = 0; trial < 10; ++trial) {
    const ChannelRealization ch =
        ojs::sample_realization(cfg, {63, static_cast<std::uint64_t>(trial)});
    const SelectionResult sec = ojs::select_secrecy_max(ch, cfg, power);
    for (SchemeTag tag : {SchemeTag::OJS1, SchemeTag::OJS2, SchemeTag::RANDOM,
                          SchemeTag::CAPMAX_BOB}) {
      const SelectionResult other =
          ojs::run_selection(tag, ch, cfg, power, pick);
      const ojs::RateReport rs = ojs::evaluate_rates(ch, cfg, sec, power);
      const ojs::RateReport ro = ojs::evaluate_rates(ch, cfg, other, power);
      CHECK(rs.secrecy >= ro.secrecy - 1e-9);
    }
  }
}

TEST_CASE("selection with a pool of exactly k returns the whole pool") {
  SystemConfig cfg = small_config(2);
  const ChannelRealization ch = ojs::sample_realization(cfg, {64, 0});
  const std::vector<int> all{0, 1};
  CHECK(ojs::select_ojs1(ch, cfg, 10.0).indices == all);
  CHECK(ojs::select_ojs2(ch, cfg, 10.0).indices == all);
  Rng rng(64, 1);
  CHECK(ojs::select_random(ch, cfg, rng).indices == all);
}

TEST_CASE("geometry-only selection ignores per-jammer channel scale") {
  const SystemConfig cfg = small_config(6);
  const ChannelRealization ch = ojs::sample_realization(cfg, {65, 3});
  ChannelRealization scaled = ch;
  for (std::size_t j = 0; j < scaled.h_jam.size(); ++j) {
    scaled.h_jam[j] *= (1.0 + 0.7 * static_cast<double>(j));
  }
  const SelectionResult base = ojs::select_ojs2(ch, cfg, 20.0);
  const SelectionResult after = ojs::select_ojs2(scaled, cfg, 20.0);
  CHECK(base.indices == after.indices);
  CHECK(base.objective == doctest::Approx(after.objective).epsilon(1e-9));
  // The power-aware scheme is free to react to the rescaling; the magnitude
  // blindness is specific to the generator-matrix objective.
}

TEST_CASE("random selection is uniform over subsets and seed-stable") {
  const SystemConfig cfg = small_config(5);
  const ChannelRealization ch = ojs::sample_realization(cfg, {66, 0});
  std::map<std::vector<int>, int> histogram;
  const int n = 20000;
  Rng rng(66, 1);
  for (int i = 0; i < n; ++i) {
    const SelectionResult r = ojs::select_random(ch, cfg, rng);
    REQUIRE(r.indices.size() == 2);
    REQUIRE(std::is_sorted(r.indices.begin(), r.indices.end()));
    REQUIRE(r.indices[0] != r.indices[1]);
    CHECK(std::isnan(r.objective));
    ++histogram[r.indices];
  }
  REQUIRE(histogram.size() == 10);  // C(5, 2)
  for (const auto& [subset, count] : histogram) {
    CHECK(std::abs(count / static_cast<double>(n) - 0.1) < 0.012);
  }

  Rng a(67, 2), b(67, 2);
  for (int i = 0; i < 20; ++i) {
    CHECK(ojs::select_random(ch, cfg, a).indices ==
          ojs::select_random(ch, cfg, b).indices);
  }
}

TEST_CASE("greedy selection returns valid subsets and matches at s == k") {
  SystemConfig cfg = small_config(8);
  cfg.k = 3;
  const ojs::SelectionOptions greedy{.greedy = true};
  for (int trial = 0; trial < 10; ++trial) {
    const ChannelRealization ch =
        ojs::sample_realization(cfg, {68, static_cast<std::uint64_t>(trial)});
    const SelectionResult g = ojs::select_ojs1(ch, cfg, 15.0, greedy);
    REQUIRE(g.indices.size() == 3);
    CHECK(std::is_sorted(g.indices.begin(), g.indices.end()));
    CHECK(g.indices.back() < cfg.s);
    // Greedy can be suboptimal but never beats the exhaustive optimum.
    const SelectionResult full = ojs::select_ojs1(ch, cfg, 15.0);
    CHECK(g.objective >= full.objective - 1e-9);
    // Deterministic given the same inputs.
    const SelectionResult again = ojs::select_ojs1(ch, cfg, 15.0, greedy);
    CHECK(g.indices == again.indices);
  }

  SystemConfig tight = small_config(2);
  const ChannelRealization ch = ojs::sample_realization(tight, {69, 0});
  CHECK(ojs::select_ojs1(ch, tight, 15.0, greedy).indices ==
        ojs::select_ojs1(ch, tight, 15.0).indices);
}

TEST_CASE("the filter annihilates as much selected jamming as possible") {
  const SystemConfig cfg = small_config(6);
  for (int trial = 0; trial < 10; ++trial) {
    const ChannelRealization ch =
        ojs::sample_realization(cfg, {70, static_cast<std::uint64_t>(trial)});
    const SelectionResult r = ojs::select_ojs1(ch, cfg, 12.0);
    std::vector<MatrixXcd> chosen;
    for (int idx : r.indices)
      chosen.push_back(ch.h_jam[static_cast<std::size_t>(idx)]);
    const MatrixXcd b = oracle::gram_sum(chosen, cfg.nr);
    const double residual =
        (r.postprocessor.adjoint() * b * r.postprocessor).trace().real();
    const Eigen::VectorXd evs = oracle::hermitian_eigenvalues(b);
    CHECK(residual ==
          doctest::Approx(evs.head(cfg.nt).sum()).epsilon(1e-8));
  }
}

TEST_CASE("a larger pool never hurts the alignment objective") {
  const double power = 18.0;
  for (int trial = 0; trial < 10; ++trial) {
    SystemConfig small = small_config(4);
    SystemConfig large = small_config(9);
    // Same key: the large pool extends the small one in place.
    const ChannelRealization a =
        ojs::sample_realization(small, {71, static_cast<std::uint64_t>(trial)});
    const ChannelRealization b =
        ojs::sample_realization(large, {71, static_cast<std::uint64_t>(trial)});
    const double obj_small = ojs::select_ojs1(a, small, power).objective;
    const double obj_large = ojs::select_ojs1(b, large, power).objective;
    CHECK(obj_large <= obj_small + 1e-12);
  }
}
