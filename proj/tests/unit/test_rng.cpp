// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "ojs/rng.hpp"

using ojs::Rng;

TEST_CASE("identical keys replay identical sequences") {
  Rng a(42, 7);
  Rng b(42, 7);
  for (int i = 0; i < 200; ++i) CHECK(a.uniform() == b.uniform());
  Rng c(42, 7);
  Rng d(42, 7);
  for (int i = 0; i < 50; ++i) {
    const auto za = c.complex_gaussian();
    const auto zb = d.complex_gaussian();
    CHECK(za.real() == zb.real());
    CHECK(za.imag() == zb.imag());
  }
}

TEST_CASE("different streams and seeds decorrelate") {
  Rng a(42, 7);
  Rng b(42, 8);
  Rng c(43, 7);
  int equal_ab = 0, equal_ac = 0;
  for (int i = 0; i < 64; ++i) {
    const double x = a.uniform(), y = b.uniform(), z = c.uniform();
    equal_ab += x == y;
    equal_ac += x == z;
  }
  CHECK(equal_ab == 0);
  CHECK(equal_ac == 0);
}

TEST_CASE("substreams are stable and distinct") {
  const Rng parent(9, 1);
  Rng s0 = parent.substream(0);
  Rng s0_again = Rng(9, 1).substream(0);
  Rng s1 = parent.substream(1);
  const double first = s0.uniform();
  CHECK(first == s0_again.uniform());
  CHECK(first != s1.uniform());
}

TEST_CASE("uniform draws have the right moments and range") {
  Rng rng(123, 0);
  const int n = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.uniform();
    REQUIRE(x >= 0.0);
    REQUIRE(x < 1.0);
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean - 0.5) < 0.01);
  CHECK(std::abs(var - 1.0 / 12.0) < 0.005);
}

TEST_CASE("uniform_below is uniform over its range") {
  Rng rng(5, 5);
  const int n = 70000;
  std::vector<int> counts(7, 0);
  for (int i = 0; i < n; ++i) {
    const auto v = rng.uniform_below(7);
    REQUIRE(v < 7);
    ++counts[static_cast<std::size_t>(v)];
  }
  for (int c : counts) CHECK(std::abs(c - n / 7) < 400);
}

TEST_CASE("gaussian draws have unit variance") {
  Rng rng(77, 0);
  const int n = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.gaussian();
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  CHECK(std::abs(mean) < 0.02);
  CHECK(std::abs(sum_sq / n - mean * mean - 1.0) < 0.03);
}

TEST_CASE("complex gaussian is circularly symmetric with unit power") {
  Rng rng(78, 0);
  const int n = 100000;
  double sum_re = 0.0, sum_im = 0.0, power = 0.0, var_re = 0.0, var_im = 0.0;
  double pseudo_re = 0.0, pseudo_im = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto z = rng.complex_gaussian();
    sum_re += z.real();
    sum_im += z.imag();
    power += std::norm(z);
    var_re += z.real() * z.real();
    var_im += z.imag() * z.imag();
    pseudo_re += z.real() * z.real() - z.imag() * z.imag();
    pseudo_im += 2.0 * z.real() * z.imag();
  }
  CHECK(std::abs(sum_re / n) < 0.02);
  CHECK(std::abs(sum_im / n) < 0.02);
  CHECK(std::abs(power / n - 1.0) < 0.03);
  CHECK(std::abs(var_re / n - 0.5) < 0.02);
  CHECK(std::abs(var_im / n - 0.5) < 0.02);
  // E[z^2] = 0 under circular symmetry.
  CHECK(std::abs(pseudo_re / n) < 0.02);
  CHECK(std::abs(pseudo_im / n) < 0.02);
}
