// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "ojs/channel.hpp"
#include "ojs/errors.hpp"
#include "ojs/grassmann.hpp"
#include "ojs/rng.hpp"
#include "support/oracles.hpp"

using Eigen::MatrixXcd;
using ojs::Rng;
using ojs::SubspaceBasis;
using ojs::SubspaceCodebook;

namespace {

MatrixXcd random_matrix(int rows, int cols, Rng& rng) {
  return ojs::draw_gaussian_matrix(rows, cols, rng);
}

}  // namespace

TEST_CASE("basis constructor enforces orthonormal columns") {
  MatrixXcd q = MatrixXcd::Identity(4, 2);
  CHECK_NOTHROW(SubspaceBasis{q});
  q(0, 0) = 2.0;
  CHECK_THROWS_AS(SubspaceBasis{q}, ojs::NotOrthonormal);
  MatrixXcd wide = MatrixXcd::Identity(2, 4);
  CHECK_THROWS_AS(SubspaceBasis{wide}, ojs::DimensionMismatch);
}

TEST_CASE("orthonormal_basis matches a Gram-Schmidt oracle") {
  Rng rng(31, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const MatrixXcd m = random_matrix(trial % 2 ? 5 : 4, trial % 2 ? 3 : 2, rng);
    const SubspaceBasis basis = ojs::orthonormal_basis(m);
    const MatrixXcd reference = oracle::gram_schmidt(m);
    // Span equality: projectors agree even though the bases may differ
    // by a unitary factor.
    const MatrixXcd p1 = basis.projector();
    const MatrixXcd p2 = reference * reference.adjoint();
    CHECK((p1 - p2).norm() < 1e-9);
  }
}

TEST_CASE("orthonormal_basis rejects rank-deficient input") {
  MatrixXcd m(4, 2);
  m.setZero();
  CHECK_THROWS_AS(ojs::orthonormal_basis(m), ojs::RankDeficient);
  Rng rng(32, 0);
  MatrixXcd r = random_matrix(4, 2, rng);
  r.col(1) = r.col(0) * std::complex<double>(2.0, -1.0);
  CHECK_THROWS_AS(ojs::orthonormal_basis(r), ojs::RankDeficient);
}

TEST_CASE("chordal distance on hand-built subspaces") {
  MatrixXcd e12 = MatrixXcd::Zero(4, 2);
  e12(0, 0) = 1.0;
  e12(1, 1) = 1.0;
  MatrixXcd e23 = MatrixXcd::Zero(4, 2);
  e23(1, 0) = 1.0;
  e23(2, 1) = 1.0;
  const SubspaceBasis a{e12};
  const SubspaceBasis b{e23};
  // Shared coordinate plane e2, orthogonal remainder: distance^2 = 1.
  CHECK(ojs::chordal_distance_sq(a, b) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ojs::chordal_distance_sq(a, a) == doctest::Approx(0.0).epsilon(1e-12));

  // A line inside the plane it is compared against.
  MatrixXcd e1 = MatrixXcd::Zero(4, 1);
  e1(0, 0) = 1.0;
  CHECK(ojs::chordal_distance_sq(SubspaceBasis{e1}, a) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("both distance forms match the projector-trace definition") {
  Rng rng(33, 0);
  for (int trial = 0; trial < 25; ++trial) {
    const SubspaceBasis h = ojs::random_subspace(5, 2, rng);
    const SubspaceBasis q = ojs::random_subspace(5, 3, rng);
    const MatrixXcd ph = h.projector();
    const MatrixXcd pq = q.projector();
    const double reference = 2.0 - (ph * pq).trace().real();
    CHECK(std::abs(ojs::chordal_distance_sq(h, q) - reference) < 1e-12);
    CHECK(std::abs(ojs::chordal_distance_sq_complement(
                       h, ojs::orthogonal_complement(q)) -
                   reference) < 1e-9);
  }
}

TEST_CASE("orthogonal_complement produces the complementary projector") {
  Rng rng(34, 0);
  const SubspaceBasis q = ojs::random_subspace(5, 2, rng);
  const SubspaceBasis qp = ojs::orthogonal_complement(q);
  CHECK(qp.ambient_dim() == 5);
  CHECK(qp.subspace_dim() == 3);
  CHECK((q.matrix().adjoint() * qp.matrix()).norm() < 1e-10);
  const MatrixXcd sum = q.projector() + qp.projector();
  CHECK((sum - MatrixXcd::Identity(5, 5)).norm() < 1e-10);
  // Complementing twice returns to the original span.
  const SubspaceBasis back = ojs::orthogonal_complement(qp);
  CHECK((back.projector() - q.projector()).norm() < 1e-10);

  MatrixXcd full = MatrixXcd::Identity(3, 3);
  CHECK_THROWS_AS(ojs::orthogonal_complement(SubspaceBasis{full}),
                  ojs::FullSpace);
}

TEST_CASE("aligned residual on an analytic example") {
  // Projector sum with eigenvalues {2, 1, 1}: one direction is covered by
  // both planes, so a receive line (nt = 1) can avoid at best weight 1.
  MatrixXcd e12 = MatrixXcd::Zero(3, 2);
  e12(0, 0) = 1.0;
  e12(1, 1) = 1.0;
  MatrixXcd e13 = MatrixXcd::Zero(3, 2);
  e13(0, 0) = 1.0;
  e13(2, 1) = 1.0;
  std::vector<SubspaceBasis> planes{SubspaceBasis{e12}, SubspaceBasis{e13}};
  const ojs::AlignmentResidual aligned =
      ojs::aligned_subspace_residual(planes, 1);
  CHECK(aligned.residual == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(aligned.q_perp.rows() == 3);
  CHECK(aligned.q_perp.cols() == 1);
  // The complement avoids the shared direction e1 entirely.
  CHECK(std::abs(aligned.q_perp(0, 0)) < 1e-10);

  // Identical subspaces align perfectly: K copies of one plane leave a
  // zero-weight complement of dimension nt = 1.
  std::vector<SubspaceBasis> same{SubspaceBasis{e12}, SubspaceBasis{e12}};
  CHECK(ojs::aligned_subspace_residual(same, 1).residual ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("residual lower-bounds every candidate complement") {
  Rng rng(35, 0);
  std::vector<SubspaceBasis> planes;
  for (int j = 0; j < 3; ++j) planes.push_back(ojs::random_subspace(4, 2, rng));
  const ojs::AlignmentResidual aligned =
      ojs::aligned_subspace_residual(planes, 2);
  MatrixXcd sum = MatrixXcd::Zero(4, 4);
  for (const auto& p : planes) sum += p.projector();
  // The optimizer's own complement achieves the reported value.
  const double achieved =
      (aligned.q_perp.adjoint() * sum * aligned.q_perp).trace().real();
  CHECK(achieved == doctest::Approx(aligned.residual).epsilon(1e-9));
  for (int trial = 0; trial < 200; ++trial) {
    const SubspaceBasis candidate = ojs::random_subspace(4, 2, rng);
    const double value =
        (candidate.matrix().adjoint() * sum * candidate.matrix()).trace().real();
    CHECK(value >= aligned.residual - 1e-9);
  }
}

TEST_CASE("alignment bounds bracket the worst pairwise distance") {
  Rng rng(36, 0);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<SubspaceBasis> planes;
    for (int j = 0; j < 3; ++j)
      planes.push_back(ojs::random_subspace(5, 2, rng));
    const ojs::AlignmentResidual aligned =
        ojs::aligned_subspace_residual(planes, 2);
    const ojs::AlignmentBounds bounds = ojs::alignment_measure_bounds(planes, 2);
    CHECK(bounds.lower <= bounds.upper + 1e-12);
    CHECK(bounds.lower == doctest::Approx(std::sqrt(aligned.residual / 3.0)));
    CHECK(bounds.upper == doctest::Approx(std::sqrt(aligned.residual)));
    // The distance from each plane to the optimizer stays under the upper
    // bound, and the worst plane sits at or above the lower bound.
    const SubspaceBasis q_perp{aligned.q_perp};
    double worst = 0.0;
    for (const auto& p : planes) {
      worst = std::max(
          worst, std::sqrt(ojs::chordal_distance_sq_complement(p, q_perp)));
    }
    CHECK(worst >= bounds.lower - 1e-9);
    CHECK(worst <= bounds.upper + 1e-9);
  }
}

TEST_CASE("random subspaces are isotropic") {
  Rng rng(37, 0);
  const int n = 4000;
  MatrixXcd mean = MatrixXcd::Zero(4, 4);
  for (int i = 0; i < n; ++i)
    mean += ojs::random_subspace(4, 2, rng).projector();
  mean /= static_cast<double>(n);
  const MatrixXcd expected = 0.5 * MatrixXcd::Identity(4, 4);
  CHECK((mean - expected).cwiseAbs().maxCoeff() < 0.02);
}

TEST_CASE("covering radius estimate behaves like a covering radius") {
  Rng rng(38, 0);
  // Build codebooks of planes in C^3 and check monotonicity properties.
  std::vector<SubspaceBasis> small_book;
  for (int i = 0; i < 2; ++i) small_book.push_back(ojs::random_subspace(3, 2, rng));
  std::vector<SubspaceBasis> big_book = small_book;
  for (int i = 0; i < 14; ++i) big_book.push_back(ojs::random_subspace(3, 2, rng));

  Rng probe(77, 3);
  const double r_small = ojs::estimate_covering_radius(
      SubspaceCodebook{small_book}, 2, 400, probe);
  Rng probe2(77, 3);
  const double r_big = ojs::estimate_covering_radius(
      SubspaceCodebook{big_book}, 2, 400, probe2);
  // A superset codebook can only cover at least as well.
  CHECK(r_big <= r_small + 1e-12);
  CHECK(r_small > 0.0);

  // More probe samples can only push the max-min estimate up.
  Rng probe3(78, 0);
  const double few = ojs::estimate_covering_radius(
      SubspaceCodebook{small_book}, 2, 100, probe3);
  Rng probe4(78, 0);
  const double many = ojs::estimate_covering_radius(
      SubspaceCodebook{small_book}, 2, 500, probe4);
  CHECK(many >= few - 1e-12);

  // Same key, same estimate.
  Rng probe5(79, 0);
  Rng probe6(79, 0);
  CHECK(ojs::estimate_covering_radius(SubspaceCodebook{small_book}, 2, 200,
                                      probe5) ==
        ojs::estimate_covering_radius(SubspaceCodebook{small_book}, 2, 200,
                                      probe6));
}
