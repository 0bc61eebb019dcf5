// SPDX-License-Identifier: Apache-2.0
#include "ojs/grassmann.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ojs/errors.hpp"

namespace ojs {
namespace {

constexpr double kOrthonormalTol = 1e-10;
constexpr double kRankTol = 1e-12;

bool is_orthonormal(const Eigen::MatrixXcd& m, double tol) {
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(m.cols(), m.cols());
  return (gram - eye).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace

SubspaceBasis::SubspaceBasis(Eigen::MatrixXcd basis) : basis_(std::move(basis)) {
  if (basis_.rows() < 1 || basis_.cols() < 1)
    throw DimensionMismatch("subspace basis must be a nonempty matrix");
  if (basis_.cols() > basis_.rows())
    throw DimensionMismatch("subspace dimension exceeds ambient dimension");
  if (!is_orthonormal(basis_, kOrthonormalTol))
    throw NotOrthonormal("basis columns are not orthonormal within 1e-10");
}

SubspaceCodebook::SubspaceCodebook(std::vector<SubspaceBasis> codewords)
    : codewords_(std::move(codewords)) {
  if (codewords_.empty()) throw DimensionMismatch("codebook must contain at least one codeword");
  const auto ambient = codewords_.front().ambient_dim();
  const auto dim = codewords_.front().subspace_dim();
  for (const auto& c : codewords_)
    if (c.ambient_dim() != ambient || c.subspace_dim() != dim)
      throw DimensionMismatch("codebook codewords must share ambient and subspace dimensions");
}

SubspaceBasis orthonormal_basis(const Eigen::MatrixXcd& m) {
  if (m.rows() < 1 || m.cols() < 1) throw DimensionMismatch("matrix must be nonempty");
  if (m.cols() > m.rows())
    throw RankDeficient("matrix has more columns than rows, cannot have full column rank");
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m, Eigen::ComputeThinU);
  if (svd.singularValues()(m.cols() - 1) <= kRankTol)
    throw RankDeficient("matrix is column rank deficient (smallest singular value <= 1e-12)");
  return SubspaceBasis(svd.matrixU());
}

double chordal_distance_sq(const SubspaceBasis& h, const SubspaceBasis& q) {
  if (h.ambient_dim() != q.ambient_dim())
    throw DimensionMismatch("subspaces live in different ambient spaces");
  const double overlap = (q.matrix().adjoint() * h.matrix()).squaredNorm();
  const double bound = static_cast<double>(std::min(h.subspace_dim(), q.subspace_dim()));
  return std::clamp(bound - overlap, 0.0, bound);
}

double chordal_distance_sq_complement(const SubspaceBasis& h, const SubspaceBasis& q_perp) {
  if (h.ambient_dim() != q_perp.ambient_dim())
    throw DimensionMismatch("subspaces live in different ambient spaces");
  const double overlap = (q_perp.matrix().adjoint() * h.matrix()).squaredNorm();
  const double bound = static_cast<double>(std::min(h.subspace_dim(), q_perp.subspace_dim()));
  return std::clamp(overlap, 0.0, bound);
}

SubspaceBasis orthogonal_complement(const SubspaceBasis& q) {
  const auto n = q.ambient_dim();
  const auto d = q.subspace_dim();
  if (d >= n) throw FullSpace("subspace fills the ambient space, complement is empty");
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(q.matrix());
  // The first d columns of Q span col(q); the rest span the complement.
  const Eigen::MatrixXcd full_q =
      qr.householderQ() * Eigen::MatrixXcd::Identity(n, n);
  return SubspaceBasis(full_q.rightCols(n - d));
}

AlignmentResidual aligned_subspace_residual(const std::vector<SubspaceBasis>& bases, int nt) {
  if (bases.empty()) throw DimensionMismatch("need at least one subspace to align");
  const auto n = bases.front().ambient_dim();
  for (const auto& b : bases)
    if (b.ambient_dim() != n)
      throw DimensionMismatch("subspaces live in different ambient spaces");
  if (nt < 1 || nt >= n)
    throw DimensionMismatch("complement dimension nt must satisfy 1 <= nt < ambient, got nt = " +
                            std::to_string(nt));

  Eigen::MatrixXcd b_sum = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& b : bases) b_sum += b.projector();

  // min_q sum_k d_c^2(b_k, q) = sum of the nt smallest eigenvalues of the
  // projector sum; the maximizing q takes the top n - nt eigenvectors, so
  // its complement takes the bottom nt.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(b_sum);
  AlignmentResidual out;
  out.residual = std::max(0.0, eig.eigenvalues().head(nt).sum());
  out.q_perp = eig.eigenvectors().leftCols(nt);
  return out;
}

AlignmentBounds alignment_measure_bounds(const std::vector<SubspaceBasis>& bases, int nt) {
  const AlignmentResidual r = aligned_subspace_residual(bases, nt);
  // min_q max_k d >= min_q rms(d) and min_q max_k d <= max_k d at the
  // rms minimizer <= sqrt(sum of squares there).
  return {std::sqrt(r.residual / static_cast<double>(bases.size())), std::sqrt(r.residual)};
}

SubspaceBasis random_subspace(int ambient, int dim, Rng& rng) {
  if (dim < 1 || dim > ambient)
    throw DimensionMismatch("need 1 <= dim <= ambient for a random subspace");
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::MatrixXcd g(ambient, dim);
    for (int c = 0; c < dim; ++c)
      for (int r = 0; r < ambient; ++r) g(r, c) = rng.complex_gaussian();
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    const Eigen::MatrixXcd q =
        qr.householderQ() * Eigen::MatrixXcd::Identity(ambient, dim);
    if (is_orthonormal(q, kOrthonormalTol)) return SubspaceBasis(q);
    // A numerically rank-deficient Gaussian draw is measure zero; redraw.
  }
  throw RankDeficient("could not draw a full-rank Gaussian matrix in 64 attempts");
}

double estimate_covering_radius(const SubspaceCodebook& codebook, int sample_dim,
                                int num_samples, Rng& rng) {
  const int ambient = static_cast<int>(codebook.codewords().front().ambient_dim());
  if (sample_dim < 1 || sample_dim > ambient)
    throw DimensionMismatch("sample dimension must satisfy 1 <= dim <= ambient");
  if (num_samples < 1) throw DimensionMismatch("need at least one sample");

  double worst = 0.0;
  for (int i = 0; i < num_samples; ++i) {
    const SubspaceBasis sample = random_subspace(ambient, sample_dim, rng);
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto& codeword : codebook.codewords())
      nearest = std::min(nearest, chordal_distance_sq(sample, codeword));
    worst = std::max(worst, nearest);
  }
  return std::sqrt(worst);
}

}  // namespace ojs
