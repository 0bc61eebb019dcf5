// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ojs/rng.hpp"

namespace ojs {

/// A point on a complex Grassmann manifold, stored as a matrix with
/// orthonormal columns spanning the subspace. Construction checks
/// basis^H basis = I to within 1e-10 and throws NotOrthonormal otherwise.
class SubspaceBasis {
 public:
  explicit SubspaceBasis(Eigen::MatrixXcd basis);

  const Eigen::MatrixXcd& matrix() const { return basis_; }
  Eigen::Index ambient_dim() const { return basis_.rows(); }
  Eigen::Index subspace_dim() const { return basis_.cols(); }

  /// Orthogonal projector basis * basis^H onto the subspace.
  Eigen::MatrixXcd projector() const { return basis_ * basis_.adjoint(); }

 private:
  Eigen::MatrixXcd basis_;
};

/// A finite collection of subspaces with common ambient and subspace
/// dimensions, used as a quantization codebook.
class SubspaceCodebook {
 public:
  explicit SubspaceCodebook(std::vector<SubspaceBasis> codewords);

  const std::vector<SubspaceBasis>& codewords() const { return codewords_; }
  std::size_t size() const { return codewords_.size(); }

 private:
  std::vector<SubspaceBasis> codewords_;
};

/// Orthonormal basis of the column space of `m` (thin SVD left factor).
/// Throws RankDeficient when the smallest singular value is <= 1e-12.
SubspaceBasis orthonormal_basis(const Eigen::MatrixXcd& m);

/// Squared chordal distance between the subspaces spanned by `h` and `q`:
///   d_c^2 = min(dim h, dim q) - tr(P_h P_q),
/// clamped to [0, min(dim h, dim q)] against roundoff. Both arguments must
/// share the ambient dimension.
double chordal_distance_sq(const SubspaceBasis& h, const SubspaceBasis& q);

/// The same squared chordal distance evaluated through the complement:
/// tr(q_perp^H P_h q_perp) where q_perp spans the orthogonal complement of
/// q. Agrees with chordal_distance_sq(h, q) to machine precision whenever
/// dim h <= dim q; kept as a distinct entry point because the complement
/// form is the one selection objectives use.
double chordal_distance_sq_complement(const SubspaceBasis& h, const SubspaceBasis& q_perp);

/// Orthonormal basis of the orthogonal complement. Throws FullSpace when
/// the subspace already fills the ambient space.
SubspaceBasis orthogonal_complement(const SubspaceBasis& q);

/// Result of jointly aligning K subspaces against their best common
/// receive-side quantizer: the minimum over rank-(n - nt) subspaces q of the
/// summed squared chordal distances, together with the nt-dimensional
/// complement of the minimizer (the interference-suppressing post-processor).
struct AlignmentResidual {
  double residual = 0.0;
  Eigen::MatrixXcd q_perp;  // ambient x nt, orthonormal columns
};

/// Minimizes sum_k d_c^2(bases[k], q) over all (n - nt)-dimensional q, where
/// n is the common ambient dimension. The minimum equals the sum of the nt
/// smallest eigenvalues of sum_k P_k, attained by the eigenvectors of the
/// largest n - nt eigenvalues; q_perp collects the remaining eigenvectors.
AlignmentResidual aligned_subspace_residual(const std::vector<SubspaceBasis>& bases, int nt);

/// Bracket for the min-max alignment measure min_q max_k d_c(bases[k], q):
/// [sqrt(residual / K), sqrt(residual)] where residual is the summed
/// squared-distance minimum above. The exact min-max value is not computed.
struct AlignmentBounds {
  double lower = 0.0;
  double upper = 0.0;
};

AlignmentBounds alignment_measure_bounds(const std::vector<SubspaceBasis>& bases, int nt);

/// Uniformly distributed dim-dimensional subspace of C^ambient, drawn as the
/// column space of an i.i.d. CN(0,1) matrix (invariant under left unitary
/// rotation, hence Haar on the Grassmannian).
SubspaceBasis random_subspace(int ambient, int dim, Rng& rng);

/// Monte Carlo estimate of the covering radius of `codebook` for
/// `sample_dim`-dimensional sources: the maximum over random samples of the
/// chordal distance to the nearest codeword. Under a fixed rng stream the
/// estimate is non-decreasing in num_samples (sample i does not depend on
/// the total count), and it never exceeds the true covering radius.
double estimate_covering_radius(const SubspaceCodebook& codebook, int sample_dim,
                                int num_samples, Rng& rng);

}  // namespace ojs
