// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ojs/channel.hpp"
#include "ojs/selection.hpp"

namespace ojs {

/// Receiver capacity in bits/s/Hz with the listed jamming channels treated
/// as colored noise:
///   log2 det(I + (power/nt) h0 h0^H (I + (power/nj) sum_k H_k H_k^H)^-1)
/// evaluated in the numerically stable quotient form
///   logdet(I + A + B) - logdet(I + B).
/// An empty `jam` list gives the jamming-free capacity.
double bob_capacity(const Eigen::MatrixXcd& h0, const std::vector<Eigen::MatrixXcd>& jam,
                    double power, const SystemConfig& config);

/// Receiver rate after projecting through the orthonormal receive filter
/// `v` (nr x nt): the capacity of the filtered channel with filtered jamming
/// as noise, in the same quotient form on nt x nt matrices.
double bob_rate(const Eigen::MatrixXcd& h0, const std::vector<Eigen::MatrixXcd>& jam,
                const Eigen::MatrixXcd& v, double power, const SystemConfig& config);

/// Rate lost to residual jamming after the filter:
///   log2 det(I + (power/nj) sum_k v^H H_k H_k^H v).
/// Zero exactly when the filtered jamming vanishes.
double bob_jamming_loss(const std::vector<Eigen::MatrixXcd>& jam, const Eigen::MatrixXcd& v,
                        double power, const SystemConfig& config);

/// Eavesdropper capacity with the selected jamming as noise; same quotient
/// form on the eavesdropper side.
double eve_capacity(const Eigen::MatrixXcd& g0, const std::vector<Eigen::MatrixXcd>& jam,
                    double power, const SystemConfig& config);

/// High-power limit of the eavesdropper capacity:
///   log2 det(I + (nj/nt) g0 g0^H (sum_k G_k G_k^H)^-1).
/// Requires the aggregate jamming Gram to be invertible, i.e. the selected
/// jammers must span the eavesdropper receive space (k * nj >= ne); throws
/// SingularJammingGram otherwise.
double eve_saturated_rate(const Eigen::MatrixXcd& g0, const std::vector<Eigen::MatrixXcd>& jam,
                          const SystemConfig& config);

/// Achievable secrecy rate [r_bob - c_eve]^+.
double secrecy_rate(double r_bob, double c_eve);

/// Pool size sufficient to keep the receiver within `delta_bits` of its
/// jamming-free rate at transmit power `power`:
///   s = (k-1) * ceil[ (4 kappa2^2 k power / (nt (2^(delta/nt) - 1)))^(nt*nj/2) ] + 1.
/// Collapses to k when the bracket is <= 1 (one candidate subset suffices).
/// Throws NonpositiveDelta when delta_bits <= 0.
std::uint64_t sufficient_jammer_count(double delta_bits, double power,
                                      const SystemConfig& config, double kappa2 = 1.0);

/// Least-squares slope of rate against log2(power) over `points`, the
/// degrees-of-freedom estimate for a rate curve. `window` echoes the points
/// used. Throws DegenerateWindow when fewer than two distinct powers remain.
struct DofEstimate {
  double slope = 0.0;
  std::vector<std::pair<double, double>> window;  // (power, rate)
};

DofEstimate dof_slope(const std::vector<std::pair<double, double>>& points);

/// All per-trial rate figures for one selection outcome.
struct RateReport {
  double c_bob = 0.0;      // unfiltered receiver capacity
  double r_bob = 0.0;      // filtered receiver rate
  double r_bob_loss = 0.0; // residual jamming loss behind the filter
  double c_eve = 0.0;      // eavesdropper capacity
  double secrecy = 0.0;    // [r_bob - c_eve]^+
};

/// Evaluates every rate figure for the subset and filter chosen in `sel`.
RateReport evaluate_rates(const ChannelRealization& real, const SystemConfig& config,
                          const SelectionResult& sel, double power);

}  // namespace ojs
