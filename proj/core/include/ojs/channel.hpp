// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ojs/rng.hpp"

namespace ojs {

/// Antenna and pool dimensions for one transmitter / receiver / eavesdropper
/// deployment with a pool of friendly jammers.
///
///   nt  transmit antennas
///   nj  antennas per jammer
///   nr  receive antennas at the intended receiver
///   ne  eavesdropper antennas
///   k   jammers activated per transmission
///   s   jammers available in the pool
struct SystemConfig {
  int nt = 0;
  int nj = 0;
  int nr = 0;
  int ne = 0;
  int k = 0;
  int s = 0;
};

/// Checks a configuration and returns it unchanged.
///
/// Enforced regime:
///   * all counts positive, k <= s
///   * nt + nj <= nr < nt + k * nj  (receiver can cancel one jammer exactly,
///     cannot cancel all active jammers)
///   * k * nj >= ne unless `allow_nonstandard` is set (active jamming spans
///     the eavesdropper's receive space; lifting this is useful only for
///     deliberately degenerate experiments)
///
/// Throws AntennaRegimeViolation with a message naming the violated bound.
SystemConfig validate(const SystemConfig& config, bool allow_nonstandard = false);

/// One draw of every channel in the deployment. Entries are i.i.d. CN(0, 1).
///
///   h0       nr x nt   transmitter to receiver
///   h_jam[i] nr x nj   jammer i to receiver, i in [0, s)
///   g0       ne x nt   transmitter to eavesdropper
///   g_jam[i] ne x nj   jammer i to eavesdropper
struct ChannelRealization {
  Eigen::MatrixXcd h0;
  std::vector<Eigen::MatrixXcd> h_jam;
  Eigen::MatrixXcd g0;
  std::vector<Eigen::MatrixXcd> g_jam;
};

/// Draws a full channel realization for `config` under the stream `id`.
///
/// Every matrix gets its own substream keyed by (link kind, jammer index),
/// so growing the pool extends a realization without disturbing the matrices
/// already drawn: the first s entries of a pool of size s' > s are identical
/// to the pool of size s under the same id.
ChannelRealization sample_realization(const SystemConfig& config, const SeededRng& id);

/// rows x cols matrix of i.i.d. CN(0, 1) entries drawn from `rng` in
/// column-major order.
Eigen::MatrixXcd draw_gaussian_matrix(int rows, int cols, Rng& rng);

/// Transmit power for an SNR grid point; unit noise power, so P = 10^(dB/10).
double snr_db_to_power(double snr_db);

}  // namespace ojs
