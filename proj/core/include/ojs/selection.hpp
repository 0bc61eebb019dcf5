// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "ojs/channel.hpp"
#include "ojs/errors.hpp"
#include "ojs/rng.hpp"

namespace ojs {

/// Jammer subset selection schemes.
///
///   OJS1         minimize the receiver-side residual jamming product over
///                the raw channels (power-aware alignment)
///   OJS2         same objective on normalized channel generator matrices
///                (pure geometry, magnitude-blind)
///   RANDOM       uniform subset, selection-gain baseline
///   CAPMAX_BOB   maximize the receiver capacity with jamming treated as noise
///   SECRECY_MAX  maximize [receiver rate - eavesdropper capacity]^+
enum class SchemeTag { OJS1, OJS2, RANDOM, CAPMAX_BOB, SECRECY_MAX };

/// Canonical scheme name as it appears in config files and CSV output.
std::string_view scheme_name(SchemeTag tag);

/// Parses a canonical scheme name (case-insensitive). Throws ConfigParseError.
SchemeTag scheme_from_name(std::string_view name);

/// Outcome of one subset selection.
struct SelectionResult {
  std::vector<int> indices;        // chosen jammer indices, strictly increasing
  double objective = 0.0;          // scheme objective value; NaN for RANDOM
  Eigen::MatrixXcd postprocessor;  // nr x nt orthonormal receive filter V
  SchemeTag scheme = SchemeTag::OJS1;
};

/// Number of k-subsets of an s-pool, saturating at UINT64_MAX on overflow.
/// Returns 0 when k > s.
std::uint64_t subset_count(int s, int k);

/// All k-subsets of {0, ..., s-1} in lexicographic order.
/// Throws KTooLarge when k > s.
std::vector<std::vector<int>> enumerate_subsets(int s, int k);

/// Streaming lexicographic k-subset visitor; `fn` receives each subset as a
/// const std::vector<int>&. This is the scan primitive selection runs on, so
/// subset order (and therefore tie-breaking) is identical everywhere.
template <typename Fn>
void for_each_subset(int s, int k, Fn&& fn) {
  if (k > s) throw KTooLarge("subset size " + std::to_string(k) +
                             " exceeds pool size " + std::to_string(s));
  if (k < 0 || s < 0) throw KTooLarge("subset parameters must be nonnegative");
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (k == 0) {
    fn(std::as_const(idx));
    return;
  }
  while (true) {
    fn(std::as_const(idx));
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == s - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

/// Receive filter for a given aggregate jamming Gram matrix `b` (nr x nr,
/// Hermitian within 1e-9): the orthonormal eigenvectors of the nt smallest
/// eigenvalues, i.e. the nt-dimensional subspace least exposed to jamming.
/// Throws NotHermitian.
Eigen::MatrixXcd build_postprocessor(const Eigen::MatrixXcd& b, int nt);

/// Extra knobs for selection.
struct SelectionOptions {
  /// Greedy forward selection instead of the exhaustive subset scan: grow
  /// the subset one jammer at a time, each step locally optimal for the
  /// scheme objective. O(s * k) objective evaluations instead of C(s, k).
  bool greedy = false;
};

/// OJS1: minimize prod_{n > nr - nt} (1 + (power / nj) * lambda_n(B_T)) over
/// k-subsets T, where B_T sums the raw receiver-side jamming Grams and
/// lambda is in descending order. Exhaustive scan in lexicographic order,
/// strict improvement required, so ties keep the lexicographically smallest
/// subset.
SelectionResult select_ojs1(const ChannelRealization& real, const SystemConfig& config,
                            double power, const SelectionOptions& opts = {});

/// OJS2: the OJS1 product evaluated on generator matrices (orthonormal bases
/// of each jammer's column space) with coefficient `power` instead of
/// power / nj. Invariant to per-jammer channel magnitudes.
SelectionResult select_ojs2(const ChannelRealization& real, const SystemConfig& config,
                            double power, const SelectionOptions& opts = {});

/// Uniformly random k-subset; the postprocessor is still built from the
/// chosen subset's jamming Gram so downstream rate evaluation is uniform
/// across schemes. Objective reported as NaN.
SelectionResult select_random(const ChannelRealization& real, const SystemConfig& config,
                              Rng& rng);

/// Maximize the receiver capacity with the subset's jamming as noise.
SelectionResult select_capacity_max(const ChannelRealization& real,
                                    const SystemConfig& config, double power,
                                    const SelectionOptions& opts = {});

/// Maximize the achievable secrecy rate [r_bob - c_eve]^+.
SelectionResult select_secrecy_max(const ChannelRealization& real,
                                   const SystemConfig& config, double power,
                                   const SelectionOptions& opts = {});

/// Dispatch by tag; `rng` is consulted only for RANDOM.
SelectionResult run_selection(SchemeTag tag, const ChannelRealization& real,
                              const SystemConfig& config, double power, Rng& rng,
                              const SelectionOptions& opts = {});

}  // namespace ojs
