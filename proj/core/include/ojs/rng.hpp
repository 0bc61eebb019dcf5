// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace ojs {

/// Identifies one reproducible random stream as (master seed, stream index).
/// Equal pairs always yield identical draw sequences, regardless of thread
/// count or evaluation order, which is what makes experiment output
/// byte-stable across worker configurations.
struct SeededRng {
  std::uint64_t master_seed = 0;
  std::uint64_t stream = 0;
};

/// Deterministic random engine addressed by a hierarchical key.
///
/// The key words (master seed, stream, and any substream tags) are folded
/// into a single 64-bit state with a splitmix64 absorption chain, which then
/// seeds a mt19937_64. Both steps are fully specified, so a given key
/// produces bit-identical output on every conforming platform. Floating
/// point draws avoid std::uniform_real_distribution and friends because the
/// standard leaves their algorithms unspecified.
class Rng {
 public:
  Rng(std::uint64_t master_seed, std::uint64_t stream = 0);
  explicit Rng(const SeededRng& id) : Rng(id.master_seed, id.stream) {}

  /// Child engine keyed by this engine's key extended with `tag`. Used to
  /// give every channel matrix, trial, and codeword its own stream.
  Rng substream(std::uint64_t tag) const;

  /// Uniform on [0, 1).
  double uniform();

  /// Uniform integer in [0, n). Requires n > 0.
  std::uint64_t uniform_below(std::uint64_t n);

  /// Standard real Gaussian N(0, 1) via Box-Muller.
  double gaussian();

  /// Standard circularly symmetric complex Gaussian CN(0, 1): real and
  /// imaginary parts are independent N(0, 1/2).
  std::complex<double> complex_gaussian();

 private:
  struct AbsorbedKey {};
  Rng(std::uint64_t absorbed_state, AbsorbedKey);

  std::uint64_t state_key_;  // absorbed key, retained so substreams can extend it
  std::mt19937_64 engine_;
  double spare_gaussian_ = 0.0;
  bool has_spare_gaussian_ = false;
};

}  // namespace ojs
