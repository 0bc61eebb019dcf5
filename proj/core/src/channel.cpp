// SPDX-License-Identifier: Apache-2.0
#include "ojs/channel.hpp"

#include <cmath>
#include <string>

#include "ojs/errors.hpp"

namespace ojs {
namespace {

// Substream tags for the four link kinds. A matrix's stream is keyed by
// (master, stream, kind, index) so pool growth never reshuffles earlier
// draws.
constexpr std::uint64_t kTagH0 = 0;
constexpr std::uint64_t kTagHJam = 1;
constexpr std::uint64_t kTagG0 = 2;
constexpr std::uint64_t kTagGJam = 3;

}  // namespace

Eigen::MatrixXcd draw_gaussian_matrix(int rows, int cols, Rng& rng) {
  Eigen::MatrixXcd m(rows, cols);
  // Column-major fill order is part of the reproducibility contract.
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) m(r, c) = rng.complex_gaussian();
  return m;
}

SystemConfig validate(const SystemConfig& config, bool allow_nonstandard) {
  auto fail = [](const std::string& msg) { throw AntennaRegimeViolation(msg); };
  if (config.nt <= 0 || config.nj <= 0 || config.nr <= 0 || config.ne <= 0)
    fail("antenna counts must be positive");
  if (config.k <= 0) fail("active jammer count k must be positive");
  if (config.s < config.k)
    fail("pool size s = " + std::to_string(config.s) + " is below the active count k = " +
         std::to_string(config.k) + (config.s == 0 ? " (s not set?)" : ""));
  if (config.nt + config.nj > config.nr)
    fail("receiver needs nt + nj <= nr to cancel one jammer exactly, got nt = " +
         std::to_string(config.nt) + ", nj = " + std::to_string(config.nj) +
         ", nr = " + std::to_string(config.nr));
  if (config.nr >= config.nt + config.k * config.nj)
    fail("nr must stay below nt + k * nj so active jamming cannot be fully canceled, got nr = " +
         std::to_string(config.nr) + " >= " + std::to_string(config.nt + config.k * config.nj));
  if (!allow_nonstandard && config.k * config.nj < config.ne)
    fail("active jamming must span the eavesdropper space: k * nj = " +
         std::to_string(config.k * config.nj) + " < ne = " + std::to_string(config.ne) +
         " (pass allow_nonstandard to study this regime)");
  return config;
}

ChannelRealization sample_realization(const SystemConfig& config, const SeededRng& id) {
  const Rng base(id);
  auto draw = [&](std::uint64_t kind, std::uint64_t index, int rows, int cols) {
    Rng stream = base.substream(kind).substream(index);
    return draw_gaussian_matrix(rows, cols, stream);
  };
  ChannelRealization real;
  real.h0 = draw(kTagH0, 0, config.nr, config.nt);
  real.g0 = draw(kTagG0, 0, config.ne, config.nt);
  real.h_jam.reserve(static_cast<std::size_t>(config.s));
  real.g_jam.reserve(static_cast<std::size_t>(config.s));
  for (int i = 0; i < config.s; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    real.h_jam.push_back(draw(kTagHJam, idx, config.nr, config.nj));
    real.g_jam.push_back(draw(kTagGJam, idx, config.ne, config.nj));
  }
  return real;
}

double snr_db_to_power(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

}  // namespace ojs
