// SPDX-License-Identifier: Apache-2.0
#include "ojs/rng.hpp"

#include <cmath>
#include <limits>

namespace ojs {
namespace {

// splitmix64 finalizer (Steele, Lea, Flood 2014). Bijective on 64-bit words.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Folds one key word into the running state. The chain start is an
// arbitrary fixed constant so a zero master seed still produces a scrambled
// engine seed.
std::uint64_t absorb(std::uint64_t state, std::uint64_t word) {
  return splitmix64(state ^ word);
}

constexpr std::uint64_t kChainInit = 0x6f6a735f726e6701ULL;

// 53-bit mantissa in [0, 1).
double to_unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

Rng::Rng(std::uint64_t master_seed, std::uint64_t stream)
    : Rng(absorb(absorb(kChainInit, master_seed), stream), AbsorbedKey{}) {}

Rng::Rng(std::uint64_t absorbed_state, AbsorbedKey)
    : state_key_(absorbed_state), engine_(absorbed_state) {}

Rng Rng::substream(std::uint64_t tag) const {
  return Rng(absorb(state_key_, tag), AbsorbedKey{});
}

double Rng::uniform() { return to_unit_interval(engine_()); }

std::uint64_t Rng::uniform_below(std::uint64_t n) {
  // Rejection keeps the draw exactly uniform: accept x when floor(x / n)
  // is below the largest full multiple of n in the 64-bit range.
  std::uint64_t x, r;
  do {
    x = engine_();
    r = x % n;
  } while (x - r > std::uint64_t(0) - n);
  return r;
}

double Rng::gaussian() {
  if (has_spare_gaussian_) {
    has_spare_gaussian_ = false;
    return spare_gaussian_;
  }
  // Box-Muller; u1 is shifted into (0, 1] so the log stays finite.
  const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = to_unit_interval(engine_());
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_gaussian_ = radius * std::sin(angle);
  has_spare_gaussian_ = true;
  return radius * std::cos(angle);
}

std::complex<double> Rng::complex_gaussian() {
  // One Box-Muller pair per complex draw; never mixes with the gaussian()
  // spare so interleaved real/complex draws stay reproducible.
  const double u1 = (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = to_unit_interval(engine_());
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  return {radius * std::cos(angle) * M_SQRT1_2, radius * std::sin(angle) * M_SQRT1_2};
}

}  // namespace ojs
