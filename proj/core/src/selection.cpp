// SPDX-License-Identifier: Apache-2.0
#include "ojs/selection.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <string>

#include "ojs/grassmann.hpp"
#include "ojs/rates.hpp"

namespace ojs {
namespace {

// Objective direction per scheme.
enum class Direction { Minimize, Maximize };

// Product over the nt smallest eigenvalues lambda of (1 + coeff * lambda).
// These are the jamming eigenmodes a rank-nt receive filter cannot escape.
double residual_product(const Eigen::MatrixXcd& gram_sum, int nt, double coeff) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(gram_sum, Eigen::EigenvaluesOnly);
  double product = 1.0;
  for (int i = 0; i < nt; ++i)
    product *= 1.0 + coeff * std::max(0.0, eig.eigenvalues()(i));
  return product;
}

// Exhaustive lexicographic scan with strict improvement, so equal objectives
// keep the lexicographically smallest subset. Returns the winning subset and
// objective; the caller finishes the SelectionResult.
template <typename Score>
std::pair<std::vector<int>, double> scan_subsets(int s, int k, Direction dir, Score&& score) {
  std::vector<int> best;
  double best_value =
      dir == Direction::Minimize ? std::numeric_limits<double>::infinity()
                                 : -std::numeric_limits<double>::infinity();
  for_each_subset(s, k, [&](const std::vector<int>& subset) {
    const double value = score(subset);
    const bool better =
        dir == Direction::Minimize ? value < best_value : value > best_value;
    if (better) {
      best_value = value;
      best = subset;
    }
  });
  return {std::move(best), best_value};
}

// Greedy forward variant of the same scan: grow the subset one index at a
// time, evaluating the objective on the partial subset. Candidates are tried
// in ascending index order with strict improvement, matching the exhaustive
// scan's tie-break convention.
template <typename Score>
std::pair<std::vector<int>, double> greedy_subsets(int s, int k, Direction dir, Score&& score) {
  std::vector<int> chosen;
  std::vector<bool> used(static_cast<std::size_t>(s), false);
  for (int step = 0; step < k; ++step) {
    int best_candidate = -1;
    double best_value =
        dir == Direction::Minimize ? std::numeric_limits<double>::infinity()
                                   : -std::numeric_limits<double>::infinity();
    for (int c = 0; c < s; ++c) {
      if (used[static_cast<std::size_t>(c)]) continue;
      std::vector<int> trial = chosen;
      trial.insert(std::upper_bound(trial.begin(), trial.end(), c), c);
      const double value = score(trial);
      const bool better =
          dir == Direction::Minimize ? value < best_value : value > best_value;
      if (better) {
        best_value = value;
        best_candidate = c;
      }
    }
    if (best_candidate < 0) throw Error("selection objective produced no comparable value");
    used[static_cast<std::size_t>(best_candidate)] = true;
    chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), best_candidate),
                  best_candidate);
  }
  return {std::move(chosen), score(chosen)};
}

template <typename Score>
std::pair<std::vector<int>, double> pick_subset(int s, int k, Direction dir, bool greedy,
                                                Score&& score) {
  return greedy ? greedy_subsets(s, k, dir, score) : scan_subsets(s, k, dir, score);
}

// Receiver-side jamming Grams, one per pool member, either raw (H H^H) or on
// generator matrices (orthonormalized columns).
std::vector<Eigen::MatrixXcd> receiver_grams(const ChannelRealization& real, bool normalized) {
  std::vector<Eigen::MatrixXcd> grams;
  grams.reserve(real.h_jam.size());
  for (const auto& h : real.h_jam) {
    if (normalized) {
      const Eigen::MatrixXcd basis = orthonormal_basis(h).matrix();
      grams.push_back(basis * basis.adjoint());
    } else {
      grams.push_back(h * h.adjoint());
    }
  }
  return grams;
}

Eigen::MatrixXcd sum_over(const std::vector<Eigen::MatrixXcd>& grams,
                          const std::vector<int>& subset) {
  Eigen::MatrixXcd sum =
      Eigen::MatrixXcd::Zero(grams.front().rows(), grams.front().cols());
  for (int idx : subset) sum += grams[static_cast<std::size_t>(idx)];
  return sum;
}

SelectionResult finish_result(SchemeTag tag, std::vector<int> subset, double objective,
                                        const std::vector<Eigen::MatrixXcd>& raw_grams,
                                        const SystemConfig& config) {
  SelectionResult out;
  out.scheme = tag;
  out.indices = std::move(subset);
  out.objective = objective;
  // The receive filter always comes from the raw jamming Grams of the chosen
  // subset, whatever objective chose it, so rate evaluation is uniform.
  out.postprocessor = build_postprocessor(sum_over(raw_grams, out.indices), config.nt);
  return out;
}

std::vector<Eigen::MatrixXcd> gather(const std::vector<Eigen::MatrixXcd>& pool,
                                     const std::vector<int>& subset) {
  std::vector<Eigen::MatrixXcd> out;
  out.reserve(subset.size());
  for (int idx : subset) out.push_back(pool[static_cast<std::size_t>(idx)]);
  return out;
}

}  // namespace

std::string_view scheme_name(SchemeTag tag) {
  switch (tag) {
    case SchemeTag::OJS1: return "OJS1";
    case SchemeTag::OJS2: return "OJS2";
    case SchemeTag::RANDOM: return "RANDOM";
    case SchemeTag::CAPMAX_BOB: return "CAPMAX_BOB";
    case SchemeTag::SECRECY_MAX: return "SECRECY_MAX";
  }
  return "UNKNOWN";
}

SchemeTag scheme_from_name(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  if (upper == "OJS1") return SchemeTag::OJS1;
  if (upper == "OJS2") return SchemeTag::OJS2;
  if (upper == "RANDOM") return SchemeTag::RANDOM;
  if (upper == "CAPMAX_BOB") return SchemeTag::CAPMAX_BOB;
  if (upper == "SECRECY_MAX") return SchemeTag::SECRECY_MAX;
  throw ConfigParseError("unknown selection scheme '" + std::string(name) + "'");
}

std::uint64_t subset_count(int s, int k) {
  if (k > s || k < 0 || s < 0) return 0;
  k = std::min(k, s - k);
  unsigned __int128 count = 1;
  for (int i = 1; i <= k; ++i) {
    count = count * static_cast<unsigned>(s - k + i) / static_cast<unsigned>(i);
    if (count > std::numeric_limits<std::uint64_t>::max())
      return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(count);
}

std::vector<std::vector<int>> enumerate_subsets(int s, int k) {
  std::vector<std::vector<int>> out;
  for_each_subset(s, k, [&](const std::vector<int>& subset) { out.push_back(subset); });
  return out;
}

Eigen::MatrixXcd build_postprocessor(const Eigen::MatrixXcd& b, int nt) {
  if (b.rows() != b.cols()) throw NotHermitian("matrix must be square");
  const double scale = std::max(1.0, b.norm());
  if ((b - b.adjoint()).norm() > 1e-9 * scale)
    throw NotHermitian("matrix is not Hermitian within 1e-9");
  if (nt < 1 || nt > b.rows())
    throw DimensionMismatch("filter rank must satisfy 1 <= nt <= matrix dimension");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig((b + b.adjoint()) * 0.5);
  return eig.eigenvectors().leftCols(nt);
}

SelectionResult select_ojs1(const ChannelRealization& real, const SystemConfig& config,
                            double power, const SelectionOptions& opts) {
  const auto grams = receiver_grams(real, /*normalized=*/false);
  const double coeff = power / config.nj;
  auto [subset, objective] =
      pick_subset(config.s, config.k, Direction::Minimize, opts.greedy,
                  [&](const std::vector<int>& t) {
                    return residual_product(sum_over(grams, t), config.nt, coeff);
                  });
  return finish_result(SchemeTag::OJS1, std::move(subset), objective, grams, config);
}

SelectionResult select_ojs2(const ChannelRealization& real, const SystemConfig& config,
                            double power, const SelectionOptions& opts) {
  const auto normalized = receiver_grams(real, /*normalized=*/true);
  const auto raw = receiver_grams(real, /*normalized=*/false);
  auto [subset, objective] =
      pick_subset(config.s, config.k, Direction::Minimize, opts.greedy,
                  [&](const std::vector<int>& t) {
                    return residual_product(sum_over(normalized, t), config.nt, power);
                  });
  return finish_result(SchemeTag::OJS2, std::move(subset), objective, raw, config);
}

SelectionResult select_random(const ChannelRealization& real, const SystemConfig& config,
                              Rng& rng) {
  // Partial Fisher-Yates over the pool indices; the sorted prefix is a
  // uniformly distributed k-subset.
  std::vector<int> pool(static_cast<std::size_t>(config.s));
  for (int i = 0; i < config.s; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (int i = 0; i < config.k; ++i) {
    const auto j = static_cast<std::size_t>(i) +
                   rng.uniform_below(static_cast<std::uint64_t>(config.s - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
  }
  std::vector<int> subset(pool.begin(), pool.begin() + config.k);
  std::sort(subset.begin(), subset.end());

  const auto grams = receiver_grams(real, /*normalized=*/false);
  SelectionResult out = finish_result(
      SchemeTag::RANDOM, std::move(subset), std::numeric_limits<double>::quiet_NaN(), grams,
      config);
  return out;
}

SelectionResult select_capacity_max(const ChannelRealization& real,
                                    const SystemConfig& config, double power,
                                    const SelectionOptions& opts) {
  const auto grams = receiver_grams(real, /*normalized=*/false);
  auto [subset, objective] =
      pick_subset(config.s, config.k, Direction::Maximize, opts.greedy,
                  [&](const std::vector<int>& t) {
                    return bob_capacity(real.h0, gather(real.h_jam, t), power, config);
                  });
  return finish_result(SchemeTag::CAPMAX_BOB, std::move(subset), objective, grams,
                                 config);
}

SelectionResult select_secrecy_max(const ChannelRealization& real,
                                   const SystemConfig& config, double power,
                                   const SelectionOptions& opts) {
  const auto grams = receiver_grams(real, /*normalized=*/false);
  auto score = [&](const std::vector<int>& t) {
    const Eigen::MatrixXcd v = build_postprocessor(sum_over(grams, t), config.nt);
    const double r_bob = bob_rate(real.h0, gather(real.h_jam, t), v, power, config);
    const double c_eve = eve_capacity(real.g0, gather(real.g_jam, t), power, config);
    return secrecy_rate(r_bob, c_eve);
  };
  auto [subset, objective] =
      pick_subset(config.s, config.k, Direction::Maximize, opts.greedy, score);
  return finish_result(SchemeTag::SECRECY_MAX, std::move(subset), objective, grams,
                                 config);
}

SelectionResult run_selection(SchemeTag tag, const ChannelRealization& real,
                              const SystemConfig& config, double power, Rng& rng,
                              const SelectionOptions& opts) {
  switch (tag) {
    case SchemeTag::OJS1: return select_ojs1(real, config, power, opts);
    case SchemeTag::OJS2: return select_ojs2(real, config, power, opts);
    case SchemeTag::RANDOM: return select_random(real, config, rng);
    case SchemeTag::CAPMAX_BOB: return select_capacity_max(real, config, power, opts);
    case SchemeTag::SECRECY_MAX: return select_secrecy_max(real, config, power, opts);
  }
  throw Error("unhandled selection scheme");
}

}  // namespace ojs
