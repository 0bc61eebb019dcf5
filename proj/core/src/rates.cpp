// SPDX-License-Identifier: Apache-2.0
#include "ojs/rates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "ojs/errors.hpp"

namespace ojs {
namespace {

// log2 det of a Hermitian positive definite matrix through its Cholesky
// factor; never forms a determinant or an inverse.
double logdet_hpd_bits(const Eigen::MatrixXcd& m) {
  Eigen::LLT<Eigen::MatrixXcd> llt(m);
  if (llt.info() != Eigen::Success)
    throw Error("matrix is not positive definite within working precision");
  double acc = 0.0;
  const auto& l = llt.matrixLLT();
  for (Eigen::Index i = 0; i < l.rows(); ++i) acc += std::log(std::real(l(i, i)));
  return 2.0 * acc / std::numbers::ln2;
}

// sum_k M_k M_k^H over the listed channels, as a dim x dim matrix.
Eigen::MatrixXcd jamming_gram(const std::vector<Eigen::MatrixXcd>& jam, Eigen::Index dim) {
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& m : jam) {
    if (m.rows() != dim)
      throw DimensionMismatch("jamming channel row count does not match the receive dimension");
    sum.noalias() += m * m.adjoint();
  }
  return sum;
}

}  // namespace

double bob_capacity(const Eigen::MatrixXcd& h0, const std::vector<Eigen::MatrixXcd>& jam,
                    double power, const SystemConfig& config) {
  const Eigen::Index nr = h0.rows();
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(nr, nr);
  const Eigen::MatrixXcd signal = (power / config.nt) * (h0 * h0.adjoint());
  const Eigen::MatrixXcd noise = (power / config.nj) * jamming_gram(jam, nr);
  // det(I + A (I + B)^-1) = det(I + A + B) / det(I + B)
  return logdet_hpd_bits(eye + signal + noise) - logdet_hpd_bits(eye + noise);
}

double bob_rate(const Eigen::MatrixXcd& h0, const std::vector<Eigen::MatrixXcd>& jam,
                const Eigen::MatrixXcd& v, double power, const SystemConfig& config) {
  if (v.rows() != h0.rows())
    throw DimensionMismatch("receive filter rows must match the receive antenna count");
  const Eigen::Index nt = v.cols();
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(nt, nt);
  const Eigen::MatrixXcd vh0 = v.adjoint() * h0;
  const Eigen::MatrixXcd signal = (power / config.nt) * (vh0 * vh0.adjoint());
  Eigen::MatrixXcd noise = Eigen::MatrixXcd::Zero(nt, nt);
  for (const auto& m : jam) {
    const Eigen::MatrixXcd vm = v.adjoint() * m;
    noise.noalias() += (power / config.nj) * (vm * vm.adjoint());
  }
  return logdet_hpd_bits(eye + signal + noise) - logdet_hpd_bits(eye + noise);
}

double bob_jamming_loss(const std::vector<Eigen::MatrixXcd>& jam, const Eigen::MatrixXcd& v,
                        double power, const SystemConfig& config) {
  const Eigen::Index nt = v.cols();
  Eigen::MatrixXcd noise = Eigen::MatrixXcd::Identity(nt, nt);
  for (const auto& m : jam) {
    const Eigen::MatrixXcd vm = v.adjoint() * m;
    noise.noalias() += (power / config.nj) * (vm * vm.adjoint());
  }
  return logdet_hpd_bits(noise);
}

double eve_capacity(const Eigen::MatrixXcd& g0, const std::vector<Eigen::MatrixXcd>& jam,
                    double power, const SystemConfig& config) {
  const Eigen::Index ne = g0.rows();
  const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(ne, ne);
  const Eigen::MatrixXcd signal = (power / config.nt) * (g0 * g0.adjoint());
  const Eigen::MatrixXcd noise = (power / config.nj) * jamming_gram(jam, ne);
  return logdet_hpd_bits(eye + signal + noise) - logdet_hpd_bits(eye + noise);
}

double eve_saturated_rate(const Eigen::MatrixXcd& g0, const std::vector<Eigen::MatrixXcd>& jam,
                          const SystemConfig& config) {
  const Eigen::Index ne = g0.rows();
  if (static_cast<Eigen::Index>(jam.size()) * config.nj < ne)
    throw SingularJammingGram(
        "selected jamming spans only " + std::to_string(jam.size() * config.nj) +
        " of " + std::to_string(ne) + " eavesdropper dimensions; the high-power limit diverges");
  const Eigen::MatrixXcd gram = jamming_gram(jam, ne);
  const Eigen::MatrixXcd signal =
      (static_cast<double>(config.nj) / config.nt) * (g0 * g0.adjoint());
  try {
    return logdet_hpd_bits(gram + signal) - logdet_hpd_bits(gram);
  } catch (const Error&) {
    throw SingularJammingGram("aggregate jamming Gram matrix is numerically singular");
  }
}

double secrecy_rate(double r_bob, double c_eve) { return std::max(0.0, r_bob - c_eve); }

std::uint64_t sufficient_jammer_count(double delta_bits, double power,
                                      const SystemConfig& config, double kappa2) {
  if (!(delta_bits > 0.0))
    throw NonpositiveDelta("rate gap must be strictly positive, got " +
                           std::to_string(delta_bits));
  const double denom = config.nt * (std::exp2(delta_bits / config.nt) - 1.0);
  const double bracket = 4.0 * kappa2 * kappa2 * config.k * power / denom;
  const double quantizer_size = std::ceil(std::pow(bracket, 0.5 * config.nt * config.nj));
  const double k_d = static_cast<double>(config.k);
  const double pool = (k_d - 1.0) * quantizer_size + 1.0;
  if (!std::isfinite(pool) || pool >= static_cast<double>(std::numeric_limits<std::uint64_t>::max()))
    return std::numeric_limits<std::uint64_t>::max();
  return std::max<std::uint64_t>(static_cast<std::uint64_t>(config.k),
                                 static_cast<std::uint64_t>(pool));
}

DofEstimate dof_slope(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 2)
    throw DegenerateWindow("need at least two (power, rate) points to fit a slope");
  double mean_x = 0.0, mean_y = 0.0;
  for (const auto& [power, rate] : points) {
    if (!(power > 0.0)) throw DegenerateWindow("powers must be strictly positive");
    mean_x += std::log2(power);
    mean_y += rate;
  }
  mean_x /= static_cast<double>(points.size());
  mean_y /= static_cast<double>(points.size());
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [power, rate] : points) {
    const double dx = std::log2(power) - mean_x;
    sxx += dx * dx;
    sxy += dx * (rate - mean_y);
  }
  if (sxx <= 1e-12) throw DegenerateWindow("all points share one power; slope is undefined");
  return {sxy / sxx, points};
}

RateReport evaluate_rates(const ChannelRealization& real, const SystemConfig& config,
                          const SelectionResult& sel, double power) {
  std::vector<Eigen::MatrixXcd> h_sel, g_sel;
  h_sel.reserve(sel.indices.size());
  g_sel.reserve(sel.indices.size());
  for (int idx : sel.indices) {
    if (idx < 0 || idx >= static_cast<int>(real.h_jam.size()))
      throw DimensionMismatch("selected jammer index " + std::to_string(idx) +
                              " is outside the sampled pool");
    h_sel.push_back(real.h_jam[static_cast<std::size_t>(idx)]);
    g_sel.push_back(real.g_jam[static_cast<std::size_t>(idx)]);
  }
  RateReport report;
  report.c_bob = bob_capacity(real.h0, h_sel, power, config);
  report.r_bob = bob_rate(real.h0, h_sel, sel.postprocessor, power, config);
  report.r_bob_loss = bob_jamming_loss(h_sel, sel.postprocessor, power, config);
  report.c_eve = eve_capacity(real.g0, g_sel, power, config);
  report.secrecy = secrecy_rate(report.r_bob, report.c_eve);
  return report;
}

}  // namespace ojs
