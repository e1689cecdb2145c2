#include "jscc/channel_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "jscc/channel_exponent.hpp"
#include "jscc/opt.hpp"

namespace jscc {

Channel bsc(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 0.5)) {
    throw std::invalid_argument("bsc: crossover probability outside [0, 1/2]");
  }
  return Channel(2, 2, {1.0 - epsilon, epsilon, epsilon, 1.0 - epsilon});
}

Channel bec(double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("bec: erasure probability outside [0, 1]");
  }
  return Channel(2, 3, {1.0 - alpha, alpha, 0.0, 0.0, alpha, 1.0 - alpha});
}

Channel q_ary_symmetric(std::size_t k, double epsilon) {
  if (k < 2) throw std::invalid_argument("q_ary_symmetric: alphabet size must be >= 2");
  const double off = epsilon / static_cast<double>(k - 1);
  if (!(epsilon >= 0.0) || off > 1.0 - epsilon + 1e-15) {
    throw std::invalid_argument("q_ary_symmetric: epsilon out of range");
  }
  std::vector<double> m(k * k, off);
  for (std::size_t i = 0; i < k; ++i) m[i * k + i] = 1.0 - epsilon;
  return Channel(k, k, std::move(m));
}

Channel gallager_6x4(double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0 / 18.0)) {
    throw std::invalid_argument("gallager_6x4: epsilon outside [0, 1/18]");
  }
  const double d = 1.0 - 18.0 * epsilon;
  const double s = 6.0 * epsilon;
  const double h = 0.5 - epsilon;
  return Channel(6, 4,
                 {
                     d, s, s, s,  //
                     s, d, s, s,  //
                     s, s, d, s,  //
                     s, s, s, d,  //
                     h, h, epsilon, epsilon,  //
                     epsilon, epsilon, h, h,  //
                 });
}

double gaussian_tail(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

std::vector<double> quantizer_thresholds(int bits, double step_size) {
  if (bits < 1) throw std::invalid_argument("quantizer: bits must be >= 1");
  if (!(step_size > 0.0)) throw std::invalid_argument("quantizer: step_size must be positive");
  const int levels = 1 << bits;
  std::vector<double> t(levels - 1);
  for (int j = 0; j <= levels - 2; ++j) {
    t[j] = (j + 1 - levels / 2) * step_size;
  }
  return t;
}

namespace {

Channel quantized_from_cdf(const QuantizerConfig& cfg,
                           const std::vector<std::vector<double>>& cdf_at_thresholds) {
  const int levels = 1 << cfg.bits;
  std::vector<double> m(2 * levels, 0.0);
  for (int i = 0; i < 2; ++i) {
    double prev = 0.0;
    for (int j = 0; j < levels; ++j) {
      const double cur = j == levels - 1 ? 1.0 : cdf_at_thresholds[i][j];
      m[i * levels + j] = std::max(cur - prev, 0.0);
      prev = cur;
    }
  }
  return Channel(2, levels, std::move(m));
}

}  // namespace

Channel awgn_quantized(const QuantizerConfig& cfg) {
  const auto thresholds = quantizer_thresholds(cfg.bits, cfg.step_size);
  const double snr = std::pow(10.0, cfg.snr_db / 10.0);
  const double root_snr = std::sqrt(snr);
  // P(Z <= T | X = i) = 1 - Q((T - u_i) sqrt(SNR)), u_i = 2i - 1
  std::vector<std::vector<double>> cdf(2, std::vector<double>(thresholds.size()));
  for (int i = 0; i < 2; ++i) {
    const double u = 2.0 * i - 1.0;
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
      cdf[i][j] = 1.0 - gaussian_tail((thresholds[j] - u) * root_snr);
    }
  }
  return quantized_from_cdf(cfg, cdf);
}

Channel rayleigh_quantized(const QuantizerConfig& cfg) {
  const auto thresholds = quantizer_thresholds(cfg.bits, cfg.step_size);
  const double snr = std::pow(10.0, cfg.snr_db / 10.0);
  const double n0 = 2.0 / snr;
  auto cdf_plus = [&](double z) {
    // conditional CDF of the received value given the +1 signal
    const double tail = gaussian_tail(z / std::sqrt(n0 / 2.0));
    const double scale = std::exp(-z * z / (n0 + 1.0)) / std::sqrt(n0 + 1.0);
    const double inner = 1.0 - gaussian_tail(z / std::sqrt(n0 * (n0 + 1.0) / 2.0));
    return 1.0 - tail - scale * inner;
  };
  std::vector<std::vector<double>> cdf(2, std::vector<double>(thresholds.size()));
  for (std::size_t j = 0; j < thresholds.size(); ++j) {
    cdf[1][j] = cdf_plus(thresholds[j]);
    cdf[0][j] = 1.0 - cdf_plus(-thresholds[j]);
  }
  return quantized_from_cdf(cfg, cdf);
}

Channel make_quantized(const QuantizerConfig& cfg, QuantizedKind kind) {
  return kind == QuantizedKind::Awgn ? awgn_quantized(cfg) : rayleigh_quantized(cfg);
}

QuantizerConfig optimize_step(double snr_db, int bits, QuantizedKind kind) {
  QuantizerConfig cfg;
  cfg.bits = bits;
  cfg.snr_db = snr_db;
  if (bits == 1) {
    cfg.step_size = 1.0;  // the single threshold sits at 0 regardless
    return cfg;
  }
  const double snr = std::pow(10.0, snr_db / 10.0);
  const double sigma = 1.0 / std::sqrt(snr);
  const double hi = 4.0 * (1.0 + sigma);
  auto cap_of_step = [&](double step) {
    QuantizerConfig c = cfg;
    c.step_size = step;
    const Channel w = make_quantized(c, kind);
    if (auto prof = symmetric_profile(w)) return prof->capacity();
    return capacity(w).value;
  };
  const GoldenResult g = maximize_golden(cap_of_step, 1e-6, hi, 1e-7 * hi);
  cfg.step_size = g.x;
  cfg.step_at_bracket_edge = g.x > 0.99 * hi || g.x < 2e-6;
  return cfg;
}

}  // namespace jscc
