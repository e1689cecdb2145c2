#include "jscc/prob.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace jscc {

namespace {

constexpr double kSumTol = 1e-12;

void check_distribution(const std::vector<double>& dist, const char* what) {
  if (dist.empty()) throw std::invalid_argument(std::string(what) + ": empty distribution");
  double sum = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    double v = dist[i];
    if (!(v >= 0.0) || v > 1.0) {
      throw std::invalid_argument(std::string(what) + "[" + std::to_string(i) +
                                  "] = " + std::to_string(v) + " is not in [0,1]");
    }
    sum += v;
  }
  if (std::fabs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument(std::string(what) + ": entries sum to " + std::to_string(sum) +
                                ", expected 1");
  }
}

}  // namespace

double ExtReal::value() const {
  if (infinite_) throw std::logic_error("ExtReal: value() on the infinity marker");
  return v_;
}

std::string ExtReal::str() const {
  if (infinite_) return "inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v_);
  return buf;
}

Source::Source(std::vector<double> p) : probs(std::move(p)) {
  if (probs.empty()) throw std::invalid_argument("source.probs: empty");
  double sum = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (!(probs[i] > 0.0) || probs[i] > 1.0) {
      throw std::invalid_argument("source.probs[" + std::to_string(i) + "] = " +
                                  std::to_string(probs[i]) + " must be in (0,1]");
    }
    sum += probs[i];
  }
  if (std::fabs(sum - 1.0) > kSumTol) {
    throw std::invalid_argument("source.probs: entries sum to " + std::to_string(sum) +
                                ", expected 1 within 1e-12");
  }
}

bool Source::is_uniform(double tol) const {
  const double u = 1.0 / static_cast<double>(probs.size());
  for (double v : probs) {
    if (std::fabs(v - u) > tol) return false;
  }
  return true;
}

Channel::Channel(std::size_t nx, std::size_t ny, std::vector<double> data)
    : input_size(nx), output_size(ny), p(std::move(data)) {
  if (nx == 0 || ny == 0) throw std::invalid_argument("channel.matrix: empty");
  if (p.size() != nx * ny) throw std::invalid_argument("channel.matrix: wrong element count");
  for (std::size_t x = 0; x < nx; ++x) {
    double sum = 0.0;
    for (std::size_t y = 0; y < ny; ++y) {
      double v = at(x, y);
      if (!(v >= 0.0) || v > 1.0) {
        throw std::invalid_argument("channel.matrix[" + std::to_string(x) + "][" +
                                    std::to_string(y) + "] = " + std::to_string(v) +
                                    " is not in [0,1]");
      }
      sum += v;
    }
    if (std::fabs(sum - 1.0) > kSumTol) {
      throw std::invalid_argument("channel.matrix[" + std::to_string(x) + "]: row sums to " +
                                  std::to_string(sum) + ", expected 1 within 1e-12");
    }
  }
}

Channel Channel::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("channel.matrix: empty");
  const std::size_t ny = rows[0].size();
  std::vector<double> data;
  data.reserve(rows.size() * ny);
  for (std::size_t x = 0; x < rows.size(); ++x) {
    if (rows[x].size() != ny) {
      throw std::invalid_argument("channel.matrix[" + std::to_string(x) +
                                  "]: ragged row (expected " + std::to_string(ny) + " entries)");
    }
    data.insert(data.end(), rows[x].begin(), rows[x].end());
  }
  return Channel(rows.size(), ny, std::move(data));
}

std::vector<double> Channel::row(std::size_t x) const {
  return std::vector<double>(p.begin() + x * output_size, p.begin() + (x + 1) * output_size);
}

std::vector<std::vector<double>> Channel::rows() const {
  std::vector<std::vector<double>> out;
  out.reserve(input_size);
  for (std::size_t x = 0; x < input_size; ++x) out.push_back(row(x));
  return out;
}

double entropy(const std::vector<double>& dist) {
  check_distribution(dist, "distribution");
  double h = 0.0;
  for (double v : dist) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

ExtReal kl_divergence(const std::vector<double>& p, const std::vector<double>& q) {
  if (p.size() != q.size()) throw std::invalid_argument("kl_divergence: length mismatch");
  check_distribution(p, "p");
  check_distribution(q, "q");
  double d = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0.0) {
      if (q[i] <= 0.0) return ExtReal::infinity();
      d += p[i] * std::log2(p[i] / q[i]);
    }
  }
  return ExtReal::of(std::max(d, 0.0));
}

TiltedDist tilted_source(const Source& q, double rho) {
  if (!(rho >= 0.0)) throw std::invalid_argument("tilted_source: rho must be >= 0");
  const double a = 1.0 / (1.0 + rho);
  std::vector<double> t(q.probs.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    t[i] = std::pow(q.probs[i], a);
    sum += t[i];
  }
  for (double& v : t) v /= sum;
  return {std::move(t), ExtReal::of(rho)};
}

TiltedDist tilted_source(const Source& q, ExtReal rho) {
  if (rho.is_infinite()) {
    std::vector<double> t(q.probs.size(), 1.0 / static_cast<double>(q.probs.size()));
    return {std::move(t), rho};
  }
  return tilted_source(q, rho.value());
}

double tilted_entropy(const Source& q, double rho) { return entropy(tilted_source(q, rho).probs); }

ExtReal tilted_entropy_root(const Source& q, double rate_bits) {
  if (q.is_uniform()) {
    throw std::invalid_argument("tilted_entropy_root: uniform source has no unique root");
  }
  const double h = entropy(q.probs);
  const double top = log2_size(q.alphabet_size());
  if (rate_bits < h - 1e-12 || rate_bits > top + 1e-12) {
    throw std::invalid_argument("tilted_entropy_root: rate " + std::to_string(rate_bits) +
                                " outside [H(Q), log|S|]");
  }
  if (rate_bits >= top - 1e-12) return ExtReal::infinity();
  if (rate_bits <= h) return ExtReal::of(0.0);

  double lo = 0.0;
  double hi = 1.0;
  while (tilted_entropy(q, hi) < rate_bits) {
    hi *= 2.0;
    if (hi > 1e15) return ExtReal::infinity();
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double f = tilted_entropy(q, mid) - rate_bits;
    if (std::fabs(f) <= 1e-13 || (hi - lo) <= 1e-14 * (1.0 + mid)) return ExtReal::of(mid);
    if (f < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return ExtReal::of(0.5 * (lo + hi));
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("binary_entropy: p outside [0,1]");
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double binary_divergence(double delta, double q) {
  if (!(delta >= 0.0 && delta <= 1.0)) {
    throw std::invalid_argument("binary_divergence: delta outside [0,1]");
  }
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("binary_divergence: q outside (0,1)");
  double d = 0.0;
  if (delta > 0.0) d += delta * std::log2(delta / q);
  if (delta < 1.0) d += (1.0 - delta) * std::log2((1.0 - delta) / (1.0 - q));
  return std::max(d, 0.0);
}

double geometric_mean(const std::vector<double>& probs) {
  double acc = 0.0;
  for (double v : probs) acc += std::log2(v);
  return std::exp2(acc / static_cast<double>(probs.size()));
}

double log2_size(std::size_t n) { return std::log2(static_cast<double>(n)); }

}  // namespace jscc
