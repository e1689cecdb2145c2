#include "jscc/source_exponent.hpp"

#include <cmath>
#include <stdexcept>

namespace jscc {

double source_function(const Source& q, double rho) {
  if (!(rho >= 0.0)) throw std::invalid_argument("source_function: rho must be >= 0");
  const double a = 1.0 / (1.0 + rho);
  double sum = 0.0;
  for (double v : q.probs) sum += std::pow(v, a);
  return (1.0 + rho) * std::log2(sum);
}

double source_function_slope(const Source& q, double rho) { return tilted_entropy(q, rho); }

ExtReal source_error_exponent(const Source& q, double rate_bits) {
  const double h = entropy(q.probs);
  if (rate_bits <= h) return ExtReal::of(0.0);
  const double top = log2_size(q.alphabet_size());
  if (rate_bits > top + 1e-12) return ExtReal::infinity();
  const ExtReal rho = tilted_entropy_root(q, std::min(rate_bits, top));
  return kl_divergence(tilted_source(q, rho).probs, q.probs);
}

double source_critical_rate(const Source& q) { return tilted_entropy(q, 1.0); }

}  // namespace jscc
