#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace jscc {

// Raised when an iterative method fails to converge (as opposed to invalid
// input, which raises std::invalid_argument).
struct NumericFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A nonnegative quantity that is either a finite double or the symbolic
// +infinity. Used for exponents that blow up (E_sp below R_inf, e(R,Q)
// beyond log|S|) and for the tilt parameter at rate log|S|, so those edge
// cases never turn into NaN arithmetic.
class ExtReal {
 public:
  ExtReal() = default;
  static ExtReal infinity() {
    ExtReal e;
    e.infinite_ = true;
    return e;
  }
  static ExtReal of(double v) {
    ExtReal e;
    e.v_ = v;
    return e;
  }
  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  double value() const;  // throws if infinite
  double value_or(double fallback) const { return infinite_ ? fallback : v_; }
  std::string str() const;  // "inf" or decimal

  friend bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
  }
  friend bool operator<(const ExtReal& a, const ExtReal& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.v_ < b.v_;
  }

 private:
  double v_ = 0.0;
  bool infinite_ = false;
};

// Finite source distribution Q over S. Every entry must be strictly positive
// and the entries must sum to one within 1e-12.
struct Source {
  std::vector<double> probs;

  explicit Source(std::vector<double> p);
  std::size_t alphabet_size() const { return probs.size(); }
  bool is_uniform(double tol = 1e-12) const;
};

// Row-stochastic |X| x |Y| transition matrix W, stored row-major.
struct Channel {
  std::size_t input_size = 0;
  std::size_t output_size = 0;
  std::vector<double> p;

  Channel(std::size_t nx, std::size_t ny, std::vector<double> data);
  static Channel from_rows(const std::vector<std::vector<double>>& rows);

  double at(std::size_t x, std::size_t y) const { return p[x * output_size + y]; }
  std::vector<double> row(std::size_t x) const;
  std::vector<std::vector<double>> rows() const;
};

// Normalization of Q^{1/(1+rho)}; rho = infinity gives the uniform
// distribution.
struct TiltedDist {
  std::vector<double> probs;
  ExtReal rho;
};

// Entropy in bits, with the 0 log 0 = 0 convention. Throws on inputs that are
// not a probability distribution.
double entropy(const std::vector<double>& dist);

// D(p || q) in bits. Returns the infinity marker when q has a zero where p is
// positive; throws on length mismatch or invalid distributions.
ExtReal kl_divergence(const std::vector<double>& p, const std::vector<double>& q);

TiltedDist tilted_source(const Source& q, double rho);
TiltedDist tilted_source(const Source& q, ExtReal rho);

// Entropy of the tilted distribution, H(Q^{(rho)}), in bits.
double tilted_entropy(const Source& q, double rho);

// Unique rho with H(Q^{(rho)}) = rate for H(Q) <= rate <= log|S|; returns the
// infinity marker at rate = log|S|. Requires a nonuniform source (the entropy
// of the tilted family is constant for uniform Q, so the root is not unique).
ExtReal tilted_entropy_root(const Source& q, double rate_bits);

double binary_entropy(double p);
// Binary divergence D~(delta || q) = delta log(delta/q) + (1-delta) log((1-delta)/(1-q)).
double binary_divergence(double delta, double q);

double geometric_mean(const std::vector<double>& probs);

double log2_size(std::size_t n);

}  // namespace jscc
