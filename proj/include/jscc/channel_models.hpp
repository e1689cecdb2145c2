#pragma once

#include <vector>

#include "jscc/prob.hpp"

namespace jscc {

Channel bsc(double epsilon);  // epsilon in [0, 1/2]
Channel bec(double alpha);    // outputs ordered {0, erasure, 1}
Channel q_ary_symmetric(std::size_t k, double epsilon);
// 6-input, 4-output channel with a jump in dE0/drho; epsilon in [0, 1/18].
Channel gallager_6x4(double epsilon);

// Gaussian tail probability Q(x) = P(N(0,1) > x).
double gaussian_tail(double x);

// Uniform m-bit soft-decision quantizer in front of a BPSK channel. The
// 2^m - 1 finite thresholds are (j+1-2^{m-1}) * step_size for j = 0..2^m-2.
struct QuantizerConfig {
  int bits = 1;
  double step_size = 1.0;
  double snr_db = 0.0;
  bool step_at_bracket_edge = false;  // diagnostic from optimize_step
};

std::vector<double> quantizer_thresholds(int bits, double step_size);

// Binary-input 2^m-output DMC induced by BPSK over AWGN with an m-bit
// quantizer; unit-energy antipodal signaling, SNR = 2/N0.
Channel awgn_quantized(const QuantizerConfig& cfg);

// Same construction for the unit-power Rayleigh-fading channel with fading
// amplitude unknown at the receiver.
Channel rayleigh_quantized(const QuantizerConfig& cfg);

enum class QuantizedKind { Awgn, Rayleigh };

// Quantizer step maximizing the capacity of the induced DMC at the given SNR.
QuantizerConfig optimize_step(double snr_db, int bits, QuantizedKind kind);

Channel make_quantized(const QuantizerConfig& cfg, QuantizedKind kind);

}  // namespace jscc
