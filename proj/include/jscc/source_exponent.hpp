#pragma once

#include "jscc/prob.hpp"

namespace jscc {

// Gallager's source function E_s(rho, Q) = (1+rho) log2 sum_s Q(s)^{1/(1+rho)}.
double source_function(const Source& q, double rho);

// d/drho E_s(rho, Q) = H(Q^{(rho)}), in bits.
double source_function_slope(const Source& q, double rho);

// Source error exponent e(R, Q): 0 for R <= H(Q), D(Q^{(rho*)} || Q) for
// H(Q) <= R <= log|S| with H(Q^{(rho*)}) = R, infinity marker beyond log|S|.
ExtReal source_error_exponent(const Source& q, double rate_bits);

// Critical rate of the source, H(Q^{(1)}).
double source_critical_rate(const Source& q);

}  // namespace jscc
