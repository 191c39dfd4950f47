#pragma once

#include "nccalc/poly.hpp"

namespace nccalc::detail {

/// gcd of two nonzero polynomials from images modulo word-sized primes
/// (Brown's dense interpolation in each prime, then CRT and rational
/// reconstruction), verified by exact division. Monic.
Poly modular_gcd(const Poly& a, const Poly& b);

}  // namespace nccalc::detail
