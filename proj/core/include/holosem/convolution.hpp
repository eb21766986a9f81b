#pragma once

// Circular convolution (the holographic binding operator), involution, and
// circular correlation (the holographic unbinding operator).
//
//   (a (*) b)_k = sum_j a_j * b_{(k-j) mod n}        commutative, bilinear
//   a*_i        = a_{(-i) mod n}                     involution(involution(a)) = a
//   corr(t, c)  = t (*) involution(c)                recovers the other factor, plus noise
//
// Two convolution routes are provided: a direct O(n^2) summation and an
// O(n log n) FFT path (any dimension, not just powers of two). The naive
// route is the correctness oracle for the FFT route; they agree to 1e-9
// max-abs at least up to dim 4096. Binding never auto-normalizes: weighted
// sums of bound pairs must keep their weights.

#include "holosem/hypervector.hpp"

namespace holosem {

// Direct summation, O(n^2). Dimension mismatch throws DimensionError.
HyperVector circ_conv_naive(const HyperVector& a, const HyperVector& b);

// FFT route, O(n log n), any dimension >= 1.
HyperVector circ_conv_fft(const HyperVector& a, const HyperVector& b);

// Dispatching convolution: FFT for large dims, direct summation for small
// ones where the transform overhead dominates.
HyperVector circ_conv(const HyperVector& a, const HyperVector& b);

// Index reversal a*_i = a_{(-i) mod n}; its own inverse.
HyperVector involution(const HyperVector& a);

// Circular correlation: circ_conv(trace, involution(cue)).
HyperVector circ_corr(const HyperVector& trace, const HyperVector& cue);

}  // namespace holosem
