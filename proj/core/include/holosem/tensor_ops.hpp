#pragma once

// Exact-backend binding arithmetic: outer products, matrix-vector
// application, and order-3 tensor contractions. Convention throughout the
// library: an encoded pair is outer(filler, role) — filler on the row
// (output) side, role on the column (cue) side — so matvec by a role cue
// returns the filler and matvec_transposed by a filler cue returns the role.

#include "holosem/hypervector.hpp"

namespace holosem {

// M_ij = a_i * b_j.
DenseMatrix outer(const HyperVector& a, const HyperVector& b);

// Standard matrix-vector product; m.cols must equal v.dim.
HyperVector matvec(const DenseMatrix& m, const HyperVector& v);

// Transposed application (M^T v); m.rows must equal v.dim.
HyperVector matvec_transposed(const DenseMatrix& m, const HyperVector& v);

// Contract index 1 with `left`: out_jk = sum_i t_ijk * left_i.
DenseMatrix contract3_left(const Order3Tensor& t, const HyperVector& left);

// Contract index 3 with `right`: out_ij = sum_k t_ijk * right_k.
DenseMatrix contract3_right(const Order3Tensor& t, const HyperVector& right);

// Contract both outer indices: out_j = sum_ik t_ijk * left_i * right_k.
HyperVector contract3_both(const Order3Tensor& t, const HyperVector& left,
                           const HyperVector& right);

}  // namespace holosem
