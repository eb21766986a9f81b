#include "holosem/tensor_ops.hpp"

#include "holosem/errors.hpp"

namespace holosem {

DenseMatrix outer(const HyperVector& a, const HyperVector& b) {
  DenseMatrix m(a.dim(), b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const double ai = a[i];
    for (std::size_t j = 0; j < b.dim(); ++j) {
      m(i, j) = ai * b[j];
    }
  }
  return m;
}

HyperVector matvec(const DenseMatrix& m, const HyperVector& v) {
  if (m.cols != v.dim()) {
    throw DimensionError("matvec: matrix cols must equal vector dim");
  }
  HyperVector out(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < m.cols; ++j) sum += m(i, j) * v[j];
    out[i] = sum;
  }
  return out;
}

HyperVector matvec_transposed(const DenseMatrix& m, const HyperVector& v) {
  if (m.rows != v.dim()) {
    throw DimensionError("matvec_transposed: matrix rows must equal vector dim");
  }
  HyperVector out(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    const double vi = v[i];
    for (std::size_t j = 0; j < m.cols; ++j) out[j] += m(i, j) * vi;
  }
  return out;
}

DenseMatrix contract3_left(const Order3Tensor& t, const HyperVector& left) {
  if (t.d1 != left.dim()) {
    throw DimensionError("contract3_left: index-1 extent must equal vector dim");
  }
  DenseMatrix out(t.d2, t.d3);
  for (std::size_t i = 0; i < t.d1; ++i) {
    const double li = left[i];
    if (li == 0.0) continue;
    for (std::size_t j = 0; j < t.d2; ++j) {
      for (std::size_t k = 0; k < t.d3; ++k) {
        out(j, k) += t(i, j, k) * li;
      }
    }
  }
  return out;
}

DenseMatrix contract3_right(const Order3Tensor& t, const HyperVector& right) {
  if (t.d3 != right.dim()) {
    throw DimensionError("contract3_right: index-3 extent must equal vector dim");
  }
  DenseMatrix out(t.d1, t.d2);
  for (std::size_t i = 0; i < t.d1; ++i) {
    for (std::size_t j = 0; j < t.d2; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < t.d3; ++k) sum += t(i, j, k) * right[k];
      out(i, j) += sum;
    }
  }
  return out;
}

HyperVector contract3_both(const Order3Tensor& t, const HyperVector& left,
                           const HyperVector& right) {
  if (t.d1 != left.dim() || t.d3 != right.dim()) {
    throw DimensionError("contract3_both: contracted extents must match vector dims");
  }
  HyperVector out(t.d2);
  for (std::size_t i = 0; i < t.d1; ++i) {
    const double li = left[i];
    if (li == 0.0) continue;
    for (std::size_t j = 0; j < t.d2; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < t.d3; ++k) sum += t(i, j, k) * right[k];
      out[j] += li * sum;
    }
  }
  return out;
}

}  // namespace holosem
