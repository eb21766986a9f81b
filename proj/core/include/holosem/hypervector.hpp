#pragma once

// Dense real vector/matrix/tensor value types. These are the carriers for
// every representation in the library: nouns and semantic pointers are
// HyperVectors, adjectives and intransitive verbs are DenseMatrix under the
// exact backend, transitive verbs are Order3Tensor. All coordinates are
// 64-bit doubles; values are immutable-by-convention after construction and
// safe to share across threads.

#include <cstddef>
#include <vector>

#include "holosem/rng.hpp"

namespace holosem {

struct HyperVector {
  std::vector<double> coords;

  HyperVector() = default;
  explicit HyperVector(std::size_t dim) : coords(dim, 0.0) {}
  explicit HyperVector(std::vector<double> values) : coords(std::move(values)) {}

  std::size_t dim() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }
  double& operator[](std::size_t i) { return coords[i]; }

  double norm() const;
  bool all_finite() const;

  // Identity; lets generic payload code flatten vectors, matrices, and
  // tensors uniformly.
  const HyperVector& flatten() const { return *this; }

  HyperVector& operator+=(const HyperVector& other);
  HyperVector& operator-=(const HyperVector& other);
  HyperVector& operator*=(double scale);
};

HyperVector operator+(HyperVector lhs, const HyperVector& rhs);
HyperVector operator-(HyperVector lhs, const HyperVector& rhs);
HyperVector operator*(HyperVector v, double scale);
HyperVector operator*(double scale, HyperVector v);

double dot(const HyperVector& a, const HyperVector& b);

// Cosine similarity in [-1, 1]. Throws DimensionError on mismatched dims,
// InvalidInputError if either vector is zero (similarity is undefined, never
// silently 0).
double cosine(const HyperVector& a, const HyperVector& b);

// Unit-norm copy; throws InvalidInputError on a zero vector.
HyperVector normalized(const HyperVector& v);
void normalize_in_place(HyperVector& v);

// Unit impulse at a given index: the identity element of circular
// convolution when index == 0.
HyperVector unit_impulse(std::size_t dim, std::size_t index = 0);

// Random semantic pointer: coordinates i.i.d. N(0, 1/dim), then
// L2-normalized. Two independent draws have expected cosine 0 with standard
// deviation about 1/sqrt(dim). Throws DimensionError for dim == 0.
HyperVector random_unit(std::size_t dim, Rng& rng);

struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> entries;  // row-major

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0.0) {}
  DenseMatrix(std::size_t r, std::size_t c, std::vector<double> values);

  double operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  double& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }

  double frobenius_norm() const;
  bool all_finite() const;

  // Row-major flattening, used for whole-payload cosine comparisons.
  HyperVector flatten() const { return HyperVector(entries); }

  static DenseMatrix identity(std::size_t n);

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(double scale);
};

DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs);

struct Order3Tensor {
  std::size_t d1 = 0;
  std::size_t d2 = 0;
  std::size_t d3 = 0;
  std::vector<double> entries;  // index order (i, j, k): ((i * d2) + j) * d3 + k

  Order3Tensor() = default;
  Order3Tensor(std::size_t n1, std::size_t n2, std::size_t n3)
      : d1(n1), d2(n2), d3(n3), entries(n1 * n2 * n3, 0.0) {}

  double operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return entries[(i * d2 + j) * d3 + k];
  }
  double& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return entries[(i * d2 + j) * d3 + k];
  }

  double frobenius_norm() const;
  bool all_finite() const;
  HyperVector flatten() const { return HyperVector(entries); }

  Order3Tensor& operator+=(const Order3Tensor& other);
  Order3Tensor& operator*=(double scale);
};

}  // namespace holosem
