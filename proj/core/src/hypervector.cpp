#include "holosem/hypervector.hpp"

#include <cmath>
#include <string>

#include "holosem/errors.hpp"

namespace holosem {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* where) {
  if (a != b) {
    throw DimensionError(std::string(where) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

double HyperVector::norm() const {
  double sum = 0.0;
  for (double x : coords) sum += x * x;
  return std::sqrt(sum);
}

bool HyperVector::all_finite() const {
  for (double x : coords) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

HyperVector& HyperVector::operator+=(const HyperVector& other) {
  require_same_dim(dim(), other.dim(), "HyperVector::operator+=");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += other.coords[i];
  return *this;
}

HyperVector& HyperVector::operator-=(const HyperVector& other) {
  require_same_dim(dim(), other.dim(), "HyperVector::operator-=");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= other.coords[i];
  return *this;
}

HyperVector& HyperVector::operator*=(double scale) {
  for (double& x : coords) x *= scale;
  return *this;
}

HyperVector operator+(HyperVector lhs, const HyperVector& rhs) {
  lhs += rhs;
  return lhs;
}

HyperVector operator-(HyperVector lhs, const HyperVector& rhs) {
  lhs -= rhs;
  return lhs;
}

HyperVector operator*(HyperVector v, double scale) {
  v *= scale;
  return v;
}

HyperVector operator*(double scale, HyperVector v) {
  v *= scale;
  return v;
}

double dot(const HyperVector& a, const HyperVector& b) {
  require_same_dim(a.dim(), b.dim(), "dot");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
  return sum;
}

double cosine(const HyperVector& a, const HyperVector& b) {
  require_same_dim(a.dim(), b.dim(), "cosine");
  const double norm_a = a.norm();
  const double norm_b = b.norm();
  if (norm_a == 0.0 || norm_b == 0.0) {
    throw InvalidInputError("cosine: similarity undefined for a zero vector");
  }
  return dot(a, b) / (norm_a * norm_b);
}

HyperVector normalized(const HyperVector& v) {
  HyperVector out = v;
  normalize_in_place(out);
  return out;
}

void normalize_in_place(HyperVector& v) {
  const double n = v.norm();
  if (n == 0.0) {
    throw InvalidInputError("normalize: zero vector has no direction");
  }
  v *= 1.0 / n;
}

HyperVector unit_impulse(std::size_t dim, std::size_t index) {
  if (dim == 0) throw DimensionError("unit_impulse: dim must be >= 1");
  if (index >= dim) throw DimensionError("unit_impulse: index out of range");
  HyperVector v(dim);
  v[index] = 1.0;
  return v;
}

HyperVector random_unit(std::size_t dim, Rng& rng) {
  if (dim == 0) throw DimensionError("random_unit: dim must be >= 1");
  const double sigma = 1.0 / std::sqrt(static_cast<double>(dim));
  HyperVector v(dim);
  do {
    for (std::size_t i = 0; i < dim; ++i) v[i] = sigma * rng.next_gaussian();
  } while (v.norm() == 0.0);  // zero draw has probability zero
  normalize_in_place(v);
  return v;
}

DenseMatrix::DenseMatrix(std::size_t r, std::size_t c, std::vector<double> values)
    : rows(r), cols(c), entries(std::move(values)) {
  if (entries.size() != rows * cols) {
    throw DimensionError("DenseMatrix: rows*cols must equal entry count");
  }
}

double DenseMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (double x : entries) sum += x * x;
  return std::sqrt(sum);
}

bool DenseMatrix::all_finite() const {
  for (double x : entries) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  if (rows != other.rows || cols != other.cols) {
    throw DimensionError("DenseMatrix::operator+=: shape mismatch");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += other.entries[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  if (rows != other.rows || cols != other.cols) {
    throw DimensionError("DenseMatrix::operator-=: shape mismatch");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] -= other.entries[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(double scale) {
  for (double& x : entries) x *= scale;
  return *this;
}

DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

double Order3Tensor::frobenius_norm() const {
  double sum = 0.0;
  for (double x : entries) sum += x * x;
  return std::sqrt(sum);
}

bool Order3Tensor::all_finite() const {
  for (double x : entries) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

Order3Tensor& Order3Tensor::operator+=(const Order3Tensor& other) {
  if (d1 != other.d1 || d2 != other.d2 || d3 != other.d3) {
    throw DimensionError("Order3Tensor::operator+=: shape mismatch");
  }
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i] += other.entries[i];
  return *this;
}

Order3Tensor& Order3Tensor::operator*=(double scale) {
  for (double& x : entries) x *= scale;
  return *this;
}

}  // namespace holosem
