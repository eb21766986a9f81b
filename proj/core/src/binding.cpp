#include "holosem/binding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "holosem/convolution.hpp"
#include "holosem/errors.hpp"
#include "holosem/tensor_ops.hpp"

namespace holosem {

BindingBackend BindingBackend::hrr(std::size_t dim) {
  if (dim < 2) throw DimensionError("BindingBackend::hrr: dim must be >= 2");
  return {BackendKind::Hrr, dim};
}

namespace {

void validate_structure(const RoleFillerStructure& structure, const char* where) {
  if (structure.pairs.empty()) {
    throw InvalidInputError(std::string(where) + ": empty role-filler structure");
  }
  const std::size_t rd = structure.role_dim();
  const std::size_t fd = structure.filler_dim();
  for (const RoleFiller& pair : structure.pairs) {
    if (pair.role.dim() != rd || pair.filler.dim() != fd) {
      throw DimensionError(std::string(where) + ": inconsistent pair dimensions");
    }
  }
}

}  // namespace

DenseMatrix encode_tensor(const RoleFillerStructure& structure) {
  validate_structure(structure, "encode_tensor");
  DenseMatrix sum(structure.filler_dim(), structure.role_dim());
  for (const RoleFiller& pair : structure.pairs) {
    sum += outer(pair.filler, pair.role);
  }
  return sum;
}

HyperVector encode_hrr(const RoleFillerStructure& structure, std::size_t dim) {
  validate_structure(structure, "encode_hrr");
  if (structure.role_dim() != dim || structure.filler_dim() != dim) {
    throw DimensionError("encode_hrr: roles and fillers must have the backend dim");
  }
  HyperVector sum(dim);
  for (const RoleFiller& pair : structure.pairs) {
    sum += circ_conv(pair.filler, pair.role);
  }
  return sum;
}

Encoded encode(const RoleFillerStructure& structure, const BindingBackend& backend) {
  if (backend.is_tensor()) return encode_tensor(structure);
  return encode_hrr(structure, backend.hrr_dim);
}

HyperVector unbind(const DenseMatrix& encoded, const HyperVector& cue) {
  return matvec(encoded, cue);
}

HyperVector unbind(const HyperVector& trace, const HyperVector& cue) {
  return circ_corr(trace, cue);
}

HyperVector unbind(const Encoded& encoded, const HyperVector& cue) {
  return std::visit([&](const auto& payload) { return unbind(payload, cue); }, encoded);
}

HyperVector extract_role(const DenseMatrix& encoded, const HyperVector& cue) {
  return matvec_transposed(encoded, cue);
}

HyperVector extract_role(const HyperVector& trace, const HyperVector& cue) {
  return circ_corr(trace, cue);
}

HyperVector extract_role(const Encoded& encoded, const HyperVector& cue) {
  return std::visit([&](const auto& payload) { return extract_role(payload, cue); },
                    encoded);
}

namespace {

// Gauss-Jordan inverse with partial pivoting; k is small (role counts).
// Returns false when a pivot vanishes outright.
bool invert_in_place(std::vector<double>& m, std::size_t k) {
  std::vector<double> inv(k * k, 0.0);
  for (std::size_t i = 0; i < k; ++i) inv[i * k + i] = 1.0;

  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    double best = std::fabs(m[col * k + col]);
    for (std::size_t r = col + 1; r < k; ++r) {
      const double cand = std::fabs(m[r * k + col]);
      if (cand > best) {
        best = cand;
        pivot = r;
      }
    }
    if (best == 0.0) return false;
    if (pivot != col) {
      for (std::size_t c = 0; c < k; ++c) {
        std::swap(m[pivot * k + c], m[col * k + c]);
        std::swap(inv[pivot * k + c], inv[col * k + c]);
      }
    }
    const double scale = 1.0 / m[col * k + col];
    for (std::size_t c = 0; c < k; ++c) {
      m[col * k + c] *= scale;
      inv[col * k + c] *= scale;
    }
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col) continue;
      const double factor = m[r * k + col];
      if (factor == 0.0) continue;
      for (std::size_t c = 0; c < k; ++c) {
        m[r * k + c] -= factor * m[col * k + c];
        inv[r * k + c] -= factor * inv[col * k + c];
      }
    }
  }
  m = std::move(inv);
  return true;
}

double one_norm(const std::vector<double>& m, std::size_t k) {
  double best = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    double col_sum = 0.0;
    for (std::size_t r = 0; r < k; ++r) col_sum += std::fabs(m[r * k + c]);
    best = std::max(best, col_sum);
  }
  return best;
}

}  // namespace

UnbindingBasis dual_basis(const std::vector<HyperVector>& roles) {
  if (roles.empty()) throw InvalidInputError("dual_basis: empty role set");
  const std::size_t dim = roles.front().dim();
  for (const HyperVector& r : roles) {
    if (r.dim() != dim) throw DimensionError("dual_basis: inconsistent role dims");
  }
  const std::size_t k = roles.size();
  if (k > dim) {
    throw InvalidInputError("dual_basis: more roles than dimensions");
  }

  std::vector<double> gram(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      gram[i * k + j] = dot(roles[i], roles[j]);
    }
  }
  const double gram_norm = one_norm(gram, k);

  std::vector<double> inverse = gram;
  if (!invert_in_place(inverse, k)) {
    throw SingularRolesError("dual_basis: role Gram matrix is singular",
                             std::numeric_limits<double>::infinity());
  }
  const double condition = gram_norm * one_norm(inverse, k);
  constexpr double kConditionLimit = 1e12;
  if (!(condition < kConditionLimit)) {
    throw SingularRolesError(
        "dual_basis: role set too close to dependent (cond ~ " +
            std::to_string(condition) + ")",
        condition);
  }

  UnbindingBasis basis;
  basis.roles = roles;
  basis.duals.reserve(k);
  for (std::size_t j = 0; j < k; ++j) {
    HyperVector dual(dim);
    for (std::size_t i = 0; i < k; ++i) {
      const double weight = inverse[i * k + j];
      for (std::size_t c = 0; c < dim; ++c) dual[c] += weight * roles[i][c];
    }
    basis.duals.push_back(std::move(dual));
  }
  return basis;
}

}  // namespace holosem
