#pragma once

// Role-filler binding algebra over two interchangeable backends:
//
//   Tensor  — exact: pairs bind by outer product, structures are matrices,
//             unbinding is a partial inner product (matvec).
//   Hrr     — holographic: pairs bind by circular convolution, structures
//             stay fixed-dimensional vectors, unbinding is circular
//             correlation and returns the filler plus crosstalk noise.
//
// Orientation is fixed library-wide: encode places the FILLER on the output
// side and the ROLE on the cue side, i.e. a pair contributes
// outer(filler, role) / circ_conv(filler, role). unbind() cues with a role
// (or its dual) and returns the filler; extract_role() cues with a filler
// and returns the role. Under Hrr both directions are the same circular
// correlation, because convolution is commutative.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "holosem/hypervector.hpp"

namespace holosem {

enum class BackendKind { Tensor, Hrr };

struct BindingBackend {
  BackendKind kind = BackendKind::Tensor;
  std::size_t hrr_dim = 0;  // >= 2 when kind == Hrr

  static BindingBackend tensor() { return {BackendKind::Tensor, 0}; }
  static BindingBackend hrr(std::size_t dim);

  bool is_tensor() const { return kind == BackendKind::Tensor; }
  bool is_hrr() const { return kind == BackendKind::Hrr; }
};

struct RoleFiller {
  HyperVector role;
  HyperVector filler;
};

// Ordered, non-empty list of (role, filler) pairs; all roles share one
// dimension and all fillers share one dimension.
struct RoleFillerStructure {
  std::vector<RoleFiller> pairs;

  std::size_t role_dim() const { return pairs.empty() ? 0 : pairs.front().role.dim(); }
  std::size_t filler_dim() const { return pairs.empty() ? 0 : pairs.front().filler.dim(); }
};

using Encoded = std::variant<DenseMatrix, HyperVector>;

// Tensor encoding: sum_i outer(filler_i, role_i).
DenseMatrix encode_tensor(const RoleFillerStructure& structure);

// Hrr encoding: sum_i circ_conv(filler_i, role_i); roles and fillers must
// all have the backend dimension.
HyperVector encode_hrr(const RoleFillerStructure& structure, std::size_t dim);

// Backend-dispatching encode.
Encoded encode(const RoleFillerStructure& structure, const BindingBackend& backend);

// Unbind by a role-side cue: matvec under Tensor, circular correlation
// under Hrr. With orthonormal roles (or a dual cue) the Tensor result is
// the exact filler; the Hrr result is filler plus noise.
HyperVector unbind(const DenseMatrix& encoded, const HyperVector& cue);
HyperVector unbind(const HyperVector& trace, const HyperVector& cue);
HyperVector unbind(const Encoded& encoded, const HyperVector& cue);

// Complementary-factor extraction by a filler-side cue: transposed matvec
// under Tensor, the same circular correlation under Hrr. This is the
// direction the grounded learning rules use (percept in, role out).
HyperVector extract_role(const DenseMatrix& encoded, const HyperVector& cue);
HyperVector extract_role(const HyperVector& trace, const HyperVector& cue);
HyperVector extract_role(const Encoded& encoded, const HyperVector& cue);

// Unbinding vectors dual to a set of roles: <role_i, dual_j> = delta_ij.
struct UnbindingBasis {
  std::vector<HyperVector> roles;
  std::vector<HyperVector> duals;
};

// Solves the Gram system G C = I (G_ij = <r_i, r_j>) and returns
// dual_j = sum_k C_kj r_k. Orthonormal roles are their own duals. Refuses
// with SingularRolesError when the Gram 1-norm condition estimate exceeds
// 1e12 (near-parallel or rank-deficient role sets).
UnbindingBasis dual_basis(const std::vector<HyperVector>& roles);

}  // namespace holosem
