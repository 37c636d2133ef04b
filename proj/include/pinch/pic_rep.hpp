/* Copyright 2026 The pinch Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef PINCH_PIC_REP_HPP
#define PINCH_PIC_REP_HPP

#include <memory>
#include <optional>
#include <vector>

#include "pinch/local_algebra.hpp"
#include "pinch/nc_poly.hpp"

namespace pinch {

/// (V, phi) with phi = id (x) 1 + sum_i components[i] (x) a_i on V (x) A.
/// Only the maximal-ideal part is stored, so s*(phi) = id holds by
/// construction.
struct SAObject {
  std::shared_ptr<const LocalAlgebra> algebra;
  int dim = 0;
  std::vector<FqMatrix> components;
};

/// Throws ShapeMismatch unless there is one dim x dim matrix per basis
/// element of m.
SAObject make_sa_object(std::shared_ptr<const LocalAlgebra> algebra, int dim,
                        std::vector<FqMatrix> components);

/// All components zero.
SAObject unit_object(std::shared_ptr<const LocalAlgebra> algebra);

/// Entry (i*q.rows() + k, j*q.cols() + l) is a(i, j) q(k, l).
FqMatrix kronecker(const FqMatrix& a, const FqMatrix& b);

/// (X (x) Y)_h = id (x) psi_h + phi_h (x) id + sum c^h_ij phi_i (x) psi_j.
/// Throws AlgebraMismatch unless both sides use the same constants.
SAObject tensor_sa(const SAObject& x, const SAObject& y);

/// Action of the free algebra on m* on V: letter i acts by components[i].
struct HopfModule {
  const GaloisField* field;
  int dim;
  std::vector<FqMatrix> generators;

  FqMatrix act(const Word& w) const;
  FqMatrix act(const NcPoly& x) const;
};

HopfModule omega(const SAObject& x);

/// An invertible f with f phi_i = psi_i f for every i, or nullopt. The
/// intertwiner space is enumerated in a fixed order; SearchBudgetExceeded if
/// more than `budget` candidates would be needed to decide.
std::optional<FqMatrix> are_isomorphic(const SAObject& x, const SAObject& y,
                                       std::size_t budget = 10000);

/// The one-dimensional objects, indexed like the units 1 + m (coordinates
/// enumerated in packed order), with tensor_sa as the product.
struct UnitGroup {
  std::vector<FqVector> elements;  // m-coordinates of the unit
  std::vector<std::vector<int>> table;
  int identity = 0;

  int order() const { return static_cast<int>(elements.size()); }
};

/// Verifies the group axioms and that the table matches multiplication of
/// units in A; throws InternalInconsistency otherwise and
/// SearchBudgetExceeded if |1 + m| > 256.
UnitGroup unit_group_dim1(const std::shared_ptr<const LocalAlgebra>& algebra);

/// Matrix over A: scalar (x) 1 + sum_i m[i] (x) a_i.
struct AlgebraMatrix {
  FqMatrix scalar;
  std::vector<FqMatrix> m;
};

/// (V, W; beta) over a point of C whose preimage has the given components.
struct TripleObject {
  std::vector<std::shared_ptr<const LocalAlgebra>> components;
  int v_dim = 0;
  int w_dim = 0;
  std::vector<AlgebraMatrix> betas;
};

struct NormalizedTriple {
  std::vector<SAObject> objects;
  // g_j g_last^{-1} for every component but the last.
  std::vector<FqMatrix> transitions;
};

/// Splits each beta_j as (1 + sum phi_i (x) a_i)(g_j (x) 1) with g_j its
/// residue. ShapeMismatch if v_dim != w_dim, NotInvertible if some g_j is
/// singular.
NormalizedTriple normalize_triple(const TripleObject& t);

/// Inverse of normalize_triple once the residue of the last component is
/// fixed to `base`.
TripleObject assemble_triple(const NormalizedTriple& n, const FqMatrix& base);

}  // namespace pinch

#endif  // PINCH_PIC_REP_HPP
