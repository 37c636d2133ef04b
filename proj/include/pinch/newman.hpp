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

#ifndef PINCH_NEWMAN_HPP
#define PINCH_NEWMAN_HPP

#include <map>
#include <vector>

#include "pinch/hopf.hpp"
#include "pinch/local_algebra.hpp"
#include "pinch/semilinear.hpp"

namespace pinch {

/// A* with basis eta = 1*, e_1..e_n dual to 1, a_1..a_n. Index 0 is eta.
struct DualCoalgebra {
  LocalAlgebra algebra;
  // delta[k](i, j) = <Delta b_k, b_i (x) b_j> = <b_k, (basis_i)(basis_j)>.
  std::vector<FqMatrix> delta;

  int dim() const { return static_cast<int>(delta.size()); }
};

DualCoalgebra dual_coalgebra(const LocalAlgebra& a);

/// Verschiebung on m*: the transpose of Frobenius with the inverse
/// Frobenius applied entrywise, twist -1, so that
/// <lambda, Ver xi> = <lambda^p, xi>^(1/p).
SemilinearMap ver_dual(const LocalAlgebra& a);

/// d_i = dim ker Ver^i on m* for i = 0..h+1.
std::vector<int> filtration_dims(const LocalAlgebra& a);

/// Chains (b_0, ..., b_r) with Ver b_i = b_{i-1} and Ver b_0 = 0, whose union
/// is a basis of m*. Longest chains first; within a length, tops are taken
/// greedily from the kernel basis, lowest index first.
struct RegularBasis {
  std::vector<std::vector<FqVector>> chains;
};

RegularBasis regular_basis(const LocalAlgebra& a);

/// counts[l] = number of NW_l factors; zero counts are omitted.
struct SigmaDecomposition {
  std::map<int, int> counts;
  int height = 0;

  friend bool operator==(const SigmaDecomposition&, const SigmaDecomposition&) = default;
};

/// counts[l] = 2 d_l - d_{l+1} - d_{l-1}, cross-checked against the chain
/// lengths of regular_basis (InternalInconsistency on disagreement).
SigmaDecomposition decompose_sigma(const LocalAlgebra& a);

/// Free algebra on e_1..e_n with Delta e_h = e_h(x)1 + 1(x)e_h +
/// sum c^h_ij e_i (x) e_j and weight(e_h) = filtration level. Throws
/// NotFiltrationAdapted unless every power of m is spanned by basis vectors
/// (otherwise the weights do not make the presentation well founded).
HopfPresentation h_a_presentation(const LocalAlgebra& a);

/// Word counts by length of H_A against the free product of the NW
/// presentations named by the decomposition, up to max_length.
bool word_counts_agree(const LocalAlgebra& a, int max_length);

}  // namespace pinch

#endif  // PINCH_NEWMAN_HPP
