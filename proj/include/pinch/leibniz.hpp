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

#ifndef PINCH_LEIBNIZ_HPP
#define PINCH_LEIBNIZ_HPP

#include <vector>

#include "pinch/hopf.hpp"

namespace pinch {

/// Free algebra on Z1..Zm, weight(Zi) = i, Delta Zh = sum_{i+j=h} Zi (x) Zj.
HopfPresentation leibniz_presentation(int m, const GaloisField& field);

/// S_1..S_m from S_0 = 1 and sum_{i=0}^{n} S_i Z_{n-i} = 0.
std::vector<NcPoly> antipode_elements(int m, const GaloisField& field);

/// c_1..c_l; c_0 = 1 is implicit.
using Curve = std::vector<NcPoly>;

/// Whether Delta c_j = sum_{i=0}^{j} c_i (x) c_{j-i} for every j.
bool is_curve(const HopfPresentation& h, const Curve& c);

/// particular + span(homogeneous); no particular means no solution.
struct AffineSolutions {
  std::optional<NcPoly> particular;
  std::vector<NcPoly> homogeneous;

  bool empty() const { return !particular.has_value(); }
};

/// All c in span(subspace) extending the curve by one term:
/// Delta c - c(x)1 - 1(x)c = sum_{0<i<l+1} c_i (x) c_{l+1-i}.
AffineSolutions extend_curve(const HopfPresentation& h, const Curve& curve,
                             const std::vector<NcPoly>& subspace);

/// How a point of an affine solution set is chosen: the least or greatest
/// coefficient vector, read in word order.
enum class TieBreak { LexLeast, LexGreatest };

/// All x = offset + sum a_s subspace_s with
/// Delta x - x(x)1 - 1(x)x = rhs.
AffineSolutions solve_reduced_coproduct(const HopfPresentation& h, const NcPoly& offset,
                                        const std::vector<NcPoly>& subspace, TensorSquare rhs);

/// The point of a nonempty solution set selected by the tie-break.
NcPoly pick_solution(const GaloisField& f, const AffineSolutions& s, TieBreak tie);

/// E_1..E_N in Z(N): homogeneous; E_i - Z_i avoids the letter Z_i when i is a
/// power of p; otherwise E_i lies in the subalgebra generated by the E_{p^a}
/// with p^a <= i. Results are cached per (field, N, tie-break). Throws
/// FieldMismatch when p is not the characteristic, Unsolvable(i) otherwise.
Curve minimal_curve(unsigned p, int n, const GaloisField& field,
                    TieBreak tie_break = TieBreak::LexLeast);

/// Whether E_i lies in the subalgebra generated by the given elements,
/// decided on the degree-i component (generators homogeneous of the given
/// degrees).
bool in_generated_subalgebra(const HopfPresentation& h, const NcPoly& x, int degree,
                             const std::vector<NcPoly>& generators,
                             const std::vector<int>& generator_degrees);

/// Noncommutative Witt presentation with l generators standing for
/// E_1, E_p, ..., E_{p^(l-1)} (names "E1", "E<p>", ...), weight p^a.
/// Throws InvalidPresentation when p^(l-1) > degree_bound and
/// ExpressionFailure when some E_j is not a polynomial in the generators.
HopfPresentation nw_presentation(int l, unsigned p, const GaloisField& field, int degree_bound);

/// Images of the NW generators in Z(p^(l-1)) under the minimal curve.
std::vector<NcPoly> nw_generator_images(int l, unsigned p, const GaloisField& field);

}  // namespace pinch

#endif  // PINCH_LEIBNIZ_HPP
